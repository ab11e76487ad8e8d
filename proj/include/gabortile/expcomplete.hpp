#pragma once

#include <optional>
#include <string_view>

#include "gabortile/boxset.hpp"

namespace gabortile {

enum class ExpStatus { Complete, Incomplete };

std::string_view to_string(ExpStatus status);

/// FORM1 = [[1/q', 0], [r', q']] with gcd(r', q') > 1 (gcd(0, q') = q');
/// FORM2 = [[p', 0], [r''/s'', 1/p']] with p' > 1 an integer.
enum class NormalFormKind { Form1, Form2 };

struct NormalForm {
  NormalFormKind kind;
  Int modulus;  // q' for FORM1, p' for FORM2
  Rat shear;    // r' for FORM1, r''/s'' for FORM2
  RatMatrix matrix;
};

/// Exponential completeness of B(Z^d) for L^2 of the unit cube.
struct ExpClassification {
  ExpStatus status = ExpStatus::Complete;
  std::optional<NormalForm> form;
  std::optional<RatMatrix> U;   // integer unimodular, B U = form->matrix
  std::optional<RatVec> xi;     // chi^ of the cube vanishes on xi + B(Z^d)
};

/// pZ in one dimension. Throws ZeroInput for p = 0.
ExpClassification expcomplete_1d(const Rat& p);

struct RowSubgroup {
  std::size_t row;
  Int p;
};

/// First row v_k whose subgroup {<v_k, n>} is pZ with an integer |p| > 1.
/// Sufficient for incompleteness only. Throws NotSquare.
std::optional<RowSubgroup> prop_g_test(const RatMatrix& b);

/// Complete decision for 2 x 2 rational B with |det B| = 1.
/// Throws DimMismatch, BadDeterminant.
ExpClassification classify_2x2(const RatMatrix& b);

/// Bounds of the fallback rational grid search for witnesses.
struct WitnessSearch {
  long max_den = 4;
  long extent = 2;  // coordinates in [-extent, extent]
};

/// Some xi with chi_Omega^ vanishing on xi + B(Z^d), trying the closed-form
/// candidates for the unit cube first and then a bounded rational grid.
/// nullopt means none was found within the bounds (inconclusive unless
/// Omega is the unit square and classify_2x2 applies).
std::optional<RatVec> incompleteness_witness(const RatMatrix& b, const std::optional<BoxSet>& omega = std::nullopt,
                                             const WitnessSearch& search = {});

}  // namespace gabortile
