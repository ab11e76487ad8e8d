#include "gabortile/expcomplete.hpp"

#include <numeric>

#include "gabortile/error.hpp"
#include "gabortile/fourier.hpp"

namespace gabortile {

namespace {

BoxSet unit_cube(std::size_t d) {
  return BoxSet::from_disjoint(d, {Box{RatVec(d, Rat(0)), RatVec(d, Rat(1))}});
}

bool validates(const BoxSet& omega, const RatVec& xi, const RatMatrix& b) {
  return vanishes_on_affine_lattice(omega, xi, b, false).holds;
}

}  // namespace

std::string_view to_string(ExpStatus status) {
  return status == ExpStatus::Complete ? "COMPLETE" : "INCOMPLETE";
}

ExpClassification expcomplete_1d(const Rat& p) {
  if (p == 0) throw Error(ErrorKind::ZeroInput, "p must be nonzero");
  ExpClassification out;
  if (is_integer(p) && abs(p) > 1) {
    out.status = ExpStatus::Incomplete;
    out.xi = RatVec{Rat(1)};
  }
  return out;
}

std::optional<RowSubgroup> prop_g_test(const RatMatrix& b) {
  if (!b.square()) throw Error(ErrorKind::NotSquare, "B must be square");
  for (std::size_t k = 0; k < b.rows(); ++k) {
    Rat g = rational_gcd(b.row(k));
    if (is_integer(g) && g > 1) return RowSubgroup{k, g.get_num()};
  }
  return std::nullopt;
}

ExpClassification classify_2x2(const RatMatrix& b) {
  if (b.rows() != 2 || b.cols() != 2) throw Error(ErrorKind::DimMismatch, "B must be 2 x 2");
  if (abs(b.determinant()) != 1)
    throw Error(ErrorKind::BadDeterminant, "|det B| = " + format_rat(abs(b.determinant())) + ", expected 1");
  // B P = [[a, 0], [c, 1/a]] with a > 0 and c reduced into [0, 1/a); a is the
  // generator of the first-coordinate projection, so it is an invariant.
  HermiteResult h = canonical_generator(b);
  const Rat a = h.H(0, 0);
  const Rat c = h.H(1, 0);
  ExpClassification out;
  if (a.get_num() == 1 && a.get_den() > 1 && is_integer(c) && gcd(c.get_num(), a.get_den()) > 1) {
    out.status = ExpStatus::Incomplete;
    out.form = NormalForm{NormalFormKind::Form1, a.get_den(), c, h.H};
    out.xi = RatVec{0, 1};
  } else if (is_integer(a) && a > 1) {
    out.status = ExpStatus::Incomplete;
    out.form = NormalForm{NormalFormKind::Form2, a.get_num(), c, h.H};
    out.xi = RatVec{1, 0};
  } else {
    return out;
  }
  out.U = h.P;
  if (!validates(unit_cube(2), *out.xi, b))
    throw Error(ErrorKind::InvariantViolation, "normal-form witness does not validate");
  return out;
}

std::optional<RatVec> incompleteness_witness(const RatMatrix& b, const std::optional<BoxSet>& omega,
                                             const WitnessSearch& search) {
  if (!b.square()) throw Error(ErrorKind::NotSquare, "B must be square");
  const std::size_t d = b.rows();
  const BoxSet cube = unit_cube(d);
  const BoxSet& dom = omega ? *omega : cube;
  if (dom.dim() != d) throw Error(ErrorKind::DimMismatch, "domain dimension");

  std::vector<RatVec> candidates;
  if (same_set(dom, cube)) {
    if (d == 1 && expcomplete_1d(b(0, 0)).xi) candidates.push_back({Rat(1)});
    if (auto row = prop_g_test(b)) {
      RatVec xi(d, Rat(0));
      xi[row->row] = 1;
      candidates.push_back(xi);
    }
    if (d == 2) {
      if (abs(b.determinant()) == 1) {
        if (auto cls = classify_2x2(b); cls.xi) candidates.push_back(*cls.xi);
      }
      // [[p, 0], [r, q]] with integers p, q coprime and |q| > 1: xi = (p, p + r).
      HermiteResult h = canonical_generator(b);
      const Rat& p = h.H(0, 0);
      const Rat& q = h.H(1, 1);
      if (is_integer(p) && is_integer(q) && q > 1 && gcd(p.get_num(), q.get_num()) == 1)
        candidates.push_back({p, p + h.H(1, 0)});
    }
  }
  for (const auto& xi : candidates)
    if (validates(dom, xi, b)) return xi;

  // Grid of rationals with denominator <= max_den in [-extent, extent]^d.
  std::vector<Rat> values;
  for (long den = 1; den <= search.max_den; ++den)
    for (long num = -search.extent * den; num <= search.extent * den; ++num)
      if (std::gcd(num, den) == 1) values.push_back(frac(num, den));
  std::vector<std::size_t> idx(d, 0);
  if (values.empty()) return std::nullopt;
  while (true) {
    RatVec xi(d);
    for (std::size_t i = 0; i < d; ++i) xi[i] = values[idx[i]];
    if (validates(dom, xi, b)) return xi;
    std::size_t i = d;
    while (i > 0) {
      --i;
      if (++idx[i] < values.size()) break;
      idx[i] = 0;
      if (i == 0) return std::nullopt;
    }
  }
}

}  // namespace gabortile
