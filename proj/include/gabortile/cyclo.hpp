#pragma once

#include <complex>
#include <map>
#include <string>

#include "gabortile/rational.hpp"

namespace gabortile {

/// Largest conductor accepted before Error(Overflow); default 10^6.
long long conductor_limit();
void set_conductor_limit(long long limit);

/// Element sum_k c_k zeta_N^k of Q(zeta_N), stored sparsely as a class in
/// Q[x]/(x^N - 1). Equality of values is decided modulo the N-th cyclotomic
/// polynomial, never by comparing coefficients.
class CycloNum {
 public:
  CycloNum() = default;
  static CycloNum rational(const Rat& c);
  /// c * zeta_n^k. Throws Error(Overflow) when n exceeds the conductor limit.
  static CycloNum root(long long n, long long k, const Rat& c = 1);
  /// e^{-2 pi i t} for rational t.
  static CycloNum phase(const Rat& t);

  long long conductor() const { return conductor_; }
  const std::map<long long, Rat>& terms() const { return terms_; }

  CycloNum& operator+=(const CycloNum& o);
  CycloNum operator+(const CycloNum& o) const;
  CycloNum operator-(const CycloNum& o) const;
  CycloNum operator*(const CycloNum& o) const;
  CycloNum operator-() const { return scaled(Rat(-1)); }
  CycloNum scaled(const Rat& s) const;

  /// Same value over a conductor that is a multiple of the current one.
  CycloNum lifted(long long n) const;
  /// Same value over the smallest conductor the exponents allow.
  CycloNum reduced() const;

  bool is_zero() const;
  std::complex<double> to_complex() const;
  std::string to_string() const;

 private:
  long long conductor_ = 1;
  std::map<long long, Rat> terms_;
};

bool cyclo_is_zero(const CycloNum& z);

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
std::vector<Int> cyclotomic_polynomial(long long n);

}  // namespace gabortile
