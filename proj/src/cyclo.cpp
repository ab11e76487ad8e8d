#include "gabortile/cyclo.hpp"

#include <atomic>
#include <cmath>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <vector>

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

std::atomic<long long> g_conductor_limit{1000000};

long long checked_lcm(long long a, long long b) {
  long long g = std::gcd(a, b);
  __int128 l = static_cast<__int128>(a / g) * b;
  if (l > g_conductor_limit.load())
    throw Error(ErrorKind::Overflow, "conductor " + std::to_string(static_cast<long long>(l)) +
                                         " exceeds the limit " +
                                         std::to_string(g_conductor_limit.load()));
  return static_cast<long long>(l);
}

long long mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

// Squarefree divisors e of n with mu(e) for the Moebius products below.
std::vector<std::pair<long long, int>> mobius_divisors(long long n) {
  std::vector<std::pair<long long, int>> out{{1, 1}};
  for (long long p : prime_factors(n)) {
    std::size_t sz = out.size();
    for (std::size_t i = 0; i < sz; ++i) out.emplace_back(out[i].first * p, -out[i].second);
  }
  return out;
}

using Poly = std::vector<Int>;

Poly times_binomial(const Poly& p, long long d) {
  Poly q(p.size() + d, Int(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i + d] += p[i];
    q[i] -= p[i];
  }
  return q;
}

Poly over_binomial(const Poly& p, long long d) {
  Poly q(p.size() - d, Int(0));
  for (std::size_t i = 0; i < q.size(); ++i) {
    q[i] = -p[i];
    if (i >= static_cast<std::size_t>(d)) q[i] += q[i - d];
  }
  return q;
}

// prod over squarefree e | n of (x^{n/e} - 1)^{sign * mu(e)}, skipping e = 1 when
// skip_trivial is set.
Poly mobius_product(long long n, int sign, bool skip_trivial) {
  Poly p{Int(1)};
  auto divs = mobius_divisors(n);
  for (const auto& [e, mu] : divs)
    if (sign * mu > 0 && !(skip_trivial && e == 1)) p = times_binomial(p, n / e);
  for (const auto& [e, mu] : divs)
    if (sign * mu < 0 && !(skip_trivial && e == 1)) p = over_binomial(p, n / e);
  return p;
}

// Sparse (x^n - 1) / Phi_n, cached per conductor.
const std::vector<std::pair<long long, Int>>& cofactor(long long n) {
  static std::mutex mu;
  static std::unordered_map<long long, std::vector<std::pair<long long, Int>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  Poly psi = mobius_product(n, -1, true);
  std::vector<std::pair<long long, Int>> sparse;
  for (std::size_t i = 0; i < psi.size(); ++i)
    if (psi[i] != 0) sparse.emplace_back(static_cast<long long>(i), psi[i]);
  return cache.emplace(n, std::move(sparse)).first->second;
}

}  // namespace

long long conductor_limit() { return g_conductor_limit.load(); }
void set_conductor_limit(long long limit) { g_conductor_limit.store(limit); }

std::vector<Int> cyclotomic_polynomial(long long n) { return mobius_product(n, 1, false); }

CycloNum CycloNum::rational(const Rat& c) {
  CycloNum z;
  if (c != 0) z.terms_[0] = c;
  return z;
}

CycloNum CycloNum::root(long long n, long long k, const Rat& c) {
  if (n <= 0) throw Error(ErrorKind::InvariantViolation, "conductor must be positive");
  if (n > g_conductor_limit.load())
    throw Error(ErrorKind::Overflow, "conductor " + std::to_string(n) + " exceeds the limit " +
                                         std::to_string(g_conductor_limit.load()));
  CycloNum z;
  z.conductor_ = n;
  if (c != 0) z.terms_[mod(k, n)] = c;
  return z;
}

CycloNum CycloNum::phase(const Rat& t) {
  const Int& den = t.get_den();
  if (!den.fits_slong_p() || den.get_si() > g_conductor_limit.load())
    throw Error(ErrorKind::Overflow, "phase denominator of " + format_rat(t) + " exceeds the conductor limit");
  long long n = den.get_si();
  Int num = t.get_num();
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(n));
  return root(n, -r.get_si());
}

CycloNum CycloNum::lifted(long long n) const {
  if (n % conductor_ != 0) throw Error(ErrorKind::InvariantViolation, "lift to a non-multiple conductor");
  if (n == conductor_) return *this;
  CycloNum z;
  z.conductor_ = n;
  const long long f = n / conductor_;
  for (const auto& [k, c] : terms_) z.terms_[k * f] = c;
  return z;
}

CycloNum CycloNum::reduced() const {
  if (terms_.empty()) return CycloNum();
  long long g = conductor_;
  for (const auto& [k, c] : terms_) g = std::gcd(g, k);
  if (g == 1) return *this;
  CycloNum z;
  z.conductor_ = conductor_ / g;
  for (const auto& [k, c] : terms_) z.terms_[k / g] = c;
  return z;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  const long long n = checked_lcm(conductor_, o.conductor_);
  if (n != conductor_) *this = lifted(n);
  const long long f = n / o.conductor_;
  for (const auto& [k, c] : o.terms_) {
    Rat& slot = terms_[k * f];
    slot += c;
    if (slot == 0) terms_.erase(k * f);
  }
  return *this;
}

CycloNum CycloNum::operator+(const CycloNum& o) const {
  CycloNum z = *this;
  z += o;
  return z;
}

CycloNum CycloNum::operator-(const CycloNum& o) const { return *this + (-o); }

CycloNum CycloNum::operator*(const CycloNum& o) const {
  const long long n = checked_lcm(conductor_, o.conductor_);
  CycloNum a = lifted(n), b = o.lifted(n);
  CycloNum z;
  z.conductor_ = n;
  for (const auto& [i, x] : a.terms_)
    for (const auto& [j, y] : b.terms_) {
      const long long k = (i + j) % n;
      Rat& slot = z.terms_[k];
      slot += x * y;
      if (slot == 0) z.terms_.erase(k);
    }
  return z;
}

CycloNum CycloNum::scaled(const Rat& s) const {
  if (s == 0) {
    CycloNum z;
    z.conductor_ = conductor_;
    return z;
  }
  CycloNum z = *this;
  for (auto& [k, c] : z.terms_) c *= s;
  return z;
}

std::complex<double> CycloNum::to_complex() const {
  std::complex<double> v = 0;
  for (const auto& [k, c] : terms_) {
    const double angle = 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(conductor_);
    v += c.get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return v;
}

bool CycloNum::is_zero() const {
  CycloNum z = reduced();
  if (z.terms_.empty()) return true;
  if (z.conductor_ == 1) return false;
  double scale = 0;
  for (const auto& [k, c] : z.terms_) scale += std::abs(c.get_d());
  if (std::abs(z.to_complex()) > 1e-9 * scale) return false;

  // Exact: f(zeta_n) = 0 iff Phi_n divides f iff (x^n - 1) divides f * Psi_n.
  const long long n = z.conductor_;
  Int den = 1;
  for (const auto& [k, c] : z.terms_) den = lcm(den, c.get_den());
  std::vector<std::pair<long long, Int>> f;
  for (const auto& [k, c] : z.terms_) f.emplace_back(k, c.get_num() * (den / c.get_den()));
  std::unordered_map<long long, Int> prod;
  for (const auto& [j, psi] : cofactor(n))
    for (const auto& [k, c] : f) prod[(j + k) % n] += psi * c;
  for (const auto& [k, c] : prod)
    if (c != 0) return false;
  return true;
}

std::string CycloNum::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(" + format_rat(c) + ")";
    if (k != 0) s += "*z" + std::to_string(conductor_) + "^" + std::to_string(k);
  }
  return s;
}

bool cyclo_is_zero(const CycloNum& z) { return z.is_zero(); }

}  // namespace gabortile
