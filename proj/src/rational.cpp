#include "gabortile/rational.hpp"

#include <cctype>
#include <limits>

#include "gabortile/error.hpp"

namespace gabortile {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::NonInteger: return "NonInteger";
    case ErrorKind::DimMismatch: return "DimMismatch";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::NotLowerTriangular: return "NotLowerTriangular";
    case ErrorKind::NotAMultiTile: return "NotAMultiTile";
    case ErrorKind::LevelOne: return "LevelOne";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::NonRational: return "NonRational";
    case ErrorKind::NonIntegerLevel: return "NonIntegerLevel";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NotBlockTriangular: return "NotBlockTriangular";
    case ErrorKind::UnboundedWindow: return "UnboundedWindow";
    case ErrorKind::NonBoxImage: return "NonBoxImage";
    case ErrorKind::TheoremViolation: return "TheoremViolation";
    case ErrorKind::NotFactorizable: return "NotFactorizable";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::BadDeterminant: return "BadDeterminant";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::OnBoundary: return "OnBoundary";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

bool valid_integer_text(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : text.substr(slash + 1);
  if (!valid_integer_text(num) || !valid_integer_text(den))
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  Int n(strip_plus(num)), d(strip_plus(den));
  if (d == 0)
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rat rational_gcd(const RatVec& v) {
  // gcd(a/b, c/d) = gcd(a, c) / lcm(b, d) for reduced fractions.
  Int num = 0, den = 1;
  for (const auto& x : v) {
    num = gcd(num, x.get_num());
    den = lcm(den, x.get_den());
  }
  Rat g(num, den);
  g.canonicalize();
  return g;
}

Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const auto& x : v) d = lcm(d, x.get_den());
  return d;
}

long long to_ll(const Int& z) {
  if (!z.fits_slong_p())
    throw Error(ErrorKind::Overflow, "integer " + z.get_str() + " exceeds 64 bits");
  return z.get_si();
}

RatVec to_rat_vec(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (long long x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

int lex_compare(const RatVec& a, const RatVec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i]) return -1;
    if (a[i] > b[i]) return 1;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

RatVec add(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimMismatch, "vector add");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RatVec sub(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimMismatch, "vector sub");
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RatVec negate(const RatVec& a) {
  RatVec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimMismatch, "dot product");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::string format_vec(const RatVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += format_rat(v[i]);
  }
  return s + ")";
}

}  // namespace gabortile
