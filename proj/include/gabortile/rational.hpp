#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gabortile {

// mpq_class keeps numerator/denominator coprime with a positive denominator
// after every arithmetic operation.
using Int = mpz_class;
using Rat = mpq_class;

using RatVec = std::vector<Rat>;
using IntVec = std::vector<long long>;

/// Parses "p", "-p", "p/q". Throws Error(ParseError) on malformed input or a
/// zero denominator.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, "p/q" otherwise.
std::string format_rat(const Rat& r);

/// Canonicalized num/den; prefer this over Rat(num, den), which does not reduce.
inline Rat frac(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Positive generator of the additive group generated by the entries,
/// 0 for an all-zero vector.
Rat rational_gcd(const RatVec& v);

/// lcm of the denominators of all entries (1 for an empty vector).
Int common_denominator(const RatVec& v);

long long to_ll(const Int& z);

inline Rat to_rat(long long v) { return Rat(Int(std::to_string(v))); }

RatVec to_rat_vec(const IntVec& v);

/// Lexicographic comparison of equal-length vectors.
int lex_compare(const RatVec& a, const RatVec& b);

RatVec add(const RatVec& a, const RatVec& b);
RatVec sub(const RatVec& a, const RatVec& b);
RatVec negate(const RatVec& a);
Rat dot(const RatVec& a, const RatVec& b);

std::string format_vec(const RatVec& v);

}  // namespace gabortile
