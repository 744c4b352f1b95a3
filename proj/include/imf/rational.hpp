#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace imf {

/// Exact scalar type of the whole library: an arbitrary-precision rational,
/// always stored with positive denominator and gcd(|num|, den) = 1.
/// GMP keeps results of arithmetic canonical; only raw construction from a
/// numerator/denominator pair needs an explicit canonicalize, which the
/// helpers below perform.
using Rat = mpq_class;
using Int = mpz_class;

/// Build a normalized fraction p/q. Throws on q = 0.
Rat frac(const Int& p, const Int& q);
inline Rat frac(long p, long q) { return frac(Int(p), Int(q)); }

/// Parse "p", "-p", or "p/q" (optional sign on p). Returns nullopt on
/// malformed input or zero denominator.
std::optional<Rat> parse_rational(std::string_view token);

/// Render as "p/q", omitting "/q" when q = 1.
std::string to_string(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// Floor of sqrt(r) for r >= 0, exact. Throws on negative input.
Int floor_sqrt(const Int& r);

/// Largest integer k with (k - c)^2 <= r and k >= c, i.e. floor(c + sqrt(r));
/// r must be >= 0.
Int floor_center_plus_sqrt(const Rat& c, const Rat& r);

/// Smallest integer k with k >= c - sqrt(r), i.e. ceil(c - sqrt(r)); r >= 0.
Int ceil_center_minus_sqrt(const Rat& c, const Rat& r);

}  // namespace imf
