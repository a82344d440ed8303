#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>

#include "antipodal/errors.hpp"

namespace antipodal {

// All number content in the system reduces to exact rationals.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    require(den != 0, Err::DivisionByZero, "rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational rat_from_string(const std::string& s);

// Canonical form "p" or "p/q" with q > 1.
std::string rat_to_string(const Rational& q);

std::size_t hash_mpz(const mpz_class& z);
std::size_t hash_rational(const Rational& q);

inline std::size_t hash_combine(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

}  // namespace antipodal
