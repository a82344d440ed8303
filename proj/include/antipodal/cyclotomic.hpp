#pragma once

#include <cstddef>
#include <vector>

#include "antipodal/rational.hpp"

namespace antipodal {

// Element of Q[x]/Phi_N(x) in the power basis of zeta_N, coefficients fully
// reduced modulo the N-th cyclotomic polynomial. Values at different
// conductors interoperate by lifting to the least common conductor.
class CyclotomicScalar {
public:
    CyclotomicScalar() : conductor_(1), coeffs_(1, Rational(0)) {}
    explicit CyclotomicScalar(const Rational& r) : conductor_(1), coeffs_(1, r) {}
    explicit CyclotomicScalar(long n) : conductor_(1), coeffs_(1, rat(n)) {}

    // zeta_N^k, stored at conductor N.
    static CyclotomicScalar root_of_unity(unsigned n, long k);
    static CyclotomicScalar i() { return root_of_unity(4, 1); }

    unsigned conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    Rational as_rational() const;  // requires is_rational()
    bool is_real() const { return *this == conj(); }

    CyclotomicScalar lifted(unsigned n) const;  // requires conductor() | n
    // Rewrites into the smallest divisor conductor containing the value.
    CyclotomicScalar minimal() const;

    CyclotomicScalar conj() const;  // zeta_N -> zeta_N^{-1}
    CyclotomicScalar inv() const;   // DivisionByZero on zero

    friend CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b);
    friend CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b);
    CyclotomicScalar operator-() const;
    CyclotomicScalar& operator+=(const CyclotomicScalar& b) { return *this = *this + b; }
    CyclotomicScalar& operator-=(const CyclotomicScalar& b) { return *this = *this - b; }
    CyclotomicScalar& operator*=(const CyclotomicScalar& b) { return *this = *this * b; }

    bool operator==(const CyclotomicScalar& b) const;
    bool operator!=(const CyclotomicScalar& b) const { return !(*this == b); }

    // Total order on values: coefficient vectors at the least common
    // conductor compared lexicographically. Returns -1, 0, +1.
    static int lex_cmp(const CyclotomicScalar& a, const CyclotomicScalar& b);

    std::size_t hash() const;  // computed on the minimal form

    static unsigned conductor_limit();
    static void set_conductor_limit(unsigned n);

    // Monic Phi_N as rational coefficient vector, degree phi(N). Cached.
    static const std::vector<Rational>& cyclotomic_poly(unsigned n);
    static unsigned phi_degree(unsigned n);

private:
    CyclotomicScalar(unsigned conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    static std::vector<Rational> reduce_mod_phi(std::vector<Rational> poly, unsigned n);
    static unsigned lcm_conductor(unsigned a, unsigned b);

    unsigned conductor_;
    std::vector<Rational> coeffs_;  // size phi(conductor_)
};

using Cyc = CyclotomicScalar;

}  // namespace antipodal
