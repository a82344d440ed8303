#pragma once

#include <array>
#include <cstddef>

#include "antipodal/rational.hpp"

namespace antipodal {

// Rational quaternion a + b*i + c*j + d*k with i^2 = j^2 = k^2 = ijk = -1.
class QuaternionScalar {
public:
    QuaternionScalar() : c_{Rational(0), Rational(0), Rational(0), Rational(0)} {}
    explicit QuaternionScalar(const Rational& a) : c_{a, Rational(0), Rational(0), Rational(0)} {}
    explicit QuaternionScalar(long a) : QuaternionScalar(rat(a)) {}
    QuaternionScalar(Rational a, Rational b, Rational c, Rational d)
        : c_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

    static QuaternionScalar i() { return {rat(0), rat(1), rat(0), rat(0)}; }
    static QuaternionScalar j() { return {rat(0), rat(0), rat(1), rat(0)}; }
    static QuaternionScalar k() { return {rat(0), rat(0), rat(0), rat(1)}; }

    const Rational& a() const { return c_[0]; }
    const Rational& b() const { return c_[1]; }
    const Rational& c() const { return c_[2]; }
    const Rational& d() const { return c_[3]; }
    const std::array<Rational, 4>& parts() const { return c_; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    bool is_real() const { return c_[1] == 0 && c_[2] == 0 && c_[3] == 0; }
    Rational as_rational() const {
        require(is_real(), Err::UnsupportedScalarKind, "quaternion is not real");
        return c_[0];
    }

    QuaternionScalar conj() const { return {c_[0], -c_[1], -c_[2], -c_[3]}; }
    Rational norm() const { return c_[0] * c_[0] + c_[1] * c_[1] + c_[2] * c_[2] + c_[3] * c_[3]; }
    QuaternionScalar inv() const;

    friend QuaternionScalar operator+(const QuaternionScalar& x, const QuaternionScalar& y) {
        return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2], x.c_[3] + y.c_[3]};
    }
    friend QuaternionScalar operator-(const QuaternionScalar& x, const QuaternionScalar& y) {
        return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2], x.c_[3] - y.c_[3]};
    }
    friend QuaternionScalar operator*(const QuaternionScalar& x, const QuaternionScalar& y);
    QuaternionScalar operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }
    QuaternionScalar& operator+=(const QuaternionScalar& y) { return *this = *this + y; }
    QuaternionScalar& operator-=(const QuaternionScalar& y) { return *this = *this - y; }
    QuaternionScalar& operator*=(const QuaternionScalar& y) { return *this = *this * y; }

    bool operator==(const QuaternionScalar& y) const { return c_ == y.c_; }
    bool operator!=(const QuaternionScalar& y) const { return !(*this == y); }

    static int lex_cmp(const QuaternionScalar& x, const QuaternionScalar& y);

    std::size_t hash() const;

private:
    std::array<Rational, 4> c_;
};

using Quat = QuaternionScalar;

}  // namespace antipodal
