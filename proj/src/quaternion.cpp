#include "antipodal/quaternion.hpp"

namespace antipodal {

QuaternionScalar operator*(const QuaternionScalar& x, const QuaternionScalar& y) {
    const auto& p = x.c_;
    const auto& q = y.c_;
    return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
            p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
            p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
            p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

QuaternionScalar QuaternionScalar::inv() const {
    Rational n = norm();
    if (n == 0)
        fail(Err::DivisionByZero, "inverse of zero quaternion");
    QuaternionScalar c = conj();
    return {c.c_[0] / n, c.c_[1] / n, c.c_[2] / n, c.c_[3] / n};
}

int QuaternionScalar::lex_cmp(const QuaternionScalar& x, const QuaternionScalar& y) {
    for (int t = 0; t < 4; ++t) {
        int c = cmp(x.c_[t], y.c_[t]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return 0;
}

std::size_t QuaternionScalar::hash() const {
    std::size_t h = 0x243f6a88;
    for (const auto& v : c_)
        h = hash_combine(h, hash_rational(v));
    return h;
}

}  // namespace antipodal
