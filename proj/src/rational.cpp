#include "antipodal/rational.hpp"

namespace antipodal {

Rational rat_from_string(const std::string& s) {
    if (s.empty())
        fail(Err::ParseError, "empty rational literal");
    Rational q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        fail(Err::ParseError, "bad rational literal '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        fail(Err::DivisionByZero, "rational literal with zero denominator '" + s + "'");
    q.canonicalize();
    return q;
}

std::string rat_to_string(const Rational& q) {
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t hash_mpz(const mpz_class& z) {
    const mpz_srcptr p = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(mpz_sgn(p)) + 0x51ed270b;
    const std::size_t n = mpz_size(p);
    for (std::size_t i = 0; i < n; ++i)
        h = h * 1099511628211ull ^ static_cast<std::size_t>(mpz_getlimbn(p, static_cast<mp_size_t>(i)));
    return h;
}

std::size_t hash_rational(const Rational& q) {
    return hash_combine(hash_mpz(q.get_num()), hash_mpz(q.get_den()));
}

}  // namespace antipodal
