#include "antipodal/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>

namespace antipodal {

namespace {

std::atomic<unsigned> g_conductor_limit{64};

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0)
                m /= p;
            result -= result / p;
        }
    }
    if (m > 1)
        result -= result / m;
    return result;
}

// poly stored low-degree-first; trims trailing zeros
void trim(std::vector<Rational>& p) {
    while (p.size() > 1 && p.back() == 0)
        p.pop_back();
}

// exact division of polynomials, remainder must vanish
std::vector<Rational> poly_div_exact(std::vector<Rational> num, const std::vector<Rational>& den) {
    trim(num);
    if (num.size() < den.size())
        fail(Err::ParseError, "internal: inexact polynomial division");
    const std::size_t qsize = num.size() - den.size() + 1;
    std::vector<Rational> q(qsize, Rational(0));
    const Rational& lead = den.back();
    for (std::size_t k = qsize; k-- > 0;) {
        Rational c = num[k + den.size() - 1] / lead;
        q[k] = c;
        if (c != 0)
            for (std::size_t j = 0; j < den.size(); ++j)
                num[k + j] -= c * den[j];
    }
    trim(num);
    if (!(num.size() == 1 && num[0] == 0))
        fail(Err::ParseError, "internal: inexact polynomial division");
    return q;
}

}  // namespace

unsigned CyclotomicScalar::phi_degree(unsigned n) { return euler_phi(n); }

const std::vector<Rational>& CyclotomicScalar::cyclotomic_poly(unsigned n) {
    static std::map<unsigned, std::vector<Rational>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
        return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // within the lock (recursion is over strictly smaller divisors).
    std::function<const std::vector<Rational>&(unsigned)> get = [&](unsigned m) -> const std::vector<Rational>& {
        auto found = cache.find(m);
        if (found != cache.end())
            return found->second;
        std::vector<Rational> num(m + 1, Rational(0));
        num[0] = rat(-1);
        num[m] = rat(1);
        std::vector<Rational> poly = std::move(num);
        for (unsigned d = 1; d < m; ++d)
            if (m % d == 0)
                poly = poly_div_exact(std::move(poly), get(d));
        return cache.emplace(m, std::move(poly)).first->second;
    };
    return get(n);
}

std::vector<Rational> CyclotomicScalar::reduce_mod_phi(std::vector<Rational> poly, unsigned n) {
    const std::vector<Rational>& phi = cyclotomic_poly(n);
    const std::size_t deg = phi.size() - 1;
    if (poly.size() < deg)
        poly.resize(deg, Rational(0));
    for (std::size_t i = poly.size(); i-- > deg;) {
        Rational c = poly[i];  // phi is monic
        if (c != 0)
            for (std::size_t j = 0; j < phi.size(); ++j)
                poly[i - deg + j] -= c * phi[j];
        poly.pop_back();
        if (poly.size() == deg)
            break;
    }
    poly.resize(deg, Rational(0));
    return poly;
}

unsigned CyclotomicScalar::conductor_limit() { return g_conductor_limit.load(); }
void CyclotomicScalar::set_conductor_limit(unsigned n) { g_conductor_limit.store(n); }

unsigned CyclotomicScalar::lcm_conductor(unsigned a, unsigned b) {
    unsigned l = std::lcm(a, b);
    if (l > conductor_limit())
        fail(Err::ConductorLimit, "conductor " + std::to_string(l) + " exceeds limit " +
                                      std::to_string(conductor_limit()));
    return l;
}

CyclotomicScalar CyclotomicScalar::root_of_unity(unsigned n, long k) {
    require(n >= 1, Err::ParseError, "conductor must be positive");
    if (n > conductor_limit())
        fail(Err::ConductorLimit, "conductor " + std::to_string(n) + " exceeds limit " +
                                      std::to_string(conductor_limit()));
    long kk = k % static_cast<long>(n);
    if (kk < 0)
        kk += n;
    std::vector<Rational> poly(static_cast<std::size_t>(kk) + 1, Rational(0));
    poly[static_cast<std::size_t>(kk)] = rat(1);
    return CyclotomicScalar(n, reduce_mod_phi(std::move(poly), n));
}

bool CyclotomicScalar::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0)
            return false;
    return true;
}

bool CyclotomicScalar::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return false;
    return true;
}

Rational CyclotomicScalar::as_rational() const {
    require(is_rational(), Err::UnsupportedScalarKind, "scalar is not rational");
    return coeffs_[0];
}

CyclotomicScalar CyclotomicScalar::lifted(unsigned n) const {
    if (n == conductor_)
        return *this;
    require(n % conductor_ == 0, Err::ParseError, "lift target must be a conductor multiple");
    if (n > conductor_limit())
        fail(Err::ConductorLimit, "conductor " + std::to_string(n) + " exceeds limit " +
                                      std::to_string(conductor_limit()));
    const unsigned step = n / conductor_;
    std::vector<Rational> poly(static_cast<std::size_t>(coeffs_.size() - 1) * step + 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        poly[i * step] = coeffs_[i];
    return CyclotomicScalar(n, reduce_mod_phi(std::move(poly), n));
}

CyclotomicScalar CyclotomicScalar::minimal() const {
    if (conductor_ == 1)
        return *this;
    if (is_zero())
        return CyclotomicScalar();
    if (is_rational())
        return CyclotomicScalar(coeffs_[0]);
    for (unsigned d = 2; d < conductor_; ++d) {
        if (conductor_ % d != 0)
            continue;
        // Solve coeffs = sum_j c_j * lift(zeta_d^j) over j < phi(d).
        const unsigned dd = phi_degree(d);
        const unsigned nn = static_cast<unsigned>(coeffs_.size());
        std::vector<std::vector<Rational>> aug(nn, std::vector<Rational>(dd + 1, Rational(0)));
        for (unsigned j = 0; j < dd; ++j) {
            CyclotomicScalar basis = root_of_unity(d, j).lifted(conductor_);
            for (unsigned r = 0; r < nn; ++r)
                aug[r][j] = basis.coeffs_[r];
        }
        for (unsigned r = 0; r < nn; ++r)
            aug[r][dd] = coeffs_[r];
        // plain exact elimination on the small augmented system
        std::vector<Rational> sol(dd, Rational(0));
        unsigned row = 0;
        std::vector<int> pivot_col(nn, -1);
        for (unsigned c = 0; c < dd && row < nn; ++c) {
            unsigned pr = row;
            while (pr < nn && aug[pr][c] == 0)
                ++pr;
            if (pr == nn)
                continue;
            std::swap(aug[row], aug[pr]);
            Rational inv_p = Rational(1) / aug[row][c];
            for (auto& v : aug[row])
                v *= inv_p;
            for (unsigned r = 0; r < nn; ++r) {
                if (r == row || aug[r][c] == 0)
                    continue;
                Rational f = aug[r][c];
                for (unsigned cc = c; cc <= dd; ++cc)
                    aug[r][cc] -= f * aug[row][cc];
            }
            pivot_col[row] = static_cast<int>(c);
            ++row;
        }
        bool consistent = true;
        for (unsigned r = row; r < nn; ++r)
            if (aug[r][dd] != 0) {
                consistent = false;
                break;
            }
        if (!consistent)
            continue;
        for (unsigned r = 0; r < row; ++r)
            if (pivot_col[r] >= 0)
                sol[static_cast<unsigned>(pivot_col[r])] = aug[r][dd];
        return CyclotomicScalar(d, std::move(sol));
    }
    return *this;
}

CyclotomicScalar CyclotomicScalar::conj() const {
    const unsigned n = conductor_;
    if (n <= 2)
        return *this;
    std::vector<Rational> poly(n, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const std::size_t e = (i == 0) ? 0 : (n - i);
        poly[e] += coeffs_[i];
    }
    return CyclotomicScalar(n, reduce_mod_phi(std::move(poly), n));
}

CyclotomicScalar CyclotomicScalar::inv() const {
    if (is_zero())
        fail(Err::DivisionByZero, "inverse of zero scalar");
    if (is_rational())
        return CyclotomicScalar(Rational(1) / coeffs_[0]);
    // extended Euclid in Q[x]: u*f + v*Phi = gcd = 1 (Phi irreducible)
    std::vector<Rational> r0 = cyclotomic_poly(conductor_);
    std::vector<Rational> r1 = coeffs_;
    trim(r1);
    std::vector<Rational> s0{Rational(0)}, s1{Rational(1)};  // coefficients of f
    auto poly_scale_sub = [](std::vector<Rational>& a, const std::vector<Rational>& b, const Rational& c,
                             std::size_t shift) {
        if (a.size() < b.size() + shift)
            a.resize(b.size() + shift, Rational(0));
        for (std::size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= c * b[i];
        trim(a);
    };
    while (!(r1.size() == 1 && r1[0] == 0)) {
        // divide r0 by r1
        std::vector<Rational> q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1, Rational(0));
        std::vector<Rational> rem = r0;
        while (rem.size() >= r1.size() && !(rem.size() == 1 && rem[0] == 0)) {
            Rational c = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += c;
            poly_scale_sub(rem, r1, c, shift);
            if (rem.size() == 1 && rem[0] == 0)
                break;
        }
        // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
        std::vector<Rational> s2 = s0;
        for (std::size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0)
                poly_scale_sub(s2, s1, q[i], i);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd (nonzero constant), s0 the cofactor of f
    require(r0.size() == 1 && r0[0] != 0, Err::ParseError, "internal: cyclotomic gcd not constant");
    Rational scale = Rational(1) / r0[0];
    for (auto& c : s0)
        c *= scale;
    return CyclotomicScalar(conductor_, reduce_mod_phi(std::move(s0), conductor_));
}

CyclotomicScalar operator+(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    unsigned n = CyclotomicScalar::lcm_conductor(a.conductor_, b.conductor_);
    CyclotomicScalar la = a.lifted(n), lb = b.lifted(n);
    for (std::size_t i = 0; i < la.coeffs_.size(); ++i)
        la.coeffs_[i] += lb.coeffs_[i];
    return la;
}

CyclotomicScalar operator-(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    unsigned n = CyclotomicScalar::lcm_conductor(a.conductor_, b.conductor_);
    CyclotomicScalar la = a.lifted(n), lb = b.lifted(n);
    for (std::size_t i = 0; i < la.coeffs_.size(); ++i)
        la.coeffs_[i] -= lb.coeffs_[i];
    return la;
}

CyclotomicScalar operator*(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    unsigned n = CyclotomicScalar::lcm_conductor(a.conductor_, b.conductor_);
    CyclotomicScalar la = a.lifted(n), lb = b.lifted(n);
    std::vector<Rational> prod(la.coeffs_.size() + lb.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < la.coeffs_.size(); ++i) {
        if (la.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < lb.coeffs_.size(); ++j)
            if (lb.coeffs_[j] != 0)
                prod[i + j] += la.coeffs_[i] * lb.coeffs_[j];
    }
    return CyclotomicScalar(n, CyclotomicScalar::reduce_mod_phi(std::move(prod), n));
}

CyclotomicScalar CyclotomicScalar::operator-() const {
    CyclotomicScalar r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

bool CyclotomicScalar::operator==(const CyclotomicScalar& b) const {
    if (conductor_ == b.conductor_)
        return coeffs_ == b.coeffs_;
    unsigned n = lcm_conductor(conductor_, b.conductor_);
    return lifted(n).coeffs_ == b.lifted(n).coeffs_;
}

int CyclotomicScalar::lex_cmp(const CyclotomicScalar& a, const CyclotomicScalar& b) {
    unsigned n = lcm_conductor(a.conductor_, b.conductor_);
    CyclotomicScalar la = a.lifted(n), lb = b.lifted(n);
    for (std::size_t i = 0; i < la.coeffs_.size(); ++i) {
        int c = cmp(la.coeffs_[i], lb.coeffs_[i]);
        if (c != 0)
            return c < 0 ? -1 : 1;
    }
    return 0;
}

std::size_t CyclotomicScalar::hash() const {
    CyclotomicScalar m = minimal();
    std::size_t h = hash_combine(0x1f83d9ab, m.conductor_);
    for (const auto& c : m.coeffs_)
        h = hash_combine(h, hash_rational(c));
    return h;
}

}  // namespace antipodal
