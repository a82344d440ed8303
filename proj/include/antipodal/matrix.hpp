#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "antipodal/cyclotomic.hpp"
#include "antipodal/errors.hpp"
#include "antipodal/quaternion.hpp"

namespace antipodal {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<CyclotomicScalar> {
    static constexpr bool commutative = true;
    static constexpr const char* name = "cyclotomic";
};

template <>
struct scalar_traits<QuaternionScalar> {
    static constexpr bool commutative = false;
    static constexpr const char* name = "quaternion";
};

// Dense square matrix over one exact scalar kind. A matrix never mixes kinds.
template <class S>
class SquareMatrix {
public:
    explicit SquareMatrix(unsigned n = 0) : n_(n), e_(static_cast<std::size_t>(n) * n, S()) {}

    static SquareMatrix identity(unsigned n) {
        SquareMatrix m(n);
        for (unsigned i = 0; i < n; ++i)
            m.at(i, i) = S(1);
        return m;
    }

    unsigned dim() const { return n_; }
    S& at(unsigned r, unsigned c) { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const S& at(unsigned r, unsigned c) const { return e_[static_cast<std::size_t>(r) * n_ + c]; }
    const std::vector<S>& entries() const { return e_; }

    friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
        require(a.n_ == b.n_, Err::ShapeError,
                "matrix product of dimensions " + std::to_string(a.n_) + " and " + std::to_string(b.n_));
        SquareMatrix out(a.n_);
        for (unsigned r = 0; r < a.n_; ++r)
            for (unsigned k = 0; k < a.n_; ++k) {
                const S& x = a.at(r, k);
                if (x.is_zero())
                    continue;
                for (unsigned c = 0; c < a.n_; ++c) {
                    const S& y = b.at(k, c);
                    if (!y.is_zero())
                        out.at(r, c) += x * y;
                }
            }
        return out;
    }

    friend SquareMatrix operator+(const SquareMatrix& a, const SquareMatrix& b) {
        require(a.n_ == b.n_, Err::ShapeError, "matrix sum dimension mismatch");
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            out.e_[i] = a.e_[i] + b.e_[i];
        return out;
    }

    friend SquareMatrix operator-(const SquareMatrix& a, const SquareMatrix& b) {
        require(a.n_ == b.n_, Err::ShapeError, "matrix difference dimension mismatch");
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            out.e_[i] = a.e_[i] - b.e_[i];
        return out;
    }

    SquareMatrix operator-() const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < e_.size(); ++i)
            out.e_[i] = -e_[i];
        return out;
    }

    // scalar times matrix, scalar applied from the left
    friend SquareMatrix operator*(const S& z, const SquareMatrix& a) {
        SquareMatrix out(a.n_);
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            out.e_[i] = z * a.e_[i];
        return out;
    }

    bool operator==(const SquareMatrix& b) const {
        if (n_ != b.n_)
            return false;
        for (std::size_t i = 0; i < e_.size(); ++i)
            if (e_[i] != b.e_[i])
                return false;
        return true;
    }
    bool operator!=(const SquareMatrix& b) const { return !(*this == b); }

    SquareMatrix transpose() const {
        SquareMatrix out(n_);
        for (unsigned r = 0; r < n_; ++r)
            for (unsigned c = 0; c < n_; ++c)
                out.at(c, r) = at(r, c);
        return out;
    }

    SquareMatrix conj_entrywise() const {
        SquareMatrix out(n_);
        for (std::size_t i = 0; i < e_.size(); ++i)
            out.e_[i] = e_[i].conj();
        return out;
    }

    // conjugate transpose (quaternion-conjugate transpose for quaternions)
    SquareMatrix adjoint() const { return conj_entrywise().transpose(); }

    S trace() const {
        S t;
        for (unsigned i = 0; i < n_; ++i)
            t += at(i, i);
        return t;
    }

    bool is_identity() const { return *this == identity(n_); }
    bool is_zero() const {
        for (const auto& x : e_)
            if (!x.is_zero())
                return false;
        return true;
    }

    // Fraction-free (Bareiss) determinant. Cyclotomic entries only.
    S det() const;

    // Pfaffian of a skew-symmetric matrix, exact recursive expansion.
    S pfaffian() const;

    // Gauss-Jordan inverse; left row operations, valid over a division ring.
    SquareMatrix inverse() const;

    static int lex_cmp(const SquareMatrix& a, const SquareMatrix& b) {
        require(a.n_ == b.n_, Err::ShapeError, "lex compare dimension mismatch");
        for (std::size_t i = 0; i < a.e_.size(); ++i) {
            int c = S::lex_cmp(a.e_[i], b.e_[i]);
            if (c != 0)
                return c;
        }
        return 0;
    }

    std::size_t hash() const {
        std::size_t h = hash_combine(0x452821e6, n_);
        for (const auto& x : e_)
            h = hash_combine(h, x.hash());
        return h;
    }

private:
    unsigned n_;
    std::vector<S> e_;
};

template <class S>
S SquareMatrix<S>::det() const {
    if constexpr (!scalar_traits<S>::commutative) {
        fail(Err::UnsupportedScalarKind, "determinant of a quaternion matrix is undefined");
    } else {
        if (n_ == 0)
            return S(1);
        SquareMatrix<S> m = *this;
        S prev(1);
        bool negate = false;
        for (unsigned k = 0; k + 1 < n_; ++k) {
            if (m.at(k, k).is_zero()) {
                unsigned pr = k + 1;
                while (pr < n_ && m.at(pr, k).is_zero())
                    ++pr;
                if (pr == n_)
                    return S();
                for (unsigned c = 0; c < n_; ++c)
                    std::swap(m.at(k, c), m.at(pr, c));
                negate = !negate;
            }
            S prev_inv = prev.inv();
            for (unsigned r = k + 1; r < n_; ++r)
                for (unsigned c = k + 1; c < n_; ++c)
                    m.at(r, c) = (m.at(r, c) * m.at(k, k) - m.at(r, k) * m.at(k, c)) * prev_inv;
            prev = m.at(k, k);
        }
        S d = m.at(n_ - 1, n_ - 1);
        return negate ? -d : d;
    }
}

template <class S>
S SquareMatrix<S>::pfaffian() const {
    if constexpr (!scalar_traits<S>::commutative) {
        fail(Err::UnsupportedScalarKind, "pfaffian of a quaternion matrix is undefined");
    } else {
        require(n_ % 2 == 0, Err::ShapeError, "pfaffian needs even dimension");
        for (unsigned r = 0; r < n_; ++r)
            for (unsigned c = 0; c <= r; ++c)
                require(at(r, c) == -at(c, r), Err::ShapeError, "pfaffian of a non-skew matrix");
        require(n_ <= 16, Err::ShapeError, "pfaffian expansion limited to dimension 16");
        std::map<unsigned, S> memo;
        // recursive expansion along the lowest live index, rows tracked by bitmask
        auto pf = [&](auto&& self, unsigned mask) -> S {
            if (mask == 0)
                return S(1);
            auto found = memo.find(mask);
            if (found != memo.end())
                return found->second;
            unsigned i = 0;
            while (!(mask & (1u << i)))
                ++i;
            S acc;
            bool neg = false;
            for (unsigned j = i + 1; j < n_; ++j) {
                if (!(mask & (1u << j)))
                    continue;
                const S& a = at(i, j);
                if (!a.is_zero()) {
                    S sub = self(self, mask & ~(1u << i) & ~(1u << j));
                    acc = neg ? acc - a * sub : acc + a * sub;
                }
                neg = !neg;
            }
            memo.emplace(mask, acc);
            return acc;
        };
        return pf(pf, (n_ >= 32 ? 0xffffffffu : (1u << n_) - 1u));
    }
}

template <class S>
SquareMatrix<S> SquareMatrix<S>::inverse() const {
    SquareMatrix<S> m = *this;
    SquareMatrix<S> inv = identity(n_);
    for (unsigned k = 0; k < n_; ++k) {
        unsigned pr = k;
        while (pr < n_ && m.at(pr, k).is_zero())
            ++pr;
        require(pr < n_, Err::ShapeError, "inverse of a singular matrix");
        if (pr != k)
            for (unsigned c = 0; c < n_; ++c) {
                std::swap(m.at(k, c), m.at(pr, c));
                std::swap(inv.at(k, c), inv.at(pr, c));
            }
        S p = m.at(k, k).inv();
        for (unsigned c = 0; c < n_; ++c) {
            m.at(k, c) = p * m.at(k, c);
            inv.at(k, c) = p * inv.at(k, c);
        }
        for (unsigned r = 0; r < n_; ++r) {
            if (r == k || m.at(r, k).is_zero())
                continue;
            S f = m.at(r, k);
            for (unsigned c = 0; c < n_; ++c) {
                m.at(r, c) -= f * m.at(k, c);
                inv.at(r, c) -= f * inv.at(k, c);
            }
        }
    }
    return inv;
}

using CycMatrix = SquareMatrix<CyclotomicScalar>;
using QuatMatrix = SquareMatrix<QuaternionScalar>;

}  // namespace antipodal
