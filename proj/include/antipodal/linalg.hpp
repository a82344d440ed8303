#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "antipodal/matrix.hpp"

namespace antipodal {

template <class S>
struct RectMat {
    unsigned rows = 0, cols = 0;
    std::vector<S> e;

    RectMat() = default;
    RectMat(unsigned r, unsigned c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, S()) {}
    S& at(unsigned r, unsigned c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    const S& at(unsigned r, unsigned c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

template <class S>
RectMat<S> to_rect(const SquareMatrix<S>& m) {
    RectMat<S> out(m.dim(), m.dim());
    for (unsigned r = 0; r < m.dim(); ++r)
        for (unsigned c = 0; c < m.dim(); ++c)
            out.at(r, c) = m.at(r, c);
    return out;
}

template <class S>
struct Echelon {
    RectMat<S> m;
    std::vector<unsigned> pivot_cols;
    unsigned rank = 0;
};

// Fraction-free Gaussian elimination (Bareiss): pivots divide exactly and
// intermediate entries stay minor-sized. Commutative scalars only.
template <class S>
Echelon<S> bareiss_echelon(RectMat<S> m) {
    static_assert(scalar_traits<S>::commutative, "Bareiss elimination needs a commutative scalar");
    Echelon<S> out;
    out.pivot_cols.reserve(std::min(m.rows, m.cols));
    S prev(1);
    unsigned row = 0;
    for (unsigned c = 0; c < m.cols && row < m.rows; ++c) {
        unsigned pr = row;
        while (pr < m.rows && m.at(pr, c).is_zero())
            ++pr;
        if (pr == m.rows)
            continue;
        if (pr != row)
            for (unsigned cc = 0; cc < m.cols; ++cc)
                std::swap(m.at(row, cc), m.at(pr, cc));
        S prev_inv = prev.inv();
        for (unsigned r = row + 1; r < m.rows; ++r) {
            for (unsigned cc = c + 1; cc < m.cols; ++cc)
                m.at(r, cc) = (m.at(r, cc) * m.at(row, c) - m.at(r, c) * m.at(row, cc)) * prev_inv;
            m.at(r, c) = S();
        }
        prev = m.at(row, c);
        out.pivot_cols.push_back(c);
        ++row;
    }
    out.rank = row;
    out.m = std::move(m);
    return out;
}

template <class S>
unsigned exact_rank(const RectMat<S>& m) {
    return bareiss_echelon(m).rank;
}

// Basis of {x : M x = 0}, one vector per free column.
template <class S>
std::vector<std::vector<S>> nullspace_basis(const RectMat<S>& m) {
    Echelon<S> ech = bareiss_echelon(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (unsigned c : ech.pivot_cols)
        is_pivot[c] = true;
    std::vector<std::vector<S>> basis;
    for (unsigned f = 0; f < m.cols; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<S> x(m.cols, S());
        x[f] = S(1);
        for (unsigned i = ech.rank; i-- > 0;) {
            unsigned p = ech.pivot_cols[i];
            S acc;
            for (unsigned c = p + 1; c < m.cols; ++c)
                if (!x[c].is_zero() && !ech.m.at(i, c).is_zero())
                    acc += ech.m.at(i, c) * x[c];
            x[p] = -(acc * ech.m.at(i, p).inv());
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Left-multiplication 4x4 rational block of a quaternion, basis (1, i, j, k).
RectMat<Cyc> quaternion_left_block(const QuaternionScalar& q);
RectMat<Cyc> quaternion_right_block(const QuaternionScalar& q);

// M_n(H) -> M_4n(Q) via left-multiplication blocks; rational ranks are 4x the
// quaternionic ranks.
RectMat<Cyc> realify(const SquareMatrix<QuaternionScalar>& a);

unsigned exact_rank_quaternion(const SquareMatrix<QuaternionScalar>& a);

template <class S>
unsigned matrix_rank(const SquareMatrix<S>& a) {
    if constexpr (scalar_traits<S>::commutative)
        return exact_rank(to_rect(a));
    else
        return exact_rank_quaternion(a);
}

// (p, q): multiplicities of eigenvalues -1 and +1 of an exact involution,
// p computed as the rank of (I - B)/2. NotAnInvolution if B^2 != I.
template <class S>
std::pair<unsigned, unsigned> involution_signature(const SquareMatrix<S>& b) {
    require((b * b).is_identity(), Err::NotAnInvolution, "matrix does not square to the identity");
    SquareMatrix<S> half_diff = (SquareMatrix<S>::identity(b.dim()) - b);
    if constexpr (scalar_traits<S>::commutative)
        half_diff = S(Rational(1, 2)) * half_diff;
    else
        half_diff = S(rat(1, 2)) * half_diff;
    unsigned p = matrix_rank(half_diff);
    return {p, b.dim() - p};
}

// theta(Y) = C conj(Y) C^{-1}; commuting with it is the constraint
// Y C = C conj(Y), solved over the rationals after restriction of scalars.
// The conductor fixes the coefficient field the unknowns range over.
struct AntilinearTwist {
    CycMatrix conjugator;
    unsigned conductor = 4;
};

// Exact basis of {Y : Y A = A Y for all A in gens}. With a twist the system
// is solved over Q and the returned list is a Q-basis; without, a basis over
// the cyclotomic field. dim_hint sizes the unknowns when gens is empty.
std::vector<CycMatrix> commutant_basis(const std::vector<CycMatrix>& gens,
                                       const std::optional<AntilinearTwist>& twist = std::nullopt,
                                       unsigned dim_hint = 0);

// Quaternion commutant, solved over Q after realification; returns a Q-basis.
std::vector<QuatMatrix> commutant_basis(const std::vector<QuatMatrix>& gens);

}  // namespace antipodal
