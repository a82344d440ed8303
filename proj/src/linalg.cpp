#include "antipodal/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace antipodal {

namespace {

QuaternionScalar quat_basis(unsigned t) {
    switch (t) {
        case 0: return QuaternionScalar(1);
        case 1: return QuaternionScalar::i();
        case 2: return QuaternionScalar::j();
        default: return QuaternionScalar::k();
    }
}

RectMat<Cyc> quat_block(const QuaternionScalar& q, bool left) {
    RectMat<Cyc> b(4, 4);
    for (unsigned t = 0; t < 4; ++t) {
        QuaternionScalar prod = left ? q * quat_basis(t) : quat_basis(t) * q;
        const auto& parts = prod.parts();
        for (unsigned r = 0; r < 4; ++r)
            b.at(r, t) = Cyc(parts[r]);
    }
    return b;
}

}  // namespace

RectMat<Cyc> quaternion_left_block(const QuaternionScalar& q) { return quat_block(q, true); }
RectMat<Cyc> quaternion_right_block(const QuaternionScalar& q) { return quat_block(q, false); }

RectMat<Cyc> realify(const SquareMatrix<QuaternionScalar>& a) {
    const unsigned n = a.dim();
    RectMat<Cyc> out(4 * n, 4 * n);
    for (unsigned r = 0; r < n; ++r)
        for (unsigned c = 0; c < n; ++c) {
            if (a.at(r, c).is_zero())
                continue;
            RectMat<Cyc> b = quaternion_left_block(a.at(r, c));
            for (unsigned i = 0; i < 4; ++i)
                for (unsigned j = 0; j < 4; ++j)
                    out.at(4 * r + i, 4 * c + j) = b.at(i, j);
        }
    return out;
}

unsigned exact_rank_quaternion(const SquareMatrix<QuaternionScalar>& a) {
    unsigned r4 = exact_rank(realify(a));
    require(r4 % 4 == 0, Err::ShapeError, "internal: realified rank not divisible by 4");
    return r4 / 4;
}

namespace {

// regular representation of multiplication by s on coefficient vectors at
// conductor n (d = phi(n) coordinates)
RectMat<Cyc> mult_block(const Cyc& s, unsigned n) {
    const unsigned d = Cyc::phi_degree(n);
    RectMat<Cyc> m(d, d);
    for (unsigned t = 0; t < d; ++t) {
        Cyc prod = (s * Cyc::root_of_unity(n, t)).lifted(n);
        for (unsigned r = 0; r < d; ++r)
            m.at(r, t) = Cyc(prod.coeffs()[r]);
    }
    return m;
}

RectMat<Cyc> conj_block(unsigned n) {
    const unsigned d = Cyc::phi_degree(n);
    RectMat<Cyc> m(d, d);
    for (unsigned t = 0; t < d; ++t) {
        Cyc c = Cyc::root_of_unity(n, t).conj().lifted(n);
        for (unsigned r = 0; r < d; ++r)
            m.at(r, t) = Cyc(c.coeffs()[r]);
    }
    return m;
}

void add_block(RectMat<Cyc>& sys, unsigned row0, unsigned col0, const RectMat<Cyc>& b, bool negate) {
    for (unsigned r = 0; r < b.rows; ++r)
        for (unsigned c = 0; c < b.cols; ++c) {
            if (b.at(r, c).is_zero())
                continue;
            if (negate)
                sys.at(row0 + r, col0 + c) -= b.at(r, c);
            else
                sys.at(row0 + r, col0 + c) += b.at(r, c);
        }
}

}  // namespace

std::vector<CycMatrix> commutant_basis(const std::vector<CycMatrix>& gens,
                                       const std::optional<AntilinearTwist>& twist, unsigned dim_hint) {
    unsigned n = dim_hint;
    if (!gens.empty())
        n = gens[0].dim();
    else if (twist)
        n = twist->conjugator.dim();
    require(n > 0, Err::ShapeError, "commutant of an empty family needs a dimension hint");
    for (const auto& g : gens)
        require(g.dim() == n, Err::ShapeError, "commutant family dimension mismatch");

    if (!twist) {
        // one linear system over the field: rows (i,j), unknowns (r,s)
        RectMat<Cyc> sys(static_cast<unsigned>(gens.size()) * n * n, n * n);
        unsigned row0 = 0;
        for (const auto& a : gens) {
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j) {
                    unsigned row = row0 + i * n + j;
                    // (YA - AY)_{ij} = sum_s Y_{is} A_{sj} - A_{is} Y_{sj}
                    for (unsigned s = 0; s < n; ++s) {
                        if (!a.at(s, j).is_zero())
                            sys.at(row, i * n + s) += a.at(s, j);
                        if (!a.at(i, s).is_zero())
                            sys.at(row, s * n + j) -= a.at(i, s);
                    }
                }
            row0 += n * n;
        }
        auto null_vecs = nullspace_basis(sys);
        std::vector<CycMatrix> basis;
        basis.reserve(null_vecs.size());
        for (const auto& v : null_vecs) {
            CycMatrix y(n);
            for (unsigned r = 0; r < n; ++r)
                for (unsigned c = 0; c < n; ++c)
                    y.at(r, c) = v[r * n + c];
            basis.push_back(std::move(y));
        }
        return basis;
    }

    // Antilinear twist: restrict scalars to Q. The unknowns range over the
    // field of the twist conductor; each Y_{rs} becomes d rational coordinates.
    unsigned cond = std::max(1u, twist->conductor);
    auto bump = [&cond](const CycMatrix& m) {
        for (unsigned r = 0; r < m.dim(); ++r)
            for (unsigned c = 0; c < m.dim(); ++c)
                cond = std::lcm(cond, m.at(r, c).conductor());
    };
    for (const auto& g : gens)
        bump(g);
    bump(twist->conjugator);
    const unsigned d = Cyc::phi_degree(cond);
    const unsigned unknowns = n * n * d;
    const unsigned eqs = (static_cast<unsigned>(gens.size()) + 1) * n * n * d;
    RectMat<Cyc> sys(eqs, unknowns);
    unsigned row0 = 0;
    for (const auto& a : gens) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                unsigned row = row0 + (i * n + j) * d;
                for (unsigned s = 0; s < n; ++s) {
                    if (!a.at(s, j).is_zero())
                        add_block(sys, row, (i * n + s) * d, mult_block(a.at(s, j).lifted(cond), cond), false);
                    if (!a.at(i, s).is_zero())
                        add_block(sys, row, (s * n + j) * d, mult_block(a.at(i, s).lifted(cond), cond), true);
                }
            }
        row0 += n * n * d;
    }
    // Y C - C conj(Y) = 0
    const CycMatrix& cmat = twist->conjugator;
    RectMat<Cyc> conj_m = conj_block(cond);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            unsigned row = row0 + (i * n + j) * d;
            for (unsigned s = 0; s < n; ++s) {
                if (!cmat.at(s, j).is_zero())
                    add_block(sys, row, (i * n + s) * d, mult_block(cmat.at(s, j).lifted(cond), cond), false);
                if (!cmat.at(i, s).is_zero()) {
                    // -C_{is} * conj(Y_{sj}): multiplication block composed with conjugation
                    RectMat<Cyc> mb = mult_block(cmat.at(i, s).lifted(cond), cond);
                    RectMat<Cyc> comp(d, d);
                    for (unsigned r = 0; r < d; ++r)
                        for (unsigned c = 0; c < d; ++c) {
                            Cyc acc;
                            for (unsigned t = 0; t < d; ++t)
                                if (!mb.at(r, t).is_zero() && !conj_m.at(t, c).is_zero())
                                    acc += mb.at(r, t) * conj_m.at(t, c);
                            comp.at(r, c) = acc;
                        }
                    add_block(sys, row, (s * n + j) * d, comp, true);
                }
            }
        }

    auto null_vecs = nullspace_basis(sys);
    std::vector<CycMatrix> basis;
    basis.reserve(null_vecs.size());
    for (const auto& v : null_vecs) {
        CycMatrix y(n);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                Cyc acc;
                for (unsigned t = 0; t < d; ++t)
                    if (!v[(r * n + c) * d + t].is_zero())
                        acc += v[(r * n + c) * d + t] * Cyc::root_of_unity(cond, t);
                y.at(r, c) = acc;
            }
        basis.push_back(std::move(y));
    }
    return basis;
}

std::vector<QuatMatrix> commutant_basis(const std::vector<QuatMatrix>& gens) {
    require(!gens.empty(), Err::ShapeError, "commutant of an empty quaternion family needs a generator");
    const unsigned n = gens[0].dim();
    for (const auto& g : gens)
        require(g.dim() == n, Err::ShapeError, "commutant family dimension mismatch");
    const unsigned unknowns = n * n * 4;
    RectMat<Cyc> sys(static_cast<unsigned>(gens.size()) * n * n * 4, unknowns);
    unsigned row0 = 0;
    for (const auto& a : gens) {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                unsigned row = row0 + (i * n + j) * 4;
                for (unsigned s = 0; s < n; ++s) {
                    if (!a.at(s, j).is_zero())
                        add_block(sys, row, (i * n + s) * 4, quaternion_right_block(a.at(s, j)), false);
                    if (!a.at(i, s).is_zero())
                        add_block(sys, row, (s * n + j) * 4, quaternion_left_block(a.at(i, s)), true);
                }
            }
        row0 += n * n * 4;
    }
    auto null_vecs = nullspace_basis(sys);
    std::vector<QuatMatrix> basis;
    basis.reserve(null_vecs.size());
    for (const auto& v : null_vecs) {
        QuatMatrix y(n);
        for (unsigned r = 0; r < n; ++r)
            for (unsigned c = 0; c < n; ++c) {
                std::array<Rational, 4> parts;
                for (unsigned t = 0; t < 4; ++t)
                    parts[t] = v[(r * n + c) * 4 + t].as_rational();
                y.at(r, c) = QuaternionScalar(parts[0], parts[1], parts[2], parts[3]);
            }
        basis.push_back(std::move(y));
    }
    return basis;
}

}  // namespace antipodal
