#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "antipodal/group.hpp"

namespace antipodal {

// Unit entries of monomial matrices: roots of unity zeta_N^k encoded by the
// exponent k, or quaternion units {1,-1,i,-i,j,-j,k,-k} encoded 0..7.
template <class S>
struct unit_system;

template <>
struct unit_system<Cyc> {
    static unsigned count(unsigned conductor) { return conductor; }
    static uint8_t one(unsigned) { return 0; }
    static uint8_t mul(uint8_t a, uint8_t b, unsigned n) { return static_cast<uint8_t>((a + b) % n); }
    static uint8_t inv(uint8_t a, unsigned n) { return static_cast<uint8_t>(a ? n - a : 0); }
    static uint8_t conj(uint8_t a, unsigned n) { return inv(a, n); }
    static Cyc value(uint8_t a, unsigned n) { return Cyc::root_of_unity(n, a); }
};

struct Q8Tables {
    std::array<std::array<uint8_t, 8>, 8> mul;
    std::array<uint8_t, 8> inv;
    std::array<uint8_t, 8> conj;
    std::array<Quat, 8> value;
};
const Q8Tables& q8_tables();

template <>
struct unit_system<Quat> {
    static unsigned count(unsigned) { return 8; }
    static uint8_t one(unsigned) { return 0; }
    static uint8_t mul(uint8_t a, uint8_t b, unsigned) { return q8_tables().mul[a][b]; }
    static uint8_t inv(uint8_t a, unsigned) { return q8_tables().inv[a]; }
    static uint8_t conj(uint8_t a, unsigned) { return q8_tables().conj[a]; }
    static Quat value(uint8_t a, unsigned) { return q8_tables().value[a]; }
};

// Lexicographic comparison data for units at a fixed conductor, mirroring the
// scalar coefficient-vector order used by full matrices.
struct UnitOrder {
    std::vector<int> vs_zero;              // lex_cmp(unit, 0)
    std::vector<std::vector<int>> vs_unit;  // lex_cmp(unit_a, unit_b)
};
const UnitOrder& cyc_unit_order(unsigned conductor);
const UnitOrder& quat_unit_order();

template <class S>
inline const UnitOrder& unit_order_table(unsigned conductor) {
    if constexpr (scalar_traits<S>::commutative)
        return cyc_unit_order(conductor);
    else
        return quat_unit_order();
}

// Matrix with exactly one unit entry per row and column; closed under the
// group operations and all the involutions used here, so pool enumeration
// never touches full matrices.
template <class S>
struct Monomial {
    unsigned n = 0;
    unsigned conductor = 4;
    std::vector<uint8_t> col;
    std::vector<uint8_t> unit;

    static Monomial identity(unsigned n, unsigned conductor) {
        Monomial m;
        m.n = n;
        m.conductor = conductor;
        m.col.resize(n);
        m.unit.assign(n, unit_system<S>::one(conductor));
        for (unsigned r = 0; r < n; ++r)
            m.col[r] = static_cast<uint8_t>(r);
        return m;
    }

    bool operator==(const Monomial& b) const {
        return n == b.n && conductor == b.conductor && col == b.col && unit == b.unit;
    }
};

template <class S>
Monomial<S> mono_mul(const Monomial<S>& a, const Monomial<S>& b) {
    Monomial<S> out;
    out.n = a.n;
    out.conductor = a.conductor;
    out.col.resize(a.n);
    out.unit.resize(a.n);
    for (unsigned r = 0; r < a.n; ++r) {
        uint8_t mid = a.col[r];
        out.col[r] = b.col[mid];
        out.unit[r] = unit_system<S>::mul(a.unit[r], b.unit[mid], a.conductor);
    }
    return out;
}

template <class S>
Monomial<S> mono_inv(const Monomial<S>& a) {
    Monomial<S> out;
    out.n = a.n;
    out.conductor = a.conductor;
    out.col.resize(a.n);
    out.unit.resize(a.n);
    for (unsigned r = 0; r < a.n; ++r) {
        out.col[a.col[r]] = static_cast<uint8_t>(r);
        out.unit[a.col[r]] = unit_system<S>::inv(a.unit[r], a.conductor);
    }
    return out;
}

template <class S>
Monomial<S> mono_conj(const Monomial<S>& a) {
    Monomial<S> out = a;
    for (unsigned r = 0; r < a.n; ++r)
        out.unit[r] = unit_system<S>::conj(a.unit[r], a.conductor);
    return out;
}

// central unit scalar times monomial
template <class S>
Monomial<S> mono_scale(uint8_t z, const Monomial<S>& a) {
    Monomial<S> out = a;
    for (unsigned r = 0; r < a.n; ++r)
        out.unit[r] = unit_system<S>::mul(z, a.unit[r], a.conductor);
    return out;
}

template <class S>
SquareMatrix<S> mono_to_matrix(const Monomial<S>& a) {
    SquareMatrix<S> m(a.n);
    for (unsigned r = 0; r < a.n; ++r)
        m.at(r, a.col[r]) = unit_system<S>::value(a.unit[r], a.conductor);
    return m;
}

// mirrors SquareMatrix::lex_cmp on the materialized matrices
template <class S>
int mono_lex_cmp(const Monomial<S>& a, const Monomial<S>& b) {
    const UnitOrder& ord = unit_order_table<S>(a.conductor);
    for (unsigned r = 0; r < a.n; ++r) {
        if (a.col[r] == b.col[r]) {
            int c = ord.vs_unit[a.unit[r]][b.unit[r]];
            if (c != 0)
                return c;
            continue;
        }
        // at the smaller column index exactly one side has a nonzero unit
        if (a.col[r] < b.col[r])
            return ord.vs_zero[a.unit[r]];
        return -ord.vs_zero[b.unit[r]];
    }
    return 0;
}

template <class S>
std::string mono_key(const Monomial<S>& a) {
    std::string key;
    key.reserve(2 * a.n + 2);
    key.push_back(static_cast<char>(a.n));
    key.push_back(static_cast<char>(a.conductor));
    for (unsigned r = 0; r < a.n; ++r) {
        key.push_back(static_cast<char>(a.col[r]));
        key.push_back(static_cast<char>(a.unit[r]));
    }
    return key;
}

// Monomial form of the conjugation data of an ambient group, so that phi and
// theta run in O(n) on pool elements.
template <class S>
struct MonomialOps {
    unsigned n = 0;
    unsigned conductor = 4;
    ThetaKind kind = ThetaKind::GroupForm;
    Monomial<S> conj_mono;
    Monomial<S> conj_mono_inv;
    std::vector<uint8_t> kernel_units;  // central twists as unit codes

    static MonomialOps make(const Ambient<S>& amb);

    Monomial<S> theta(const Monomial<S>& m) const {
        if (kind == ThetaKind::Tau)
            return mono_conj(m);
        if (kind == ThetaKind::TauPrime)
            return mono_mul(mono_mul(conj_mono, mono_conj(m)), conj_mono_inv);
        return mono_mul(mono_mul(conj_mono, m), conj_mono_inv);
    }

    Monomial<S> phi(const Monomial<S>& m) const { return mono_mul(m, mono_inv(theta(m))); }

    // lex-least central twist, the coset key in quotient groups
    Monomial<S> canonical_twist(const Monomial<S>& m) const {
        Monomial<S> best = m;
        for (std::size_t i = 1; i < kernel_units.size(); ++i) {
            Monomial<S> cand = mono_scale<S>(kernel_units[i], m);
            if (mono_lex_cmp(cand, best) < 0)
                best = std::move(cand);
        }
        return best;
    }

    bool eq_mod_kernel(const Monomial<S>& a, const Monomial<S>& b) const {
        for (uint8_t z : kernel_units)
            if (mono_scale<S>(z, b) == a)
                return true;
        return false;
    }

    bool is_theta_fixed_mod_kernel(const Monomial<S>& m) const {
        if (kind == ThetaKind::GroupForm)
            return false;
        return eq_mod_kernel(theta(m), m);
    }
};

}  // namespace antipodal
