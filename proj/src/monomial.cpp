#include "antipodal/monomial.hpp"

namespace antipodal {

const Q8Tables& q8_tables() {
    static const Q8Tables tables = [] {
        Q8Tables t;
        const Quat units[8] = {Quat(1),        -Quat(1),       Quat::i(), -Quat::i(),
                               Quat::j(),      -Quat::j(),     Quat::k(), -Quat::k()};
        for (int a = 0; a < 8; ++a)
            t.value[a] = units[a];
        auto index_of = [&](const Quat& q) -> uint8_t {
            for (uint8_t idx = 0; idx < 8; ++idx)
                if (units[idx] == q)
                    return idx;
            fail(Err::ParseError, "internal: quaternion unit table closure");
        };
        for (int a = 0; a < 8; ++a) {
            for (int b = 0; b < 8; ++b)
                t.mul[a][b] = index_of(units[a] * units[b]);
            t.inv[a] = index_of(units[a].inv());
            t.conj[a] = index_of(units[a].conj());
        }
        return t;
    }();
    return tables;
}

namespace {

UnitOrder build_cyc_order(unsigned conductor) {
    UnitOrder ord;
    const unsigned n = conductor;
    std::vector<Cyc> values;
    values.reserve(n);
    for (unsigned k = 0; k < n; ++k)
        values.push_back(Cyc::root_of_unity(conductor, k));
    ord.vs_zero.resize(n);
    ord.vs_unit.assign(n, std::vector<int>(n, 0));
    Cyc zero;
    for (unsigned a = 0; a < n; ++a) {
        ord.vs_zero[a] = Cyc::lex_cmp(values[a], zero);
        for (unsigned b = 0; b < n; ++b)
            ord.vs_unit[a][b] = Cyc::lex_cmp(values[a], values[b]);
    }
    return ord;
}

}  // namespace

const UnitOrder& cyc_unit_order(unsigned conductor) {
    static std::map<unsigned, UnitOrder> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(conductor);
    if (it == cache.end())
        it = cache.emplace(conductor, build_cyc_order(conductor)).first;
    return it->second;
}

const UnitOrder& quat_unit_order() {
    static const UnitOrder ord = [] {
        UnitOrder o;
        const Q8Tables& t = q8_tables();
        o.vs_zero.resize(8);
        o.vs_unit.assign(8, std::vector<int>(8, 0));
        Quat zero;
        for (unsigned a = 0; a < 8; ++a) {
            o.vs_zero[a] = Quat::lex_cmp(t.value[a], zero);
            for (unsigned b = 0; b < 8; ++b)
                o.vs_unit[a][b] = Quat::lex_cmp(t.value[a], t.value[b]);
        }
        return o;
    }();
    return ord;
}

template <class S>
MonomialOps<S> MonomialOps<S>::make(const Ambient<S>& amb) {
    MonomialOps<S> ops;
    ops.n = amb.dim();
    ops.conductor = amb.conductor();
    ops.kind = amb.theta.kind;
    const unsigned n = ops.n;

    Monomial<S> conj_mono = Monomial<S>::identity(n, ops.conductor);
    switch (ops.kind) {
        case ThetaKind::AdIpq:
            for (unsigned r = 0; r < amb.theta.p; ++r) {
                if constexpr (scalar_traits<S>::commutative)
                    conj_mono.unit[r] = static_cast<uint8_t>(ops.conductor / 2);  // -1
                else
                    conj_mono.unit[r] = 1;  // -1
            }
            break;
        case ThetaKind::AdJn:
        case ThetaKind::TauPrime: {
            const unsigned h = n / 2;
            for (unsigned r = 0; r < h; ++r) {
                conj_mono.col[r] = static_cast<uint8_t>(r + h);
                conj_mono.col[r + h] = static_cast<uint8_t>(r);
                if constexpr (scalar_traits<S>::commutative)
                    conj_mono.unit[r + h] = static_cast<uint8_t>(ops.conductor / 2);  // -1
                else
                    conj_mono.unit[r + h] = 1;
            }
            break;
        }
        case ThetaKind::AdiI:
            for (unsigned r = 0; r < n; ++r)
                conj_mono.unit[r] = 2;  // +i
            break;
        case ThetaKind::Tau:
        case ThetaKind::GroupForm:
            break;
    }
    ops.conj_mono = conj_mono;
    ops.conj_mono_inv = mono_inv(conj_mono);

    ops.kernel_units.clear();
    if constexpr (scalar_traits<S>::commutative) {
        const unsigned m = amb.group.quotient;
        for (unsigned t = 0; t < m; ++t)
            ops.kernel_units.push_back(static_cast<uint8_t>((t * ops.conductor) / m));
    } else {
        ops.kernel_units.push_back(0);
        if (amb.group.quotient == 2)
            ops.kernel_units.push_back(1);
    }
    return ops;
}

template struct MonomialOps<Cyc>;
template struct MonomialOps<Quat>;

}  // namespace antipodal
