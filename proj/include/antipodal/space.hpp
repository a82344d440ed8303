#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "antipodal/group.hpp"
#include "antipodal/monomial.hpp"

namespace antipodal {

enum class SubgroupMode { FullFixedGroup, IdentityComponentWithOracle };

template <class S>
struct CosetPoint {
    SquareMatrix<S> rep;
};

template <class S>
struct AntipodalSet {
    std::vector<CosetPoint<S>> points;
    bool contains_origin = false;
};

// M = G/H for H between (G^theta)^0 and G^theta. The main mode is
// H = G^theta; the oracle mode models a named identity-component subgroup
// with explicit G^theta/H coset representatives.
template <class S>
class SpaceModel {
public:
    Ambient<S> amb;
    SubgroupMode mode = SubgroupMode::FullFixedGroup;
    std::function<bool(const SquareMatrix<S>&)> component_oracle;
    std::vector<SquareMatrix<S>> fiber_reps;

    static SpaceModel full(Ambient<S> ambient) {
        SpaceModel s;
        s.amb = std::move(ambient);
        return s;
    }

    static SpaceModel with_oracle(Ambient<S> ambient, std::function<bool(const SquareMatrix<S>&)> oracle,
                                  std::vector<SquareMatrix<S>> fibers) {
        SpaceModel s;
        s.amb = std::move(ambient);
        s.mode = SubgroupMode::IdentityComponentWithOracle;
        s.component_oracle = std::move(oracle);
        s.fiber_reps = std::move(fibers);
        return s;
    }

    bool group_form() const { return amb.theta.kind == ThetaKind::GroupForm; }
    unsigned dim() const { return amb.dim(); }

    CosetPoint<S> origin() const { return {SquareMatrix<S>::identity(dim())}; }

    CosetPoint<S> make_point(const SquareMatrix<S>& rep) const {
        require(amb.contains(rep), Err::NotInGroup, "point representative fails group membership");
        return {amb.canonical_rep(rep)};
    }

    bool in_h(const SquareMatrix<S>& u) const {
        if (group_form())
            return amb.is_kernel_central(u);
        if (mode == SubgroupMode::FullFixedGroup)
            return amb.eq_mod_kernel(amb.theta_apply(u), u);
        return component_oracle(u);
    }

    bool coset_eq(const CosetPoint<S>& x, const CosetPoint<S>& y) const {
        if (group_form())
            return amb.eq_mod_kernel(x.rep, y.rep);
        return in_h(x.rep.adjoint() * y.rep);
    }

    bool is_origin(const CosetPoint<S>& x) const { return coset_eq(x, origin()); }

    SquareMatrix<S> phi(const CosetPoint<S>& x) const {
        require(!group_form(), Err::SpecMismatch, "no Cartan morphism in group form mode");
        require(amb.contains(x.rep), Err::NotInGroup, "point representative fails group membership");
        return amb.phi_raw(x.rep);
    }

    ExtendedElement<S> psi(const CosetPoint<S>& x) const { return {phi(x), true}; }

    // s_x(y) = g1 theta(g1^{-1} g2) H; in group form s_x(y) = x y^{-1} x
    CosetPoint<S> geodesic_symmetry(const CosetPoint<S>& x, const CosetPoint<S>& y) const {
        if (group_form())
            return {amb.canonical_rep(x.rep * y.rep.adjoint() * x.rep)};
        require(amb.contains(x.rep) && amb.contains(y.rep), Err::NotInGroup,
                "geodesic symmetry of points outside the group");
        return {amb.canonical_rep(x.rep * amb.theta_apply(x.rep.adjoint() * y.rep))};
    }

    bool is_antipodal_pair(const CosetPoint<S>& x, const CosetPoint<S>& y) const {
        if (group_form()) {
            SquareMatrix<S> u = y.rep.adjoint() * x.rep;
            return amb.is_kernel_central(u * u);
        }
        require(amb.contains(x.rep) && amb.contains(y.rep), Err::NotInGroup,
                "antipodal pair test outside the group");
        return in_h(amb.phi_raw(y.rep.adjoint() * x.rep));
    }

    bool fixed_point_test(const CosetPoint<S>& x) const {
        require(mode == SubgroupMode::FullFixedGroup && !group_form(), Err::SpecMismatch,
                "fixed point test needs the full fixed group mode");
        SquareMatrix<S> v = phi(x);
        return in_h(v) && amb.eq_mod_kernel(v * v, SquareMatrix<S>::identity(dim()));
    }

    std::pair<ExtendedElement<S>, ExtendedElement<S>> involution_pair(const CosetPoint<S>& x) const {
        require(fixed_point_test(x), Err::NotFixed, "involution pair of a point not fixed by s_o");
        return {psi(x), amb.thetabar()};
    }

    // canonical coset invariant: in full mode phi is injective on G/G^theta,
    // so the kernel-canonical phi matrix identifies the coset exactly
    SquareMatrix<S> coset_invariant(const CosetPoint<S>& x) const {
        if (group_form())
            return amb.canonical_rep(x.rep);
        require(mode == SubgroupMode::FullFixedGroup, Err::SpecMismatch,
                "no injective coset invariant in oracle mode");
        return amb.phi_raw(x.rep);
    }
};

enum class AntipodalMethod { Pairwise, PhiCriterion };

// Deduplicate under coset equality; the origin, when present, is points[0].
template <class S>
AntipodalSet<S> make_antipodal_set(const SpaceModel<S>& space, std::vector<CosetPoint<S>> pts) {
    AntipodalSet<S> out;
    std::vector<CosetPoint<S>> dedup;
    for (auto& p : pts) {
        bool seen = false;
        for (const auto& q : dedup)
            if (space.coset_eq(p, q)) {
                seen = true;
                break;
            }
        if (!seen)
            dedup.push_back(std::move(p));
    }
    int origin_at = -1;
    for (std::size_t i = 0; i < dedup.size(); ++i)
        if (space.is_origin(dedup[i])) {
            origin_at = static_cast<int>(i);
            break;
        }
    out.contains_origin = origin_at >= 0;
    if (origin_at > 0)
        std::swap(dedup[0], dedup[static_cast<std::size_t>(origin_at)]);
    out.points = std::move(dedup);
    return out;
}

template <class S>
bool is_antipodal_set(const SpaceModel<S>& space, const AntipodalSet<S>& x,
                      AntipodalMethod method = AntipodalMethod::Pairwise);

// Group form: a subset containing the identity is a maximal-style antipodal
// candidate iff it is an elementary abelian 2-subgroup.
template <class S>
bool group_form_antipodal_check(const SpaceModel<S>& space, const AntipodalSet<S>& x);

template <class S>
struct Elem2Subgroup {
    const SpaceModel<S>* space = nullptr;
    std::vector<ExtendedElement<S>> basis;
    std::vector<ExtendedElement<S>> elements;

    unsigned rank() const { return static_cast<unsigned>(basis.size()); }

    bool contains(const ExtendedElement<S>& t) const {
        for (const auto& e : elements)
            if (space->amb.ext_eq(e, t))
                return true;
        return false;
    }
};

template <class S>
Elem2Subgroup<S> build_f2(const SpaceModel<S>& space, const AntipodalSet<S>& x, unsigned rank_limit = 20);

// Builds the subgroup generated by arbitrary commuting involutions; shared by
// build_f2 and the adjoint reconstruction.
template <class S>
Elem2Subgroup<S> generate_elem2(const SpaceModel<S>& space, const std::vector<ExtendedElement<S>>& gens,
                                unsigned rank_limit);

// pi^{-1}(pi(X)) for the projection to G/G^theta is antipodal iff X is; runs
// both sides and checks the equivalence.
template <class S>
bool projection_antipodal_check(const SpaceModel<S>& space, const AntipodalSet<S>& x);

// Adjoint-type reduction: the image of F2(X) in the automorphism-group model.
template <class S>
struct AdjointProjection {
    bool inner = true;
    // inner case: representatives of m * C^outer modulo unit scalars
    std::vector<SquareMatrix<S>> inner_elements;
    // outer case: F(X) = F2(X) unchanged
    std::vector<ExtendedElement<S>> outer_elements;

    std::size_t size() const { return inner ? inner_elements.size() : outer_elements.size(); }
};

// canonical representative modulo mu_N unit scalars (adjoint model equality)
template <class S>
SquareMatrix<S> scalar_canonical(const SquareMatrix<S>& a, unsigned conductor);

template <class S>
bool theta_is_inner(const Ambient<S>& amb);

template <class S>
AdjointProjection<S> adjoint_project(const SpaceModel<S>& space, const Elem2Subgroup<S>& f2);

template <class S>
bool projection_contains(const SpaceModel<S>& space, const AdjointProjection<S>& f,
                         const SquareMatrix<S>& candidate, bool outer_flag);

// ---------------- implementation ----------------

template <class S>
bool is_antipodal_set(const SpaceModel<S>& space, const AntipodalSet<S>& x, AntipodalMethod method) {
    if (x.points.empty())
        return false;
    if (space.group_form() || method == AntipodalMethod::Pairwise) {
        for (std::size_t i = 0; i < x.points.size(); ++i)
            for (std::size_t j = i + 1; j < x.points.size(); ++j)
                if (!space.is_antipodal_pair(x.points[i], x.points[j]))
                    return false;
        return true;
    }
    require(space.mode == SubgroupMode::FullFixedGroup, Err::SpecMismatch,
            "phi criterion needs the full fixed group mode");
    require(x.contains_origin, Err::MissingOrigin, "phi criterion needs the origin in the set");
    const SquareMatrix<S> id = SquareMatrix<S>::identity(space.dim());
    std::vector<SquareMatrix<S>> phis;
    phis.reserve(x.points.size());
    for (const auto& p : x.points) {
        SquareMatrix<S> v = space.phi(p);
        if (!space.in_h(v) || !space.amb.eq_mod_kernel(v * v, id))
            return false;
        phis.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < phis.size(); ++i)
        for (std::size_t j = i + 1; j < phis.size(); ++j)
            if (!space.amb.eq_mod_kernel(phis[i] * phis[j], phis[j] * phis[i]))
                return false;
    return true;
}

template <class S>
bool group_form_antipodal_check(const SpaceModel<S>& space, const AntipodalSet<S>& x) {
    require(space.group_form(), Err::SpecMismatch, "group form check on a coset space");
    for (const auto& p : x.points)
        require(space.amb.contains(p.rep), Err::NotInGroup, "group form check outside the group");
    const SquareMatrix<S> id = SquareMatrix<S>::identity(space.dim());
    for (const auto& p : x.points)
        if (!space.amb.eq_mod_kernel(p.rep * p.rep, id))
            return false;
    for (std::size_t i = 0; i < x.points.size(); ++i)
        for (std::size_t j = i + 1; j < x.points.size(); ++j)
            if (!space.amb.eq_mod_kernel(x.points[i].rep * x.points[j].rep,
                                         x.points[j].rep * x.points[i].rep))
                return false;
    // closure under products
    for (std::size_t i = 0; i < x.points.size(); ++i)
        for (std::size_t j = i; j < x.points.size(); ++j) {
            CosetPoint<S> prod{space.amb.canonical_rep(x.points[i].rep * x.points[j].rep)};
            bool found = false;
            for (const auto& q : x.points)
                if (space.amb.eq_mod_kernel(prod.rep, q.rep)) {
                    found = true;
                    break;
                }
            if (!found)
                return false;
        }
    return true;
}

template <class S>
Elem2Subgroup<S> generate_elem2(const SpaceModel<S>& space, const std::vector<ExtendedElement<S>>& gens,
                                unsigned rank_limit) {
    Elem2Subgroup<S> out;
    out.space = &space;
    out.elements.push_back(space.amb.ext_identity());
    for (const auto& g : gens) {
        require(space.amb.ext_is_involution(g), Err::NotAntipodal,
                "elementary abelian generator does not square to the identity");
        for (const auto& b : out.basis)
            require(space.amb.ext_eq(space.amb.ext_mul(g, b), space.amb.ext_mul(b, g)), Err::NotAntipodal,
                    "elementary abelian generators must commute");
        if (out.contains(g))
            continue;
        require(out.rank() < rank_limit, Err::RankLimit,
                "elementary abelian rank exceeds the materialization bound " + std::to_string(rank_limit));
        out.basis.push_back(g);
        std::size_t half = out.elements.size();
        out.elements.reserve(2 * half);
        for (std::size_t i = 0; i < half; ++i)
            out.elements.push_back(space.amb.ext_mul(g, out.elements[i]));
    }
    return out;
}

template <class S>
Elem2Subgroup<S> build_f2(const SpaceModel<S>& space, const AntipodalSet<S>& x, unsigned rank_limit) {
    require(!space.group_form() && space.mode == SubgroupMode::FullFixedGroup, Err::SpecMismatch,
            "F2 construction needs the full fixed group mode");
    require(x.contains_origin, Err::MissingOrigin, "F2 construction needs the origin in the set");
    require(is_antipodal_set(space, x, AntipodalMethod::Pairwise), Err::NotAntipodal,
            "F2 construction on a non-antipodal set");
    std::vector<ExtendedElement<S>> gens;
    gens.push_back(space.amb.thetabar());
    for (const auto& p : x.points)
        gens.push_back(space.psi(p));
    return generate_elem2(space, gens, rank_limit);
}

template <class S>
bool projection_antipodal_check(const SpaceModel<S>& space, const AntipodalSet<S>& x) {
    require(space.mode == SubgroupMode::IdentityComponentWithOracle, Err::SpecMismatch,
            "projection check runs in the oracle mode");
    require(!space.fiber_reps.empty(), Err::FiberDataRequired,
            "projection check needs G^theta/H fiber representatives");
    std::vector<CosetPoint<S>> lifted;
    for (const auto& p : x.points)
        for (const auto& r : space.fiber_reps)
            lifted.push_back({p.rep * r});
    AntipodalSet<S> full = make_antipodal_set(space, std::move(lifted));
    bool saturated_verdict = is_antipodal_set(space, full, AntipodalMethod::Pairwise);
    bool direct_verdict = is_antipodal_set(space, x, AntipodalMethod::Pairwise);
    require(saturated_verdict == direct_verdict, Err::NotAntipodal,
            "projection equivalence violated; fiber data is inconsistent");
    return saturated_verdict;
}

template <class S>
SquareMatrix<S> scalar_canonical(const SquareMatrix<S>& a, unsigned conductor) {
    SquareMatrix<S> best = a;
    if constexpr (scalar_traits<S>::commutative) {
        for (unsigned t = 1; t < conductor; ++t) {
            SquareMatrix<S> cand = S(Cyc::root_of_unity(conductor, t)) * a;
            if (SquareMatrix<S>::lex_cmp(cand, best) < 0)
                best = std::move(cand);
        }
    } else {
        SquareMatrix<S> cand = S(-1) * a;
        if (SquareMatrix<S>::lex_cmp(cand, best) < 0)
            best = std::move(cand);
    }
    return best;
}

template <class S>
bool theta_is_inner(const Ambient<S>& amb) {
    switch (amb.theta.kind) {
        case ThetaKind::AdiI:
            return true;
        case ThetaKind::AdJn:
            return true;
        case ThetaKind::AdIpq:
            // on even orthogonal groups Ad(I_{p,q}) with odd p conjugates by a
            // determinant -1 matrix with no central sign fix, hence is outer;
            // on odd orthogonal groups -I_{p,q} repairs the determinant
            if (amb.group.family == Family::SO_even)
                return amb.theta.p % 2 == 0;
            return true;
        default:
            return false;
    }
}

template <class S>
AdjointProjection<S> adjoint_project(const SpaceModel<S>& space, const Elem2Subgroup<S>& f2) {
    require(space.amb.group.is_adjoint(), Err::SpecMismatch,
            "adjoint reduction needs a group of adjoint type");
    AdjointProjection<S> out;
    out.inner = theta_is_inner(space.amb);
    if (!out.inner) {
        out.outer_elements = f2.elements;
        return out;
    }
    const unsigned cond = space.amb.conductor();
    for (const auto& e : f2.elements) {
        SquareMatrix<S> m = e.outer ? e.rep * space.amb.conjugator() : e.rep;
        SquareMatrix<S> canon = scalar_canonical(m, cond);
        bool seen = false;
        for (const auto& known : out.inner_elements)
            if (known == canon) {
                seen = true;
                break;
            }
        if (!seen)
            out.inner_elements.push_back(std::move(canon));
    }
    return out;
}

template <class S>
bool projection_contains(const SpaceModel<S>& space, const AdjointProjection<S>& f,
                         const SquareMatrix<S>& candidate, bool outer_flag) {
    if (f.inner) {
        SquareMatrix<S> m = outer_flag ? candidate * space.amb.conjugator() : candidate;
        SquareMatrix<S> canon = scalar_canonical(m, space.amb.conductor());
        for (const auto& known : f.inner_elements)
            if (known == canon)
                return true;
        return false;
    }
    for (const auto& known : f.outer_elements)
        if (known.outer == outer_flag && space.amb.eq_mod_kernel(known.rep, candidate))
            return true;
    return false;
}

}  // namespace antipodal
