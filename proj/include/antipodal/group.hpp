#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antipodal/linalg.hpp"
#include "antipodal/matrix.hpp"

namespace antipodal {

enum class Family { SU, SO_odd, SO_even, Sp };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// degree is the matrix dimension (quaternionic dimension for Sp).
// quotient m: SU(n)/<omega_m I> with m | n; for Sp and SO_even, m = 2 models
// the adjoint quotients PSp(n) and PSO(2k) by <-I>.
struct GroupSpec {
    Family family = Family::SU;
    unsigned degree = 2;
    unsigned quotient = 1;

    void validate() const;
    bool is_adjoint() const;
    std::string display() const;
};

enum class ThetaKind { AdIpq, AdJn, AdiI, Tau, TauPrime, GroupForm };

const char* theta_name(ThetaKind k);
std::optional<ThetaKind> theta_from_name(const std::string& s);

struct InvolutionSpec {
    ThetaKind kind = ThetaKind::AdIpq;
    unsigned p = 0, q = 0;  // AdIpq only

    bool antilinear() const { return kind == ThetaKind::Tau || kind == ThetaKind::TauPrime; }
    std::string display() const;
};

template <class S>
SquareMatrix<S> ipq_matrix(unsigned p, unsigned q) {
    SquareMatrix<S> m(p + q);
    for (unsigned i = 0; i < p + q; ++i)
        m.at(i, i) = i < p ? S(-1) : S(1);
    return m;
}

template <class S>
SquareMatrix<S> j_matrix(unsigned half) {
    SquareMatrix<S> m(2 * half);
    for (unsigned i = 0; i < half; ++i) {
        m.at(i, half + i) = S(1);
        m.at(half + i, i) = S(-1);
    }
    return m;
}

inline QuatMatrix iI_matrix(unsigned n) {
    QuatMatrix m(n);
    for (unsigned i = 0; i < n; ++i)
        m.at(i, i) = Quat::i();
    return m;
}

template <class S>
struct ExtendedElement {
    SquareMatrix<S> rep;
    bool outer = false;

    bool operator==(const ExtendedElement& b) const { return outer == b.outer && rep == b.rep; }
};

// Conjugacy-class invariants of an involution in the extended group,
// constant on conjugacy classes by construction.
struct ClassSignature {
    bool outer = false;
    // linear theta: signatures of the admissible central twists of rep*C
    std::vector<std::pair<unsigned, unsigned>> linear_signatures;
    // skew cases (AdJn, TauPrime): pfaffian classes of admissible twists,
    // each recorded as the sign relative to the pfaffian of the conjugator
    std::vector<int> pfaffian_classes;
    std::optional<bool> antilinear_symmetric;
    unsigned center_orbit = 1;

    bool operator==(const ClassSignature& b) const {
        return outer == b.outer && linear_signatures == b.linear_signatures &&
               pfaffian_classes == b.pfaffian_classes && antilinear_symmetric == b.antilinear_symmetric &&
               center_orbit == b.center_orbit;
    }
};

// Group G with involutive automorphism theta and the extended group
// bookkeeping for G semidirect <thetabar> with thetabar^2 = 1.
template <class S>
class Ambient {
public:
    GroupSpec group;
    InvolutionSpec theta;

    static Ambient make(const GroupSpec& g, const InvolutionSpec& th);

    unsigned dim() const { return group.degree; }
    unsigned conductor() const { return conductor_; }
    const SquareMatrix<S>& conjugator() const { return conj_; }
    const std::vector<S>& kernel() const { return kernel_; }

    bool contains(const SquareMatrix<S>& a) const;
    SquareMatrix<S> theta_apply(const SquareMatrix<S>& a) const;
    SquareMatrix<S> canonical_rep(const SquareMatrix<S>& a) const;
    bool eq_mod_kernel(const SquareMatrix<S>& a, const SquareMatrix<S>& b) const;
    bool is_kernel_central(const SquareMatrix<S>& a) const;

    // g theta(g)^{-1}; inverses of group elements are adjoints
    SquareMatrix<S> phi_raw(const SquareMatrix<S>& g) const {
        return canonical_rep(g * theta_apply(g).adjoint());
    }

    ExtendedElement<S> ext_identity() const { return {SquareMatrix<S>::identity(dim()), false}; }
    ExtendedElement<S> thetabar() const { return {SquareMatrix<S>::identity(dim()), true}; }
    ExtendedElement<S> ext_mul(const ExtendedElement<S>& a, const ExtendedElement<S>& b) const;
    ExtendedElement<S> ext_inv(const ExtendedElement<S>& a) const;
    bool ext_eq(const ExtendedElement<S>& a, const ExtendedElement<S>& b) const {
        return a.outer == b.outer && eq_mod_kernel(a.rep, b.rep);
    }
    bool ext_is_involution(const ExtendedElement<S>& t) const {
        return ext_eq(ext_mul(t, t), ext_identity());
    }

    ClassSignature class_signature(const ExtendedElement<S>& t) const;
    bool in_class_of_thetabar(const ExtendedElement<S>& t) const;

private:
    SquareMatrix<S> conj_{0};
    std::vector<S> kernel_;
    unsigned conductor_ = 4;
};

using CycAmbient = Ambient<Cyc>;
using QuatAmbient = Ambient<Quat>;

extern template class Ambient<Cyc>;
extern template class Ambient<Quat>;

}  // namespace antipodal
