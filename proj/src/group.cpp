#include "antipodal/group.hpp"

#include <algorithm>
#include <numeric>

namespace antipodal {

const char* family_name(Family f) {
    switch (f) {
        case Family::SU: return "SU";
        case Family::SO_odd: return "SO_odd";
        case Family::SO_even: return "SO_even";
        case Family::Sp: return "Sp";
    }
    return "?";
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "SU")
        return Family::SU;
    if (s == "SO_odd")
        return Family::SO_odd;
    if (s == "SO_even")
        return Family::SO_even;
    if (s == "Sp")
        return Family::Sp;
    return std::nullopt;
}

const char* theta_name(ThetaKind k) {
    switch (k) {
        case ThetaKind::AdIpq: return "AdIpq";
        case ThetaKind::AdJn: return "AdJn";
        case ThetaKind::AdiI: return "AdiI";
        case ThetaKind::Tau: return "Tau";
        case ThetaKind::TauPrime: return "TauPrime";
        case ThetaKind::GroupForm: return "GroupForm";
    }
    return "?";
}

std::optional<ThetaKind> theta_from_name(const std::string& s) {
    if (s == "AdIpq")
        return ThetaKind::AdIpq;
    if (s == "AdJn")
        return ThetaKind::AdJn;
    if (s == "AdiI")
        return ThetaKind::AdiI;
    if (s == "Tau")
        return ThetaKind::Tau;
    if (s == "TauPrime")
        return ThetaKind::TauPrime;
    if (s == "GroupForm")
        return ThetaKind::GroupForm;
    return std::nullopt;
}

void GroupSpec::validate() const {
    switch (family) {
        case Family::SU:
            require(degree >= 2, Err::SpecMismatch, "SU degree must be at least 2");
            require(quotient >= 1 && degree % quotient == 0, Err::SpecMismatch,
                    "SU central quotient must divide the degree");
            break;
        case Family::SO_odd:
            require(degree >= 3 && degree % 2 == 1, Err::SpecMismatch, "SO_odd degree must be odd and >= 3");
            require(quotient == 1, Err::SpecMismatch, "SO_odd admits no central quotient");
            break;
        case Family::SO_even:
            require(degree >= 4 && degree % 2 == 0, Err::SpecMismatch, "SO_even degree must be even and >= 4");
            require(quotient == 1 || quotient == 2, Err::SpecMismatch, "SO_even quotient must be 1 or 2");
            break;
        case Family::Sp:
            require(degree >= 1, Err::SpecMismatch, "Sp degree must be at least 1");
            require(quotient == 1 || quotient == 2, Err::SpecMismatch, "Sp quotient must be 1 or 2");
            break;
    }
}

bool GroupSpec::is_adjoint() const {
    switch (family) {
        case Family::SU: return quotient == degree;
        case Family::SO_odd: return true;
        case Family::SO_even: return quotient == 2;
        case Family::Sp: return quotient == 2;
    }
    return false;
}

std::string GroupSpec::display() const {
    std::string base;
    switch (family) {
        case Family::SU: base = "SU(" + std::to_string(degree) + ")"; break;
        case Family::SO_odd:
        case Family::SO_even: base = "SO(" + std::to_string(degree) + ")"; break;
        case Family::Sp: base = "Sp(" + std::to_string(degree) + ")"; break;
    }
    if (quotient > 1) {
        if (family == Family::SU)
            base += "/<w" + std::to_string(quotient) + ">";
        else
            base += "/<-I>";
    }
    return base;
}

std::string InvolutionSpec::display() const {
    switch (kind) {
        case ThetaKind::AdIpq:
            return "Ad(I_{" + std::to_string(p) + "," + std::to_string(q) + "})";
        case ThetaKind::AdJn: return "Ad(J)";
        case ThetaKind::AdiI: return "Ad(iI)";
        case ThetaKind::Tau: return "tau";
        case ThetaKind::TauPrime: return "tau'";
        case ThetaKind::GroupForm: return "group form";
    }
    return "?";
}

template <class S>
Ambient<S> Ambient<S>::make(const GroupSpec& g, const InvolutionSpec& th) {
    g.validate();
    constexpr bool quaternionic = !scalar_traits<S>::commutative;
    if (g.family == Family::Sp)
        require(quaternionic, Err::SpecMismatch, "Sp groups use quaternion scalars");
    else
        require(!quaternionic, Err::SpecMismatch, "SU/SO groups use cyclotomic scalars");

    Ambient<S> amb;
    amb.group = g;
    amb.theta = th;
    const unsigned n = g.degree;

    switch (th.kind) {
        case ThetaKind::AdIpq:
            require(th.p >= 1 && th.q >= 1 && th.p + th.q == n, Err::SpecMismatch,
                    "Ad(I_{p,q}) needs p, q >= 1 with p + q = degree");
            amb.conj_ = ipq_matrix<S>(th.p, th.q);
            break;
        case ThetaKind::AdJn:
            require(g.family == Family::SO_even, Err::SpecMismatch, "Ad(J) lives on even orthogonal groups");
            require(n >= 6, Err::SpecMismatch, "Ad(J) on SO(2k) needs 2k >= 6");
            amb.conj_ = j_matrix<S>(n / 2);
            break;
        case ThetaKind::AdiI:
            if constexpr (quaternionic)
                amb.conj_ = iI_matrix(n);
            else
                fail(Err::SpecMismatch, "Ad(iI) lives on symplectic groups");
            break;
        case ThetaKind::Tau:
            require(g.family == Family::SU, Err::SpecMismatch, "tau lives on special unitary groups");
            amb.conj_ = SquareMatrix<S>::identity(n);
            break;
        case ThetaKind::TauPrime:
            require(g.family == Family::SU && n % 2 == 0, Err::SpecMismatch,
                    "tau' lives on even special unitary groups");
            amb.conj_ = j_matrix<S>(n / 2);
            break;
        case ThetaKind::GroupForm:
            amb.conj_ = SquareMatrix<S>::identity(n);
            break;
    }

    // kernel of the central quotient
    if constexpr (quaternionic) {
        amb.kernel_.push_back(S(1));
        if (g.quotient == 2)
            amb.kernel_.push_back(S(-1));
        amb.conductor_ = 4;
    } else {
        if (g.family == Family::SU) {
            for (unsigned t = 0; t < g.quotient; ++t)
                amb.kernel_.push_back(Cyc::root_of_unity(g.quotient, t));
            amb.conductor_ = th.antilinear() ? std::lcm(4u, 2 * g.quotient) : std::lcm(4u, g.quotient);
        } else {
            amb.kernel_.push_back(S(1));
            if (g.quotient == 2)
                amb.kernel_.push_back(S(-1));
            amb.conductor_ = 4;
        }
    }

    // theta^2 = id as an automorphism: C * theta-twist of C is central
    if (th.kind != ThetaKind::GroupForm) {
        SquareMatrix<S> sq = th.antilinear() ? amb.conj_ * amb.conj_.conj_entrywise() : amb.conj_ * amb.conj_;
        bool central = false;
        for (long s : {1L, -1L})
            if (sq == S(s) * SquareMatrix<S>::identity(n))
                central = true;
        require(central, Err::SpecMismatch, "conjugator square is not central");
    }
    return amb;
}

template <class S>
bool Ambient<S>::contains(const SquareMatrix<S>& a) const {
    if (a.dim() != dim())
        return false;
    if (!(a * a.adjoint()).is_identity())
        return false;
    switch (group.family) {
        case Family::Sp:
            return true;  // unitarity is the defining condition
        case Family::SU:
            if constexpr (scalar_traits<S>::commutative)
                return a.det() == S(1);
            return false;
        case Family::SO_odd:
        case Family::SO_even:
            if constexpr (scalar_traits<S>::commutative) {
                for (unsigned r = 0; r < a.dim(); ++r)
                    for (unsigned c = 0; c < a.dim(); ++c)
                        if (!a.at(r, c).is_real())
                            return false;
                return a.det() == S(1);
            }
            return false;
    }
    return false;
}

template <class S>
SquareMatrix<S> Ambient<S>::theta_apply(const SquareMatrix<S>& a) const {
    require(a.dim() == dim(), Err::ShapeError, "theta on a matrix of the wrong dimension");
    switch (theta.kind) {
        case ThetaKind::GroupForm:
            fail(Err::SpecMismatch, "group form spaces carry no involution action");
        case ThetaKind::Tau:
            return a.conj_entrywise();
        case ThetaKind::TauPrime:
            return conj_ * a.conj_entrywise() * conj_.adjoint();
        default:
            return conj_ * a * conj_.adjoint();
    }
}

template <class S>
SquareMatrix<S> Ambient<S>::canonical_rep(const SquareMatrix<S>& a) const {
    if (kernel_.size() == 1)
        return a;
    SquareMatrix<S> best = a;
    for (std::size_t i = 1; i < kernel_.size(); ++i) {
        SquareMatrix<S> candidate = kernel_[i] * a;
        if (SquareMatrix<S>::lex_cmp(candidate, best) < 0)
            best = std::move(candidate);
    }
    return best;
}

template <class S>
bool Ambient<S>::eq_mod_kernel(const SquareMatrix<S>& a, const SquareMatrix<S>& b) const {
    if (a.dim() != b.dim())
        return false;
    for (const S& z : kernel_)
        if (a == z * b)
            return true;
    return false;
}

template <class S>
bool Ambient<S>::is_kernel_central(const SquareMatrix<S>& a) const {
    return eq_mod_kernel(a, SquareMatrix<S>::identity(dim()));
}

template <class S>
ExtendedElement<S> Ambient<S>::ext_mul(const ExtendedElement<S>& a, const ExtendedElement<S>& b) const {
    require(theta.kind != ThetaKind::GroupForm, Err::SpecMismatch, "no extended group in group form mode");
    SquareMatrix<S> rep = a.outer ? a.rep * theta_apply(b.rep) : a.rep * b.rep;
    return {canonical_rep(rep), a.outer != b.outer};
}

template <class S>
ExtendedElement<S> Ambient<S>::ext_inv(const ExtendedElement<S>& a) const {
    require(theta.kind != ThetaKind::GroupForm, Err::SpecMismatch, "no extended group in group form mode");
    if (!a.outer)
        return {canonical_rep(a.rep.adjoint()), false};
    return {canonical_rep(theta_apply(a.rep).adjoint()), true};
}

template <class S>
ClassSignature Ambient<S>::class_signature(const ExtendedElement<S>& t) const {
    require(theta.kind != ThetaKind::GroupForm, Err::SpecMismatch, "no extended classes in group form mode");
    require(ext_is_involution(t), Err::NotAnInvolution, "class signature of a non-involution");
    ClassSignature sig;
    sig.outer = t.outer;
    sig.center_orbit = static_cast<unsigned>(kernel_.size());
    if (!t.outer) {
        // inner component: record the eigenvalue signature when applicable
        if ((t.rep * t.rep).is_identity())
            sig.linear_signatures.push_back(involution_signature(t.rep));
        return sig;
    }
    switch (theta.kind) {
        case ThetaKind::AdIpq: {
            SquareMatrix<S> m = t.rep * conj_;
            for (const S& z : kernel_) {
                SquareMatrix<S> mz = z * m;
                if ((mz * mz).is_identity())
                    sig.linear_signatures.push_back(involution_signature(mz));
            }
            std::sort(sig.linear_signatures.begin(), sig.linear_signatures.end());
            break;
        }
        case ThetaKind::AdJn: {
            if constexpr (scalar_traits<S>::commutative) {
                SquareMatrix<S> m = t.rep * conj_;
                S pf_conj = conj_.pfaffian();
                for (const S& z : kernel_) {
                    SquareMatrix<S> mz = z * m;
                    if (mz.transpose() == -mz && (mz * mz) == -SquareMatrix<S>::identity(dim()))
                        sig.pfaffian_classes.push_back(mz.pfaffian() == pf_conj ? 1 : -1);
                }
                std::sort(sig.pfaffian_classes.begin(), sig.pfaffian_classes.end());
            }
            break;
        }
        case ThetaKind::AdiI: {
            SquareMatrix<S> m = t.rep * conj_;
            sig.pfaffian_classes.push_back((m * m) == -SquareMatrix<S>::identity(dim()) ? 1 : -1);
            break;
        }
        case ThetaKind::Tau:
            sig.antilinear_symmetric = (t.rep == t.rep.transpose());
            break;
        case ThetaKind::TauPrime: {
            if constexpr (scalar_traits<S>::commutative) {
                SquareMatrix<S> w = t.rep * conj_;
                bool antisym = (w.transpose() == -w);
                sig.antilinear_symmetric = !antisym;
                if (antisym) {
                    S pf_conj = conj_.pfaffian();
                    for (const S& z : kernel_) {
                        SquareMatrix<S> wz = z * w;
                        sig.pfaffian_classes.push_back(wz.pfaffian() == pf_conj ? 1 : -1);
                    }
                    std::sort(sig.pfaffian_classes.begin(), sig.pfaffian_classes.end());
                }
            }
            break;
        }
        default:
            break;
    }
    return sig;
}

template <class S>
bool Ambient<S>::in_class_of_thetabar(const ExtendedElement<S>& t) const {
    require(theta.kind != ThetaKind::GroupForm, Err::SpecMismatch, "no extended classes in group form mode");
    require(ext_is_involution(t), Err::NotAnInvolution, "class membership of a non-involution");
    if (!t.outer)
        return false;
    switch (theta.kind) {
        case ThetaKind::AdIpq: {
            SquareMatrix<S> m = t.rep * conj_;
            for (const S& z : kernel_) {
                SquareMatrix<S> mz = z * m;
                if ((mz * mz).is_identity() && involution_signature(mz) == std::make_pair(theta.p, theta.q))
                    return true;
            }
            return false;
        }
        case ThetaKind::AdJn: {
            if constexpr (scalar_traits<S>::commutative) {
                SquareMatrix<S> m = t.rep * conj_;
                S pf_conj = conj_.pfaffian();
                for (const S& z : kernel_) {
                    SquareMatrix<S> mz = z * m;
                    if (mz.transpose() == -mz && (mz * mz) == -SquareMatrix<S>::identity(dim()) &&
                        mz.pfaffian() == pf_conj)
                        return true;
                }
            }
            return false;
        }
        case ThetaKind::AdiI: {
            // every quaternionic complex structure is symplectically conjugate to iI
            SquareMatrix<S> m = t.rep * conj_;
            return (m * m) == -SquareMatrix<S>::identity(dim());
        }
        case ThetaKind::Tau:
            // symmetric unitary representatives factor as h h^T with h in the group
            return t.rep == t.rep.transpose();
        case ThetaKind::TauPrime: {
            if constexpr (scalar_traits<S>::commutative) {
                SquareMatrix<S> w = t.rep * conj_;
                if (w.transpose() != -w)
                    return false;
                S pf_conj = conj_.pfaffian();
                for (const S& z : kernel_) {
                    SquareMatrix<S> wz = z * w;
                    if (wz.pfaffian() == pf_conj)
                        return true;
                }
            }
            return false;
        }
        default:
            return false;
    }
}

template class Ambient<Cyc>;
template class Ambient<Quat>;

}  // namespace antipodal
