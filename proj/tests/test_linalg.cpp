#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antipodal/group.hpp"
#include "antipodal/linalg.hpp"

using namespace antipodal;

namespace {

CycMatrix diag_cyc(std::initializer_list<Cyc> entries) {
    CycMatrix m(static_cast<unsigned>(entries.size()));
    unsigned i = 0;
    for (const Cyc& e : entries) {
        m.at(i, i) = e;
        ++i;
    }
    return m;
}

// independent check: plain rational RREF rank over the realified system
template <class S>
unsigned rref_rank(RectMat<S> m) {
    unsigned row = 0;
    for (unsigned c = 0; c < m.cols && row < m.rows; ++c) {
        unsigned pr = row;
        while (pr < m.rows && m.at(pr, c).is_zero())
            ++pr;
        if (pr == m.rows)
            continue;
        for (unsigned cc = 0; cc < m.cols; ++cc)
            std::swap(m.at(row, cc), m.at(pr, cc));
        S inv = m.at(row, c).inv();
        for (unsigned cc = 0; cc < m.cols; ++cc)
            m.at(row, cc) = m.at(row, cc) * inv;
    for (unsigned r = 0; r < m.rows; ++r) {
            if (r == row || m.at(r, c).is_zero())
                continue;
            S f = m.at(r, c);
            for (unsigned cc = 0; cc < m.cols; ++cc)
                m.at(r, cc) = m.at(r, cc) - f * m.at(row, cc);
        }
        ++row;
    }
    return row;
}

std::mt19937 rng(20240811);

CycMatrix random_signed_monomial(unsigned n, unsigned unit_order = 4) {
    std::vector<unsigned> perm(n);
    for (unsigned i = 0; i < n; ++i)
        perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CycMatrix m(n);
    for (unsigned r = 0; r < n; ++r)
        m.at(r, perm[r]) = Cyc::root_of_unity(unit_order, static_cast<long>(rng() % unit_order));
    return m;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    CycMatrix j1 = j_matrix<Cyc>(1);
    CHECK(j1 * j1 == -CycMatrix::identity(2));
    CHECK(ipq_matrix<Cyc>(1, 1).det() == Cyc(-1));
    CycMatrix d = diag_cyc({Cyc::i(), -Cyc::i()});
    CHECK(d.adjoint() == diag_cyc({-Cyc::i(), Cyc::i()}));
    CHECK_THROWS_AS(j1 * CycMatrix::identity(3), Error);
    CHECK_THROWS_AS(QuatMatrix::identity(2).det(), Error);
    CHECK(d.inverse() * d == CycMatrix::identity(2));
}

TEST_CASE("involution signatures") {
    CHECK(involution_signature(ipq_matrix<Cyc>(1, 3)) == std::make_pair(1u, 3u));
    CHECK(involution_signature(CycMatrix::identity(5)) == std::make_pair(0u, 5u));
    CycMatrix swap2(2);
    swap2.at(0, 1) = Cyc(1);
    swap2.at(1, 0) = Cyc(1);
    // eigenvalues of the swap are +1 and -1: rank of (I-B)/2 is 1
    CHECK(involution_signature(swap2) == std::make_pair(1u, 1u));
    CHECK_THROWS_AS(involution_signature(j_matrix<Cyc>(1)), Error);
    CHECK(involution_signature(ipq_matrix<Quat>(2, 1)) == std::make_pair(2u, 1u));
}

TEST_CASE("signature is conjugation invariant") {
    CycMatrix b = ipq_matrix<Cyc>(2, 2);
    for (int iter = 0; iter < 50; ++iter) {
        CycMatrix h = random_signed_monomial(4);
        CycMatrix conj = h * b * h.inverse();
        CHECK(involution_signature(conj) == std::make_pair(2u, 2u));
    }
}

TEST_CASE("pfaffian") {
    CycMatrix j1 = j_matrix<Cyc>(1);
    CHECK(j1.pfaffian() == Cyc(1));
    CycMatrix j2 = j_matrix<Cyc>(2);
    CHECK(j2.pfaffian() * j2.pfaffian() == j2.det());
    // Pf(h J h^T) = det(h) Pf(J) as a polynomial identity, exact instances
    for (int iter = 0; iter < 30; ++iter) {
        CycMatrix h(4);
        for (unsigned r = 0; r < 4; ++r)
            for (unsigned c = 0; c < 4; ++c)
                h.at(r, c) = Cyc(static_cast<long>(rng() % 7) - 3);
        CycMatrix w = h * j2 * h.transpose();
        CHECK(w.pfaffian() == h.det() * j2.pfaffian());
    }
    CHECK_THROWS_AS(CycMatrix::identity(2).pfaffian(), Error);
}

TEST_CASE("bareiss rank and nullspace") {
    RectMat<Cyc> m(3, 4);
    // rows: (1,2,3,4), (2,4,6,8), (0,1,1,0)
    long rows[3][4] = {{1, 2, 3, 4}, {2, 4, 6, 8}, {0, 1, 1, 0}};
    for (unsigned r = 0; r < 3; ++r)
        for (unsigned c = 0; c < 4; ++c)
            m.at(r, c) = Cyc(rows[r][c]);
    CHECK(exact_rank(m) == 2);
    auto ns = nullspace_basis(m);
    CHECK(ns.size() == 2);
    for (const auto& x : ns)
        for (unsigned r = 0; r < 3; ++r) {
            Cyc acc;
            for (unsigned c = 0; c < 4; ++c)
                acc += m.at(r, c) * x[c];
            CHECK(acc.is_zero());
        }
}

TEST_CASE("commutant of the empty and diagonal families") {
    // empty constraint set: the full matrix algebra
    std::vector<CycMatrix> none;
    CHECK(commutant_basis(none, std::nullopt, 2).size() == 4);
    CHECK_THROWS_AS(commutant_basis(none), Error);
    // empty family with complex conjugation twist over Q(i): real matrices
    auto real_basis = commutant_basis({}, AntilinearTwist{CycMatrix::identity(2), 4});
    CHECK(real_basis.size() == 4);
    for (const auto& y : real_basis)
        CHECK(y == y.conj_entrywise());

    std::vector<CycMatrix> d1{diag_cyc({Cyc(1), Cyc(-1)})};
    auto basis = commutant_basis(d1);
    CHECK(basis.size() == 2);
    for (const auto& y : basis)
        CHECK(y * d1[0] == d1[0] * y);

    // full diagonal sign group in dimension n forces diagonality
    for (unsigned n = 2; n <= 4; ++n) {
        std::vector<CycMatrix> signs;
        for (unsigned i = 0; i < n; ++i) {
            CycMatrix d = CycMatrix::identity(n);
            d.at(i, i) = Cyc(-1);
            signs.push_back(d);
        }
        CHECK(commutant_basis(signs).size() == n);
    }
}

TEST_CASE("commutant dimension matches an independent elimination") {
    for (int iter = 0; iter < 10; ++iter) {
        unsigned n = 2 + (rng() % 3);
        std::vector<CycMatrix> fam{random_signed_monomial(n), random_signed_monomial(n)};
        auto basis = commutant_basis(fam);
        for (const auto& y : basis)
            for (const auto& a : fam)
                CHECK(y * a == a * y);
        // independent route: assemble the same system and run plain RREF
        RectMat<Cyc> sys(static_cast<unsigned>(fam.size()) * n * n, n * n);
        unsigned row0 = 0;
        for (const auto& a : fam) {
            for (unsigned i = 0; i < n; ++i)
                for (unsigned j = 0; j < n; ++j)
                    for (unsigned s = 0; s < n; ++s) {
                        sys.at(row0 + i * n + j, i * n + s) += a.at(s, j);
                        sys.at(row0 + i * n + j, s * n + j) -= a.at(i, s);
                    }
            row0 += n * n;
        }
        CHECK(basis.size() == n * n - rref_rank(sys));
    }
}

TEST_CASE("twisted commutant restricts to real matrices") {
    // diagonal sign family plus complex conjugation: real diagonal solutions
    std::vector<CycMatrix> signs;
    for (unsigned i = 0; i + 1 < 3; ++i) {
        CycMatrix d = CycMatrix::identity(3);
        d.at(i, i) = Cyc(-1);
        d.at(i + 1, i + 1) = Cyc(-1);
        signs.push_back(d);
    }
    auto basis = commutant_basis(signs, AntilinearTwist{CycMatrix::identity(3), 4});
    CHECK(basis.size() == 3);
    for (const auto& y : basis)
        CHECK(y == y.conj_entrywise());
}

TEST_CASE("quaternion commutant and rank") {
    QuatMatrix ii = iI_matrix(1);
    auto basis = commutant_basis(std::vector<QuatMatrix>{ii});
    CHECK(basis.size() == 2);  // 1 and i span the centralizer of i in H
    for (const auto& y : basis)
        CHECK(y * ii == ii * y);
    CHECK(exact_rank_quaternion(ii) == 1);
    QuatMatrix z(2);
    z.at(0, 0) = Quat::j();
    CHECK(exact_rank_quaternion(z) == 1);
    CHECK(exact_rank(realify(z)) == 4);
}
