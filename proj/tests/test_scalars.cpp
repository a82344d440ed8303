#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "antipodal/cyclotomic.hpp"
#include "antipodal/quaternion.hpp"

using namespace antipodal;

TEST_CASE("rational parsing and printing") {
    CHECK(rat_to_string(rat(3, 6)) == "1/2");
    CHECK(rat_from_string("-4/8") == rat(-1, 2));
    CHECK(rat_from_string("7") == rat(7));
    CHECK_THROWS_AS(rat_from_string("1/0"), Error);
    CHECK_THROWS_AS(rat_from_string("x"), Error);
}

TEST_CASE("roots of unity reduce canonically") {
    Cyc w4 = Cyc::root_of_unity(4, 1);
    CHECK(w4 * w4 == Cyc(-1));  // i^2 = -1
    Cyc w3 = Cyc::root_of_unity(3, 1);
    CHECK(w3 + w3 * w3 == Cyc(-1));  // sum of primitive cube roots
    Cyc w8 = Cyc::root_of_unity(8, 1);
    CHECK(w8 * w8 == w4);  // cross-conductor equality via lifting
    CHECK(Cyc::root_of_unity(6, 1) == Cyc(1) + Cyc::root_of_unity(3, 1));
}

TEST_CASE("conjugation and inversion") {
    Cyc w5 = Cyc::root_of_unity(5, 1);
    CHECK(w5.conj() == Cyc::root_of_unity(5, 4));
    CHECK(w5 * w5.inv() == Cyc(1));
    Cyc x = Cyc(rat(3, 7)) + Cyc(rat(2)) * w5 - w5 * w5;
    CHECK(x * x.inv() == Cyc(1));
    CHECK((x * x.conj()).is_real());
    CHECK_THROWS_AS(Cyc().inv(), Error);
}

TEST_CASE("field axioms on random cyclotomic values") {
    std::mt19937 rng(7);
    auto rand_scalar = [&rng]() {
        static const unsigned conductors[] = {1, 3, 4, 8, 12};
        unsigned n = conductors[rng() % 5];
        Cyc acc;
        for (int t = 0; t < 3; ++t)
            acc += Cyc(rat(static_cast<long>(rng() % 7) - 3)) * Cyc::root_of_unity(n, static_cast<long>(rng() % n));
        return acc;
    };
    for (int iter = 0; iter < 200; ++iter) {
        Cyc a = rand_scalar(), b = rand_scalar(), c = rand_scalar();
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * b).conj() == a.conj() * b.conj());
        if (!a.is_zero())
            CHECK(a * a.inv() == Cyc(1));
    }
}

TEST_CASE("minimal conductor is canonical") {
    Cyc z = Cyc::root_of_unity(8, 2);  // equals i
    CHECK(z.minimal().conductor() == 4);
    CHECK(z.minimal() == Cyc::i());
    CHECK(z.hash() == Cyc::i().hash());
    Cyc r = Cyc::root_of_unity(12, 6);  // equals -1
    CHECK(r.minimal().conductor() == 1);
    CHECK(r == Cyc(-1));
    Cyc w6 = Cyc::root_of_unity(6, 1);
    CHECK(w6.minimal().conductor() == 3);
    CHECK(w6.hash() == (Cyc(1) + Cyc::root_of_unity(3, 1)).hash());
}

TEST_CASE("conductor limit guards blowup") {
    unsigned saved = Cyc::conductor_limit();
    Cyc::set_conductor_limit(16);
    CHECK_THROWS_AS(Cyc::root_of_unity(24, 1), Error);
    CHECK_THROWS_AS(Cyc::root_of_unity(8, 1) * Cyc::root_of_unity(3, 1), Error);
    Cyc::set_conductor_limit(saved);
    CHECK((Cyc::root_of_unity(8, 1) * Cyc::root_of_unity(3, 1)).conductor() == 24);
}

TEST_CASE("lex order on scalar values") {
    CHECK(Cyc::lex_cmp(Cyc(-1), Cyc(0)) < 0);
    CHECK(Cyc::lex_cmp(Cyc(0), Cyc(1)) < 0);
    CHECK(Cyc::lex_cmp(-Cyc::i(), Cyc::i()) < 0);  // [0,-1] before [0,1]
    CHECK(Cyc::lex_cmp(Cyc::i(), Cyc::i()) == 0);
}

TEST_CASE("quaternion relations") {
    Quat i = Quat::i(), j = Quat::j(), k = Quat::k();
    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK(j * k == i);
    CHECK(k * i == j);
    CHECK(i * i == Quat(-1));
    CHECK(i * j * k == Quat(-1));
}

TEST_CASE("quaternion conjugation and norm") {
    Quat x(rat(1), rat(-2), rat(3), rat(1, 2));
    CHECK(x.conj() == Quat(rat(1), rat(2), rat(-3), rat(-1, 2)));
    CHECK(x.norm() == rat(1) + rat(4) + rat(9) + rat(1, 4));
    CHECK(x * x.inv() == Quat(1));
    Quat y(rat(0), rat(1), rat(1), rat(0));
    CHECK((x * y).conj() == y.conj() * x.conj());  // anti-homomorphism
    CHECK_THROWS_AS(Quat().inv(), Error);
}
