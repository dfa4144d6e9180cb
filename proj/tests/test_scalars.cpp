#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rootfd/scalars.hpp"

#include <random>

using namespace scalars;

TEST_CASE("make_field moduli") {
    auto f5 = make_field(5);
    CHECK(f5->modulus.to_text() == "-1 - q + q^2");  // y^2 - y - 1, golden ratio
    CHECK(f5->degree == 2);

    auto f3 = make_field(3);
    CHECK(f3->modulus.to_text() == "-1 + q");  // y = 1
    CHECK(f3->degree == 1);

    auto f4 = make_field(4);
    CHECK(f4->modulus.to_text() == "-2 + q^2");  // y^2 - 2
    CHECK_THROWS_AS(make_field(2), std::invalid_argument);
}

TEST_CASE("field degree is phi(2M)/2") {
    auto phi = [](int n) {
        int r = n;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                r -= r / p;
                while (n % p == 0) n /= p;
            }
        if (n > 1) r -= r / n;
        return r;
    };
    for (int M = 3; M <= 30; ++M) {
        auto f = make_field(M);
        CHECK(f->degree == phi(2 * M) / 2);
        CHECK(f->modulus.coeff(f->degree) == 1);  // monic
    }
}

TEST_CASE("arithmetic in Q(phi)") {
    auto f = make_field(5);
    Scalar phi = Scalar::generator(f);
    CHECK(phi * phi == phi + Scalar::one(f));  // y^2 = y + 1
    Scalar a = phi - Scalar::one(f);
    CHECK(a + Scalar::zero(f) == a);
    CHECK(a - a == Scalar::zero(f));
}

TEST_CASE("arithmetic in Q(sqrt2)") {
    auto f = make_field(4);
    Scalar r2 = Scalar::generator(f);
    CHECK(r2 * r2 == Scalar::from_rational(f, 2));
}

TEST_CASE("two_cos") {
    auto f = make_field(5);
    CHECK(Scalar::two_cos(f, 2) == Scalar::zero(f));
    CHECK(Scalar::two_cos(f, 3) == Scalar::one(f));
    CHECK(Scalar::two_cos(f, 5) == Scalar::generator(f));
    CHECK_THROWS_AS(Scalar::two_cos(f, 4), std::invalid_argument);
}

TEST_CASE("sign") {
    auto f = make_field(5);
    Scalar phi = Scalar::generator(f);
    CHECK(Scalar::zero(f).sign() == 0);
    CHECK((phi - Scalar::one(f)).sign() == 1);        // phi - 1 > 0
    CHECK((Scalar::one(f) - phi).sign() == -1);
    CHECK((phi - Scalar::from_rational(f, 2)).sign() == -1);  // phi < 2
    // phi - 1.618 is positive but tiny; forces interval refinement
    CHECK((phi - Scalar::from_rational(f, Rat(1618, 1000))).sign() == 1);
    CHECK((phi - Scalar::from_rational(f, Rat(1619, 1000))).sign() == -1);
}

TEST_CASE("sign in the rational field M=3") {
    auto f = make_field(3);
    Scalar y = Scalar::generator(f);
    CHECK(y == Scalar::one(f));
    CHECK((y - Scalar::from_rational(f, Rat(1, 2))).sign() == 1);
    CHECK((-y).sign() == -1);
}

TEST_CASE("generator satisfies its modulus") {
    for (int M : {3, 4, 5, 6, 7, 12, 15, 30}) {
        auto f = make_field(M);
        Scalar y = Scalar::generator(f);
        Scalar acc = Scalar::zero(f);
        Scalar pw = Scalar::one(f);
        for (int i = 0; i <= f->modulus.degree(); ++i) {
            acc = acc + pw * Scalar::from_rational(f, Rat(f->modulus.coeff(i)));
            pw = pw * y;
        }
        CHECK(acc.is_zero());
        // y really is 2cos(pi/M): positive, below 2, and above 2cos(pi/(M+1))-ish
        CHECK(y.sign() == 1);
        CHECK((y - Scalar::from_rational(f, 2)).sign() == -1);
    }
}

TEST_CASE("sturm isolation holds at the stored interval") {
    for (int M : {4, 5, 7, 12, 30}) {
        auto f = make_field(M);
        CHECK(sturm_roots_in(*f, f->iso_lo, f->iso_hi) == 1);
    }
}

TEST_CASE("sign properties on random elements") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> co(-4, 4);
    for (int M : {4, 5, 12}) {
        auto f = make_field(M);
        for (int t = 0; t < 40; ++t) {
            std::vector<Rat> c(f->degree);
            for (auto& x : c) x = Rat(co(rng));
            Scalar a(f, std::move(c));
            CHECK((-a).sign() == -a.sign());
            if (!a.is_zero()) CHECK((a * a).sign() == 1);
        }
    }
}

TEST_CASE("json serialization") {
    auto f = make_field(5);
    Scalar phi = Scalar::generator(f);
    CHECK(phi.to_json().dump() == R"({"bond":5,"coords":["0","1"]})");
    Scalar half = Scalar::from_rational(f, Rat(1, 2));
    CHECK(half.to_json()["coords"][0] == "1/2");
}
