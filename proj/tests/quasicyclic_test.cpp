#include "doctest.h"
#include "qxsep/error.hpp"
#include "qxsep/instance_gen.hpp"
#include "qxsep/quasicyclic.hpp"
#include "testutil.hpp"

using namespace qxsep;
using namespace qxsep::test;

namespace {

const MonicPrime& px() {
    static const MonicPrime p{P("x")};
    return p;
}

QuasiElement qe(const std::string& num, int level) { return QuasiElement(px(), level, P(num)); }

MonicPrime random_pi(Rng& rng) {
    static const std::vector<Poly> primes = {P("x"), P("x-1"), P("x^2+1")};
    return MonicPrime::unchecked(primes[rng.below(primes.size())]);
}

}  // namespace

TEST_CASE("reduction invariants") {
    QuasiElement a = qe("x^3 + x", 2);  // x(x^2+1)/x^2 = (x^2+1)/x
    CHECK(a.level() == 1);
    CHECK(a.num() == P("1"));  // x^2+1 reduced mod x

    CHECK(qe("0", 5).is_zero());
    CHECK(qe("x^2", 2).is_zero());
    CHECK(qe("7", 0).is_zero());  // integral class

    QuasiElement b = qe("x+1", 2);
    CHECK(b.level() == 2);
    CHECK(b.num() == P("x+1"));
}

TEST_CASE("addition examples") {
    // 1/x + (x-1)/x = x/x = 0
    CHECK(qc_add(qe("1", 1), qe("x-1", 1)).is_zero());

    QuasiElement a = qe("1", 2);
    CHECK(qc_add(a, QuasiElement::zero(px())) == a);
    CHECK(qc_add(a, a) == qe("2", 2));
    CHECK(qc_add(a, qc_neg(a)).is_zero());

    QuasiElement other(MonicPrime(P("x-1")), 1, P("1"));
    CHECK_THROWS_AS(qc_add(a, other), Error);
}

TEST_CASE("scaling examples") {
    CHECK(qc_scale(qe("1", 1), P("x+1")) == qe("1", 1));
    CHECK(qc_scale(qe("1", 2), P("x")) == qe("1", 1));  // the defining relation
    CHECK(qc_scale(qe("1", 3), Poly()).is_zero());
    CHECK(qc_scale(qe("1", 2), P("x^2")).is_zero());
}

TEST_CASE("orders") {
    CHECK(qc_order(qe("1", 1)) == P("x"));
    CHECK(qc_order(qe("1", 3)) == P("x^3"));
    CHECK(qc_order(QuasiElement::zero(px())) == P("1"));

    QuasiElement a = qe("x+1", 2);
    CHECK(qc_order(a) == P("x^2"));
    CHECK(qc_scale(a, P("x^2")).is_zero());
    CHECK_FALSE(qc_scale(a, P("x")).is_zero());
}

TEST_CASE("orders of the standard generators strictly increase") {
    Rng rng(401);
    for (int rep = 0; rep < 3; ++rep) {
        MonicPrime pi = random_pi(rng);
        Poly prev = P("1");
        for (int k = 1; k <= 10; ++k) {
            Poly ord = qc_order(QuasiElement(pi, k, P("1")));
            CHECK(ord == pi.poly().pow(static_cast<unsigned>(k)));
            CHECK(divides(prev, ord));
            CHECK(ord.degree() > prev.degree());
            prev = ord;
        }
    }
}

TEST_CASE("root examples") {
    CHECK(qc_root(qe("1", 1), P("x")) == qe("1", 2));  // lifting the level
    QuasiElement a = qe("x+1", 2);
    CHECK(qc_root(a, P("1")) == a);
    CHECK(qc_root(qe("1", 1), P("x-1")) == qe("-1", 1));
    CHECK_THROWS_AS(qc_root(a, Poly()), Error);
}

TEST_CASE("divisibility: roots exist for every nonzero exponent") {
    Rng rng(409);
    for (int iter = 0; iter < 200; ++iter) {
        MonicPrime pi = random_pi(rng);
        QuasiElement a(pi, static_cast<int>(rng.below(5)), rng.poly(4, 3));
        Poly alpha = rng.nonzero_poly(3, 3);
        QuasiElement h = qc_root(a, alpha);
        CHECK(qc_scale(h, alpha) == a);
    }
}

TEST_CASE("every element has infinite height") {
    Rng rng(419);
    for (int rep = 0; rep < 4; ++rep) {
        MonicPrime pi = random_pi(rng);
        QuasiElement a(pi, 1 + static_cast<int>(rng.below(3)), rng.nonzero_poly(2, 2));
        if (a.is_zero()) continue;
        for (int n = 1; n <= 20; ++n) {
            QuasiElement h = qc_root(a, pi.poly().pow(static_cast<unsigned>(n)));
            CHECK(qc_scale(h, pi.poly().pow(static_cast<unsigned>(n))) == a);
        }
    }
}

TEST_CASE("no finite omega-type target can see the group") {
    // for the exponent lambda of any bounded module, scaling the lambda-th
    // root by lambda gives the element back, so homomorphic images vanish
    Rng rng(421);
    for (int iter = 0; iter < 50; ++iter) {
        FPModule target = random_torsion_module(rng);
        Poly lambda = exponent_ideal(target).generator;
        REQUIRE_FALSE(lambda.is_zero());
        MonicPrime pi = random_pi(rng);
        QuasiElement a(pi, static_cast<int>(rng.below(4)), rng.poly(3, 2));
        CHECK(qc_scale(qc_root(a, lambda), lambda) == a);
    }
}
