#include <map>

#include "doctest.h"
#include "qxsep/error.hpp"
#include "qxsep/primeset.hpp"
#include "testutil.hpp"

using namespace qxsep;
using namespace qxsep::test;

namespace {

void check_error(Errc expected, const std::function<void()>& fn) {
    try {
        fn();
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == expected);
    }
}

}  // namespace

TEST_CASE("rational parse and format") {
    CHECK(rational_to_string(Q("3/6")) == "1/2");
    CHECK(rational_to_string(Q("-2/4")) == "-1/2");
    CHECK(rational_to_string(Q("7")) == "7");
    CHECK(Q("0/5") == 0);
    CHECK_THROWS_AS(Q("1.5"), ParseError);
    CHECK_THROWS_AS(Q("2/0"), ParseError);
    CHECK_THROWS_AS(Q(""), ParseError);
}

TEST_CASE("poly parse/format round-trip") {
    CHECK(P("3/2*x^2 - x + 1").str() == "3/2*x^2 - x + 1");
    CHECK(P(" 3/2x^2-x+1 ") == P("3/2*x^2 - x + 1"));
    CHECK(P("0").is_zero());
    CHECK(P("0").degree() == Poly::kZeroDegree);
    CHECK(P("-x").str() == "-x");
    CHECK(P("x^3").coeff(3) == 1);
    CHECK_THROWS_AS(P("x + "), ParseError);
    CHECK_THROWS_AS(P("y"), ParseError);
    CHECK_THROWS_AS(P("3//2"), ParseError);

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        Poly p = rng.poly(6, 9);
        CHECK(Poly::parse(p.str()) == p);
    }
}

TEST_CASE("divmod examples") {
    auto [q1, r1] = divmod(P("x^2-1"), P("x-1"));
    CHECK(q1 == P("x+1"));
    CHECK(r1.is_zero());

    auto [q2, r2] = divmod(P("x"), P("x"));
    CHECK(q2 == P("1"));
    CHECK(r2.is_zero());

    auto [q3, r3] = divmod(P("x^3+1"), P("2x"));
    CHECK(q3 == P("1/2*x^2"));
    CHECK(r3 == P("1"));
    CHECK(q3 * P("2x") + r3 == P("x^3+1"));

    check_error(Errc::division_by_zero_poly, [] { divmod(P("x"), Poly()); });
}

TEST_CASE("divmod reconstruction on random inputs") {
    Rng rng(17);
    for (int i = 0; i < 300; ++i) {
        Poly a = rng.poly(6, 5);
        Poly b = rng.nonzero_poly(6, 5);
        auto [q, r] = divmod(a, b);
        CHECK(q * b + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd_ext examples") {
    Xgcd g1 = gcd_ext(P("x"), P("x-1"));
    CHECK(g1.g == P("1"));
    CHECK(g1.s == P("1"));
    CHECK(g1.t == P("-1"));

    CHECK(gcd_ext(P("x^2-1"), P("x^2-3x+2")).g == P("x-1"));

    Xgcd g3 = gcd_ext(P("x^2"), Poly());
    CHECK(g3.g == P("x^2"));
    CHECK(g3.s == P("1"));
    CHECK(g3.t.is_zero());

    check_error(Errc::both_zero, [] { gcd_ext(Poly(), Poly()); });
}

TEST_CASE("bezout identity on random inputs") {
    Rng rng(23);
    for (int i = 0; i < 300; ++i) {
        Poly a = rng.poly(5, 4);
        Poly b = rng.poly(5, 4);
        if (a.is_zero() && b.is_zero()) continue;
        Xgcd x = gcd_ext(a, b);
        CHECK(x.g.is_monic());
        CHECK(x.s * a + x.t * b == x.g);
        CHECK(divides(x.g, a));
        CHECK(divides(x.g, b));
    }
}

TEST_CASE("factor examples") {
    Factorization f1 = factor(P("x^3-x"));
    CHECK(f1.unit == 1);
    REQUIRE(f1.factors.size() == 3);
    CHECK(f1.factors[0].first.poly() == P("x-1"));
    CHECK(f1.factors[1].first.poly() == P("x"));
    CHECK(f1.factors[2].first.poly() == P("x+1"));
    for (const auto& [p, e] : f1.factors) CHECK(e == 1);

    Factorization f2 = factor(P("x^2+1"));
    CHECK(f2.unit == 1);
    REQUIRE(f2.factors.size() == 1);
    CHECK(f2.factors[0].first.poly() == P("x^2+1"));
    CHECK(f2.factors[0].second == 1);

    Factorization f3 = factor(P("2x^4+4x^2+2"));
    CHECK(f3.unit == 2);
    REQUIRE(f3.factors.size() == 1);
    CHECK(f3.factors[0].first.poly() == P("x^2+1"));
    CHECK(f3.factors[0].second == 2);

    // squarefree structure cross-check for the same input
    auto parts = squarefree_decomposition(P("2x^4+4x^2+2"));
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].first == P("x^2+1"));
    CHECK(parts[0].second == 2);

    Factorization f4 = factor(P("5"));
    CHECK(f4.unit == 5);
    CHECK(f4.factors.empty());

    check_error(Errc::zero_polynomial, [] { factor(Poly()); });
}

TEST_CASE("factorization round-trip on random products") {
    Rng rng(31);
    const auto& pool = irreducible_pool();
    for (int iter = 0; iter < 100; ++iter) {
        std::map<int, int> chosen;  // pool index -> multiplicity
        int nfactors = 1 + static_cast<int>(rng.below(4));
        for (int k = 0; k < nfactors; ++k)
            chosen[static_cast<int>(rng.below(pool.size()))] += 1 + static_cast<int>(rng.below(3));
        static const long units[] = {1, -1, 2, 3, -5, 7};
        Rational unit(units[rng.below(6)], 1 + static_cast<long>(rng.below(3)));
        unit.canonicalize();

        Poly product(unit);
        for (const auto& [idx, mult] : chosen)
            product = product * pool[static_cast<size_t>(idx)].pow(static_cast<unsigned>(mult));

        Factorization f = factor(product);
        CHECK(f.unit == unit);
        REQUIRE(f.factors.size() == chosen.size());
        std::map<std::string, int> got;
        for (const auto& [p, e] : f.factors) got[p.poly().str()] = e;
        for (const auto& [idx, mult] : chosen) {
            CHECK(got.count(pool[static_cast<size_t>(idx)].str()) == 1);
            CHECK(got[pool[static_cast<size_t>(idx)].str()] == mult);
        }
    }
}

TEST_CASE("monic prime validation") {
    CHECK(MonicPrime(P("2x+2")).poly() == P("x+1"));  // normalized to monic
    CHECK_THROWS_AS(MonicPrime(P("x^2-1")), ParseError);
    check_error(Errc::zero_polynomial, [] { MonicPrime(P("3")); });
    CHECK(is_irreducible(P("x^2+1")));
    CHECK_FALSE(is_irreducible(P("x^2-1")));
    CHECK_FALSE(is_irreducible(P("7")));
}

TEST_CASE("binom examples and integer points") {
    CHECK(binom_poly(P("x"), 2) == P("1/2*x^2 - 1/2*x"));
    CHECK(binom_poly(P("2"), 2) == P("1"));
    CHECK(binom_poly(P("x+1"), 3) == P("1/6*x^3 - 1/6*x"));
    CHECK(binom_poly(P("x"), 0) == P("1"));

    for (long n = 0; n <= 10; ++n) {
        long c = 1;  // C(n, k) built up incrementally
        for (long k = 0; k <= 6; ++k) {
            CHECK(binom_poly(Poly(n), static_cast<unsigned>(k)).eval(Rational(0)) == Rational(c));
            c = k < n ? c * (n - k) / (k + 1) : 0;
        }
    }
}

TEST_CASE("prime sets and omega membership") {
    PrimeSet wx = PrimeSet::explicit_set({MonicPrime(P("x"))});
    CHECK(is_omega_member(P("x^3"), wx));
    CHECK_FALSE(is_omega_member(P("x^2+x"), wx));  // x*(x+1)
    CHECK_FALSE(is_omega_member(P("5"), wx));
    CHECK_FALSE(is_omega_member(P("5"), PrimeSet::cofinite({})));
    check_error(Errc::zero_polynomial, [&] { is_omega_member(Poly(), wx); });

    PrimeSet comp = wx.complement();
    CHECK(comp.mode() == PrimeSet::Mode::cofinite);
    CHECK(comp.primes() == wx.primes());
    CHECK_FALSE(comp.contains(MonicPrime(P("x"))));
    CHECK(comp.contains(MonicPrime(P("x-1"))));

    CHECK_THROWS_AS(PrimeSet::explicit_set({}), Error);

    CHECK(PrimeSet::explicit_set({MonicPrime(P("x^2+1")), MonicPrime(P("x+4"))}).first_prime().poly() ==
          P("x+4"));
    CHECK(PrimeSet::cofinite({MonicPrime(P("x"))}).first_prime().poly() == P("x+1"));
    CHECK(PrimeSet::cofinite({}).first_prime().poly() == P("x"));
}

TEST_CASE("omega membership against the complement") {
    Rng rng(41);
    const auto& pool = irreducible_pool();
    for (int iter = 0; iter < 60; ++iter) {
        Poly alpha(1);
        int nfactors = 1 + static_cast<int>(rng.below(3));
        for (int k = 0; k < nfactors; ++k)
            alpha = alpha * pool[rng.below(pool.size())].pow(1 + static_cast<unsigned>(rng.below(2)));
        std::vector<MonicPrime> primes;
        for (int k = 0; k < 3; ++k) primes.push_back(MonicPrime::unchecked(pool[rng.below(pool.size())]));
        PrimeSet omega = rng.below(2) == 0 ? PrimeSet::explicit_set(primes) : PrimeSet::cofinite(primes);

        bool has_complement_factor = false;
        PrimeSet comp = omega.complement();
        for (const auto& [p, e] : factor(alpha).factors)
            if (comp.contains(p)) has_complement_factor = true;
        CHECK(is_omega_member(alpha, omega) == !has_complement_factor);
    }
}
