// Exercises the shared-library surface exactly as an external consumer
// would: through qxsep.h only.
#include <string>

#include "doctest.h"
#include "qxsep.h"

namespace {

struct OwnedString {
    char* p = nullptr;
    ~OwnedString() { qxsep_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

struct ModuleHandle {
    qxsep_module* m = nullptr;
    ~ModuleHandle() { qxsep_module_free(m); }
};

struct SubmoduleHandle {
    qxsep_submodule* s = nullptr;
    ~SubmoduleHandle() { qxsep_submodule_free(s); }
};

struct PrimesetHandle {
    qxsep_primeset* s = nullptr;
    ~PrimesetHandle() { qxsep_primeset_free(s); }
};

constexpr const char* kModule = R"({"ngens":2,"relations":[["x^2","0"],["0","0"]]})";
constexpr const char* kFreeSummand = R"({"gens":[["0"],["1"]]})";
constexpr const char* kOmegaX = R"({"mode":"explicit","primes":["x"]})";

}  // namespace

TEST_CASE("version and error state") {
    CHECK(std::string(qxsep_version()) == "1.0.0");
    ModuleHandle bad;
    CHECK(qxsep_module_parse("{invalid", &bad.m) == QXSEP_ERROR);
    CHECK(std::string(qxsep_last_error()).find("invalid JSON") != std::string::npos);
    CHECK(bad.m == nullptr);
    CHECK(qxsep_module_parse(nullptr, &bad.m) == QXSEP_ERROR);
}

TEST_CASE("module round-trip and decomposition") {
    ModuleHandle g;
    REQUIRE(qxsep_module_parse(kModule, &g.m) == QXSEP_OK);
    CHECK(std::string(qxsep_last_error()).empty());

    OwnedString dump;
    REQUIRE(qxsep_module_to_json(g.m, &dump.p) == QXSEP_OK);
    CHECK(dump.str().find("\"ngens\":2") != std::string::npos);

    OwnedString dec;
    REQUIRE(qxsep_decompose(g.m, &dec.p) == QXSEP_OK);
    CHECK(dec.str() == R"({"factors":["x^2"],"rank":1})");

    OwnedString ord;
    REQUIRE(qxsep_order_ideal(g.m, "(1, 0)", &ord.p) == QXSEP_OK);
    CHECK(ord.str() == R"({"generator":"x^2"})");

    OwnedString exp;
    REQUIRE(qxsep_exponent_ideal(g.m, &exp.p) == QXSEP_OK);
    CHECK(exp.str() == R"({"generator":"0"})");

    OwnedString prim;
    REQUIRE(qxsep_primary_component(g.m, "x", &prim.p) == QXSEP_OK);
    CHECK(prim.str().find("\"factors\":[\"x^2\"]") != std::string::npos);
}

TEST_CASE("snf through the C surface") {
    OwnedString out;
    REQUIRE(qxsep_snf(R"([["x","1"],["0","x"]])", &out.p) == QXSEP_OK);
    CHECK(out.str().find(R"([["1","0"],["0","x^2"]])") != std::string::npos);

    OwnedString bad;
    CHECK(qxsep_snf(R"([["x"],["0","x"]])", &bad.p) == QXSEP_ERROR);
}

TEST_CASE("isolation and separation pipeline") {
    ModuleHandle g;
    SubmoduleHandle h;
    PrimesetHandle omega;
    REQUIRE(qxsep_module_parse(kModule, &g.m) == QXSEP_OK);
    REQUIRE(qxsep_submodule_parse(g.m, kFreeSummand, &h.s) == QXSEP_OK);
    REQUIRE(qxsep_primeset_parse(kOmegaX, &omega.s) == QXSEP_OK);

    // H absorbs x-power roots only against the complement of {x}
    PrimesetHandle sigma;
    REQUIRE(qxsep_primeset_parse(R"({"mode":"cofinite","primes":["x"]})", &sigma.s) == QXSEP_OK);
    OwnedString iso;
    REQUIRE(qxsep_is_isolated(g.m, h.s, sigma.s, &iso.p) == QXSEP_OK);
    CHECK(iso.str() == R"({"isolated":true})");

    OwnedString not_iso;
    REQUIRE(qxsep_is_isolated(g.m, h.s, omega.s, &not_iso.p) == QXSEP_OK);
    CHECK(not_iso.str().find("\"isolated\":false") != std::string::npos);
    CHECK(not_iso.str().find("violating_exponent") != std::string::npos);

    OwnedString isolated;
    REQUIRE(qxsep_isolator(g.m, h.s, omega.s, &isolated.p) == QXSEP_OK);

    OwnedString witness;
    REQUIRE(qxsep_separate(g.m, h.s, "(1, 0)", omega.s, &witness.p) == QXSEP_OK);
    CHECK(witness.str().find("\"quotient_factors\":[\"x^2\"]") != std::string::npos);

    int valid = 0;
    REQUIRE(qxsep_verify_witness(witness.p, &valid) == QXSEP_OK);
    CHECK(valid == 1);

    OwnedString residual;
    REQUIRE(qxsep_residually_ft(g.m, omega.s, &residual.p) == QXSEP_OK);
    CHECK(residual.str() == R"({"obstruction":null,"residually_ft_omega":true})");
}

TEST_CASE("separate reports non-isolated subgroups with status 2") {
    ModuleHandle g;
    SubmoduleHandle h;
    PrimesetHandle omega;
    REQUIRE(qxsep_module_parse(R"({"ngens":1,"relations":[["x^2"]]})", &g.m) == QXSEP_OK);
    REQUIRE(qxsep_submodule_parse(g.m, R"({"gens":[["x"]]})", &h.s) == QXSEP_OK);
    REQUIRE(qxsep_primeset_parse(R"({"mode":"explicit","primes":["x-1"]})", &omega.s) == QXSEP_OK);

    OwnedString out;
    CHECK(qxsep_separate(g.m, h.s, "(1)", omega.s, &out.p) == QXSEP_PRECONDITION);
    CHECK(out.str().find("\"error\":\"not_isolated\"") != std::string::npos);
    CHECK(out.str().find("violating_element") != std::string::npos);
    CHECK(std::string(qxsep_last_error()).find("NotIsolated") != std::string::npos);

    // element already inside the subgroup: precondition, no report payload
    OwnedString out2;
    CHECK(qxsep_separate(g.m, h.s, "(x)", omega.s, &out2.p) == QXSEP_PRECONDITION);
    CHECK(out2.p == nullptr);
}

TEST_CASE("quasicyclic and class-2 evaluation") {
    OwnedString scale;
    REQUIRE(qxsep_qc_eval(R"({"op":"scale","pi":"x","a":"1/x^2","alpha":"x"})", &scale.p) == QXSEP_OK);
    CHECK(scale.str().find("\"text\":\"1/x\"") != std::string::npos);

    OwnedString ord;
    REQUIRE(qxsep_qc_eval(R"({"op":"order","pi":"x","a":{"level":3,"num":"1"}})", &ord.p) == QXSEP_OK);
    CHECK(ord.str() == R"({"order":"x^3"})");

    OwnedString root;
    REQUIRE(qxsep_qc_eval(R"({"op":"root","pi":"x","a":"1/x","alpha":"x-1"})", &root.p) == QXSEP_OK);
    CHECK(root.str().find("\"num\":\"-1\"") != std::string::npos);

    OwnedString pow;
    REQUIRE(qxsep_c2_eval(
                R"({"op":"pow","g":{"rank":2,"gen":["1","1"],"comm":["0"]},"alpha":"x"})",
                &pow.p) == QXSEP_OK);
    CHECK(pow.str().find("a1^{x} a2^{x} c12^{1/2*x^2 - 1/2*x}") != std::string::npos);

    OwnedString bad;
    CHECK(qxsep_qc_eval(R"({"op":"nope","pi":"x","a":"0"})", &bad.p) == QXSEP_ERROR);
}

TEST_CASE("instance generation is deterministic and verifiable") {
    OwnedString a, b;
    REQUIRE(qxsep_generate_instance(99, 3, &a.p) == QXSEP_OK);
    REQUIRE(qxsep_generate_instance(99, 3, &b.p) == QXSEP_OK);
    CHECK(a.str() == b.str());
    CHECK(a.str().find("\"module\"") != std::string::npos);

    OwnedString other;
    REQUIRE(qxsep_generate_instance(99, 4, &other.p) == QXSEP_OK);
    CHECK(a.str() != other.str());
}
