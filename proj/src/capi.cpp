#include "qxsep.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "qxsep/instance_gen.hpp"
#include "qxsep/json_io.hpp"

using namespace qxsep;

struct qxsep_module {
    FPModule value;
};
struct qxsep_submodule {
    Submodule value;
};
struct qxsep_primeset {
    PrimeSet value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return QXSEP_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return e.is_precondition() ? QXSEP_PRECONDITION : QXSEP_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QXSEP_ERROR;
    }
}

int require_arg(bool ok, const char* what) {
    if (ok) return QXSEP_OK;
    g_last_error = std::string("null argument: ") + what;
    return QXSEP_ERROR;
}

}  // namespace

extern "C" {

const char* qxsep_version(void) { return "1.0.0"; }

const char* qxsep_last_error(void) { return g_last_error.c_str(); }

void qxsep_string_free(char* s) { std::free(s); }

int qxsep_module_parse(const char* json, qxsep_module** out) {
    if (int rc = require_arg(json && out, "qxsep_module_parse")) return rc;
    *out = nullptr;
    return guarded([&] { *out = new qxsep_module{module_from_json(parse_json(json))}; });
}

void qxsep_module_free(qxsep_module* m) { delete m; }

int qxsep_module_to_json(const qxsep_module* m, char** out_json) {
    if (int rc = require_arg(m && out_json, "qxsep_module_to_json")) return rc;
    return guarded([&] { *out_json = dup_string(module_to_json(m->value).dump()); });
}

int qxsep_submodule_parse(const qxsep_module* m, const char* json, qxsep_submodule** out) {
    if (int rc = require_arg(m && json && out, "qxsep_submodule_parse")) return rc;
    *out = nullptr;
    return guarded([&] { *out = new qxsep_submodule{submodule_from_json(m->value, parse_json(json))}; });
}

void qxsep_submodule_free(qxsep_submodule* s) { delete s; }

int qxsep_primeset_parse(const char* json, qxsep_primeset** out) {
    if (int rc = require_arg(json && out, "qxsep_primeset_parse")) return rc;
    *out = nullptr;
    return guarded([&] { *out = new qxsep_primeset{primeset_from_json(parse_json(json))}; });
}

void qxsep_primeset_free(qxsep_primeset* s) { delete s; }

int qxsep_snf(const char* matrix_json, char** out_json) {
    if (int rc = require_arg(matrix_json && out_json, "qxsep_snf")) return rc;
    return guarded([&] {
        SmithForm sf = snf(matrix_from_json(parse_json(matrix_json)));
        Json j{{"d", matrix_to_json(sf.d)}, {"u", matrix_to_json(sf.u)}, {"v", matrix_to_json(sf.v)}};
        *out_json = dup_string(j.dump());
    });
}

int qxsep_decompose(const qxsep_module* m, char** out_json) {
    if (int rc = require_arg(m && out_json, "qxsep_decompose")) return rc;
    return guarded([&] {
        auto [factors, rank] = canonical_decomposition(m->value);
        Json j{{"factors", poly_list_to_json(factors)}, {"rank", rank}};
        *out_json = dup_string(j.dump());
    });
}

int qxsep_order_ideal(const qxsep_module* m, const char* element, char** out_json) {
    if (int rc = require_arg(m && element && out_json, "qxsep_order_ideal")) return rc;
    return guarded([&] {
        ModElement e = element_from_text(m->value, element);
        Json j{{"generator", order_ideal(m->value, e).generator.str()}};
        *out_json = dup_string(j.dump());
    });
}

int qxsep_exponent_ideal(const qxsep_module* m, char** out_json) {
    if (int rc = require_arg(m && out_json, "qxsep_exponent_ideal")) return rc;
    return guarded([&] {
        Json j{{"generator", exponent_ideal(m->value).generator.str()}};
        *out_json = dup_string(j.dump());
    });
}

int qxsep_primary_component(const qxsep_module* m, const char* prime, char** out_json) {
    if (int rc = require_arg(m && prime && out_json, "qxsep_primary_component")) return rc;
    return guarded([&] {
        MonicPrime pi(Poly::parse(prime));
        Submodule s = primary_component(m->value, pi);
        // invariant structure of the component itself: pi-parts of the factors
        std::vector<Poly> comp_factors;
        for (const Poly& d : m->value.factors()) {
            Poly p(1);
            Poly rest = d;
            while (true) {
                auto [q, r] = divmod(rest, pi.poly());
                if (!r.is_zero()) break;
                rest = q;
                p = p * pi.poly();
            }
            if (!p.is_unit()) comp_factors.push_back(p);
        }
        Json j{{"gens", matrix_to_json(s.gens())}, {"factors", poly_list_to_json(comp_factors)}};
        *out_json = dup_string(j.dump());
    });
}

int qxsep_is_isolated(const qxsep_module* m, const qxsep_submodule* h, const qxsep_primeset* sigma,
                      char** out_json) {
    if (int rc = require_arg(m && h && sigma && out_json, "qxsep_is_isolated")) return rc;
    return guarded([&] {
        IsolationReport r = is_isolated(m->value, h->value, sigma->value);
        *out_json = dup_string(isolation_report_to_json(r).dump());
    });
}

int qxsep_isolator(const qxsep_module* m, const qxsep_submodule* h, const qxsep_primeset* sigma,
                   char** out_json) {
    if (int rc = require_arg(m && h && sigma && out_json, "qxsep_isolator")) return rc;
    return guarded([&] {
        Submodule s = isolator(m->value, h->value, sigma->value);
        *out_json = dup_string(submodule_to_json(s).dump());
    });
}

int qxsep_separate(const qxsep_module* m, const qxsep_submodule* h, const char* element,
                   const qxsep_primeset* omega, char** out_json) {
    if (int rc = require_arg(m && h && element && omega && out_json, "qxsep_separate")) return rc;
    try {
        ModElement e = element_from_text(m->value, element);
        SeparabilityWitness w = separate(m->value, h->value, e, omega->value);
        *out_json = dup_string(witness_to_json(w).dump());
        g_last_error.clear();
        return QXSEP_OK;
    } catch (const NotIsolatedError& e) {
        g_last_error = e.what();
        Json j{{"error", "not_isolated"}, {"report", isolation_report_to_json(e.report())}};
        *out_json = dup_string(j.dump());
        return QXSEP_PRECONDITION;
    } catch (const Error& e) {
        g_last_error = e.what();
        return e.is_precondition() ? QXSEP_PRECONDITION : QXSEP_ERROR;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return QXSEP_ERROR;
    }
}

int qxsep_verify_witness(const char* witness_json, int* valid) {
    if (int rc = require_arg(witness_json && valid, "qxsep_verify_witness")) return rc;
    *valid = 0;
    return guarded([&] {
        SeparabilityWitness w = witness_from_json(parse_json(witness_json));
        *valid = verify_witness(w) ? 1 : 0;
    });
}

int qxsep_residually_ft(const qxsep_module* m, const qxsep_primeset* omega, char** out_json) {
    if (int rc = require_arg(m && omega && out_json, "qxsep_residually_ft")) return rc;
    return guarded([&] {
        ResidualReport r = is_residually_ftomega(m->value, omega->value);
        Json j{{"residually_ft_omega", r.residually_ft_omega}};
        j["obstruction"] = r.obstruction ? element_to_json(*r.obstruction) : Json(nullptr);
        *out_json = dup_string(j.dump());
    });
}

int qxsep_qc_eval(const char* request_json, char** out_json) {
    if (int rc = require_arg(request_json && out_json, "qxsep_qc_eval")) return rc;
    return guarded([&] {
        Json req = parse_json(request_json);
        if (!req.is_object() || !req.contains("op") || !req.contains("pi"))
            throw ParseError("qc request needs 'op' and 'pi'");
        MonicPrime pi(Poly::parse(req.at("pi").get<std::string>()));
        auto element = [&](const char* key) {
            if (!req.contains(key)) throw ParseError(std::string("qc request needs '") + key + "'");
            const Json& j = req.at(key);
            if (j.is_string()) return quasi_from_text(pi, j.get<std::string>());
            QuasiElement e = quasi_from_json(Json{{"pi", pi.poly().str()},
                                                  {"level", j.contains("level") ? j.at("level") : Json(0)},
                                                  {"num", j.contains("num") ? j.at("num") : Json("0")}});
            return e;
        };
        std::string op = req.at("op").get<std::string>();
        Json out;
        if (op == "order") {
            out["order"] = qc_order(element("a")).str();
        } else {
            QuasiElement r = QuasiElement::zero(pi);
            if (op == "add")
                r = qc_add(element("a"), element("b"));
            else if (op == "scale")
                r = qc_scale(element("a"), Poly::parse(req.value("alpha", "")));
            else if (op == "root")
                r = qc_root(element("a"), Poly::parse(req.value("alpha", "")));
            else
                throw ParseError("unknown qc op '" + op + "'");
            out["result"] = quasi_to_json(r);
            out["text"] = quasi_to_text(r);
        }
        *out_json = dup_string(out.dump());
    });
}

int qxsep_c2_eval(const char* request_json, char** out_json) {
    if (int rc = require_arg(request_json && out_json, "qxsep_c2_eval")) return rc;
    return guarded([&] {
        Json req = parse_json(request_json);
        if (!req.is_object() || !req.contains("op")) throw ParseError("c2 request needs 'op'");
        auto element = [&](const char* key) {
            if (!req.contains(key)) throw ParseError(std::string("c2 request needs '") + key + "'");
            return c2_from_json(req.at(key));
        };
        std::string op = req.at("op").get<std::string>();
        Class2Element r(1);
        if (op == "mul")
            r = c2_mul(element("g"), element("h"));
        else if (op == "inverse")
            r = c2_inverse(element("g"));
        else if (op == "pow")
            r = c2_pow(element("g"), Poly::parse(req.value("alpha", "")));
        else if (op == "commutator")
            r = c2_commutator(element("g"), element("h"));
        else if (op == "product_root") {
            if (!req.contains("gs") || !req.at("gs").is_array()) throw ParseError("c2 request needs 'gs'");
            std::vector<Class2Element> gs;
            for (const Json& x : req.at("gs")) gs.push_back(c2_from_json(x));
            r = c2_product_root(gs, Poly::parse(req.value("beta", "")));
        } else {
            throw ParseError("unknown c2 op '" + op + "'");
        }
        Json out{{"result", c2_to_json(r)}, {"text", c2_to_text(r)}};
        *out_json = dup_string(out.dump());
    });
}

int qxsep_generate_instance(unsigned long long seed, unsigned long long index, char** out_json) {
    if (int rc = require_arg(out_json != nullptr, "qxsep_generate_instance")) return rc;
    return guarded([&] {
        GeneratedInstance inst = generate_instance(seed, index);
        Json j{{"module", module_to_json(inst.module)},
               {"subgroup", submodule_to_json(inst.subgroup)},
               {"element", element_to_json(inst.element)},
               {"omega", primeset_to_json(inst.omega)},
               {"seed", seed},
               {"index", index}};
        *out_json = dup_string(j.dump());
    });
}

}  // extern "C"
