// Command-line front end. Everything goes through the shared library's C
// surface (qxsep.h); this file only shuffles text.
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qxsep.h"

namespace {

using nlohmann::json;

// Flag values name either a file, '-' for stdin, or inline text.
std::string read_input(const std::string& value) {
    if (value == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(value);
    if (f.good()) {
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }
    return value;
}

struct StringOut {
    char* p = nullptr;
    ~StringOut() { qxsep_string_free(p); }
};

using ModulePtr = std::unique_ptr<qxsep_module, decltype(&qxsep_module_free)>;
using SubmodulePtr = std::unique_ptr<qxsep_submodule, decltype(&qxsep_submodule_free)>;
using PrimesetPtr = std::unique_ptr<qxsep_primeset, decltype(&qxsep_primeset_free)>;

class CliError : public std::runtime_error {
  public:
    CliError(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
    int code() const { return code_; }

  private:
    int code_;
};

void check(int status) {
    if (status != QXSEP_OK) throw CliError(status, qxsep_last_error());
}

ModulePtr parse_module(const std::string& value) {
    qxsep_module* m = nullptr;
    check(qxsep_module_parse(read_input(value).c_str(), &m));
    return ModulePtr(m, qxsep_module_free);
}

SubmodulePtr parse_submodule(const qxsep_module* m, const std::string& value) {
    qxsep_submodule* s = nullptr;
    check(qxsep_submodule_parse(m, read_input(value).c_str(), &s));
    return SubmodulePtr(s, qxsep_submodule_free);
}

PrimesetPtr parse_primeset(const std::string& value) {
    qxsep_primeset* s = nullptr;
    check(qxsep_primeset_parse(read_input(value).c_str(), &s));
    return PrimesetPtr(s, qxsep_primeset_free);
}

// ---------------------------------------------------------------------------
// text renderings of the JSON reports

std::string matrix_lines(const json& m, const std::string& indent) {
    std::string out;
    for (const auto& row : m.at("entries")) {
        out += indent + "[";
        for (size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out += ", ";
            out += row[j].get<std::string>();
        }
        out += "]\n";
    }
    if (m.at("entries").empty() || m.at("cols") == 0) out += indent + "(empty)\n";
    return out;
}

std::string element_word(const json& coords) {
    std::string out;
    for (size_t i = 0; i < coords.size(); ++i) {
        std::string p = coords[i].get<std::string>();
        if (p == "0") continue;
        if (!out.empty()) out += " ";
        out += "g" + std::to_string(i + 1) + "^{" + p + "}";
    }
    return out.empty() ? "1" : out;
}

std::string poly_list(const json& arr) {
    if (arr.empty()) return "none";
    std::string out;
    for (size_t i = 0; i < arr.size(); ++i) {
        if (i > 0) out += ", ";
        out += arr[i].get<std::string>();
    }
    return out;
}

std::string render_isolation(const json& r) {
    if (r.at("isolated").get<bool>()) return "isolated: yes\n";
    return "isolated: no\nviolating element: " + element_word(r.at("violating_element")) +
           "\nviolating exponent: " + r.at("violating_exponent").get<std::string>() + "\n";
}

std::string render_witness(const json& w) {
    std::string out;
    out += "separating subgroup N:\n" + matrix_lines(w.at("n").at("gens"), "  ");
    out += "quotient invariant factors: " + poly_list(w.at("quotient_factors")) + "\n";
    out += "separated element: " + element_word(w.at("element")) + "\n";
    return out;
}

// Prints the command result; `text` produces the human rendering, JSON mode
// prints the library report verbatim.
struct Output {
    std::string format = "json";
    void emit(const std::string& json_text, const std::string& text_rendering) const {
        if (format == "json")
            std::cout << json_text << "\n";
        else
            std::cout << text_rendering;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact separability certificates for finitely presented Q[x]-modules"};
    app.require_subcommand(1);
    Output out;
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    std::string matrix, module, subgroup, element, sigma, omega, witness, prime, instance;
    std::string op, pi, a, b, alpha, beta, gs, g, h;
    uint64_t seed = 0, index = 0;

    CLI::App* snf = app.add_subcommand("snf", "Smith normal form of a matrix over Q[x]");
    snf->add_option("--matrix", matrix, "matrix (JSON, file, or '-')")->required();

    CLI::App* dec = app.add_subcommand("decompose", "invariant factors and free rank");
    dec->add_option("--module", module)->required();

    CLI::App* ord = app.add_subcommand("order", "order ideal of an element");
    ord->add_option("--module", module)->required();
    ord->add_option("--element", element, "element literal \"(p1, p2, ...)\"")->required();

    CLI::App* expc = app.add_subcommand("exponent", "exponent ideal of a module");
    expc->add_option("--module", module)->required();

    CLI::App* prim = app.add_subcommand("primary", "primary component at a monic prime");
    prim->add_option("--module", module)->required();
    prim->add_option("--prime", prime)->required();

    CLI::App* isoq = app.add_subcommand("isolate", "test sigma-isolation of a subgroup");
    isoq->add_option("--module", module)->required();
    isoq->add_option("--subgroup", subgroup)->required();
    isoq->add_option("--sigma", sigma, "prime set JSON")->required();

    CLI::App* isol = app.add_subcommand("isolator", "smallest sigma-isolated oversubgroup");
    isol->add_option("--module", module)->required();
    isol->add_option("--subgroup", subgroup)->required();
    isol->add_option("--sigma", sigma)->required();

    CLI::App* sep = app.add_subcommand("separate", "construct a separability witness");
    sep->add_option("--module", module);
    sep->add_option("--subgroup", subgroup);
    sep->add_option("--element", element);
    sep->add_option("--omega", omega);
    sep->add_option("--instance", instance, "bundled {module,subgroup,element,omega} JSON");

    CLI::App* ver = app.add_subcommand("verify", "re-verify a separability witness");
    ver->add_option("--witness", witness)->required();

    CLI::App* res = app.add_subcommand("residual", "residual finite omega-type classification");
    res->add_option("--module", module)->required();
    res->add_option("--omega", omega)->required();

    CLI::App* qc = app.add_subcommand("qc", "quasicyclic group arithmetic");
    qc->add_option("--op", op)->required()->check(CLI::IsMember({"add", "scale", "order", "root"}));
    qc->add_option("--pi", pi, "monic prime")->required();
    qc->add_option("--a", a, "element: \"num/pi^k\" or JSON");
    qc->add_option("--b", b);
    qc->add_option("--alpha", alpha);

    CLI::App* c2 = app.add_subcommand("c2", "free class-2 group arithmetic");
    c2->add_option("--op", op)->required()->check(
        CLI::IsMember({"mul", "inverse", "pow", "commutator", "product_root"}));
    c2->add_option("--a", g, "element JSON {rank,gen,comm}");
    c2->add_option("--b", h);
    c2->add_option("--alpha", alpha);
    c2->add_option("--beta", beta);
    c2->add_option("--gs", gs, "JSON array of elements");

    CLI::App* gen = app.add_subcommand("gen", "generate a random separate/verify instance");
    gen->add_option("--seed", seed, "PRNG seed")->required();
    gen->add_option("--index", index, "instance index within the seed stream");

    CLI11_PARSE(app, argc, argv);

    try {
        if (snf->parsed()) {
            StringOut r;
            check(qxsep_snf(read_input(matrix).c_str(), &r.p));
            json j = json::parse(r.p);
            std::string text = "d:\n" + matrix_lines(j.at("d"), "  ") + "u:\n" +
                               matrix_lines(j.at("u"), "  ") + "v:\n" + matrix_lines(j.at("v"), "  ");
            out.emit(r.p, text);
        } else if (dec->parsed()) {
            ModulePtr m = parse_module(module);
            StringOut r;
            check(qxsep_decompose(m.get(), &r.p));
            json j = json::parse(r.p);
            out.emit(r.p, "invariant factors: " + poly_list(j.at("factors")) + "\nfree rank: " +
                             std::to_string(j.at("rank").get<int>()) + "\n");
        } else if (ord->parsed()) {
            ModulePtr m = parse_module(module);
            StringOut r;
            check(qxsep_order_ideal(m.get(), read_input(element).c_str(), &r.p));
            json j = json::parse(r.p);
            std::string gen_str = j.at("generator").get<std::string>();
            out.emit(r.p, gen_str == "0" ? "order ideal: (0)  [unbounded order]\n"
                                         : "order ideal: (" + gen_str + ")\n");
        } else if (expc->parsed()) {
            ModulePtr m = parse_module(module);
            StringOut r;
            check(qxsep_exponent_ideal(m.get(), &r.p));
            json j = json::parse(r.p);
            std::string gen_str = j.at("generator").get<std::string>();
            out.emit(r.p, gen_str == "0" ? "exponent ideal: (0)  [unbounded]\n"
                                         : "exponent ideal: (" + gen_str + ")\n");
        } else if (prim->parsed()) {
            ModulePtr m = parse_module(module);
            StringOut r;
            check(qxsep_primary_component(m.get(), read_input(prime).c_str(), &r.p));
            json j = json::parse(r.p);
            out.emit(r.p, "generators:\n" + matrix_lines(j.at("gens"), "  ") +
                              "component factors: " + poly_list(j.at("factors")) + "\n");
        } else if (isoq->parsed()) {
            ModulePtr m = parse_module(module);
            SubmodulePtr hsub = parse_submodule(m.get(), subgroup);
            PrimesetPtr s = parse_primeset(sigma);
            StringOut r;
            check(qxsep_is_isolated(m.get(), hsub.get(), s.get(), &r.p));
            out.emit(r.p, render_isolation(json::parse(r.p)));
        } else if (isol->parsed()) {
            ModulePtr m = parse_module(module);
            SubmodulePtr hsub = parse_submodule(m.get(), subgroup);
            PrimesetPtr s = parse_primeset(sigma);
            StringOut r;
            check(qxsep_isolator(m.get(), hsub.get(), s.get(), &r.p));
            out.emit(r.p, "generators:\n" + matrix_lines(json::parse(r.p).at("gens"), "  "));
        } else if (sep->parsed()) {
            std::string mod_text = module, sub_text = subgroup, elt_text = element, omega_text = omega;
            if (!instance.empty()) {
                json inst = json::parse(read_input(instance));
                mod_text = inst.at("module").dump();
                sub_text = inst.at("subgroup").dump();
                elt_text = inst.at("element").dump();
                omega_text = inst.at("omega").dump();
            } else if (module.empty() || subgroup.empty() || element.empty() || omega.empty()) {
                throw CliError(1, "separate needs --instance or all of --module/--subgroup/--element/--omega");
            }
            ModulePtr m = parse_module(mod_text);
            SubmodulePtr hsub = parse_submodule(m.get(), sub_text);
            PrimesetPtr w = parse_primeset(omega_text);
            StringOut r;
            int status = qxsep_separate(m.get(), hsub.get(), read_input(elt_text).c_str(), w.get(), &r.p);
            if (status == QXSEP_PRECONDITION && r.p != nullptr) {
                // not isolated: render the report, then fail with exit 2
                json j = json::parse(r.p);
                out.emit(r.p, "cannot separate: subgroup is not isolated\n" +
                                  render_isolation(j.at("report")));
                std::cerr << "error: " << qxsep_last_error() << "\n";
                return 2;
            }
            check(status);
            out.emit(r.p, render_witness(json::parse(r.p)));
        } else if (ver->parsed()) {
            int valid = 0;
            check(qxsep_verify_witness(read_input(witness).c_str(), &valid));
            json j{{"valid", valid == 1}};
            out.emit(j.dump(), valid == 1 ? "VALID\n" : "INVALID\n");
            if (valid != 1) return 2;
        } else if (res->parsed()) {
            ModulePtr m = parse_module(module);
            PrimesetPtr w = parse_primeset(omega);
            StringOut r;
            check(qxsep_residually_ft(m.get(), w.get(), &r.p));
            json j = json::parse(r.p);
            std::string text = j.at("residually_ft_omega").get<bool>()
                                   ? "residually finite omega-type: yes\n"
                                   : "residually finite omega-type: no\nobstruction: " +
                                         element_word(j.at("obstruction")) + "\n";
            out.emit(r.p, text);
        } else if (qc->parsed()) {
            json req{{"op", op}, {"pi", read_input(pi)}};
            if (!a.empty()) req["a"] = read_input(a);
            if (!b.empty()) req["b"] = read_input(b);
            if (!alpha.empty()) req["alpha"] = read_input(alpha);
            // JSON-object element literals come through flags as text
            for (const char* key : {"a", "b"})
                if (req.contains(key) && !req[key].get<std::string>().empty() &&
                    req[key].get<std::string>().front() == '{')
                    req[key] = json::parse(req[key].get<std::string>());
            StringOut r;
            check(qxsep_qc_eval(req.dump().c_str(), &r.p));
            json j = json::parse(r.p);
            out.emit(r.p, j.contains("order") ? "order: " + j.at("order").get<std::string>() + "\n"
                                              : j.at("text").get<std::string>() + "\n");
        } else if (c2->parsed()) {
            json req{{"op", op}};
            if (!g.empty()) req["g"] = json::parse(read_input(g));
            if (!h.empty()) req["h"] = json::parse(read_input(h));
            if (!gs.empty()) req["gs"] = json::parse(read_input(gs));
            if (!alpha.empty()) req["alpha"] = read_input(alpha);
            if (!beta.empty()) req["beta"] = read_input(beta);
            StringOut r;
            check(qxsep_c2_eval(req.dump().c_str(), &r.p));
            json j = json::parse(r.p);
            out.emit(r.p, j.at("text").get<std::string>() + "\n");
        } else if (gen->parsed()) {
            StringOut r;
            check(qxsep_generate_instance(seed, index, &r.p));
            out.emit(r.p, std::string(r.p) + "\n");
        }
    } catch (const CliError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == QXSEP_PRECONDITION ? 2 : 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
