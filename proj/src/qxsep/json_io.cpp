#include "qxsep/json_io.hpp"

#include <algorithm>
#include <cctype>

namespace qxsep {

namespace {

const Json& require(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key '") + key + "'");
    return j.at(key);
}

std::string require_string(const Json& j, const char* what) {
    if (!j.is_string()) throw ParseError(std::string("expected a string for ") + what);
    return j.get<std::string>();
}

int require_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) throw ParseError(std::string("expected an integer for ") + what);
    return j.get<int>();
}

}  // namespace

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

PolyMatrix matrix_from_json(const Json& j) {
    const Json* entries = nullptr;
    int rows = -1, cols = -1;
    if (j.is_array()) {
        entries = &j;
    } else {
        rows = require_int(require(j, "rows"), "rows");
        cols = require_int(require(j, "cols"), "cols");
        entries = &require(j, "entries");
    }
    if (!entries->is_array()) throw ParseError("matrix entries must be an array of rows");
    if (rows < 0) rows = static_cast<int>(entries->size());
    if (static_cast<int>(entries->size()) != rows) throw ParseError("matrix row count mismatch");
    if (cols < 0) cols = rows == 0 ? 0 : static_cast<int>(entries->front().size());
    PolyMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const Json& row = (*entries)[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw ParseError("matrix column count mismatch");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = Poly::parse(require_string(row[static_cast<size_t>(c)], "matrix entry"));
    }
    return m;
}

Json module_to_json(const FPModule& g) {
    return Json{{"ngens", g.ngens()}, {"relations", matrix_to_json(g.relations())}};
}

FPModule module_from_json(const Json& j) {
    int ngens = require_int(require(j, "ngens"), "ngens");
    PolyMatrix rel(ngens < 0 ? 0 : ngens, 0);
    if (j.contains("relations")) rel = matrix_from_json(j.at("relations"));
    return FPModule(ngens, std::move(rel));
}

Json submodule_to_json(const Submodule& s) { return Json{{"gens", matrix_to_json(s.gens())}}; }

Submodule submodule_from_json(const FPModule& ambient, const Json& j) {
    PolyMatrix gens = j.is_object() && j.contains("gens") ? matrix_from_json(j.at("gens"))
                                                          : matrix_from_json(j);
    return ambient.submodule(std::move(gens));
}

Json element_to_json(const ModElement& e) {
    Json a = Json::array();
    for (const Poly& p : e.coords) a.push_back(p.str());
    return a;
}

ModElement element_from_json(const FPModule& g, const Json& j) {
    if (!j.is_array()) throw ParseError("element must be an array of polynomial strings");
    std::vector<Poly> coords;
    coords.reserve(j.size());
    for (const Json& x : j) coords.push_back(Poly::parse(require_string(x, "coordinate")));
    return g.element(std::move(coords));
}

ModElement element_from_text(const FPModule& g, std::string_view text) {
    // strip whitespace at both ends
    size_t b = text.find_first_not_of(" \t\r\n");
    size_t e = text.find_last_not_of(" \t\r\n");
    if (b == std::string_view::npos) throw ParseError("empty element literal");
    std::string_view s = text.substr(b, e - b + 1);
    if (s.front() == '[') return element_from_json(g, parse_json(s));
    if (s.front() != '(' || s.back() != ')')
        throw ParseError("element literal must look like (p1, p2, ...)");
    s = s.substr(1, s.size() - 2);
    std::vector<Poly> coords;
    size_t start = 0;
    while (start <= s.size()) {
        size_t comma = s.find(',', start);
        std::string_view piece = s.substr(start, comma == std::string_view::npos ? s.size() - start
                                                                                 : comma - start);
        coords.push_back(Poly::parse(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return g.element(std::move(coords));
}

std::string element_to_text(const ModElement& e) {
    std::string out;
    for (size_t i = 0; i < e.coords.size(); ++i) {
        if (e.coords[i].is_zero()) continue;
        if (!out.empty()) out += " ";
        out += "g" + std::to_string(i + 1) + "^{" + e.coords[i].str() + "}";
    }
    return out.empty() ? "1" : out;
}

Json poly_list_to_json(const std::vector<Poly>& ps) {
    Json a = Json::array();
    for (const Poly& p : ps) a.push_back(p.str());
    return a;
}

std::vector<Poly> poly_list_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("expected an array of polynomial strings");
    std::vector<Poly> out;
    out.reserve(j.size());
    for (const Json& x : j) out.push_back(Poly::parse(require_string(x, "polynomial")));
    return out;
}

Json primeset_to_json(const PrimeSet& s) {
    Json primes = Json::array();
    for (const MonicPrime& p : s.primes()) primes.push_back(p.poly().str());
    return Json{{"mode", s.mode() == PrimeSet::Mode::explicit_set ? "explicit" : "cofinite"},
                {"primes", primes}};
}

PrimeSet primeset_from_json(const Json& j) {
    std::string mode = require_string(require(j, "mode"), "mode");
    if (mode != "explicit" && mode != "cofinite")
        throw ParseError("prime set mode must be 'explicit' or 'cofinite'");
    std::vector<MonicPrime> primes;
    for (const Json& x : require(j, "primes"))
        primes.emplace_back(Poly::parse(require_string(x, "prime")));
    return mode == "explicit" ? PrimeSet::explicit_set(std::move(primes))
                              : PrimeSet::cofinite(std::move(primes));
}

Json witness_to_json(const SeparabilityWitness& w) {
    return Json{{"module", module_to_json(w.module)},
                {"subgroup", submodule_to_json(w.subgroup)},
                {"element", element_to_json(w.element)},
                {"n", submodule_to_json(w.separating)},
                {"quotient_factors", poly_list_to_json(w.quotient_factors)},
                {"omega", primeset_to_json(w.omega)}};
}

SeparabilityWitness witness_from_json(const Json& j) {
    FPModule g = module_from_json(require(j, "module"));
    Submodule h = submodule_from_json(g, require(j, "subgroup"));
    ModElement e = element_from_json(g, require(j, "element"));
    Submodule n = submodule_from_json(g, require(j, "n"));
    std::vector<Poly> factors = poly_list_from_json(require(j, "quotient_factors"));
    PrimeSet omega = primeset_from_json(require(j, "omega"));
    return SeparabilityWitness{std::move(g), std::move(h), std::move(e),
                               std::move(n), std::move(factors), std::move(omega)};
}

Json isolation_report_to_json(const IsolationReport& r) {
    Json j{{"isolated", r.isolated}};
    if (!r.isolated) {
        j["violating_element"] = element_to_json(*r.violating_element);
        j["violating_exponent"] = r.violating_exponent->str();
    }
    return j;
}

// ---------------------------------------------------------------------------
// quasicyclic

Json quasi_to_json(const QuasiElement& a) {
    return Json{{"pi", a.pi().poly().str()}, {"level", a.level()}, {"num", a.num().str()}};
}

QuasiElement quasi_from_json(const Json& j) {
    MonicPrime pi(Poly::parse(require_string(require(j, "pi"), "pi")));
    int level = require_int(require(j, "level"), "level");
    Poly num = Poly::parse(require_string(require(j, "num"), "num"));
    return QuasiElement(std::move(pi), level, std::move(num));
}

namespace {

bool single_term(const Poly& p) {
    int nonzero = 0;
    for (const Rational& c : p.coeffs())
        if (c != 0) ++nonzero;
    return nonzero <= 1;
}

std::string wrapped(const Poly& p) {
    std::string s = p.str();
    return single_term(p) && !(p.coeff(p.degree()) < 0) ? s : "(" + s + ")";
}

}  // namespace

std::string quasi_to_text(const QuasiElement& a) {
    if (a.is_zero()) return "0";
    std::string out = wrapped(a.num()) + "/" + wrapped(a.pi().poly());
    if (a.level() > 1) out += "^" + std::to_string(a.level());
    return out;
}

QuasiElement quasi_from_text(const MonicPrime& pi, std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw ParseError("empty quasicyclic literal");
    auto parse_group = [](std::string_view piece) {
        if (piece.size() >= 2 && piece.front() == '(' && piece.back() == ')')
            piece = piece.substr(1, piece.size() - 2);
        return Poly::parse(piece);
    };
    // try "num" alone (an integral class, i.e. zero), else split at each '/'
    // from the right until the tail parses as pi^k
    for (size_t cut = s.rfind('/'); cut != std::string::npos; cut = cut == 0 ? std::string::npos : s.rfind('/', cut - 1)) {
        std::string_view head = std::string_view(s).substr(0, cut);
        std::string_view tail = std::string_view(s).substr(cut + 1);
        int level = 1;
        if (auto caret = tail.rfind('^'); caret != std::string_view::npos) {
            std::string_view exp = tail.substr(caret + 1);
            if (exp.empty() || !std::all_of(exp.begin(), exp.end(), [](char c) {
                    return std::isdigit(static_cast<unsigned char>(c));
                }))
                continue;
            level = std::stoi(std::string(exp));
            tail = tail.substr(0, caret);
        }
        try {
            if (parse_group(tail) != pi.poly()) continue;
            Poly num = parse_group(head);
            return QuasiElement(pi, level, std::move(num));
        } catch (const ParseError&) {
            continue;
        }
    }
    return QuasiElement(pi, 0, parse_group(s));  // integral class; reduces to zero
}

// ---------------------------------------------------------------------------
// class 2

Json c2_to_json(const Class2Element& g) {
    Json gen = Json::array();
    for (const Poly& p : g.gen_exps()) gen.push_back(p.str());
    Json comm = Json::array();
    for (const Poly& p : g.comm_exps()) comm.push_back(p.str());
    return Json{{"rank", g.rank()}, {"gen", gen}, {"comm", comm}};
}

Class2Element c2_from_json(const Json& j) {
    int rank = require_int(require(j, "rank"), "rank");
    std::vector<Poly> gen = poly_list_from_json(require(j, "gen"));
    if (static_cast<int>(gen.size()) != rank) throw ParseError("gen exponent count does not match rank");
    std::vector<Poly> comm;
    if (j.contains("comm"))
        comm = poly_list_from_json(j.at("comm"));
    else
        comm.resize(Class2Element::pair_count(rank));
    if (comm.size() != Class2Element::pair_count(rank))
        throw ParseError("comm exponent count does not match rank");
    return Class2Element(std::move(gen), std::move(comm));
}

std::string c2_to_text(const Class2Element& g) {
    std::string out;
    auto append = [&out](const std::string& name, const Poly& p) {
        if (p.is_zero()) return;
        if (!out.empty()) out += " ";
        out += name + "^{" + p.str() + "}";
    };
    int n = g.rank();
    for (int i = 0; i < n; ++i) append("a" + std::to_string(i + 1), g.gen_exps()[static_cast<size_t>(i)]);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::string name = n <= 9 ? "c" + std::to_string(i + 1) + std::to_string(j + 1)
                                      : "c" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            append(name, g.comm_exps()[Class2Element::pair_index(i, j, n)]);
        }
    return out.empty() ? "1" : out;
}

}  // namespace qxsep
