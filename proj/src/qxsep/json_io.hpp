#ifndef QXSEP_JSON_IO_HPP
#define QXSEP_JSON_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"
#include "qxsep/class2.hpp"
#include "qxsep/quasicyclic.hpp"
#include "qxsep/sep.hpp"

namespace qxsep {

using Json = nlohmann::json;  // std::map-backed: keys serialize sorted, output is stable

// Json::parse with errors rethrown as ParseError.
Json parse_json(std::string_view text);

Json matrix_to_json(const PolyMatrix& m);
// Accepts {"rows":r,"cols":c,"entries":[[...]]} or a bare array of rows.
PolyMatrix matrix_from_json(const Json& j);

Json module_to_json(const FPModule& g);
FPModule module_from_json(const Json& j);  // {"ngens":n,"relations":<matrix>}; relations optional

Json submodule_to_json(const Submodule& s);  // {"gens":<matrix>}
Submodule submodule_from_json(const FPModule& ambient, const Json& j);

Json element_to_json(const ModElement& e);  // array of poly strings
ModElement element_from_json(const FPModule& g, const Json& j);
// "(p1, p2, ...)" CLI literal; also accepts the JSON array form.
ModElement element_from_text(const FPModule& g, std::string_view text);
std::string element_to_text(const ModElement& e);  // multiplicative rendering g1^{..} g2^{..}

Json poly_list_to_json(const std::vector<Poly>& ps);
std::vector<Poly> poly_list_from_json(const Json& j);

Json primeset_to_json(const PrimeSet& s);  // {"mode":"explicit"|"cofinite","primes":[...]}
PrimeSet primeset_from_json(const Json& j);

Json witness_to_json(const SeparabilityWitness& w);
SeparabilityWitness witness_from_json(const Json& j);

Json isolation_report_to_json(const IsolationReport& r);

Json quasi_to_json(const QuasiElement& a);
QuasiElement quasi_from_json(const Json& j);
std::string quasi_to_text(const QuasiElement& a);  // "num/pi^k", zero is "0"
QuasiElement quasi_from_text(const MonicPrime& pi, std::string_view text);

Json c2_to_json(const Class2Element& g);  // {"rank":n,"gen":[...],"comm":[...]}
Class2Element c2_from_json(const Json& j);
std::string c2_to_text(const Class2Element& g);  // "a1^{x} c12^{x^2}", identity is "1"

}  // namespace qxsep

#endif
