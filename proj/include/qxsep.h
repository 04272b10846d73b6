/* qxsep - exact separability certificates for finitely presented modules
 * over Q[x], plus the quasicyclic and free class-2 companions.
 *
 * All functions return a status code and report details through
 * qxsep_last_error(). Strings produced through char** out parameters are
 * heap-allocated; release them with qxsep_string_free(). Handles are opaque
 * and freed with their matching *_free function. Handles are immutable
 * after creation and may be shared across threads.
 */
#ifndef QXSEP_H
#define QXSEP_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the CLI reuses them as exit codes. */
#define QXSEP_OK 0
#define QXSEP_ERROR 1        /* parse errors, internal failures */
#define QXSEP_PRECONDITION 2 /* a violated operation precondition */

typedef struct qxsep_module qxsep_module;
typedef struct qxsep_submodule qxsep_submodule;
typedef struct qxsep_primeset qxsep_primeset;

const char* qxsep_version(void);

/* Message for the most recent failure on the calling thread ("" after a
 * success). The pointer stays valid until the next qxsep call on the same
 * thread. */
const char* qxsep_last_error(void);

void qxsep_string_free(char* s);

/* ---- handles ---------------------------------------------------------- */

/* {"ngens":n,"relations":{"rows":..,"cols":..,"entries":[[..]]}} */
int qxsep_module_parse(const char* json, qxsep_module** out);
void qxsep_module_free(qxsep_module* m);
int qxsep_module_to_json(const qxsep_module* m, char** out_json);

/* {"gens":<matrix>} or a bare matrix */
int qxsep_submodule_parse(const qxsep_module* m, const char* json, qxsep_submodule** out);
void qxsep_submodule_free(qxsep_submodule* s);

/* {"mode":"explicit"|"cofinite","primes":["x","x-1",...]} */
int qxsep_primeset_parse(const char* json, qxsep_primeset** out);
void qxsep_primeset_free(qxsep_primeset* s);

/* ---- operations ------------------------------------------------------- */

/* Elements are passed as "(p1, p2, ...)" literals or JSON arrays of
 * polynomial strings. */

/* out: {"d":<matrix>,"u":<matrix>,"v":<matrix>} with u*m*v = d */
int qxsep_snf(const char* matrix_json, char** out_json);

/* out: {"factors":[...],"rank":r} */
int qxsep_decompose(const qxsep_module* m, char** out_json);

/* out: {"generator":"x^2"} (zero generator means unbounded order) */
int qxsep_order_ideal(const qxsep_module* m, const char* element, char** out_json);
int qxsep_exponent_ideal(const qxsep_module* m, char** out_json);

/* out: {"gens":<matrix>,"factors":[...]} */
int qxsep_primary_component(const qxsep_module* m, const char* prime, char** out_json);

/* out: {"isolated":bool[,"violating_element":..,"violating_exponent":..]} */
int qxsep_is_isolated(const qxsep_module* m, const qxsep_submodule* h, const qxsep_primeset* sigma,
                      char** out_json);

/* out: {"gens":<matrix>} */
int qxsep_isolator(const qxsep_module* m, const qxsep_submodule* h, const qxsep_primeset* sigma,
                   char** out_json);

/* On success *out_json is the witness. When the subgroup is not isolated
 * against the complement of omega the call returns QXSEP_PRECONDITION and
 * *out_json carries {"error":"not_isolated","report":<isolation report>}. */
int qxsep_separate(const qxsep_module* m, const qxsep_submodule* h, const char* element,
                   const qxsep_primeset* omega, char** out_json);

/* *valid = 1 iff the witness re-verifies from scratch. */
int qxsep_verify_witness(const char* witness_json, int* valid);

/* out: {"residually_ft_omega":bool,"obstruction":element|null} */
int qxsep_residually_ft(const qxsep_module* m, const qxsep_primeset* omega, char** out_json);

/* request: {"op":"add"|"scale"|"order"|"root","pi":"x","a":...,"b":...,
 *           "alpha":"..."} with elements as {"level":k,"num":"..."} or
 * "num/pi^k" text. */
int qxsep_qc_eval(const char* request_json, char** out_json);

/* request: {"op":"mul"|"inverse"|"pow"|"commutator"|"product_root",
 *           "g":...,"h":...,"alpha":"...","gs":[...],"beta":"..."} with
 * elements as {"rank":n,"gen":[...],"comm":[...]}. */
int qxsep_c2_eval(const char* request_json, char** out_json);

/* Deterministic random separate/verify instance:
 * {"module":..,"subgroup":..,"element":..,"omega":..,"seed":..,"index":..} */
int qxsep_generate_instance(unsigned long long seed, unsigned long long index, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* QXSEP_H */
