#include "qxsep/factor.hpp"

#include <algorithm>
#include <cstdint>

#include "qxsep/error.hpp"

namespace qxsep {

namespace {

// ---------------------------------------------------------------------------
// F_p[x], p a small odd prime

struct GFp {
    uint64_t p;
    uint64_t add(uint64_t a, uint64_t b) const { return (a + b) % p; }
    uint64_t sub(uint64_t a, uint64_t b) const { return (a + p - b % p) % p; }
    uint64_t mul(uint64_t a, uint64_t b) const { return a * b % p; }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        a %= p;
        for (; e != 0; e >>= 1u) {
            if (e & 1u) r = mul(r, a);
            a = mul(a, a);
        }
        return r;
    }
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

using FpPoly = std::vector<uint64_t>;  // coefficient i of x^i, in [0, p)

void fp_strip(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const GFp& k, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = k.add(c[i + j], k.mul(a[i], b[j]));
    return c;
}

FpPoly fp_sub(const GFp& k, const FpPoly& a, const FpPoly& b) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] = k.sub(c[i], b[i]);
    fp_strip(c);
    return c;
}

// a = q*b + r
void fp_divmod(const GFp& k, FpPoly a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    int db = fp_deg(b);
    int dq = fp_deg(a) - db;
    q.assign(dq >= 0 ? static_cast<size_t>(dq) + 1 : 0, 0);
    uint64_t lead_inv = k.inv(b.back());
    for (int i = dq; i >= 0; --i) {
        uint64_t c = k.mul(a[static_cast<size_t>(i + db)], lead_inv);
        if (c == 0) continue;
        q[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= db; ++j)
            a[static_cast<size_t>(i + j)] = k.sub(a[static_cast<size_t>(i + j)], k.mul(c, b[static_cast<size_t>(j)]));
    }
    fp_strip(a);
    r = std::move(a);
}

FpPoly fp_rem(const GFp& k, const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divmod(k, a, b, q, r);
    return r;
}

FpPoly fp_monic(const GFp& k, FpPoly f) {
    if (f.empty()) return f;
    uint64_t s = k.inv(f.back());
    for (auto& c : f) c = k.mul(c, s);
    return f;
}

FpPoly fp_gcd(const GFp& k, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fp_rem(k, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(k, std::move(a));
}

// s*a + t*b = 1 for coprime a, b; deg s < deg b, deg t < deg a.
void fp_bezout(const GFp& k, const FpPoly& a, const FpPoly& b, FpPoly& s, FpPoly& t) {
    FpPoly r0 = a, s0 = {1};
    FpPoly r1 = b, s1 = {};
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divmod(k, r0, r1, q, r);
        FpPoly s2 = fp_sub(k, s0, fp_mul(k, q, s1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
    }
    if (fp_deg(r0) != 0) throw Error(Errc::internal, "expected coprime mod-p polynomials");
    uint64_t scale = k.inv(r0[0]);
    for (auto& c : s0) c = k.mul(c, scale);
    s = fp_rem(k, s0, b);
    // t = (1 - s*a)/b
    FpPoly num = fp_sub(k, FpPoly{1}, fp_mul(k, s, a));
    FpPoly q;
    FpPoly rem;
    fp_divmod(k, num, b, q, rem);
    if (!rem.empty()) throw Error(Errc::internal, "bezout residue");
    t = std::move(q);
}

FpPoly fp_powmod(const GFp& k, FpPoly base, const Integer& e, const FpPoly& f) {
    FpPoly r = {1};
    base = fp_rem(k, base, f);
    for (size_t bit = mpz_sizeinbase(e.get_mpz_t(), 2); bit-- > 0;) {
        r = fp_rem(k, fp_mul(k, r, r), f);
        if (mpz_tstbit(e.get_mpz_t(), bit)) r = fp_rem(k, fp_mul(k, r, base), f);
    }
    return r;
}

// Deterministic generator driving equal-degree splitting; fixed seed keeps
// the whole factorization reproducible run to run.
struct SplitRng {
    uint64_t state = 0x9e3779b97f4a7c15ULL;
    uint64_t next() {
        state ^= state << 13u;
        state ^= state >> 7u;
        state ^= state << 17u;
        return state;
    }
};

// Distinct-degree decomposition of monic squarefree f: (product, d) pairs.
std::vector<std::pair<FpPoly, int>> fp_distinct_degree(const GFp& k, const FpPoly& f) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly v = f;
    FpPoly h = {0, 1};  // x
    for (int d = 1; 2 * d <= fp_deg(v); ++d) {
        h = fp_powmod(k, h, Integer(static_cast<unsigned long>(k.p)), f);
        FpPoly g = fp_gcd(k, fp_sub(k, h, FpPoly{0, 1}), v);
        if (fp_deg(g) > 0) {
            out.emplace_back(g, d);
            FpPoly q, r;
            fp_divmod(k, v, g, q, r);
            v = std::move(q);
        }
    }
    if (fp_deg(v) > 0) out.emplace_back(v, fp_deg(v));
    return out;
}

// Cantor-Zassenhaus split of f into its irreducible factors of degree d.
void fp_equal_degree(const GFp& k, const FpPoly& f, int d, SplitRng& rng, std::vector<FpPoly>& out) {
    if (fp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(k.p), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        FpPoly w(static_cast<size_t>(fp_deg(f)), 0);
        for (auto& c : w) c = rng.next() % k.p;
        fp_strip(w);
        if (fp_deg(w) < 1) continue;
        FpPoly g = fp_gcd(k, w, f);
        if (fp_deg(g) <= 0 || fp_deg(g) == fp_deg(f)) {
            FpPoly t = fp_powmod(k, w, e, f);
            if (t.empty()) continue;
            t[0] = k.sub(t[0], 1);
            fp_strip(t);
            g = fp_gcd(k, t, f);
        }
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            FpPoly q, r;
            fp_divmod(k, f, g, q, r);
            fp_equal_degree(k, g, d, rng, out);
            fp_equal_degree(k, q, d, rng, out);
            return;
        }
    }
}

std::vector<FpPoly> fp_factor_squarefree(const GFp& k, const FpPoly& f) {
    std::vector<FpPoly> out;
    SplitRng rng;
    for (const auto& [part, d] : fp_distinct_degree(k, f)) fp_equal_degree(k, part, d, rng, out);
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Z[x] helpers

using ZPoly = std::vector<Integer>;

void z_strip(ZPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    z_strip(c);
    return c;
}

ZPoly z_mod(ZPoly f, const Integer& m) {
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());  // into [0, m)
    }
    z_strip(f);
    return f;
}

ZPoly z_symmetric(ZPoly f, const Integer& m) {
    Integer half = m / 2;
    for (auto& c : f) {
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c > half) c -= m;
    }
    z_strip(f);
    return f;
}

ZPoly z_mul_mod(const ZPoly& a, const ZPoly& b, const Integer& m) { return z_mod(z_mul(a, b), m); }

// a = q*b + r mod m, b monic
void z_divmod_monic_mod(ZPoly a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
    int db = z_deg(b);
    int dq = z_deg(a) - db;
    q.assign(dq >= 0 ? static_cast<size_t>(dq) + 1 : 0, Integer(0));
    for (int i = dq; i >= 0; --i) {
        Integer c = a[static_cast<size_t>(i + db)];
        mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
        if (c == 0) continue;
        q[static_cast<size_t>(i)] = c;
        for (int j = 0; j <= db; ++j) a[static_cast<size_t>(i + j)] -= c * b[static_cast<size_t>(j)];
    }
    q = z_mod(std::move(q), m);
    r = z_mod(std::move(a), m);
}

Integer z_content(const ZPoly& f) {
    Integer g(0);
    for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly z_primitive(ZPoly f) {
    Integer g = z_content(f);
    if (g == 0) return f;
    if (f.back() < 0) g = -g;
    for (auto& c : f) c /= g;
    return f;
}

Poly z_to_poly(const ZPoly& f) {
    std::vector<Rational> c(f.size());
    for (size_t i = 0; i < f.size(); ++i) c[i] = Rational(f[i]);
    return Poly(std::move(c));
}

// Clears denominators of a rational polynomial; result is primitive with
// positive leading coefficient.
ZPoly poly_to_primitive_z(const Poly& f) {
    Integer den(1);
    for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z(f.coeffs().size());
    for (size_t i = 0; i < z.size(); ++i) {
        Rational scaled = f.coeffs()[i] * Rational(den);
        z[i] = scaled.get_num();  // integral by choice of den
    }
    return z_primitive(std::move(z));
}

bool z_divides(const ZPoly& d, const ZPoly& f) {
    if (d.empty()) return f.empty();
    return divides(z_to_poly(d), z_to_poly(f));
}

ZPoly z_exact_div(const ZPoly& f, const ZPoly& d) {
    Poly q = exact_div(z_to_poly(f), z_to_poly(d));
    ZPoly out(static_cast<size_t>(q.degree()) + 1);
    for (int i = 0; i <= q.degree(); ++i) {
        const Rational& c = q.coeff(i);
        if (c.get_den() != 1) throw Error(Errc::internal, "non-integral quotient");
        out[static_cast<size_t>(i)] = c.get_num();
    }
    z_strip(out);
    return out;
}

// ---------------------------------------------------------------------------
// Hensel lifting

struct LiftPair {
    ZPoly g, h, s, t;  // f = g*h, s*g + t*h = 1  (mod m)
};

// One quadratic step: the invariants move from mod m to mod m^2. Both g and
// h are monic and stay monic.
ZPoly z_add3(const ZPoly& a, const ZPoly& b, const ZPoly& c) {
    ZPoly sum(std::max({a.size(), b.size(), c.size()}), Integer(0));
    for (size_t i = 0; i < a.size(); ++i) sum[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) sum[i] += b[i];
    for (size_t i = 0; i < c.size(); ++i) sum[i] += c[i];
    z_strip(sum);
    return sum;
}

LiftPair hensel_step(const ZPoly& f, const LiftPair& in, const Integer& m) {
    Integer m2 = m * m;
    ZPoly e = z_mod(z_sub(f, z_mul(in.g, in.h)), m2);
    ZPoly q, r;
    z_divmod_monic_mod(z_mul_mod(in.s, e, m2), in.h, m2, q, r);
    ZPoly g2 = z_mod(z_add3(in.g, z_mul_mod(in.t, e, m2), z_mul_mod(q, in.g, m2)), m2);
    ZPoly h2 = z_mod(z_add3(in.h, r, {}), m2);
    if (z_deg(g2) != z_deg(in.g) || z_deg(h2) != z_deg(in.h))
        throw Error(Errc::internal, "hensel step degree drift");
    ZPoly b = z_mod(z_sub(z_add3(z_mul(in.s, g2), z_mul(in.t, h2), {}), ZPoly{Integer(1)}), m2);
    ZPoly c, d;
    z_divmod_monic_mod(z_mul_mod(in.s, b, m2), h2, m2, c, d);
    ZPoly s2 = z_mod(z_sub(in.s, d), m2);
    ZPoly t2 = z_mod(z_sub(in.t, z_add3(z_mul_mod(in.t, b, m2), z_mul_mod(c, g2, m2), {})), m2);
    return {g2, h2, s2, t2};
}

ZPoly fp_to_z(const FpPoly& f) {
    ZPoly z(f.size());
    for (size_t i = 0; i < f.size(); ++i) z[i] = Integer(static_cast<unsigned long>(f[i]));
    return z;
}

// Lifts the mod-p factorization of monic f to the modulus cap (a power of p),
// splitting the factor list as a balanced tree.
void hensel_tree(const ZPoly& f, const std::vector<FpPoly>& factors, size_t lo, size_t hi, const GFp& k,
                 const Integer& cap, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(z_mod(f, cap));
        return;
    }
    size_t mid = lo + (hi - lo) / 2;
    FpPoly g0 = {1}, h0 = {1};
    for (size_t i = lo; i < mid; ++i) g0 = fp_mul(k, g0, factors[i]);
    for (size_t i = mid; i < hi; ++i) h0 = fp_mul(k, h0, factors[i]);
    FpPoly s0, t0;
    fp_bezout(k, g0, h0, s0, t0);
    LiftPair pair{fp_to_z(g0), fp_to_z(h0), fp_to_z(s0), fp_to_z(t0)};
    Integer m(static_cast<unsigned long>(k.p));
    while (m < cap) {
        pair = hensel_step(z_mod(f, m * m), pair, m);
        m = m * m;
    }
    hensel_tree(z_mod(pair.g, cap), factors, lo, mid, k, cap, out);
    hensel_tree(z_mod(pair.h, cap), factors, mid, hi, k, cap, out);
}

// ---------------------------------------------------------------------------
// Zassenhaus over Z

const uint64_t kPrimePool[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53,
                               59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113, 127};

GFp select_prime(const ZPoly& f) {
    for (uint64_t p : kPrimePool) {
        GFp k{p};
        if (f.back() % p == 0) continue;
        FpPoly fbar(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            Integer c = f[i] % Integer(static_cast<unsigned long>(p));
            if (c < 0) c += static_cast<unsigned long>(p);
            fbar[i] = c.get_ui();
        }
        fp_strip(fbar);
        FpPoly deriv(fbar.size() > 1 ? fbar.size() - 1 : 0);
        for (size_t i = 1; i < fbar.size(); ++i) deriv[i - 1] = k.mul(fbar[i], i % p);
        fp_strip(deriv);
        if (deriv.empty()) continue;
        if (fp_deg(fp_gcd(k, fbar, deriv)) == 0) return k;
    }
    throw Error(Errc::internal, "no usable prime for modular factorization");
}

// Coefficient bound for lc(f) * (any monic factor of f): Landau-Mignotte.
Integer coefficient_bound(const ZPoly& f) {
    Integer norm2(0);
    for (const auto& c : f) norm2 += c * c;
    Integer root = sqrt(norm2) + 1;
    Integer b = root << static_cast<unsigned>(z_deg(f) + 1);
    return b * abs(f.back());
}

// Factors a primitive squarefree integer polynomial with positive leading
// coefficient; returns primitive irreducible factors.
std::vector<ZPoly> zassenhaus(ZPoly f) {
    std::vector<ZPoly> out;
    if (z_deg(f) <= 1) {
        if (z_deg(f) >= 1) out.push_back(std::move(f));
        return out;
    }
    GFp k = select_prime(f);
    FpPoly fbar(f.size());
    for (size_t i = 0; i < f.size(); ++i) {
        Integer c = f[i] % Integer(static_cast<unsigned long>(k.p));
        if (c < 0) c += static_cast<unsigned long>(k.p);
        fbar[i] = c.get_ui();
    }
    fp_strip(fbar);
    std::vector<FpPoly> modular = fp_factor_squarefree(k, fp_monic(k, fbar));
    if (modular.size() == 1) {
        out.push_back(std::move(f));
        return out;
    }

    Integer target = 2 * coefficient_bound(f) + 1;
    Integer cap(static_cast<unsigned long>(k.p));
    while (cap < target) cap = cap * cap;

    // Lift the monic version of f; the leading coefficient is reattached
    // during recombination.
    Integer lc_inv;
    if (mpz_invert(lc_inv.get_mpz_t(), Integer(f.back()).get_mpz_t(), cap.get_mpz_t()) == 0)
        throw Error(Errc::internal, "leading coefficient not invertible");
    ZPoly f_monic = f;
    for (auto& c : f_monic) c = c * lc_inv;
    f_monic = z_mod(std::move(f_monic), cap);

    std::vector<ZPoly> lifted;
    hensel_tree(f_monic, modular, 0, modular.size(), k, cap, lifted);

    std::vector<size_t> remaining(lifted.size());
    for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

    size_t take = 1;
    while (2 * take <= remaining.size()) {
        // fixed-size combinations of `remaining`, lexicographic by position
        std::vector<size_t> idx(take);
        for (size_t i = 0; i < take; ++i) idx[i] = i;
        bool removed = false;
        while (true) {
            ZPoly cand = {Integer(f.back())};
            for (size_t i : idx) cand = z_mul_mod(cand, lifted[remaining[i]], cap);
            cand = z_symmetric(std::move(cand), cap);
            ZPoly cand_pp = z_primitive(cand);
            if (z_divides(cand_pp, f)) {
                out.push_back(cand_pp);
                f = z_exact_div(f, cand_pp);
                std::vector<size_t> next;
                for (size_t i = 0; i < remaining.size(); ++i)
                    if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(remaining[i]);
                remaining = std::move(next);
                removed = true;
                break;
            }
            // next combination
            size_t i = take;
            while (i-- > 0) {
                if (idx[i] != i + remaining.size() - take) {
                    ++idx[i];
                    for (size_t j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
                    break;
                }
                if (i == 0) {
                    i = SIZE_MAX;
                    break;
                }
            }
            if (i == SIZE_MAX) break;
        }
        if (!removed) ++take;
    }
    if (z_deg(f) > 0) out.push_back(std::move(f));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& a) {
    if (a.is_zero()) throw Error(Errc::zero_polynomial, "squarefree decomposition of zero");
    std::vector<std::pair<Poly, int>> out;
    Poly f = a.monic();
    if (f.degree() == 0) return out;
    Poly df = f.derivative();
    Poly u = poly_gcd(f, df);
    Poly v = exact_div(f, u);
    Poly w = exact_div(df, u);
    int i = 1;
    while (v.degree() > 0) {
        Poly z = w - v.derivative();
        Poly h = poly_gcd(v, z);  // gcd(v, 0) = v, ending the loop cleanly
        if (h.degree() > 0) out.emplace_back(h, i);
        v = exact_div(v, h);
        w = exact_div(z, h);
        ++i;
    }
    return out;
}

MonicPrime::MonicPrime(const Poly& p) {
    if (p.is_zero() || p.degree() < 1)
        throw Error(Errc::zero_polynomial, "a prime must have degree >= 1");
    Poly m = p.monic();
    Factorization f = factor(m);
    if (f.factors.size() != 1 || f.factors[0].second != 1 || f.unit != 1)
        throw ParseError("'" + p.str() + "' is not irreducible over Q");
    p_ = m;
}

MonicPrime MonicPrime::unchecked(Poly monic_irreducible) {
    return MonicPrime(std::move(monic_irreducible), Trusted{});
}

Factorization factor(const Poly& a) {
    if (a.is_zero()) throw Error(Errc::zero_polynomial, "cannot factor the zero polynomial");
    Factorization result;
    result.unit = a.leading();
    if (a.degree() == 0) return result;

    std::vector<std::pair<MonicPrime, int>> acc;
    for (const auto& [part, mult] : squarefree_decomposition(a)) {
        ZPoly fz = poly_to_primitive_z(part);
        for (ZPoly& irr : zassenhaus(std::move(fz))) {
            Poly q = z_to_poly(irr).monic();
            acc.emplace_back(MonicPrime::unchecked(std::move(q)), mult);
        }
    }
    std::sort(acc.begin(), acc.end(),
              [](const auto& x, const auto& y) { return poly_cmp(x.first.poly(), y.first.poly()) < 0; });
    for (auto& [p, e] : acc) {
        if (!result.factors.empty() && result.factors.back().first == p)
            result.factors.back().second += e;
        else
            result.factors.emplace_back(std::move(p), e);
    }

    // Exact reassembly check; cheap at the degrees this library targets.
    Poly check(result.unit);
    for (const auto& [p, e] : result.factors) check = check * p.poly().pow(static_cast<unsigned>(e));
    if (check != a) throw Error(Errc::internal, "factorization self-check failed");
    return result;
}

bool is_irreducible(const Poly& a) {
    if (a.is_zero() || a.degree() < 1) return false;
    Factorization f = factor(a);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace qxsep
