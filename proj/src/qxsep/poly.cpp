#include "qxsep/poly.hpp"

#include <algorithm>
#include <cctype>

#include "qxsep/error.hpp"

namespace qxsep {

namespace {
const Rational kZero(0);
const Rational kOne(1);
}  // namespace

Poly::Poly(long constant) {
    if (constant != 0) c_.push_back(Rational(constant));
}

Poly::Poly(const Rational& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { strip(); }

Poly Poly::x() { return monomial(kOne, 1); }

Poly Poly::monomial(const Rational& coeff, int degree) {
    if (coeff == 0) return Poly();
    std::vector<Rational> c(static_cast<size_t>(degree) + 1, kZero);
    c.back() = coeff;
    return Poly(std::move(c));
}

void Poly::strip() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw Error(Errc::internal, "leading coefficient of zero polynomial");
    return c_.back();
}

bool Poly::is_one() const { return c_.size() == 1 && c_[0] == 1; }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == 1; }

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& q : r.c_) q = -q;
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()), kZero);
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return Poly(std::move(c));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1, kZero);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return Poly(std::move(c));
}

Poly Poly::scaled(const Rational& s) const {
    if (s == 0) return Poly();
    Poly r(*this);
    for (auto& q : r.c_) q *= s;
    return r;
}

Poly Poly::pow(unsigned k) const {
    Poly result(1);
    Poly base(*this);
    while (k != 0) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k != 0) base = base * base;
    }
    return result;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Poly(std::move(c));
}

Rational Poly::eval(const Rational& at) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) throw Error(Errc::internal, "monic() of zero polynomial");
    return scaled(kOne / leading());
}

DivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(Errc::division_by_zero_poly, "polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) return {Poly(), a};
    std::vector<Rational> quo(static_cast<size_t>(dq) + 1, kZero);
    const Rational& lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational c = rem[static_cast<size_t>(k + db)] / lead;
        if (c == 0) continue;
        quo[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i) rem[static_cast<size_t>(k + i)] -= c * b.coeff(i);
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

bool divides(const Poly& d, const Poly& a) {
    if (d.is_zero()) return a.is_zero();
    return divmod(a, d).remainder.is_zero();
}

Poly exact_div(const Poly& a, const Poly& d) {
    auto [q, r] = divmod(a, d);
    if (!r.is_zero()) throw Error(Errc::internal, "inexact polynomial division");
    return q;
}

Xgcd gcd_ext(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) throw Error(Errc::both_zero, "gcd(0, 0) is undefined");
    if (b.is_zero()) {
        Rational inv = kOne / a.leading();
        return {a.monic(), Poly(inv), Poly()};
    }
    if (a.is_zero()) {
        Rational inv = kOne / b.leading();
        return {b.monic(), Poly(), Poly(inv)};
    }
    // Rows (r, s, t) keep r = s*a + t*b; remainders are rescaled monic each
    // step to keep rational coefficients small.
    Poly r0 = a, s0 = Poly(1), t0 = Poly();
    Poly r1 = b, s1 = Poly(), t1 = Poly(1);
    while (!r1.is_zero()) {
        auto [q, rem] = divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        if (!rem.is_zero()) {
            Rational inv = kOne / rem.leading();
            rem = rem.scaled(inv);
            s2 = s2.scaled(inv);
            t2 = t2.scaled(inv);
        }
        r0 = r1; s0 = s1; t0 = t1;
        r1 = rem; s1 = s2; t1 = t2;
    }
    Poly g = r0, s = s0, t = t0;
    if (!g.is_monic()) {  // reached when b divides a before any rescaling
        Rational inv = kOne / g.leading();
        g = g.scaled(inv);
        s = s.scaled(inv);
        t = t.scaled(inv);
    }
    // Canonicalize s modulo b/g; t is then determined by the identity.
    Poly bg = exact_div(b, g);
    if (!bg.is_unit() && s.degree() >= bg.degree()) {
        s = divmod(s, bg).remainder;
        t = exact_div(g - s * a, b);
    }
    return {g, s, t};
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero() && b.is_zero()) return Poly();
    return gcd_ext(a, b).g;
}

Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    return exact_div(a * b, poly_gcd(a, b)).monic();
}

Poly binom_poly(const Poly& alpha, unsigned k) {
    Poly num(1);
    Rational fact(1);
    for (unsigned i = 0; i < k; ++i) {
        num = num * (alpha - Poly(static_cast<long>(i)));
        fact *= Rational(static_cast<long>(i) + 1);
    }
    return num.scaled(kOne / fact);
}

int poly_cmp(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int i = a.degree(); i >= 0; --i) {
        int c = rational_cmp(a.coeff(i), b.coeff(i));
        if (c != 0) return c;
    }
    return 0;
}

// ---------------------------------------------------------------------------
// text form

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeff(d);
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        bool unit_coeff = mag == 1 && d > 0;
        if (!unit_coeff) out += rational_to_string(mag);
        if (d > 0) {
            if (!unit_coeff) out += "*";
            out += "x";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out;
}

namespace {

struct PolyParser {
    std::string s;  // input with whitespace removed
    size_t pos = 0;

    explicit PolyParser(std::string_view text) {
        s.reserve(text.size());
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("bad polynomial '" + s + "' at offset " + std::to_string(pos) + ": " + why);
    }

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }

    std::string digits() {
        size_t start = pos;
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos;
        if (pos == start) fail("expected digits");
        return s.substr(start, pos - start);
    }

    Rational number() {
        std::string num = digits();
        if (!done() && peek() == '/') {
            ++pos;
            num += "/" + digits();
        }
        return parse_rational(num);
    }

    int exponent() {
        if (done() || peek() != '^') return 1;
        ++pos;
        std::string d = digits();
        if (d.size() > 4) fail("exponent too large");
        return std::stoi(d);
    }

    // term := number [('*')? x-part] | x-part
    Poly term() {
        Rational coeff(1);
        bool have_coeff = false;
        if (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            have_coeff = true;
            if (!done() && peek() == '*') ++pos;
        }
        if (!done() && peek() == 'x') {
            ++pos;
            return Poly::monomial(coeff, exponent());
        }
        if (!have_coeff) fail("expected a term");
        return Poly(coeff);
    }

    Poly parse() {
        if (done()) fail("empty input");
        Poly acc;
        bool first = true;
        while (!done()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            Poly t = term();
            acc = sign < 0 ? acc - t : acc + t;
            first = false;
        }
        return acc;
    }
};

}  // namespace

Poly Poly::parse(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace qxsep
