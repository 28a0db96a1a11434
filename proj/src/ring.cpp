#include "egr/ring.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace egr {

namespace {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// ---- polynomial helpers over Z/p, little-endian coefficient vectors ----

void poly_trim(std::vector<long>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::vector<long> poly_mul_mod(const std::vector<long>& a, const std::vector<long>& b, long p) {
    if (a.empty() || b.empty()) return {};
    std::vector<long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    poly_trim(r);
    return r;
}

// remainder of a modulo monic f, coefficients mod p
std::vector<long> poly_rem_monic(std::vector<long> a, const std::vector<long>& f, long p) {
    for (auto& c : a) c = ((c % p) + p) % p;
    poly_trim(a);
    const std::size_t df = f.size() - 1;  // f monic of degree df >= 1
    while (a.size() > df) {
        long lead = a.back();
        std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i < f.size(); ++i) {
            long& c = a[shift + i];
            c = ((c - lead * f[i]) % p + p) % p;
        }
        poly_trim(a);
    }
    return a;
}

bool poly_divides(const std::vector<long>& g, const std::vector<long>& f, long p) {
    return poly_rem_monic(f, g, p).empty();
}

} // namespace

std::pair<long, int> factor_prime_power(long q) {
    if (q < 2) throw InvalidParameter("GF order must be >= 2, got " + std::to_string(q));
    for (long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            long m = q;
            int k = 0;
            while (m % p == 0) { m /= p; ++k; }
            if (m != 1)
                throw InvalidParameter(std::to_string(q) + " is not a prime power");
            return {p, k};
        }
    }
    return {q, 1};  // q itself prime
}

std::vector<long> first_irreducible_poly(long p, int k) {
    if (k == 1) return {0, 1};  // x, any monic degree-1 works; pick the least
    // enumerate non-leading coefficients (a_0,...,a_{k-1}) in lexicographic
    // order with a_0 most significant so "first" is well defined
    std::vector<long> f(std::size_t(k) + 1, 0);
    f[std::size_t(k)] = 1;
    long total = 1;
    for (int i = 0; i < k; ++i) total *= p;
    for (long n = 0; n < total; ++n) {
        long m = n;
        for (int i = k - 1; i >= 0; --i) { f[std::size_t(i)] = m % p; m /= p; }
        // irreducible iff no monic divisor of degree 1..k/2
        bool irred = true;
        for (int dg = 1; irred && dg <= k / 2; ++dg) {
            std::vector<long> g(std::size_t(dg) + 1, 0);
            g[std::size_t(dg)] = 1;
            long gt = 1;
            for (int i = 0; i < dg; ++i) gt *= p;
            for (long gn = 0; gn < gt; ++gn) {
                long gm = gn;
                for (int i = 0; i < dg; ++i) { g[std::size_t(i)] = gm % p; gm /= p; }
                if (poly_divides(g, f, p)) { irred = false; break; }
            }
        }
        if (irred) return f;
    }
    throw InvalidParameter("no irreducible polynomial found (unreachable for prime p)");
}

// ---- RingSpec ----

namespace {

std::string poly_text(const std::vector<long>& poly) {
    std::ostringstream os;
    bool first = true;
    for (int i = int(poly.size()) - 1; i >= 0; --i) {
        long c = poly[std::size_t(i)];
        if (c == 0) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) { os << c; continue; }
        if (c != 1) os << c;
        os << "x";
        if (i > 1) os << "^" << i;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace

std::string RingSpec::text() const {
    switch (kind) {
        case Kind::ZMod: return "Z/" + std::to_string(modulus);
        case Kind::GaloisField: return "GF(" + std::to_string(modulus) + ")";
        case Kind::QuotientPoly:
            return "Z/" + std::to_string(modulus) + "[x]/(" + poly_text(poly) + ")";
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) s += " x ";
                s += factors[i].text();
            }
            return s;
        }
    }
    return "";
}

void RingSpec::validate() const {
    switch (kind) {
        case Kind::ZMod:
            if (modulus < 2) throw InvalidParameter("Z/n requires n >= 2, got n = " + std::to_string(modulus));
            break;
        case Kind::GaloisField:
            factor_prime_power(modulus);  // throws unless p^k
            break;
        case Kind::QuotientPoly: {
            if (modulus < 2) throw InvalidParameter("quotient base Z/n requires n >= 2");
            if (poly.size() < 2) throw InvalidParameter("quotient modulus must have degree >= 1");
            long lead = ((poly.back() % modulus) + modulus) % modulus;
            if (lead != 1) throw InvalidParameter("quotient modulus must be monic");
            for (long c : poly)
                if (c < 0) throw InvalidParameter("quotient modulus coefficients must be nonnegative");
            break;
        }
        case Kind::Product:
            if (factors.size() < 2) throw InvalidParameter("product requires >= 2 factors");
            for (const auto& f : factors) {
                if (f.kind == Kind::Product) throw InvalidParameter("nested products must be flattened");
                f.validate();
            }
            break;
    }
}

// ---- parser ----

namespace {

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    RingSpec parse() {
        RingSpec first = parse_atom();
        std::vector<RingSpec> factors;
        factors.push_back(std::move(first));
        while (true) {
            std::size_t save = pos_;
            std::size_t ws = skip_spaces();
            if (pos_ < s_.size() && s_[pos_] == 'x' &&
                ws > 0 && pos_ + 1 < s_.size() && s_[pos_ + 1] == ' ') {
                ++pos_;
                skip_spaces();
                factors.push_back(parse_atom());
            } else {
                pos_ = save;
                break;
            }
        }
        skip_spaces();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        if (factors.size() == 1) return std::move(factors[0]);
        RingSpec prod;
        prod.kind = RingSpec::Kind::Product;
        prod.factors = std::move(factors);
        return prod;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    std::size_t skip_spaces() {
        std::size_t n = 0;
        while (pos_ < s_.size() && s_[pos_] == ' ') { ++pos_; ++n; }
        return n;
    }

    bool consume(const char* lit) {
        std::size_t n = std::string(lit).size();
        if (s_.compare(pos_, n, lit) == 0) { pos_ += n; return true; }
        return false;
    }

    long parse_nat() {
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected a number");
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000000) fail("number too large");
            ++pos_;
        }
        return v;
    }

    RingSpec parse_atom() {
        skip_spaces();
        if (consume("GF(")) {
            RingSpec r;
            r.kind = RingSpec::Kind::GaloisField;
            r.modulus = parse_nat();
            if (!consume(")")) fail("expected ')'");
            r.validate();
            return r;
        }
        if (consume("Z/")) {
            long n = parse_nat();
            if (consume("[x]/(")) {
                RingSpec r;
                r.kind = RingSpec::Kind::QuotientPoly;
                r.modulus = n;
                r.poly = parse_poly();
                if (!consume(")")) fail("expected ')'");
                r.validate();
                return r;
            }
            RingSpec r;
            r.kind = RingSpec::Kind::ZMod;
            r.modulus = n;
            r.validate();
            return r;
        }
        fail("expected 'Z/n', 'GF(q)' or 'Z/n[x]/(...)'");
    }

    // poly := term ( "+" term )* ; term := nat | nat? "x" ( "^" nat )?
    std::vector<long> parse_poly() {
        std::vector<long> coeffs;
        while (true) {
            skip_spaces();
            long c = 1;
            bool saw_coef = false;
            if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                c = parse_nat();
                saw_coef = true;
            }
            long deg = 0;
            if (pos_ < s_.size() && s_[pos_] == 'x') {
                ++pos_;
                deg = 1;
                if (consume("^")) deg = parse_nat();
            } else if (!saw_coef) {
                fail("expected a polynomial term");
            }
            if (deg > 64) fail("polynomial degree too large");
            if (coeffs.size() < std::size_t(deg) + 1) coeffs.resize(std::size_t(deg) + 1, 0);
            coeffs[std::size_t(deg)] += c;
            skip_spaces();
            if (!consume("+")) break;
        }
        return coeffs;
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

} // namespace

RingSpec parse_ring_spec(const std::string& text) {
    return Parser(text).parse();
}

// ---- FiniteRing ----

int FiniteRing::add(int a, int b) const {
    int r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        int d = radices_[i];
        int ca = (a / strides_[i]) % d;
        int cb = (b / strides_[i]) % d;
        r += ((ca + cb) % d) * strides_[i];
    }
    return r;
}

int FiniteRing::neg(int a) const {
    int r = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i) {
        int d = radices_[i];
        int ca = (a / strides_[i]) % d;
        r += ((d - ca) % d) * strides_[i];
    }
    return r;
}

std::vector<int> FiniteRing::coords(int index) const {
    std::vector<int> c(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i)
        c[i] = (index / strides_[i]) % radices_[i];
    return c;
}

int FiniteRing::index_of(const std::vector<int>& c) const {
    int idx = 0;
    for (std::size_t i = 0; i < radices_.size(); ++i)
        idx += (c[i] % radices_[i]) * strides_[i];
    return idx;
}

bool FiniteRing::is_unit(int a) const {
    for (int b = 0; b < order_; ++b)
        if (mul(a, b) == one_) return true;
    return false;
}

int FiniteRing::characteristic() const {
    int a = one_, c = 1;
    while (a != 0) { a = add(a, one_); ++c; }
    return c;
}

int FiniteRing::pow(int a, long k) const {
    int r = one_;
    int base = a;
    while (k > 0) {
        if (k & 1) r = mul(r, base);
        base = mul(base, base);
        k >>= 1;
    }
    return r;
}

bool FiniteRing::is_nilpotent_element(int a) const {
    // nilpotency index is at most |R|, so squaring past it suffices
    int t = a;
    for (int steps = 1; steps < 2 * order_; steps *= 2) {
        if (t == 0) return true;
        t = mul(t, t);
    }
    return t == 0;
}

namespace {

constexpr int kMulTableCap = 4096;

long spec_order(const RingSpec& spec, long cap) {
    switch (spec.kind) {
        case RingSpec::Kind::ZMod: return spec.modulus;
        case RingSpec::Kind::GaloisField: return spec.modulus;
        case RingSpec::Kind::QuotientPoly: {
            long o = 1;
            for (std::size_t i = 0; i + 1 < spec.poly.size(); ++i) {
                o *= spec.modulus;
                if (o > cap) return o;
            }
            return o;
        }
        case RingSpec::Kind::Product: {
            long o = 1;
            for (const auto& f : spec.factors) {
                o *= spec_order(f, cap);
                if (o > cap) return o;
            }
            return o;
        }
    }
    return 1;
}

} // namespace

FiniteRing build_ring(const RingSpec& spec, long order_cap) {
    spec.validate();
    long ord = spec_order(spec, order_cap);
    if (ord > order_cap)
        throw OrderCapExceeded("ring order " + std::to_string(ord) + " exceeds cap " +
                               std::to_string(order_cap) + " for " + spec.text());

    FiniteRing r;
    r.spec_ = spec;
    r.order_ = int(ord);

    switch (spec.kind) {
        case RingSpec::Kind::ZMod: {
            long n = spec.modulus;
            r.radices_ = {int(n)};
            r.one_ = 1;
            r.mul_fn_ = [n](int a, int b) { return int((long(a) * b) % n); };
            break;
        }
        case RingSpec::Kind::GaloisField:
        case RingSpec::Kind::QuotientPoly: {
            long base;
            std::vector<long> modpoly;
            if (spec.kind == RingSpec::Kind::GaloisField) {
                auto [p, k] = factor_prime_power(spec.modulus);
                base = p;
                modpoly = first_irreducible_poly(p, k);
            } else {
                base = spec.modulus;
                modpoly = spec.poly;
                for (auto& c : modpoly) c = ((c % base) + base) % base;
            }
            int deg = int(modpoly.size()) - 1;
            r.radices_.assign(std::size_t(deg), int(base));
            r.one_ = 1;
            r.mul_fn_ = [base, deg, modpoly](int a, int b) {
                std::vector<long> pa(static_cast<std::size_t>(deg));
                std::vector<long> pb(static_cast<std::size_t>(deg));
                long ta = a, tb = b;
                for (int i = 0; i < deg; ++i) { pa[std::size_t(i)] = ta % base; ta /= base; }
                for (int i = 0; i < deg; ++i) { pb[std::size_t(i)] = tb % base; tb /= base; }
                auto prod = poly_mul_mod(pa, pb, base);
                auto rem = poly_rem_monic(prod, modpoly, base);
                long idx = 0, stride = 1;
                for (int i = 0; i < deg; ++i) {
                    if (std::size_t(i) < rem.size()) idx += rem[std::size_t(i)] * stride;
                    stride *= base;
                }
                return int(idx);
            };
            break;
        }
        case RingSpec::Kind::Product: {
            auto children = std::make_shared<std::vector<FiniteRing>>();
            std::vector<int> orders;
            for (const auto& f : spec.factors) {
                children->push_back(build_ring(f, order_cap));
                orders.push_back(children->back().order());
                for (int d : children->back().radices()) r.radices_.push_back(d);
            }
            // one = (1, 1, ..., 1)
            {
                int idx = 0, stride = 1;
                for (std::size_t i = 0; i < children->size(); ++i) {
                    idx += (*children)[i].one() * stride;
                    stride *= orders[i];
                }
                r.one_ = idx;
            }
            r.mul_fn_ = [children, orders](int a, int b) {
                int idx = 0, stride = 1;
                for (std::size_t i = 0; i < children->size(); ++i) {
                    int fa = a % orders[i], fb = b % orders[i];
                    a /= orders[i];
                    b /= orders[i];
                    idx += (*children)[i].mul(fa, fb) * stride;
                    stride *= orders[i];
                }
                return idx;
            };
            break;
        }
    }

    r.strides_.resize(r.radices_.size());
    int stride = 1;
    for (std::size_t i = 0; i < r.radices_.size(); ++i) {
        r.strides_[i] = stride;
        stride *= r.radices_[i];
    }

    if (r.order_ <= kMulTableCap) {
        r.mul_table_.resize(std::size_t(r.order_) * r.order_);
        for (int a = 0; a < r.order_; ++a)
            for (int b = 0; b <= a; ++b) {
                int v = r.mul_fn_(a, b);
                r.mul_table_[std::size_t(a) * r.order_ + b] = v;
                r.mul_table_[std::size_t(b) * r.order_ + a] = v;
            }
    }
    return r;
}

} // namespace egr
