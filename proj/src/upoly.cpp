#include "trigal/upoly.hpp"

#include "trigal/error.hpp"
#include "trigal/random.hpp"

#include <algorithm>
#include <sstream>

namespace trigal {

namespace {

void require_same_field(const Poly& f, const Poly& g) {
    if (!(f.field() == g.field())) {
        throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) {
                n /= d;
            }
        }
    }
    if (n > 1) {
        out.push_back(n);
    }
    return out;
}

} // namespace

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) {
        c_.pop_back();
    }
}

Poly Poly::monomial(const Field& field, Elem c, std::size_t exponent) {
    std::vector<Elem> v(exponent + 1, 0);
    v[exponent] = c;
    return Poly(field, std::move(v));
}

Poly Poly::parse(const Field& field, std::string_view text) {
    std::vector<Elem> v;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        v.push_back(field.parse_element(text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return Poly(field, std::move(v));
}

Poly Poly::monic() const {
    if (is_zero()) {
        return *this;
    }
    const Elem inv = field_.inv(leading());
    return inv * *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) {
        return Poly(field_);
    }
    std::vector<Elem> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
        d[i - 1] = field_.mul(field_.from_int(static_cast<std::int64_t>(i % field_.characteristic())), c_[i]);
    }
    return Poly(field_, std::move(d));
}

Elem Poly::evaluate(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc = field_.add(field_.mul(acc, x), c_[i]);
    }
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) {
            continue;
        }
        if (!first) {
            os << " + ";
        }
        first = false;
        const std::string coeff = field_.format_element(c_[i]);
        const bool needs_paren = coeff.find('+') != std::string::npos;
        if (i == 0) {
            os << coeff;
            continue;
        }
        if (c_[i] != 1) {
            os << (needs_paren ? "(" + coeff + ")" : coeff) << '*';
        }
        os << 'x';
        if (i > 1) {
            os << '^' << i;
        }
    }
    return os.str();
}

Poly operator+(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    std::vector<Elem> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = F.add(f[i], g[i]);
    }
    return Poly(F, std::move(r));
}

Poly operator-(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    std::vector<Elem> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = F.sub(f[i], g[i]);
    }
    return Poly(F, std::move(r));
}

Poly operator*(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    if (f.is_zero() || g.is_zero()) {
        return Poly(F);
    }
    std::vector<Elem> r(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (f.c_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < g.c_.size(); ++j) {
            r[i + j] = F.add(r[i + j], F.mul(f.c_[i], g.c_[j]));
        }
    }
    return Poly(F, std::move(r));
}

Poly operator*(Elem c, const Poly& f) {
    std::vector<Elem> r(f.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        r[i] = f.field_.mul(c, f.c_[i]);
    }
    return Poly(f.field_, std::move(r));
}

bool operator==(const Poly& f, const Poly& g) { return f.field() == g.field() && f.c_ == g.c_; }

bool operator<(const Poly& f, const Poly& g) {
    if (f.degree() != g.degree()) {
        return f.degree() < g.degree();
    }
    return f.c_ < g.c_;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    if (g.is_zero()) {
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    }
    const Field& F = f.field();
    if (f.degree() < g.degree()) {
        return {Poly(F), f};
    }
    std::vector<Elem> rem = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    const Elem lead_inv = F.inv(gc.back());
    std::vector<Elem> quot(rem.size() - dg, 0);
    for (std::size_t i = rem.size(); i-- > dg;) {
        const Elem c = F.mul(rem[i], lead_inv);
        if (c == 0) {
            continue;
        }
        quot[i - dg] = c;
        const Elem nc = F.neg(c);
        for (std::size_t j = 0; j <= dg; ++j) {
            rem[i - dg + j] = F.add(rem[i - dg + j], F.mul(nc, gc[j]));
        }
    }
    rem.resize(dg);
    return {Poly(F, std::move(quot)), Poly(F, std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }
Poly operator/(const Poly& f, const Poly& g) { return divmod(f, g).first; }

Poly gcd(const Poly& f, const Poly& g) {
    require_same_field(f, g);
    Poly a = f;
    Poly b = g;
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus) {
    require_same_field(base, modulus);
    if (modulus.degree() < 1) {
        throw Error(ErrorCode::ConstantPolynomial, "powmod needs a nonconstant modulus");
    }
    const Field& F = base.field();
    Poly result = Poly::constant(F, 1) % modulus;
    Poly b = base % modulus;
    while (e) {
        if (e & 1) {
            result = (result * b) % modulus;
        }
        e >>= 1;
        if (e) {
            b = (b * b) % modulus;
        }
    }
    return result;
}

Poly iterated_power(Poly base, std::uint64_t q, std::uint64_t times, const Poly& modulus) {
    base = base % modulus;
    for (std::uint64_t i = 0; i < times; ++i) {
        base = powmod(base, q, modulus);
    }
    return base;
}

bool is_squarefree(const Poly& f) {
    if (f.is_zero()) {
        throw Error(ErrorCode::ZeroPolynomial, "squarefree test of zero");
    }
    if (f.degree() == 0) {
        return true;
    }
    const Poly d = f.derivative();
    if (d.is_zero()) {
        return false;
    }
    return gcd(f, d).degree() == 0;
}

bool is_irreducible(const Poly& f) {
    if (f.degree() < 1) {
        return false;
    }
    const Poly g = f.monic();
    const std::uint64_t q = f.field().size();
    const auto n = static_cast<std::uint64_t>(g.degree());
    const Poly x = Poly::x(f.field());
    if (!(iterated_power(x, q, n, g) == x % g)) {
        return false;
    }
    for (std::uint64_t l : prime_divisors(n)) {
        const Poly h = iterated_power(x, q, n / l, g);
        if (gcd(g, h - x).degree() != 0) {
            return false;
        }
    }
    return true;
}

Poly Factorization::expand(const Field& field) const {
    Poly acc = Poly::constant(field, unit);
    for (const auto& [poly, mult] : factors) {
        for (int i = 0; i < mult; ++i) {
            acc = acc * poly;
        }
    }
    return acc;
}

namespace {

struct SquarefreePart {
    Poly poly;
    int multiplicity;
};

Poly pth_root(const Poly& f) {
    const Field& F = f.field();
    const std::uint32_t p = F.characteristic();
    std::vector<Elem> r(f.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) {
        r[i / p] = F.pth_root(f.coeffs()[i]);
    }
    return Poly(F, std::move(r));
}

// Monic f; returns squarefree, pairwise coprime parts with multiplicities.
void squarefree_decomposition(const Poly& f, int scale, std::vector<SquarefreePart>& out) {
    if (f.degree() < 1) {
        return;
    }
    const Field& F = f.field();
    const int p = static_cast<int>(F.characteristic());
    const Poly d = f.derivative();
    if (d.is_zero()) {
        squarefree_decomposition(pth_root(f), scale * p, out);
        return;
    }
    Poly c = gcd(f, d);
    Poly w = f / c;
    int i = 1;
    while (w.degree() > 0) {
        const Poly y = gcd(w, c);
        const Poly part = w / y;
        if (part.degree() > 0) {
            out.push_back({part.monic(), i * scale});
        }
        w = y;
        c = c / y;
        ++i;
    }
    if (c.degree() > 0) {
        squarefree_decomposition(pth_root(c.monic()), scale * p, out);
    }
}

struct DegreePart {
    Poly poly; // product of irreducibles all of this degree
    int degree;
};

std::vector<DegreePart> distinct_degree(Poly f) {
    std::vector<DegreePart> out;
    const Field& F = f.field();
    const std::uint64_t q = F.size();
    const Poly x = Poly::x(F);
    Poly h = x % f;
    int i = 0;
    while (f.degree() >= 2 * (i + 1)) {
        ++i;
        h = powmod(h, q, f);
        const Poly g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.push_back({g, i});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) {
        out.push_back({f.monic(), f.degree()});
    }
    return out;
}

Poly random_poly(const Field& F, int below_degree, Rng& rng) {
    std::vector<Elem> c(static_cast<std::size_t>(below_degree));
    for (auto& e : c) {
        e = static_cast<Elem>(uniform_below(rng, F.size()));
    }
    return Poly(F, std::move(c));
}

// Splitting map whose kernel-ish image separates degree-d factors:
// odd q: a^((q^d-1)/2) - 1; char 2: the absolute trace to GF(2).
Poly splitting_map(const Poly& a, const Poly& f, int d) {
    const Field& F = f.field();
    const std::uint64_t q = F.size();
    if (F.characteristic() == 2) {
        const std::uint64_t steps = static_cast<std::uint64_t>(F.degree()) * static_cast<std::uint64_t>(d);
        Poly t = a % f;
        Poly acc = t;
        for (std::uint64_t i = 1; i < steps; ++i) {
            t = (t * t) % f;
            acc = acc + t;
        }
        return acc;
    }
    // (q^d - 1)/2 = ((q-1)/2) * (1 + q + ... + q^(d-1)).
    Poly t = a % f;
    Poly norm = t;
    for (int i = 1; i < d; ++i) {
        t = powmod(t, q, f);
        norm = (norm * t) % f;
    }
    return powmod(norm, (q - 1) / 2, f) - Poly::constant(F, 1);
}

void equal_degree(const Poly& f, int d, Rng& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& F = f.field();
    while (true) {
        const Poly a = random_poly(F, f.degree(), rng);
        if (a.degree() < 1) {
            continue;
        }
        const Poly g = gcd(f, splitting_map(a, f, d));
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.degree() < 1) {
        throw Error(ErrorCode::ConstantPolynomial, "cannot factor a constant polynomial");
    }
    Factorization result{f.leading(), {}};
    std::vector<SquarefreePart> parts;
    squarefree_decomposition(f.monic(), 1, parts);
    Rng rng(mix64(seed));
    for (const auto& part : parts) {
        for (const auto& dp : distinct_degree(part.poly)) {
            std::vector<Poly> irreducibles;
            equal_degree(dp.poly, dp.degree, rng, irreducibles);
            for (auto& g : irreducibles) {
                result.factors.push_back({std::move(g), part.multiplicity});
            }
        }
    }
    // Merge equal factors coming from different squarefree layers.
    std::sort(result.factors.begin(), result.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
    std::vector<Factor> merged;
    for (auto& fac : result.factors) {
        if (!merged.empty() && merged.back().poly == fac.poly) {
            merged.back().multiplicity += fac.multiplicity;
        } else {
            merged.push_back(std::move(fac));
        }
    }
    result.factors = std::move(merged);
    return result;
}

FactorPattern factor_pattern(const Poly& f, std::uint64_t seed) {
    const Factorization fac = factor(f, seed);
    FactorPattern pattern;
    for (const auto& [poly, mult] : fac.factors) {
        for (int i = 0; i < mult; ++i) {
            pattern.degrees.push_back(poly.degree());
        }
    }
    std::sort(pattern.degrees.begin(), pattern.degrees.end());
    return pattern;
}

FactorPattern squarefree_pattern(const Poly& f) {
    if (f.degree() < 1) {
        throw Error(ErrorCode::ConstantPolynomial, "cannot factor a constant polynomial");
    }
    FactorPattern pattern;
    for (const auto& dp : distinct_degree(f.monic())) {
        for (int i = 0; i < dp.poly.degree() / dp.degree; ++i) {
            pattern.degrees.push_back(dp.degree);
        }
    }
    std::sort(pattern.degrees.begin(), pattern.degrees.end());
    return pattern;
}

} // namespace trigal
