#include "trigal/gf.hpp"

#include "trigal/error.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace trigal {

namespace {

constexpr std::uint64_t kTableLimit = 1u << 20;
constexpr std::uint64_t kSizeLimit = 1ull << 31;

using Coeffs = std::vector<std::uint64_t>;

void trim(Coeffs& f) {
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t e = p - 2;
    a %= p;
    while (e) {
        if (e & 1) {
            result = result * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    return result;
}

// Minimal GF(p)[x] helpers for validating a modulus before the field exists.
Coeffs poly_mod(Coeffs a, const Coeffs& m, std::uint64_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    const std::uint64_t lead_inv = inv_mod(m.back(), p);
    while (a.size() > dm) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
        }
        trim(a);
    }
    return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& m, std::uint64_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Coeffs r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(r), m, p);
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Coeffs r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool modulus_irreducible(const Coeffs& f, std::uint64_t p) {
    const std::size_t k = f.size() - 1;
    if (k == 1) {
        return true;
    }
    // x^(p^i) mod f for i = 1..k/2; any gcd with x^(p^i) - x flags a factor.
    Coeffs h = {0, 1};
    for (std::size_t i = 1; i <= k / 2; ++i) {
        Coeffs base = h;
        Coeffs acc = {1};
        std::uint64_t e = p;
        while (e) {
            if (e & 1) {
                acc = poly_mulmod(acc, base, f, p);
            }
            base = poly_mulmod(base, base, f, p);
            e >>= 1;
        }
        h = acc;
        Coeffs diff = h;
        diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
        diff[1] = (diff[1] + p - 1) % p;
        trim(diff);
        if (diff.empty()) {
            return false;
        }
        if (poly_gcd(f, diff, p).size() > 1) {
            return false;
        }
    }
    return true;
}

const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>>& bundled_moduli() {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::uint32_t>> table = {
        {{2, 2}, {1, 1, 1}},       // c^2 = c + 1
        {{3, 2}, {2, 2, 1}},       // c^2 = c + 1 over GF(3)
        {{2, 3}, {1, 1, 0, 1}},
        {{2, 4}, {1, 1, 0, 0, 1}},
        {{5, 2}, {2, 1, 1}},
    };
    return table;
}

std::vector<std::uint32_t> parse_uint_list(std::string_view text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
            throw Error(ErrorCode::ParseError, "bad integer '" + std::string(item) + "'");
        }
        if (v < 0) {
            throw Error(ErrorCode::ParseError, "modulus coefficients must be non-negative");
        }
        out.push_back(static_cast<std::uint32_t>(v));
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return out;
}

std::uint32_t parse_u32(std::string_view text) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw Error(ErrorCode::ParseError, "bad integer '" + std::string(text) + "'");
    }
    return v;
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t k = 0;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint64_t> pow_p; // p^i, i < k
    bool tables = false;
    std::vector<Elem> exp; // length 2(q-1)
    std::vector<std::uint32_t> log;

    std::vector<std::uint32_t> unpack(Elem x) const {
        std::vector<std::uint32_t> c(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            c[i] = x % p;
            x /= p;
        }
        return c;
    }

    Elem pack(const std::vector<std::uint32_t>& c) const {
        std::uint64_t x = 0;
        for (std::uint32_t i = k; i-- > 0;) {
            x = x * p + c[i];
        }
        return static_cast<Elem>(x);
    }

    Elem add(Elem x, Elem y) const {
        if (k == 1) {
            const std::uint64_t s = std::uint64_t{x} + y;
            return static_cast<Elem>(s >= p ? s - p : s);
        }
        if (p == 2) {
            return x ^ y;
        }
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint32_t d = x % p + y % p;
            if (d >= p) {
                d -= p;
            }
            r += d * pow_p[i];
            x /= p;
            y /= p;
        }
        return static_cast<Elem>(r);
    }

    Elem neg(Elem x) const {
        if (p == 2 || x == 0) {
            return x;
        }
        if (k == 1) {
            return p - x;
        }
        std::uint64_t r = 0;
        for (std::uint32_t i = 0; i < k; ++i) {
            const std::uint32_t d = x % p;
            r += (d == 0 ? 0 : p - d) * pow_p[i];
            x /= p;
        }
        return static_cast<Elem>(r);
    }

    Elem slow_mul(Elem x, Elem y) const {
        if (k == 1) {
            return static_cast<Elem>(std::uint64_t{x} * y % p);
        }
        const auto a = unpack(x);
        const auto b = unpack(y);
        std::vector<std::uint64_t> r(2 * k - 1, 0);
        for (std::uint32_t i = 0; i < k; ++i) {
            for (std::uint32_t j = 0; j < k; ++j) {
                r[i + j] = (r[i + j] + std::uint64_t{a[i]} * b[j]) % p;
            }
        }
        for (std::size_t d = r.size(); d-- > k;) {
            const std::uint64_t c = r[d];
            if (c == 0) {
                continue;
            }
            for (std::uint32_t i = 0; i < k; ++i) {
                r[d - k + i] = (r[d - k + i] + (p - c) * modulus[i]) % p;
            }
            r[d] = 0;
        }
        std::vector<std::uint32_t> out(k);
        for (std::uint32_t i = 0; i < k; ++i) {
            out[i] = static_cast<std::uint32_t>(r[i]);
        }
        return pack(out);
    }

    Elem slow_pow(Elem x, std::uint64_t e) const {
        Elem result = 1;
        while (e) {
            if (e & 1) {
                result = slow_mul(result, x);
            }
            x = slow_mul(x, x);
            e >>= 1;
        }
        return result;
    }

    Elem mul(Elem x, Elem y) const {
        if (x == 0 || y == 0) {
            return 0;
        }
        if (tables) {
            return exp[log[x] + log[y]];
        }
        return slow_mul(x, y);
    }

    void build_tables() {
        // Smallest primitive element by packed index.
        std::vector<std::uint64_t> primes;
        std::uint64_t m = q - 1;
        for (std::uint64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) {
                    m /= d;
                }
            }
        }
        if (m > 1) {
            primes.push_back(m);
        }
        Elem gen = 0;
        for (Elem g = 1; g < q; ++g) {
            const bool primitive = std::all_of(primes.begin(), primes.end(), [&](std::uint64_t l) {
                return slow_pow(g, (q - 1) / l) != 1;
            });
            if (primitive) {
                gen = g;
                break;
            }
        }
        exp.assign(2 * (q - 1), 0);
        log.assign(q, 0);
        Elem x = 1;
        for (std::uint64_t i = 0; i < q - 1; ++i) {
            exp[i] = x;
            exp[i + q - 1] = x;
            log[x] = static_cast<std::uint32_t>(i);
            x = slow_mul(x, gen);
        }
        tables = true;
    }
};

Field Field::make(std::uint32_t p, std::uint32_t k, std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
    if (k < 1) {
        throw Error(ErrorCode::DegreeMismatch, "extension degree must be at least 1");
    }
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        q *= p;
        if (q > kSizeLimit) {
            throw Error(ErrorCode::DegreeMismatch, "field too large");
        }
    }
    std::vector<std::uint32_t> mod = modulus ? *modulus : default_modulus(p, k);
    for (auto& c : mod) {
        c %= p;
    }
    while (!mod.empty() && mod.back() == 0) {
        mod.pop_back();
    }
    if (mod.size() != std::size_t{k} + 1 || mod.back() != 1) {
        throw Error(ErrorCode::DegreeMismatch, "modulus must be monic of degree " + std::to_string(k));
    }
    Coeffs wide(mod.begin(), mod.end());
    if (!modulus_irreducible(wide, p)) {
        throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = k;
    impl->q = q;
    impl->modulus = std::move(mod);
    impl->pow_p.resize(k);
    std::uint64_t pw = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        impl->pow_p[i] = pw;
        pw *= p;
    }
    if (q <= kTableLimit && q > 2) {
        impl->build_tables();
    }
    return Field(std::move(impl));
}

std::vector<std::uint32_t> Field::default_modulus(std::uint32_t p, std::uint32_t k) {
    if (k == 1) {
        return {0, 1};
    }
    const auto& table = bundled_moduli();
    if (auto it = table.find({p, k}); it != table.end()) {
        return it->second;
    }
    // First irreducible monic in increasing packed order of the tail.
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < k; ++i) {
        count *= p;
    }
    for (std::uint64_t idx = 1; idx < count; ++idx) {
        Coeffs f(k + 1, 0);
        std::uint64_t t = idx;
        for (std::uint32_t i = 0; i < k; ++i) {
            f[i] = t % p;
            t /= p;
        }
        f[k] = 1;
        if (f[0] == 0) {
            continue;
        }
        if (modulus_irreducible(f, p)) {
            return std::vector<std::uint32_t>(f.begin(), f.end());
        }
    }
    throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

Field Field::parse(std::string_view spec) {
    const std::size_t colon = spec.find(':');
    const std::string_view head = spec.substr(0, colon);
    const std::size_t caret = head.find('^');
    const std::uint32_t p = parse_u32(head.substr(0, caret));
    const std::uint32_t k = caret == std::string_view::npos ? 1 : parse_u32(head.substr(caret + 1));
    if (colon == std::string_view::npos) {
        return make(p, k);
    }
    return make(p, k, parse_uint_list(spec.substr(colon + 1)));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->k; }
std::uint64_t Field::size() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }

std::string Field::to_string() const {
    std::ostringstream os;
    os << impl_->p;
    if (impl_->k > 1) {
        os << '^' << impl_->k << ':';
        for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
            os << (i ? "," : "") << impl_->modulus[i];
        }
    }
    return os.str();
}

Elem Field::generator() const {
    if (impl_->k == 1) {
        return neg(impl_->modulus[0]);
    }
    return impl_->p;
}

Elem Field::from_int(std::int64_t v) const {
    const std::int64_t p = impl_->p;
    return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::from_coords(std::span<const std::uint32_t> coords) const {
    std::vector<std::uint32_t> c(impl_->k, 0);
    for (std::size_t i = 0; i < coords.size() && i < c.size(); ++i) {
        c[i] = coords[i] % impl_->p;
    }
    return impl_->pack(c);
}

std::vector<std::uint32_t> Field::coords(Elem x) const { return impl_->unpack(x); }

Elem Field::add(Elem x, Elem y) const { return impl_->add(x, y); }
Elem Field::sub(Elem x, Elem y) const { return impl_->add(x, impl_->neg(y)); }
Elem Field::neg(Elem x) const { return impl_->neg(x); }
Elem Field::mul(Elem x, Elem y) const { return impl_->mul(x, y); }

Elem Field::inv(Elem x) const {
    if (x == 0) {
        throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    }
    if (impl_->tables) {
        const std::uint32_t l = impl_->log[x];
        return impl_->exp[l == 0 ? 0 : impl_->q - 1 - l];
    }
    return impl_->slow_pow(x, impl_->q - 2);
}

Elem Field::div(Elem x, Elem y) const { return mul(x, inv(y)); }

Elem Field::pow(Elem x, std::uint64_t e) const {
    if (e == 0) {
        return 1;
    }
    if (x == 0) {
        return 0;
    }
    if (impl_->tables) {
        const std::uint64_t order = impl_->q - 1;
        return impl_->exp[(std::uint64_t{impl_->log[x]} * (e % order)) % order];
    }
    return impl_->slow_pow(x, e);
}

Elem Field::frobenius(Elem x) const { return pow(x, impl_->p); }

Elem Field::pth_root(Elem x) const {
    Elem r = x;
    for (std::uint32_t i = 1; i < impl_->k; ++i) {
        r = frobenius(r);
    }
    return r;
}

std::vector<Elem> Field::elements() const {
    std::vector<Elem> out(impl_->q);
    for (std::uint64_t i = 0; i < impl_->q; ++i) {
        out[i] = static_cast<Elem>(i);
    }
    return out;
}

Elem Field::parse_element(std::string_view text) const {
    std::string s;
    for (char ch : text) {
        if (ch != ' ') {
            s.push_back(ch);
        }
    }
    if (s.empty()) {
        throw Error(ErrorCode::ParseError, "empty field element");
    }
    Elem acc = 0;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) {
            throw Error(ErrorCode::ParseError, "malformed element '" + std::string(text) + "'");
        }
        const std::size_t var = term.find_first_of("cw");
        std::int64_t coeff = 1;
        std::uint64_t power = 0;
        if (var == std::string::npos) {
            coeff = static_cast<std::int64_t>(parse_u32(term));
        } else {
            std::string_view num = std::string_view(term).substr(0, var);
            if (!num.empty() && num.back() == '*') {
                num.remove_suffix(1);
            }
            if (!num.empty()) {
                coeff = static_cast<std::int64_t>(parse_u32(num));
            }
            power = 1;
            const std::string_view rest = std::string_view(term).substr(var + 1);
            if (!rest.empty()) {
                if (rest.front() != '^') {
                    throw Error(ErrorCode::ParseError, "malformed element '" + std::string(text) + "'");
                }
                power = parse_u32(rest.substr(1));
            }
        }
        Elem t = mul(from_int(coeff), pow(generator(), power));
        acc = negative ? sub(acc, t) : add(acc, t);
        pos = end;
    }
    return acc;
}

std::string Field::format_element(Elem x) const {
    if (impl_->k == 1) {
        return std::to_string(x);
    }
    const auto c = coords(x);
    std::string out;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (i == 0) {
            out += std::to_string(c[i]);
            continue;
        }
        if (c[i] != 1) {
            out += std::to_string(c[i]);
        }
        out += "c";
        if (i > 1) {
            out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

bool operator==(const Field& a, const Field& b) {
    if (a.impl_ == b.impl_) {
        return true;
    }
    return a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k && a.impl_->modulus == b.impl_->modulus;
}

FieldElement::FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {
    if (value_ >= field_.size()) {
        throw Error(ErrorCode::ParseError, "element index out of range");
    }
}

namespace {
const Field& common_field(const FieldElement& x, const FieldElement& y) {
    if (!(x.field() == y.field())) {
        throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
    }
    return x.field();
}
} // namespace

FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_.pow(value_, e)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_.frobenius(value_)}; }

FieldElement operator+(const FieldElement& x, const FieldElement& y) {
    const Field& f = common_field(x, y);
    return {f, f.add(x.value(), y.value())};
}

FieldElement operator-(const FieldElement& x, const FieldElement& y) {
    const Field& f = common_field(x, y);
    return {f, f.sub(x.value(), y.value())};
}

FieldElement operator*(const FieldElement& x, const FieldElement& y) {
    const Field& f = common_field(x, y);
    return {f, f.mul(x.value(), y.value())};
}

FieldElement operator/(const FieldElement& x, const FieldElement& y) {
    const Field& f = common_field(x, y);
    return {f, f.div(x.value(), y.value())};
}

FieldElement operator-(const FieldElement& x) { return {x.field(), x.field().neg(x.value())}; }

bool operator==(const FieldElement& x, const FieldElement& y) {
    return x.field() == y.field() && x.value() == y.value();
}

} // namespace trigal
