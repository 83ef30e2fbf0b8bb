#include "trigal/identities.hpp"

#include "trigal/error.hpp"
#include "trigal/gf.hpp"
#include "trigal/mvpoly.hpp"
#include "trigal/random.hpp"
#include "trigal/upoly.hpp"

#include <algorithm>
#include <map>
#include <memory>

namespace trigal {

namespace {

IdentityReport verdict(std::string name, const MPoly& residual) {
    IdentityReport r;
    r.name = std::move(name);
    r.holds = residual.is_zero();
    if (!r.holds) {
        r.witness = residual.to_string();
    }
    return r;
}

// Normal form of f, where powers of `var` are reduced by square-and-multiply
// rather than by expanding the full power first.
MPoly reduce_via_powers(const MPoly& f, const TriangularRing& ring, std::string_view var) {
    const auto& ctx = f.context();
    const std::size_t v = ctx->index_of(var);
    const MPoly x = MPoly::variable(ctx, var);
    std::map<std::int64_t, MPoly> powers;
    MPoly acc(ctx);
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        auto it = powers.find(e[v]);
        if (it == powers.end()) {
            it = powers.emplace(e[v], ring.pow(x, static_cast<std::uint64_t>(e[v]))).first;
        }
        acc = acc + MPoly::term(ctx, c, rest) * it->second;
    }
    return ring.reduce(acc);
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
    if (v == 0) {
        return false;
    }
    while (v % p == 0) {
        v /= p;
    }
    return v == 1;
}

} // namespace

IdentityReport check_psl25(CRelation relation, bool zero_alpha) {
    auto ctx = std::make_shared<const MContext>(2, std::vector<std::string>{"a", "b", "alpha", "c", "x"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly al = zero_alpha ? MPoly(ctx) : MPoly::variable(ctx, "alpha");
    const MPoly alpha = MPoly::variable(ctx, "alpha");
    const MPoly c = MPoly::variable(ctx, "c");
    const MPoly x = MPoly::variable(ctx, "x");
    const MPoly one = MPoly::constant(ctx, 1);

    const MPoly c_rel = relation == CRelation::Stated ? c.pow(10) + a * c.pow(5) + a.pow(2) + b
                                                      : c.pow(10) + a * c.pow(5) + b * c.pow(4) + a.pow(2);
    const TriangularRing ring(ctx, {{"alpha", alpha.pow(2) + alpha + one}, {"c", c_rel}});

    const MPoly common = c.pow(2) * x.pow(3) + c.pow(3) * x.pow(2);
    const MPoly f1 = common + c.pow(4) * al * x + a + al * c.pow(5);
    const MPoly f2 = common + c.pow(4) * (al + one) * x + a + (al + one) * c.pow(5);
    const MPoly rhs = c.pow(4) * (x.pow(6) + a * x + b);

    auto r = verdict("psl25", ring.reduce(f1 * f2 - rhs));
    r.notes.push_back(relation == CRelation::Stated ? "relation c^10 + a c^5 + a^2 + b = 0"
                                                    : "relation c^10 + a c^5 + b c^4 + a^2 = 0");
    if (zero_alpha) {
        r.notes.push_back("control: alpha replaced by 0 in both cubics");
    }
    return r;
}

IdentityReport check_m24(bool perturb) {
    auto ctx = std::make_shared<const MContext>(2, std::vector<std::string>{"a", "b", "x"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly x = MPoly::variable(ctx, "x");
    const TriangularRing ring(ctx, {{"x", x.pow(24) + a * x + b}});

    const std::vector<MPoly> chain{
        x.pow(32) + a * x.pow(9) + b * x.pow(8),
        x.pow(256) + a.pow(8) * x.pow(72) + b.pow(8) * x.pow(64),
        x.pow(256) + b.pow(8) * x.pow(64) + a.pow(11) * x.pow(3) + a.pow(10) * b * x.pow(2) + a.pow(9) * b.pow(2) * x +
            a.pow(8) * b.pow(3),
        x.pow(2048) + b.pow(64) * x.pow(512) + a.pow(88) * x.pow(24) + a.pow(80) * b.pow(8) * x.pow(16) +
            a.pow(72) * b.pow(16) * x.pow(8) + a.pow(64) * b.pow(24),
        x.pow(2048) + b.pow(64) * x.pow(512) + a.pow(80) * b.pow(8) * x.pow(16) + a.pow(72) * b.pow(16) * x.pow(8) +
            (perturb ? a.pow(88) : a.pow(89)) * x + a.pow(88) * b + a.pow(64) * b.pow(24),
    };

    IdentityReport r;
    r.name = "m24";
    r.holds = true;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        const MPoly res = reduce_via_powers(chain[i], ring, "x");
        const bool zero = res.is_zero();
        r.notes.push_back("member " + std::to_string(i + 1) + (zero ? " reduces to 0" : " does not reduce to 0"));
        if (!zero && r.holds) {
            r.holds = false;
            r.witness = res.to_string();
        }
    }
    // Additivity: every non-constant term has a power-of-two x-exponent.
    std::vector<std::int64_t> exps;
    for (const auto& [e, c] : chain.back().terms()) {
        if (e[2] > 0) {
            exps.push_back(e[2]);
        }
    }
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    bool additive = true;
    std::string list;
    for (auto e : exps) {
        additive = additive && is_power_of(static_cast<std::uint64_t>(e), 2);
        list += (list.empty() ? "" : ",") + std::to_string(e);
    }
    r.notes.push_back("last member x-exponents {" + list + "}" + (additive ? " all powers of 2" : " not all powers of 2"));
    if (!additive && r.holds) {
        r.holds = false;
        r.witness = "non-additive exponent set {" + list + "}";
    }
    if (perturb) {
        r.notes.push_back("control: a^89 replaced by a^88 in the last member");
    }
    return r;
}

IdentityReport check_m23_substitution(bool perturb) {
    auto ctx = std::make_shared<const MContext>(2, std::vector<std::string>{"a", "b", "alpha", "y"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly alpha = MPoly::variable(ctx, "alpha");
    const MPoly y = MPoly::variable(ctx, "y");
    const TriangularRing ring(ctx, {{"alpha", alpha.pow(23) + b}});

    const MPoly ay = alpha * y;
    const MPoly lhs = ay.pow(23) + a * ay.pow(perturb ? 2 : 3) + b;
    const MPoly rhs = b * y.pow(23) + a * alpha.pow(3) * y.pow(3) + b;
    auto r = verdict("m23", ring.reduce(lhs - rhs));
    r.notes.push_back("substitution x = alpha y has degree 23 in y; a printed y^24 cannot arise from it");
    if (perturb) {
        r.notes.push_back("control: exponent 3 replaced by 2 on the left");
    }
    return r;
}

IdentityReport check_pgl(std::uint32_t p, std::uint32_t k, std::uint32_t r, std::uint32_t s) {
    if (!is_prime(p) || k < 1 || s < 1 || s >= r) {
        throw Error(ErrorCode::BadParameters, "check_pgl needs p prime, k >= 1 and 1 <= s < r");
    }
    const std::uint64_t l = ipow(p, k);
    const std::uint64_t lr = ipow(l, r);
    const std::uint64_t ls = ipow(l, s);
    const std::uint64_t n = (lr - 1) / (l - 1);
    const std::uint64_t m = (ls - 1) / (l - 1);

    IdentityReport rep;
    rep.name = "pgl(" + std::to_string(p) + "," + std::to_string(k) + "," + std::to_string(r) + "," +
               std::to_string(s) + ")";
    rep.notes.push_back("l=" + std::to_string(l) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
    rep.holds = true;
    auto fail = [&](std::string w) {
        if (rep.holds) {
            rep.holds = false;
            rep.witness = std::move(w);
        }
    };

    if (n * (l - 1) != lr - 1 || m * (l - 1) != ls - 1) {
        fail("exponent identities fail");
    }
    rep.notes.push_back("exponent identities n(l-1) = l^r - 1, m(l-1) = l^s - 1 checked");

    auto ctx = std::make_shared<const MContext>(p, std::vector<std::string>{"a", "b", "x", "y", "X", "Y"});
    const MPoly a = MPoly::variable(ctx, "a");
    const MPoly b = MPoly::variable(ctx, "b");
    const MPoly x = MPoly::variable(ctx, "x");
    const MPoly y = MPoly::variable(ctx, "y");
    const MPoly trinomial = y.pow(n) + a * y.pow(m) + b;
    const MPoly linearized = x * substitute(trinomial, "y", x.pow(l - 1));
    const MPoly additive = x.pow(lr) + a * x.pow(ls) + b * x;
    const MPoly diff = linearized - additive;
    if (!diff.is_zero()) {
        fail(diff.to_string());
    }
    rep.notes.push_back("x * (y^n + a y^m + b) at y = x^(l-1) equals x^(l^r) + a x^(l^s) + b x");

    const MPoly X = MPoly::variable(ctx, "X");
    const MPoly Y = MPoly::variable(ctx, "Y");
    auto f_at = [&](const MPoly& t) { return substitute(additive, "x", t); };
    const MPoly add_res = f_at(X + Y) - f_at(X) - f_at(Y);
    if (!add_res.is_zero()) {
        fail(add_res.to_string());
    }
    rep.notes.push_back("f(X+Y) = f(X) + f(Y)");
    return rep;
}

// ---------------------------------------------------------------------------
// Numeric oracles: plain field and univariate arithmetic, no MPoly.

NumericReport numeric_psl25(CRelation relation, bool zero_alpha, int cases, std::uint64_t seed) {
    const Field F = Field::make(2, 4);
    Elem alpha = 0;
    for (Elem e : F.elements()) {
        if (F.add(F.add(F.mul(e, e), e), F.one()) == F.zero()) {
            alpha = e;
            break;
        }
    }
    if (zero_alpha) {
        alpha = F.zero();
    }
    const Elem alpha1 = F.add(alpha, zero_alpha ? F.zero() : F.one());
    NumericReport rep{"psl25", 0, 0};
    for (int i = 0; i < cases; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const auto a = static_cast<Elem>(uniform_below(rng, F.size()));
        const auto c = static_cast<Elem>(1 + uniform_below(rng, F.size() - 1));
        const Elem num = F.add(F.add(F.pow(c, 10), F.mul(a, F.pow(c, 5))), F.mul(a, a));
        const Elem b = relation == CRelation::Stated ? num : F.div(num, F.pow(c, 4));
        const Elem c2 = F.mul(c, c);
        const Elem c3 = F.mul(c2, c);
        const Elem c4 = F.mul(c2, c2);
        const Elem c5 = F.mul(c4, c);
        const Poly f1(F, {F.add(a, F.mul(alpha, c5)), F.mul(c4, alpha), c3, c2});
        const Poly f2(F, {F.add(a, F.mul(alpha1, c5)), F.mul(c4, alpha1), c3, c2});
        std::vector<Elem> target(7, F.zero());
        target[6] = F.one();
        target[1] = a;
        target[0] = b;
        const Poly rhs = c4 * Poly(F, target);
        ++rep.cases;
        rep.passed += (f1 * f2 == rhs);
    }
    return rep;
}

NumericReport numeric_m24(bool perturb, int cases, std::uint64_t seed) {
    const Field F = Field::make(2, 8);
    NumericReport rep{"m24", 0, 0};
    for (int i = 0; i < cases; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const auto a = static_cast<Elem>(uniform_below(rng, F.size()));
        const auto b = static_cast<Elem>(uniform_below(rng, F.size()));
        std::vector<Elem> fc(25, F.zero());
        fc[24] = F.one();
        fc[1] = a;
        fc[0] = b;
        const Poly f(F, fc);
        auto mono = [&](std::uint32_t ea, std::uint32_t eb) { return F.mul(F.pow(a, ea), F.pow(b, eb)); };
        // (coefficient, x-exponent) per member.
        using Member = std::vector<std::pair<Elem, std::uint64_t>>;
        const std::vector<Member> chain{
            {{1, 32}, {a, 9}, {b, 8}},
            {{1, 256}, {mono(8, 0), 72}, {mono(0, 8), 64}},
            {{1, 256}, {mono(0, 8), 64}, {mono(11, 0), 3}, {mono(10, 1), 2}, {mono(9, 2), 1}, {mono(8, 3), 0}},
            {{1, 2048}, {mono(0, 64), 512}, {mono(88, 0), 24}, {mono(80, 8), 16}, {mono(72, 16), 8}, {mono(64, 24), 0}},
            {{1, 2048},
             {mono(0, 64), 512},
             {mono(80, 8), 16},
             {mono(72, 16), 8},
             {mono(perturb ? 88 : 89, 0), 1},
             {mono(88, 1), 0},
             {mono(64, 24), 0}},
        };
        bool ok = true;
        for (const auto& member : chain) {
            Poly acc(F);
            for (const auto& [coef, e] : member) {
                acc = acc + coef * powmod(Poly::x(F), e, f);
            }
            ok = ok && (acc % f).is_zero();
        }
        ++rep.cases;
        rep.passed += ok;
    }
    return rep;
}

NumericReport numeric_m23(bool perturb, int cases, std::uint64_t seed) {
    const Field F = Field::make(2, 11);
    NumericReport rep{"m23", 0, 0};
    for (int i = 0; i < cases; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const auto a = static_cast<Elem>(uniform_below(rng, F.size()));
        const auto alpha = static_cast<Elem>(1 + uniform_below(rng, F.size() - 1));
        const auto y = static_cast<Elem>(uniform_below(rng, F.size()));
        const Elem b = F.pow(alpha, 23);
        const Elem ay = F.mul(alpha, y);
        const Elem lhs = F.add(F.add(F.pow(ay, 23), F.mul(a, F.pow(ay, perturb ? 2 : 3))), b);
        const Elem rhs = F.add(F.add(F.mul(b, F.pow(y, 23)), F.mul(a, F.mul(F.pow(alpha, 3), F.pow(y, 3)))), b);
        ++rep.cases;
        rep.passed += (lhs == rhs);
    }
    return rep;
}

NumericReport numeric_pgl(std::uint32_t p, std::uint32_t k, std::uint32_t r, std::uint32_t s, int cases,
                          std::uint64_t seed) {
    if (!is_prime(p) || k < 1 || s < 1 || s >= r) {
        throw Error(ErrorCode::BadParameters, "numeric_pgl needs p prime, k >= 1 and 1 <= s < r");
    }
    const Field F = Field::make(p, k * r);
    const std::uint64_t l = ipow(p, k);
    const std::uint64_t lr = ipow(l, r);
    const std::uint64_t ls = ipow(l, s);
    const std::uint64_t n = (lr - 1) / (l - 1);
    const std::uint64_t m = (ls - 1) / (l - 1);
    NumericReport rep{"pgl", 0, 0};
    for (int i = 0; i < cases; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        auto draw = [&] { return static_cast<Elem>(uniform_below(rng, F.size())); };
        const Elem a = draw();
        const Elem b = draw();
        const Elem x = draw();
        const Elem u = draw();
        const Elem v = draw();
        auto f = [&](Elem t) { return F.add(F.add(F.pow(t, lr), F.mul(a, F.pow(t, ls))), F.mul(b, t)); };
        const Elem y = F.pow(x, l - 1);
        const Elem lin = F.mul(x, F.add(F.add(F.pow(y, n), F.mul(a, F.pow(y, m))), b));
        ++rep.cases;
        rep.passed += (lin == f(x) && f(F.add(u, v)) == F.add(f(u), f(v)));
    }
    return rep;
}

} // namespace trigal
