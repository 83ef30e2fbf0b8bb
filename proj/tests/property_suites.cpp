#include "property_suites.hpp"

#include "trigal/catalog.hpp"
#include "trigal/newton.hpp"
#include "trigal/permgrp.hpp"
#include "trigal/random.hpp"
#include "trigal/upoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace trigal::props {

namespace {

void fail(Outcome& o, const std::string& what) {
    if (o.failures.size() < 5) {
        o.failures.push_back(what);
    }
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t f = 2; f * f <= n; ++f) {
        if (n % f == 0) {
            out.push_back(f);
            while (n % f == 0) n /= f;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Rabin: g | x^(q^d) - x and gcd(g, x^(q^(d/l)) - x) = 1 for every prime l | d.
bool rabin_certificate(const Poly& g) {
    const Field& F = g.field();
    const int d = g.degree();
    const Poly x = Poly::x(F);
    if (iterated_power(x, F.size(), d, g) != x % g) {
        return false;
    }
    for (auto l : prime_divisors(static_cast<std::uint64_t>(d))) {
        const Poly h = iterated_power(x, F.size(), d / l, g) - x;
        if (gcd(g, h).degree() != 0) {
            return false;
        }
    }
    return true;
}

Rational random_rational(Rng& rng) {
    const auto den = static_cast<std::int64_t>(1 + uniform_below(rng, 3));
    const auto num = static_cast<std::int64_t>(uniform_below(rng, 31)) - 15;
    return Rational(num, den);
}

std::vector<ValuedPoint> random_points(Rng& rng, bool integral) {
    const int k = 2 + static_cast<int>(uniform_below(rng, 7));
    std::vector<std::int64_t> xs;
    std::int64_t x = static_cast<std::int64_t>(uniform_below(rng, 4));
    for (int i = 0; i < k; ++i) {
        xs.push_back(x);
        x += 1 + static_cast<std::int64_t>(uniform_below(rng, 6));
    }
    std::vector<ValuedPoint> pts;
    for (auto xi : xs) {
        const bool infinite = uniform_below(rng, 6) == 0;
        if (infinite) {
            pts.push_back({xi, std::nullopt});
        } else {
            pts.push_back({xi, integral ? Rational(static_cast<std::int64_t>(uniform_below(rng, 11)) - 5)
                                        : random_rational(rng)});
        }
    }
    return pts;
}

std::vector<Rational> slope_multiset(const NewtonPolygon& p) {
    std::vector<Rational> out;
    for (const auto& s : p.segments) {
        out.insert(out.end(), static_cast<std::size_t>(s.run), s.slope);
    }
    return out;
}

std::vector<std::uint8_t> rotation(std::size_t n) {
    std::vector<std::uint8_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>((i + 1) % n);
    return img;
}

// p(n) by the standard coin-change recurrence.
std::vector<std::size_t> partition_numbers(int up_to) {
    std::vector<std::size_t> p(up_to + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= up_to; ++part) {
        for (int n = part; n <= up_to; ++n) p[n] += p[n - part];
    }
    return p;
}

} // namespace

Outcome factorization_roundtrip(const std::string& field_spec, int count, std::uint64_t seed) {
    Outcome o{"factorization roundtrip over GF(" + field_spec + ")"};
    const Field F = Field::parse(field_spec);
    for (int i = 0; i < count; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const int deg = 1 + static_cast<int>(uniform_below(rng, 30));
        std::vector<Elem> c(deg + 1);
        for (auto& e : c) e = static_cast<Elem>(uniform_below(rng, F.size()));
        c[deg] = static_cast<Elem>(1 + uniform_below(rng, F.size() - 1));
        const Poly f(F, c);
        const Factorization fac = factor(f, seed + static_cast<std::uint64_t>(i));
        ++o.cases;
        if (fac.expand(F) != f) {
            fail(o, "product mismatch for " + f.to_string());
            continue;
        }
        bool all_simple = true;
        int total = 0;
        for (const auto& [g, e] : fac.factors) {
            all_simple = all_simple && e == 1;
            total += g.degree() * e;
            if (g.leading() != F.one() || !rabin_certificate(g)) {
                fail(o, "factor " + g.to_string() + " of " + f.to_string() + " lacks a certificate");
            }
        }
        if (total != deg || all_simple != is_squarefree(f)) {
            fail(o, "degree or squarefree mismatch for " + f.to_string());
        }
        if (factor_pattern(f, 0) != factor_pattern(f, 0xdeadbeef)) {
            fail(o, "pattern depends on seed for " + f.to_string());
        }
    }
    return o;
}

Outcome newton_hull_invariants(int count, std::uint64_t seed) {
    Outcome o{"Newton hull invariants"};
    for (int i = 0; i < count; ++i) {
        Rng rng(trial_seed(seed, static_cast<std::uint64_t>(i)));
        const bool integral = i % 2 == 0;
        const auto pts = random_points(rng, integral);
        std::vector<ValuedPoint> finite;
        std::copy_if(pts.begin(), pts.end(), std::back_inserter(finite), [](const auto& p) { return p.valuation; });
        if (finite.size() < 2) {
            continue;
        }
        ++o.cases;
        const NewtonPolygon poly = lower_hull(pts);
        std::ostringstream tag;
        tag << "case " << i << " " << poly.to_string();
        for (std::size_t s = 1; s < poly.segments.size(); ++s) {
            if (!(poly.segments[s - 1].slope < poly.segments[s].slope)) fail(o, tag.str() + ": slopes not increasing");
        }
        if (poly.start != finite.front().exponent || poly.width() != finite.back().exponent - finite.front().exponent) {
            fail(o, tag.str() + ": runs do not cover the exponent range");
        }
        for (const auto& p : finite) {
            if (poly.value_at(p.exponent) > *p.valuation) fail(o, tag.str() + ": hull above a point");
        }
        std::int64_t at = poly.start;
        for (std::size_t s = 0; s <= poly.segments.size(); ++s) {
            const bool vertex = std::any_of(finite.begin(), finite.end(), [&](const auto& p) {
                return p.exponent == at && *p.valuation == poly.value_at(at);
            });
            if (!vertex) fail(o, tag.str() + ": vertex is not an input point");
            if (s < poly.segments.size()) at += poly.segments[s].run;
        }
        if (!integral) {
            continue;
        }
        for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
            const TameCycles t = tame_cycle_pattern(poly, p);
            bool wild = false;
            for (const auto& s : poly.segments) {
                wild = wild || (s.slope.numerator() != 0 && s.slope.denominator() % p == 0);
            }
            if (wild != !t.cycles) {
                fail(o, tag.str() + ": wildness misreported for p=" + std::to_string(p));
                continue;
            }
            if (t.cycles) {
                const auto sum = std::accumulate(t.cycles->begin(), t.cycles->end(), std::int64_t{0});
                if (sum + t.unconstrained_run != poly.width()) fail(o, tag.str() + ": cycle lengths do not sum");
                for (const auto& s : poly.segments) {
                    if (s.run % s.slope.denominator() != 0) fail(o, tag.str() + ": denominator does not divide run");
                }
            }
        }
    }
    return o;
}

Outcome newton_product_slopes(int count, std::uint64_t seed) {
    Outcome o{"Newton slopes of products"};
    for (int i = 0; i < count; ++i) {
        Rng rng(trial_seed(seed ^ 0x5a5a, static_cast<std::uint64_t>(i)));
        auto dense = [&] {
            const int deg = 1 + static_cast<int>(uniform_below(rng, 6));
            std::vector<std::int64_t> v(deg + 1);
            for (auto& e : v) e = static_cast<std::int64_t>(uniform_below(rng, 9)) - 4;
            return v;
        };
        const auto f = dense();
        const auto g = dense();
        // Generic coefficients: the valuation of a product coefficient is the
        // minimum over contributing pairs.
        std::vector<std::int64_t> h(f.size() + g.size() - 1, INT64_MAX);
        for (std::size_t a = 0; a < f.size(); ++a) {
            for (std::size_t b = 0; b < g.size(); ++b) h[a + b] = std::min(h[a + b], f[a] + g[b]);
        }
        auto points = [](const std::vector<std::int64_t>& v) {
            std::vector<ValuedPoint> out;
            for (std::size_t k = 0; k < v.size(); ++k) out.push_back({static_cast<std::int64_t>(k), Rational(v[k])});
            return out;
        };
        auto expected = slope_multiset(lower_hull(points(f)));
        const auto sg = slope_multiset(lower_hull(points(g)));
        expected.insert(expected.end(), sg.begin(), sg.end());
        std::sort(expected.begin(), expected.end());
        ++o.cases;
        if (slope_multiset(lower_hull(points(h))) != expected) {
            fail(o, "case " + std::to_string(i) + ": product slopes differ from the union");
        }
    }
    return o;
}

Outcome symmetric_partition_counts() {
    Outcome o{"|cycle types of S_n| = p(n), n <= 10"};
    const auto p = partition_numbers(10);
    for (std::size_t n = 2; n <= 10; ++n) {
        const Group g = Group::generate({Permutation::parse_cycles(n, "(0,1)"), Permutation(rotation(n))});
        ++o.cases;
        const auto got = cycle_type_set(g).size();
        if (got != p[n]) fail(o, "S" + std::to_string(n) + ": " + std::to_string(got) + " != " + std::to_string(p[n]));
    }
    return o;
}

Outcome projective_line_groups() {
    Outcome o{"PGL(2,q): order (q+1)q(q-1), transitivity 3"};
    for (int q : {4, 5, 7, 8, 9, 11}) {
        const auto g = builtin_group(GroupName::matrix(GroupName::Kind::PGL, 2, q));
        ++o.cases;
        if (g->order() != BigInt((q + 1) * q * (q - 1))) fail(o, "order of PGL(2," + std::to_string(q) + ")");
        if (transitivity_degree(*g, 4) != 3) fail(o, "transitivity of PGL(2," + std::to_string(q) + ")");
    }
    return o;
}

Outcome alternating_transitivity() {
    Outcome o{"A_n is (n-2)-transitive"};
    for (std::size_t n = 3; n <= 8; ++n) {
        std::vector<Permutation> gens;
        for (std::size_t i = 2; i < n; ++i) gens.push_back(Permutation::from_cycles(n, {{0, 1, static_cast<int>(i)}}));
        const Group g = Group::generate(gens, n);
        ++o.cases;
        const int k = transitivity_degree(g, static_cast<int>(n));
        if (k != static_cast<int>(n) - 2) fail(o, "A" + std::to_string(n) + " is " + std::to_string(k) + "-transitive");
    }
    return o;
}

std::vector<Outcome> all_suites() {
    std::vector<Outcome> out;
    for (const char* spec : {"2", "3", "2^2", "5", "3^2"}) {
        out.push_back(factorization_roundtrip(spec, 1000, 0));
    }
    out.push_back(newton_hull_invariants(500, 0));
    out.push_back(newton_product_slopes(200, 0));
    out.push_back(symmetric_partition_counts());
    out.push_back(projective_line_groups());
    out.push_back(alternating_transitivity());
    return out;
}

} // namespace trigal::props
