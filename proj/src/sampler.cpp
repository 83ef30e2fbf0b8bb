#include "trigal/sampler.hpp"

#include "trigal/error.hpp"
#include "trigal/random.hpp"
#include "trigal/upoly.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

namespace trigal {

std::set<CycleType> PatternStats::types() const {
    std::set<CycleType> out;
    for (const auto& [t, c] : histogram) {
        out.insert(t);
    }
    return out;
}

namespace {

// Runs trial(i, rng) for every i, possibly on several threads, and merges
// the per-thread histograms. A trial returns the pattern or nothing.
PatternStats run_trials(int degree, const Field& field, std::uint64_t trials, std::uint64_t seed,
                        const std::function<std::optional<CycleType>(Rng&)>& trial) {
    PatternStats stats(degree, field, seed);
    stats.trials = trials;
    const std::size_t workers = static_cast<std::size_t>(
        std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(trials / 256, 1)));
    std::vector<std::map<CycleType, std::uint64_t>> hist(workers);
    std::vector<std::uint64_t> accepted(workers, 0);
    auto work = [&](std::size_t w) {
        for (std::uint64_t i = w; i < trials; i += workers) {
            Rng rng(trial_seed(seed, i));
            if (auto t = trial(rng)) {
                ++hist[w][*t];
                ++accepted[w];
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    for (std::size_t w = 0; w < workers; ++w) {
        for (const auto& [t, c] : hist[w]) {
            stats.histogram[t] += c;
        }
        stats.accepted += accepted[w];
    }
    stats.discarded = trials - stats.accepted;
    return stats;
}

std::optional<CycleType> pattern_if_squarefree(const Field& field, std::vector<Elem> coeffs) {
    const Poly f(field, std::move(coeffs));
    if (!is_squarefree(f)) {
        return std::nullopt;
    }
    return make_cycle_type(squarefree_pattern(f).degrees);
}

} // namespace

PatternStats sample_trinomial(int n, int m, const Field& field, std::uint64_t trials, std::uint64_t seed) {
    if (m <= 0 || m >= n || std::gcd(n, m) != 1) {
        throw Error(ErrorCode::InvalidShape,
                    "need 0 < m < n with gcd(n, m) = 1 (n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")");
    }
    const std::uint64_t q = field.size();
    return run_trials(n, field, trials, seed, [&](Rng& rng) {
        const auto a = static_cast<Elem>(uniform_below(rng, q));
        const auto b = static_cast<Elem>(uniform_below(rng, q));
        std::vector<Elem> c(static_cast<std::size_t>(n) + 1, field.zero());
        c[0] = b;
        c[m] = a;
        c[n] = field.one();
        return pattern_if_squarefree(field, std::move(c));
    });
}

PatternStats sample_sectional(const std::vector<int>& exponents, const Field& field, std::uint64_t trials,
                              std::uint64_t seed) {
    if (exponents.size() < 2 || exponents.front() <= 0 ||
        std::adjacent_find(exponents.begin(), exponents.end(), std::greater_equal<>()) != exponents.end()) {
        throw Error(ErrorCode::BadExponents, "exponents must be at least two strictly increasing positive integers");
    }
    const int degree = exponents.back();
    const std::uint64_t q = field.size();
    return run_trials(degree, field, trials, seed, [&](Rng& rng) {
        std::vector<Elem> c(static_cast<std::size_t>(degree) + 1, field.zero());
        for (std::size_t i = 0; i + 1 < exponents.size(); ++i) {
            c[exponents[i]] = static_cast<Elem>(uniform_below(rng, q));
        }
        c[0] = static_cast<Elem>(uniform_below(rng, q));
        c[degree] = field.one();
        return pattern_if_squarefree(field, std::move(c));
    });
}

ConsistencyReport identify_group(const PatternStats& stats, const std::optional<TrinomialShape>& shape) {
    if (stats.accepted == 0 || stats.histogram.empty()) {
        throw Error(ErrorCode::EmptyStats, "no accepted specializations to identify from");
    }
    const int n = stats.degree;
    ConsistencyReport report;
    if (shape) {
        if (shape->p != stats.field.characteristic()) {
            throw Error(ErrorCode::CharacteristicMismatch, "shape characteristic " + std::to_string(shape->p) +
                                                               " differs from field characteristic " +
                                                               std::to_string(stats.field.characteristic()));
        }
        if (shape->n != n) {
            throw Error(ErrorCode::InvalidShape, "shape degree differs from sampled degree");
        }
        report.predicted = classify_trinomial(*shape);
    }

    std::vector<GroupName> pool{GroupName::alternating(n), GroupName::symmetric(n)};
    for (int k = 0; k <= 2 && k <= n - 2; ++k) {
        for (const auto& fam : jones_candidates(n, k)) {
            pool.push_back(fam.lower);
            pool.push_back(fam.upper);
        }
    }
    if (n >= 4) {
        for (const auto& g : triply_transitive_candidates(n).groups) {
            pool.push_back(g);
        }
    }
    std::vector<std::pair<BigInt, GroupName>> ordered;
    for (const auto& g : pool) {
        if (g.degree() != n) {
            continue;
        }
        const bool seen = std::any_of(ordered.begin(), ordered.end(), [&](const auto& e) { return e.second == g; });
        if (!seen) {
            ordered.emplace_back(group_order(g), g);
        }
    }
    std::sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second.label() < y.second.label();
    });

    const auto observed = stats.types();
    for (const auto& [order, g] : ordered) {
        report.candidates.push_back(g);
        if (contains_all_types(g, observed)) {
            report.consistent.push_back(g);
            continue;
        }
        for (const auto& t : observed) {
            if (!contains_all_types(g, {t})) {
                report.violations.emplace_back(g, t);
                break;
            }
        }
    }
    if (!report.consistent.empty()) {
        report.minimal = report.consistent.front();
    }
    report.note = "Frobenius elements lie in the arithmetic monodromy group, which contains the geometric group; "
                  "the minimal consistent candidate contains every observed class but is not proven equal to it.";
    return report;
}

nlohmann::json to_json(const PatternStats& stats) {
    nlohmann::json patterns = nlohmann::json::array();
    for (const auto& [t, c] : stats.histogram) {
        patterns.push_back({{"type", t.parts}, {"count", c}});
    }
    return {{"degree", stats.degree},       {"field", stats.field.to_string()}, {"seed", stats.seed},
            {"trials", stats.trials},       {"accepted", stats.accepted},       {"discarded", stats.discarded},
            {"patterns", std::move(patterns)}};
}

nlohmann::json to_json(const ConsistencyReport& report) {
    auto labels = [](const std::vector<GroupName>& v) {
        std::vector<std::string> out;
        for (const auto& g : v) {
            out.push_back(g.label());
        }
        return out;
    };
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& [g, t] : report.violations) {
        violations.push_back({{"group", g.label()}, {"type", t.parts}});
    }
    nlohmann::json j{{"candidates", labels(report.candidates)},
                     {"consistent", labels(report.consistent)},
                     {"violations", std::move(violations)},
                     {"note", report.note}};
    j["minimal"] = report.minimal ? nlohmann::json(report.minimal->label()) : nlohmann::json(nullptr);
    if (report.predicted) {
        j["predicted"] = report.predicted->group.label();
    }
    return j;
}

} // namespace trigal
