#include "trigal/classify.hpp"

#include "trigal/error.hpp"
#include "trigal/gf.hpp"

#include <numeric>

namespace trigal {

void validate(const TrinomialShape& s) {
    if (s.n < 2 || s.m <= 0 || s.m >= s.n) {
        throw Error(ErrorCode::BadExponent,
                    "need 0 < m < n and n >= 2 (n=" + std::to_string(s.n) + ", m=" + std::to_string(s.m) + ")");
    }
    if (std::gcd(s.n, s.m) != 1) {
        throw Error(ErrorCode::NotCoprime, "gcd(n, m) = " + std::to_string(std::gcd(s.n, s.m)) + " != 1");
    }
    if (s.p != 0 && !is_prime(s.p)) {
        throw Error(ErrorCode::BadCharacteristic, std::to_string(s.p) + " is neither 0 nor prime");
    }
}

GaussDegrees gauss_degrees(const TrinomialShape& s) {
    validate(s);
    if (s.p == 0) {
        return {};
    }
    const long long p = s.p;
    const long long ks[] = {s.n, s.m, static_cast<long long>(s.n) - s.m};
    int divisible = 0;
    long long k = 0;
    for (auto v : ks) {
        if (v % p == 0) {
            ++divisible;
            k = v;
        }
    }
    if (divisible > 1) {
        // Impossible for coprime n, m.
        throw Error(ErrorCode::InvalidShape, "more than one of n, m, n-m divisible by p");
    }
    if (divisible == 0) {
        return {1, p == 2 ? 2 : 1, false};
    }
    long long insep = 1;
    while (k % (insep * p) == 0) {
        insep *= p;
    }
    return {k / insep, insep, true};
}

std::vector<PglParams> pgl_params(const TrinomialShape& s) {
    validate(s);
    std::vector<PglParams> out;
    if (s.p == 0) {
        return out;
    }
    const long long n = s.n;
    const long long mp = std::min(s.m, s.n - s.m);
    for (long long q = s.p; q + 1 <= n; q *= s.p) {
        // sums[i] = (q^i - 1)/(q - 1)
        std::vector<long long> sums{0, 1};
        while (sums.back() < n) {
            sums.push_back(sums.back() * q + 1);
        }
        const int d = static_cast<int>(sums.size()) - 1;
        if (sums.back() != n || d < 2) {
            continue;
        }
        for (int sidx = 1; sidx < d; ++sidx) {
            if (mp == sums[sidx] || n - mp == sums[sidx]) {
                out.push_back({q, d, sidx});
            }
        }
    }
    return out;
}

GroupName an_sn_refine(const TrinomialShape& s) {
    validate(s);
    const int mp = std::min(s.m, s.n - s.m);
    if (s.p == 0) {
        return GroupName::symmetric(s.n);
    }
    if (s.p == 2) {
        if (s.n % 2 == 0 || mp == 2) {
            return GroupName::alternating(s.n);
        }
        return GroupName::symmetric(s.n);
    }
    return gauss_degrees(s).sep % 2 == 0 ? GroupName::alternating(s.n) : GroupName::symmetric(s.n);
}

Verdict classify_trinomial(const TrinomialShape& s) {
    validate(s);
    Verdict v;
    const int n = s.n;
    const int mp = std::min(s.m, n - s.m);
    const std::uint32_t p = s.p;
    v.gauss = gauss_degrees(s);
    if (mp != s.m) {
        v.notes.push_back("m normalised to min(m, n-m) = " + std::to_string(mp));
    }
    auto fire = [&](int number, GroupName g, std::string why) {
        v.group = g;
        v.clause_number = number;
        v.clause = std::to_string(number);
        v.notes.push_back("case " + v.clause + ": " + why);
        return v;
    };
    if (p == 0) {
        v.group = GroupName::symmetric(n);
        v.clause = "char-0";
        v.notes.push_back("characteristic zero: full symmetric group");
        return v;
    }
    if (n == 2) {
        v.group = GroupName::symmetric(2);
        v.clause = "trivial";
        v.notes.push_back("n = 2 is trivial");
        return v;
    }
    v.notes.push_back("gauss map: separable degree " + std::to_string(v.gauss.sep) + ", inseparable degree " +
                      std::to_string(v.gauss.insep) + (v.gauss.strange ? ", strange" : ", nonstrange"));

    long long pd = p;
    int d = 1;
    while (pd < n) {
        pd *= p;
        ++d;
    }
    if (mp == 1 && pd == n) {
        return fire(1, GroupName::matrix(GroupName::Kind::AGL, 1, n), "m = 1 and n = p^" + std::to_string(d));
    }
    if (mp == 1 && n == 6 && p == 2) {
        return fire(2, GroupName::matrix(GroupName::Kind::PSL, 2, 5), "m = 1, n = 6, p = 2");
    }
    if (mp == 1 && n == 12 && p == 3) {
        return fire(3, GroupName::of(GroupName::Kind::M11At12), "m = 1, n = 12, p = 3");
    }
    if (mp == 1 && n == 24 && p == 2) {
        return fire(4, GroupName::of(GroupName::Kind::M24), "m = 1, n = 24, p = 2");
    }
    if (mp == 2 && n == 11 && p == 3) {
        return fire(5, GroupName::of(GroupName::Kind::M11At11), "m = 2, n = 11, p = 3");
    }
    if (mp == 3 && n == 23 && p == 2) {
        return fire(6, GroupName::of(GroupName::Kind::M23), "m = 3, n = 23, p = 2");
    }
    const auto pgl = pgl_params(s);
    if (pgl.size() > 1) {
        throw Error(ErrorCode::AmbiguousPGL, "several (q, d, s) match n=" + std::to_string(n) + " m=" + std::to_string(mp));
    }
    if (pgl.size() == 1) {
        const auto& [q, dd, ss] = pgl.front();
        return fire(7, GroupName::matrix(GroupName::Kind::PGL, dd, static_cast<int>(q)),
                    "n = (q^d-1)/(q-1), m = (q^s-1)/(q-1) with q=" + std::to_string(q) + ", d=" + std::to_string(dd) +
                        ", s=" + std::to_string(ss));
    }
    Verdict out = fire(8, an_sn_refine(s), "A_n is contained in G");
    if (p == 2 && n % 2 == 1) {
        out.notes.push_back("p = 2, n odd: A_n iff min(m, n-m) = 2 (symmetric reading of m = 2)");
    } else if (p == 2) {
        out.notes.push_back("p = 2, n even: G lies in A_n");
    } else {
        out.notes.push_back("p odd: A_n iff the separable degree of the Gauss map is even");
    }
    return out;
}

std::vector<NewtonWitness> newton_witnesses(const TrinomialShape& s) {
    validate(s);
    const std::int64_t n = s.n;
    const std::int64_t m = std::min(s.m, s.n - s.m);
    const std::string ns = std::to_string(n);
    const std::string ms = std::to_string(m);
    auto witness = [&](std::string name, std::vector<ValuedPoint> pts) {
        auto poly = lower_hull(pts);
        return NewtonWitness{std::move(name), poly, tame_cycle_pattern(poly, s.p)};
    };
    return {
        witness("x^" + ns + " + t^-1 x^" + ms + " + 1", {{0, Rational(0)}, {m, Rational(-1)}, {n, Rational(0)}}),
        witness("x^" + ns + " + t", {{0, Rational(1)}, {n, Rational(0)}}),
        witness("x^" + ns + " + t x^" + ms + " + t^2", {{0, Rational(2)}, {m, Rational(1)}, {n, Rational(0)}}),
    };
}

} // namespace trigal
