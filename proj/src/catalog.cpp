#include "trigal/catalog.hpp"

#include "trigal/error.hpp"
#include "trigal/gf.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <regex>
#include <sstream>

#ifndef TRIGAL_DEFAULT_DATA_DIR
#define TRIGAL_DEFAULT_DATA_DIR "data"
#endif

namespace trigal {

namespace {

using Kind = GroupName::Kind;

// (p, e) with q = p^e, if q is a prime power.
std::optional<std::pair<int, int>> prime_power(long long q) {
    if (q < 2) {
        return std::nullopt;
    }
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            int e = 0;
            while (q % p == 0) {
                q /= p;
                ++e;
            }
            if (q != 1) {
                return std::nullopt;
            }
            return std::pair{static_cast<int>(p), e};
        }
    }
    return std::pair{static_cast<int>(q), 1};
}

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) {
        r *= b;
    }
    return r;
}

bool is_semilinear(Kind k) { return k == Kind::AGammaL || k == Kind::PGammaL; }
bool is_matrix(Kind k) {
    return k == Kind::AGL || k == Kind::AGammaL || k == Kind::PGL || k == Kind::PSL || k == Kind::PGammaL;
}

struct Fixed {
    Kind kind;
    const char* label;
    int degree;
    unsigned long long order;
};

constexpr Fixed kFixed[] = {
    {Kind::M11At11, "M11@11", 11, 7920},          {Kind::M11At12, "M11@12", 12, 7920},
    {Kind::M12, "M12", 12, 95040},                {Kind::M22, "M22", 22, 443520},
    {Kind::AutM22, "AutM22", 22, 887040},         {Kind::M23, "M23", 23, 10200960},
    {Kind::M24, "M24", 24, 244823040},            {Kind::PSL2_11At11, "PSL(2,11)@11", 11, 660},
};

const Fixed* fixed_entry(Kind k) {
    for (const auto& f : kFixed) {
        if (f.kind == k) {
            return &f;
        }
    }
    return nullptr;
}

const char* matrix_prefix(Kind k) {
    switch (k) {
    case Kind::AGL: return "AGL";
    case Kind::AGammaL: return "AGammaL";
    case Kind::PGL: return "PGL";
    case Kind::PSL: return "PSL";
    case Kind::PGammaL: return "PGammaL";
    default: return "";
    }
}

} // namespace

GroupName GroupName::matrix(Kind kind, int d, int q) {
    const auto pp = prime_power(q);
    if (!is_matrix(kind) || d < 1 || !pp) {
        throw Error(ErrorCode::BadParameters,
                    "invalid matrix group parameters d=" + std::to_string(d) + " q=" + std::to_string(q));
    }
    if (pp->second == 1) {
        // Over a prime field the Frobenius is trivial.
        if (kind == Kind::AGammaL) {
            kind = Kind::AGL;
        } else if (kind == Kind::PGammaL) {
            kind = Kind::PGL;
        }
    }
    return {kind, 0, d, q};
}

long long GroupName::degree() const {
    switch (kind) {
    case Kind::Symmetric:
    case Kind::Alternating:
    case Kind::Cyclic: return n;
    case Kind::AGL:
    case Kind::AGammaL: return ipow(q, d);
    case Kind::PGL:
    case Kind::PSL:
    case Kind::PGammaL: return (ipow(q, d) - 1) / (q - 1);
    default: return fixed_entry(kind)->degree;
    }
}

std::string GroupName::label() const {
    switch (kind) {
    case Kind::Symmetric: return "S" + std::to_string(n);
    case Kind::Alternating: return "A" + std::to_string(n);
    case Kind::Cyclic: return "C" + std::to_string(n);
    default: break;
    }
    if (is_matrix(kind)) {
        return std::string(matrix_prefix(kind)) + "(" + std::to_string(d) + "," + std::to_string(q) + ")";
    }
    return fixed_entry(kind)->label;
}

GroupName GroupName::parse(std::string_view text) {
    const std::string s(text);
    for (const auto& f : kFixed) {
        if (s == f.label) {
            return of(f.kind);
        }
    }
    if (s == "Aut(M22)") {
        return of(Kind::AutM22);
    }
    static const std::regex simple(R"(^(S|A|C|Sym|Alt|Symmetric|Alternating|Cyclic)\(?(\d+)\)?$)");
    static const std::regex mat(R"(^(AGL|AGammaL|PGL|PSL|PGammaL)\((\d+),(\d+)\)$)");
    std::smatch m;
    if (std::regex_match(s, m, simple)) {
        const int n = std::stoi(m[2]);
        const std::string k = m[1];
        if (n < 1) {
            throw Error(ErrorCode::UnknownName, "degree must be positive: " + s);
        }
        if (k[0] == 'S') {
            return symmetric(n);
        }
        if (k[0] == 'A') {
            return alternating(n);
        }
        return cyclic(n);
    }
    if (std::regex_match(s, m, mat)) {
        static const std::map<std::string, Kind> kinds{{"AGL", Kind::AGL},
                                                       {"AGammaL", Kind::AGammaL},
                                                       {"PGL", Kind::PGL},
                                                       {"PSL", Kind::PSL},
                                                       {"PGammaL", Kind::PGammaL}};
        const int d = std::stoi(m[2]);
        const int q = std::stoi(m[3]);
        const Kind k = kinds.at(m[1]);
        if (d < 1 || !prime_power(q) || ((k == Kind::PGL || k == Kind::PSL || k == Kind::PGammaL) && d < 2)) {
            throw Error(ErrorCode::UnknownName, "invalid parameters in " + s);
        }
        return matrix(k, d, q);
    }
    throw Error(ErrorCode::UnknownName, "unknown group name '" + s + "'");
}

std::string GroupFamily::label() const {
    return single() ? lower.label() : lower.label() + "..." + upper.label();
}

// ---------------------------------------------------------------------------
// Constructions

namespace {

using Matrix = std::vector<std::vector<Elem>>; // row-major, acting on row vectors

struct VectorSpace {
    Field F;
    int d;
    std::uint64_t q;

    std::vector<Elem> unpack(std::uint64_t idx) const {
        std::vector<Elem> v(d);
        for (int i = 0; i < d; ++i) {
            v[i] = static_cast<Elem>(idx % q);
            idx /= q;
        }
        return v;
    }
    std::uint64_t pack(const std::vector<Elem>& v) const {
        std::uint64_t idx = 0;
        for (int i = d - 1; i >= 0; --i) {
            idx = idx * q + v[i];
        }
        return idx;
    }
    std::vector<Elem> apply(const std::vector<Elem>& v, const Matrix& M) const {
        std::vector<Elem> w(d, F.zero());
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) {
                w[j] = F.add(w[j], F.mul(v[i], M[i][j]));
            }
        }
        return w;
    }
    // Projective representative: last nonzero coordinate scaled to 1.
    std::vector<Elem> normalize(std::vector<Elem> v) const {
        int last = d - 1;
        while (last >= 0 && v[last] == F.zero()) {
            --last;
        }
        const Elem s = F.inv(v[last]);
        for (auto& x : v) {
            x = F.mul(x, s);
        }
        return v;
    }
};

Elem primitive_element(const Field& F) {
    const std::uint64_t order = F.size() - 1;
    std::vector<std::uint64_t> primes;
    std::uint64_t r = order;
    for (std::uint64_t p = 2; p * p <= r; ++p) {
        if (r % p == 0) {
            primes.push_back(p);
            while (r % p == 0) {
                r /= p;
            }
        }
    }
    if (r > 1) {
        primes.push_back(r);
    }
    for (Elem x = 1; x < F.size(); ++x) {
        bool ok = true;
        for (auto p : primes) {
            if (F.pow(x, order / p) == F.one()) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return x;
        }
    }
    return F.one();
}

Matrix identity_matrix(const Field& F, int d) {
    Matrix M(d, std::vector<Elem>(d, F.zero()));
    for (int i = 0; i < d; ++i) {
        M[i][i] = F.one();
    }
    return M;
}

// Transvections I + w^t E_ij generate SL_d(q); adding diag(omega, 1, ...)
// gives GL_d(q).
std::vector<Matrix> linear_generators(const Field& F, int d, bool special) {
    std::vector<Matrix> gens;
    const auto k = F.degree();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) {
                continue;
            }
            for (std::uint32_t t = 0; t < k; ++t) {
                Matrix M = identity_matrix(F, d);
                M[i][j] = F.pow(F.generator(), t);
                gens.push_back(std::move(M));
            }
        }
    }
    if (!special) {
        Matrix D = identity_matrix(F, d);
        D[0][0] = primitive_element(F);
        gens.push_back(std::move(D));
    }
    return gens;
}

Permutation from_map(std::size_t n, const std::function<std::uint64_t(std::uint64_t)>& f) {
    std::vector<std::uint8_t> img(n);
    for (std::uint64_t x = 0; x < n; ++x) {
        img[x] = static_cast<std::uint8_t>(f(x));
    }
    return Permutation(std::move(img));
}

Group build_matrix_group(const GroupName& name) {
    const auto [p, e] = *prime_power(name.q);
    VectorSpace V{Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(e)), name.d,
                  static_cast<std::uint64_t>(name.q)};
    const bool special = name.kind == Kind::PSL;
    const bool semilinear = is_semilinear(name.kind);
    const auto mats = linear_generators(V.F, name.d, special);
    auto frob = [&](std::vector<Elem> v) {
        for (auto& x : v) {
            x = V.F.frobenius(x);
        }
        return v;
    };
    std::vector<Permutation> gens;

    if (name.kind == Kind::AGL || name.kind == Kind::AGammaL) {
        const std::size_t n = ipow(name.q, name.d);
        for (const auto& M : mats) {
            gens.push_back(from_map(n, [&](std::uint64_t x) { return V.pack(V.apply(V.unpack(x), M)); }));
        }
        for (int i = 0; i < name.d; ++i) {
            for (std::uint32_t t = 0; t < V.F.degree(); ++t) {
                std::vector<Elem> shift(name.d, V.F.zero());
                shift[i] = V.F.pow(V.F.generator(), t);
                gens.push_back(from_map(n, [&](std::uint64_t x) {
                    auto v = V.unpack(x);
                    for (int j = 0; j < name.d; ++j) {
                        v[j] = V.F.add(v[j], shift[j]);
                    }
                    return V.pack(v);
                }));
            }
        }
        if (semilinear) {
            gens.push_back(from_map(n, [&](std::uint64_t x) { return V.pack(frob(V.unpack(x))); }));
        }
        return Group::generate(gens, n);
    }

    // Projective points, enumerated in order of their packed representative.
    std::vector<std::uint64_t> points;
    std::map<std::uint64_t, std::uint64_t> label;
    for (std::uint64_t idx = 1; idx < static_cast<std::uint64_t>(ipow(name.q, name.d)); ++idx) {
        const auto v = V.unpack(idx);
        if (V.pack(V.normalize(v)) == idx) {
            label[idx] = points.size();
            points.push_back(idx);
        }
    }
    const std::size_t n = points.size();
    for (const auto& M : mats) {
        gens.push_back(
            from_map(n, [&](std::uint64_t x) { return label.at(V.pack(V.normalize(V.apply(V.unpack(points[x]), M)))); }));
    }
    if (semilinear) {
        gens.push_back(from_map(n, [&](std::uint64_t x) { return label.at(V.pack(V.normalize(frob(V.unpack(points[x]))))); }));
    }
    return Group::generate(gens, n);
}

std::map<std::string, std::vector<Permutation>> load_mathieu_file() {
    const std::string path = mathieu_data_path();
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::MissingDataFile, "cannot read Mathieu generator data at " + path);
    }
    std::map<std::string, std::vector<Permutation>> out;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string name;
        if (!(ls >> name) || name[0] == '#') {
            continue;
        }
        std::size_t degree = 0;
        if (!(ls >> degree)) {
            throw Error(ErrorCode::ParseError, "missing degree in data line: " + line);
        }
        std::string gen;
        while (ls >> gen) {
            out[name].push_back(Permutation::parse_cycles(degree, gen));
        }
    }
    return out;
}

Group build_uncached(const GroupName& name) {
    const long long n = name.degree();
    if (n > static_cast<long long>(kMaxDegree)) {
        throw Error(ErrorCode::DegreeTooLarge, name.label() + " has degree " + std::to_string(n) + " > 30");
    }
    const auto deg = static_cast<std::size_t>(n);
    switch (name.kind) {
    case Kind::Symmetric: {
        if (deg < 2) {
            return Group::generate({}, deg);
        }
        std::vector<int> cyc(deg);
        std::iota(cyc.begin(), cyc.end(), 0);
        return Group::generate({Permutation::from_cycles(deg, {{0, 1}}), Permutation::from_cycles(deg, {cyc})});
    }
    case Kind::Alternating: {
        std::vector<Permutation> gens;
        for (std::size_t i = 0; i + 2 < deg; ++i) {
            const int a = static_cast<int>(i);
            gens.push_back(Permutation::from_cycles(deg, {{a, a + 1, a + 2}}));
        }
        return Group::generate(gens, deg);
    }
    case Kind::Cyclic: {
        std::vector<int> cyc(deg);
        std::iota(cyc.begin(), cyc.end(), 0);
        return Group::generate({Permutation::from_cycles(deg, {cyc})}, deg);
    }
    default: break;
    }
    if (is_matrix(name.kind)) {
        return build_matrix_group(name);
    }
    static std::mutex file_mutex;
    static std::optional<std::map<std::string, std::vector<Permutation>>> data;
    std::vector<Permutation> gens;
    {
        std::lock_guard lock(file_mutex);
        if (!data) {
            data = load_mathieu_file();
        }
        const auto it = data->find(name.label());
        if (it == data->end()) {
            throw Error(ErrorCode::MissingDataFile, "no generators for " + name.label() + " in " + mathieu_data_path());
        }
        gens = it->second;
    }
    for (const auto& g : gens) {
        if (g.degree() != deg) {
            throw Error(ErrorCode::DegreeMismatch, "data file degree for " + name.label() + " is wrong");
        }
    }
    return Group::generate(gens, deg);
}

} // namespace

std::string mathieu_data_path() {
    if (const char* env = std::getenv("TRIGAL_MATHIEU_DATA"); env && *env) {
        return env;
    }
    return std::string(TRIGAL_DEFAULT_DATA_DIR) + "/mathieu_generators.txt";
}

std::shared_ptr<const Group> builtin_group(const GroupName& name) {
    static std::mutex mutex;
    static std::map<GroupName, std::shared_ptr<const Group>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(name); it != cache.end()) {
            return it->second;
        }
    }
    auto group = std::make_shared<const Group>(build_uncached(name));
    std::lock_guard lock(mutex);
    return cache.try_emplace(name, std::move(group)).first->second;
}

BigInt group_order(const GroupName& name) {
    auto factorial = [](int n) {
        BigInt r = 1;
        for (int i = 2; i <= n; ++i) {
            r *= i;
        }
        return r;
    };
    auto gl_order = [](int d, long long q) {
        BigInt r = 1;
        BigInt qd = 1;
        for (int i = 0; i < d; ++i) {
            qd *= q;
        }
        BigInt qi = 1;
        for (int i = 0; i < d; ++i) {
            r *= qd - qi;
            qi *= q;
        }
        return r;
    };
    switch (name.kind) {
    case Kind::Symmetric: return factorial(name.n);
    case Kind::Alternating: return name.n < 2 ? BigInt(1) : factorial(name.n) / 2;
    case Kind::Cyclic: return name.n;
    default: break;
    }
    if (is_matrix(name.kind)) {
        const int e = prime_power(name.q)->second;
        const BigInt gl = gl_order(name.d, name.q);
        switch (name.kind) {
        case Kind::AGL: return gl * BigInt(ipow(name.q, name.d));
        case Kind::AGammaL: return gl * BigInt(ipow(name.q, name.d)) * e;
        case Kind::PGL: return gl / (name.q - 1);
        case Kind::PGammaL: return gl / (name.q - 1) * e;
        case Kind::PSL: return gl / (name.q - 1) / std::gcd(name.d, name.q - 1);
        default: break;
        }
    }
    return BigInt(fixed_entry(name.kind)->order);
}

const std::set<CycleType>& cached_cycle_types(const GroupName& name) {
    static std::mutex mutex;
    static std::map<GroupName, std::set<CycleType>> cache;
    std::lock_guard lock(mutex);
    if (auto it = cache.find(name); it != cache.end()) {
        return it->second;
    }
    auto types = cycle_type_set(*builtin_group(name));
    return cache.emplace(name, std::move(types)).first->second;
}

std::vector<GroupFamily> jones_candidates(int n, int k) {
    if (k < 0 || k > n - 2) {
        throw Error(ErrorCode::BadK, "k must satisfy 0 <= k <= n-2 (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    std::vector<GroupFamily> out;
    auto single = [&](GroupName g) { out.push_back({g, g}); };
    auto family = [&](GroupName lo, GroupName hi) { out.push_back({lo, hi}); };
    // Every (q, d >= 2) with n = (q^d - 1)/(q - 1).
    auto projective_reps = [n] {
        std::vector<std::pair<int, int>> reps;
        for (long long q = 2; q + 1 <= n; ++q) {
            if (!prime_power(q)) {
                continue;
            }
            long long sum = 1 + q;
            for (int d = 2; sum <= n; ++d, sum = sum * q + 1) {
                if (sum == n) {
                    reps.push_back({static_cast<int>(q), d});
                }
            }
        }
        return reps;
    };

    if (k == 0) {
        if (is_prime(static_cast<std::uint64_t>(n))) {
            family(GroupName::cyclic(n), GroupName::matrix(Kind::AGL, 1, n));
        }
        for (auto [q, d] : projective_reps()) {
            family(GroupName::matrix(Kind::PGL, d, q), GroupName::matrix(Kind::PGammaL, d, q));
        }
        if (n == 11) {
            single(GroupName::of(Kind::PSL2_11At11));
            single(GroupName::of(Kind::M11At11));
        }
        if (n == 23) {
            single(GroupName::of(Kind::M23));
        }
    } else if (k == 1) {
        for (long long q = 2; q <= n; ++q) {
            if (!prime_power(q)) {
                continue;
            }
            long long pw = q;
            for (int d = 1; pw <= n; ++d, pw *= q) {
                if (pw == n) {
                    family(GroupName::matrix(Kind::AGL, d, static_cast<int>(q)),
                           GroupName::matrix(Kind::AGammaL, d, static_cast<int>(q)));
                }
            }
        }
        if (n - 1 >= 5 && is_prime(static_cast<std::uint64_t>(n - 1))) {
            single(GroupName::matrix(Kind::PSL, 2, n - 1));
            single(GroupName::matrix(Kind::PGL, 2, n - 1));
        }
        if (n == 12) {
            single(GroupName::of(Kind::M11At12));
            single(GroupName::of(Kind::M12));
        }
        if (n == 24) {
            single(GroupName::of(Kind::M24));
        }
    } else if (k == 2) {
        if (prime_power(n - 1)) {
            family(GroupName::matrix(Kind::PGL, 2, n - 1), GroupName::matrix(Kind::PGammaL, 2, n - 1));
        }
    }
    single(GroupName::alternating(n));
    single(GroupName::symmetric(n));
    return out;
}

TriplyTransitiveList triply_transitive_candidates(int d) {
    TriplyTransitiveList out;
    auto add = [&](GroupName g) {
        if (std::find(out.groups.begin(), out.groups.end(), g) == out.groups.end()) {
            out.groups.push_back(g);
        }
    };
    if (auto pp = prime_power(d); pp && pp->first == 2) {
        add(GroupName::matrix(Kind::AGL, pp->second, 2));
    }
    if (d == 16) {
        out.uncatalogued.push_back("G1 (degree 16)");
    }
    if (prime_power(d - 1)) {
        add(GroupName::matrix(Kind::PSL, 2, d - 1));
        add(GroupName::matrix(Kind::PGL, 2, d - 1));
        add(GroupName::matrix(Kind::PGammaL, 2, d - 1));
    }
    switch (d) {
    case 11: add(GroupName::of(Kind::M11At11)); break;
    case 12:
        add(GroupName::of(Kind::M11At12));
        add(GroupName::of(Kind::M12));
        break;
    case 22:
        add(GroupName::of(Kind::M22));
        add(GroupName::of(Kind::AutM22));
        break;
    case 23: add(GroupName::of(Kind::M23)); break;
    case 24: add(GroupName::of(Kind::M24)); break;
    default: break;
    }
    add(GroupName::alternating(d));
    add(GroupName::symmetric(d));
    return out;
}

bool contains_all_types(const GroupName& name, const std::set<CycleType>& observed) {
    for (const auto& t : observed) {
        if (t.degree() != name.degree()) {
            throw Error(ErrorCode::DegreeMismatch, "cycle type of size " + std::to_string(t.degree()) + " vs " +
                                                       name.label() + " of degree " + std::to_string(name.degree()));
        }
    }
    if (name.kind == Kind::Symmetric) {
        return true;
    }
    if (name.kind == Kind::Alternating) {
        return std::all_of(observed.begin(), observed.end(), [](const CycleType& t) { return t.is_even(); });
    }
    const auto& types = cached_cycle_types(name);
    return std::includes(types.begin(), types.end(), observed.begin(), observed.end());
}

} // namespace trigal
