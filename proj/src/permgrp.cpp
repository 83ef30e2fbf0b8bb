#include "trigal/permgrp.hpp"

#include "trigal/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace trigal {

Permutation::Permutation(std::size_t n) : img_(n) {
    if (n > 255) {
        throw Error(ErrorCode::DegreeTooLarge, "permutation degree above 255");
    }
    std::iota(img_.begin(), img_.end(), std::uint8_t{0});
}

Permutation::Permutation(std::vector<std::uint8_t> images) : img_(std::move(images)) {
    if (img_.size() > 255) {
        throw Error(ErrorCode::DegreeTooLarge, "permutation degree above 255");
    }
    std::vector<bool> seen(img_.size(), false);
    for (auto v : img_) {
        if (v >= img_.size() || seen[v]) {
            throw Error(ErrorCode::InvalidShape, "image list is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles) {
    std::vector<std::uint8_t> img(n);
    std::iota(img.begin(), img.end(), std::uint8_t{0});
    std::vector<bool> used(n, false);
    for (const auto& c : cycles) {
        for (std::size_t i = 0; i < c.size(); ++i) {
            const int a = c[i];
            if (a < 0 || static_cast<std::size_t>(a) >= n || used[a]) {
                throw Error(ErrorCode::InvalidShape, "cycle point out of range or repeated");
            }
            used[a] = true;
            img[a] = static_cast<std::uint8_t>(c[(i + 1) % c.size()]);
        }
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse_cycles(std::size_t n, std::string_view text) {
    std::vector<std::vector<int>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') {
            throw Error(ErrorCode::ParseError, "expected '(' in cycle notation: " + std::string(text));
        }
        ++i;
        std::vector<int> cyc;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
                throw Error(ErrorCode::ParseError, "bad cycle entry in: " + std::string(text));
            }
            int v = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
                if (v >= static_cast<int>(n)) {
                    throw Error(ErrorCode::ParseError, "point out of range in: " + std::string(text));
                }
            }
            cyc.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i >= text.size()) {
            throw Error(ErrorCode::ParseError, "unterminated cycle in: " + std::string(text));
        }
        ++i;
        if (!cyc.empty()) {
            cycles.push_back(std::move(cyc));
        }
        skip_ws();
    }
    return from_cycles(n, cycles);
}

bool Permutation::is_identity() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] != i) {
            return false;
        }
    }
    return true;
}

std::size_t Permutation::first_moved() const noexcept {
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (img_[i] != i) {
            return i;
        }
    }
    return img_.size();
}

Permutation Permutation::inverse() const {
    Permutation r;
    r.img_.resize(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) {
        r.img_[img_[i]] = static_cast<std::uint8_t>(i);
    }
    return r;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) {
        throw Error(ErrorCode::DegreeMismatch, "permutations of different degree");
    }
    Permutation r;
    r.img_.resize(a.img_.size());
    for (std::size_t i = 0; i < a.img_.size(); ++i) {
        r.img_[i] = b.img_[a.img_[i]];
    }
    return r;
}

std::string Permutation::to_cycle_string() const {
    std::ostringstream os;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
        if (seen[i] || img_[i] == i) {
            continue;
        }
        os << '(';
        std::size_t j = i;
        bool first = true;
        do {
            os << (first ? "" : ",") << j;
            first = false;
            seen[j] = true;
            j = img_[j];
        } while (j != i);
        os << ')';
    }
    const std::string s = os.str();
    return s.empty() ? "()" : s;
}

int CycleType::degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> CycleType::moved_parts() const {
    std::vector<int> out;
    for (int p : parts) {
        if (p > 1) {
            out.push_back(p);
        }
    }
    return out;
}

bool CycleType::is_even() const {
    // Parity is the number of even-length cycles.
    int even_cycles = 0;
    for (int p : parts) {
        even_cycles += (p % 2 == 0);
    }
    return even_cycles % 2 == 0;
}

std::string CycleType::label() const {
    const auto moved = moved_parts();
    if (moved.empty()) {
        return "1";
    }
    std::vector<std::pair<int, int>> runs;
    for (int p : moved) {
        if (!runs.empty() && runs.back().first == p) {
            ++runs.back().second;
        } else {
            runs.push_back({p, 1});
        }
    }
    std::ostringstream os;
    if (runs.size() > 1) {
        os << '(';
    }
    for (std::size_t i = 0; i < runs.size(); ++i) {
        os << (i ? "," : "") << runs[i].first;
        if (runs[i].second > 1) {
            os << '^' << runs[i].second;
        }
    }
    if (runs.size() > 1) {
        os << ')';
    }
    return os.str();
}

CycleType make_cycle_type(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end());
    return CycleType{std::move(parts)};
}

CycleType cycle_type(const Permutation& g) {
    std::vector<int> parts;
    std::vector<bool> seen(g.degree(), false);
    for (std::size_t i = 0; i < g.degree(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        std::size_t j = i;
        do {
            seen[j] = true;
            j = static_cast<std::size_t>(g[j]);
            ++len;
        } while (j != i);
        parts.push_back(len);
    }
    return make_cycle_type(std::move(parts));
}

// ---------------------------------------------------------------------------
// Schreier-Sims

void Group::recompute_orbit(std::size_t li) {
    Level& L = levels_[li];
    L.orbit.assign(1, L.base_point);
    L.position.assign(degree_, -1);
    L.position[L.base_point] = 0;
    L.transversal.assign(1, Permutation(degree_));
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
        const int beta = L.orbit[k];
        for (const auto& s : L.gens) {
            const int img = s[beta];
            if (L.position[img] < 0) {
                L.position[img] = static_cast<int>(L.orbit.size());
                L.orbit.push_back(img);
                L.transversal.push_back(L.transversal[k] * s);
            }
        }
    }
    L.transversal_inv.clear();
    for (const auto& u : L.transversal) {
        L.transversal_inv.push_back(u.inverse());
    }
}

std::pair<Permutation, std::size_t> Group::sift(Permutation g, std::size_t from) const {
    for (std::size_t li = from; li < levels_.size(); ++li) {
        const Level& L = levels_[li];
        const int pos = L.position[g[L.base_point]];
        if (pos < 0) {
            return {std::move(g), li};
        }
        g = g * L.transversal_inv[pos];
    }
    return {std::move(g), levels_.size()};
}

Group Group::generate(const std::vector<Permutation>& generators, std::size_t degree) {
    Group G;
    G.degree_ = generators.empty() ? degree : generators.front().degree();
    if (G.degree_ > kMaxDegree) {
        throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(G.degree_) + " exceeds 30");
    }
    for (const auto& g : generators) {
        if (g.degree() != G.degree_) {
            throw Error(ErrorCode::DegreeMismatch, "generators of different degree");
        }
        if (!g.is_identity()) {
            G.gens_.push_back(g);
        }
    }
    if (degree != 0 && degree != G.degree_) {
        throw Error(ErrorCode::DegreeMismatch, "declared degree differs from generator degree");
    }

    // Initial base: each generator must move some base point.
    for (const auto& g : G.gens_) {
        bool moves = false;
        for (const auto& L : G.levels_) {
            if (g[L.base_point] != L.base_point) {
                moves = true;
                break;
            }
        }
        if (!moves) {
            Level L;
            L.base_point = static_cast<int>(g.first_moved());
            G.levels_.push_back(std::move(L));
        }
    }
    for (const auto& g : G.gens_) {
        for (auto& L : G.levels_) {
            L.gens.push_back(g);
            if (g[L.base_point] != L.base_point) {
                break;
            }
        }
    }
    for (std::size_t i = 0; i < G.levels_.size(); ++i) {
        G.recompute_orbit(i);
    }

    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(G.levels_.size()) - 1;
    while (i >= 0) {
        bool extended = false;
        // Level i is never modified while it is scanned; deeper levels are.
        const std::size_t orbit_len = G.levels_[i].orbit.size();
        const std::size_t gen_count = G.levels_[i].gens.size();
        for (std::size_t k = 0; k < orbit_len && !extended; ++k) {
            for (std::size_t s = 0; s < gen_count && !extended; ++s) {
                const Level& Li = G.levels_[i];
                const Permutation& gen = Li.gens[s];
                const int img = gen[Li.orbit[k]];
                Permutation h = Li.transversal[k] * gen * Li.transversal_inv[Li.position[img]];
                if (h.is_identity()) {
                    continue;
                }
                auto [res, reached] = G.sift(std::move(h), static_cast<std::size_t>(i) + 1);
                if (res.is_identity()) {
                    continue;
                }
                if (reached == G.levels_.size()) {
                    Level fresh;
                    fresh.base_point = static_cast<int>(res.first_moved());
                    G.levels_.push_back(std::move(fresh));
                }
                for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= reached; ++l) {
                    G.levels_[l].gens.push_back(res);
                    G.recompute_orbit(l);
                }
                i = static_cast<std::ptrdiff_t>(reached);
                extended = true;
            }
        }
        if (!extended) {
            --i;
        }
    }

    G.order_ = 1;
    for (const auto& L : G.levels_) {
        G.order_ *= static_cast<unsigned>(L.orbit.size());
    }
    return G;
}

std::vector<int> Group::base() const {
    std::vector<int> b;
    for (const auto& L : levels_) {
        b.push_back(L.base_point);
    }
    return b;
}

std::vector<Permutation> Group::strong_generators() const {
    std::set<Permutation> s;
    for (const auto& L : levels_) {
        s.insert(L.gens.begin(), L.gens.end());
    }
    return {s.begin(), s.end()};
}

std::vector<std::size_t> Group::orbit_sizes() const {
    std::vector<std::size_t> out;
    for (const auto& L : levels_) {
        out.push_back(L.orbit.size());
    }
    return out;
}

bool Group::contains(const Permutation& g) const {
    if (g.degree() != degree_) {
        throw Error(ErrorCode::DegreeMismatch, "element degree differs from group degree");
    }
    auto [res, reached] = sift(g, 0);
    return reached == levels_.size() && res.is_identity();
}

Permutation Group::random_element(Rng& rng) const {
    Permutation g(degree_);
    for (auto it = levels_.rbegin(); it != levels_.rend(); ++it) {
        g = g * it->transversal[uniform_below(rng, it->transversal.size())];
    }
    return g;
}

void Group::for_each_element(const std::function<void(const Permutation&)>& visit) const {
    if (levels_.empty()) {
        visit(Permutation(degree_));
        return;
    }
    // g = u_{L-1} ... u_0, built from the deepest level outwards.
    std::vector<Permutation> partial(levels_.size() + 1, Permutation(degree_));
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        const std::size_t li = levels_.size() - 1 - depth;
        for (const auto& u : levels_[li].transversal) {
            partial[depth + 1] = partial[depth] * u;
            if (li == 0) {
                visit(partial[depth + 1]);
            } else {
                rec(depth + 1);
            }
        }
    };
    rec(0);
}

// ---------------------------------------------------------------------------
// Cycle-type enumeration

namespace {

using Img = std::array<std::uint8_t, kMaxDegree>;

// Mixed-radix weights: the count of j-cycles is at most floor(n/j), so
// key = sum_j count_j * R_j is injective.
struct KeyCodec {
    std::size_t n;
    std::array<std::uint64_t, kMaxDegree + 2> weight{};

    explicit KeyCodec(std::size_t degree) : n(degree) {
        std::uint64_t r = 1;
        for (std::size_t j = 1; j <= n; ++j) {
            weight[j] = r;
            r *= n / j + 1;
        }
    }

    CycleType decode(std::uint64_t key) const {
        std::vector<int> parts;
        for (std::size_t j = n; j >= 1; --j) {
            const std::uint64_t c = key / weight[j];
            key -= c * weight[j];
            parts.insert(parts.end(), c, static_cast<int>(j));
        }
        return make_cycle_type(std::move(parts));
    }
};

// Open-addressing set of keys; the number of distinct cycle types is tiny
// compared with the number of insertions, so lookups dominate.
class KeySet {
public:
    KeySet() : slots_(1024, kEmpty) {}

    void insert(std::uint64_t key) {
        std::size_t i = mix64(key) & (slots_.size() - 1);
        while (slots_[i] != kEmpty) {
            if (slots_[i] == key) {
                return;
            }
            i = (i + 1) & (slots_.size() - 1);
        }
        slots_[i] = key;
        if (++count_ * 2 > slots_.size()) {
            grow();
        }
    }

    std::vector<std::uint64_t> keys() const {
        std::vector<std::uint64_t> out;
        for (auto k : slots_) {
            if (k != kEmpty) {
                out.push_back(k);
            }
        }
        return out;
    }

private:
    static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

    void grow() {
        const auto old = keys();
        slots_.assign(slots_.size() * 2, kEmpty);
        count_ = 0;
        for (auto k : old) {
            insert(k);
        }
    }

    std::vector<std::uint64_t> slots_;
    std::size_t count_ = 0;
};

struct Streamer {
    const Group& G;
    const KeyCodec& codec;
    std::size_t n;
    std::vector<std::vector<Img>> trans; // per level

    Streamer(const Group& group, const KeyCodec& kc) : G(group), codec(kc), n(group.degree()) {
        for (const auto& L : G.levels()) {
            std::vector<Img> t;
            for (const auto& u : L.transversal) {
                Img a{};
                for (std::size_t x = 0; x < n; ++x) {
                    a[x] = static_cast<std::uint8_t>(u[x]);
                }
                t.push_back(a);
            }
            trans.push_back(std::move(t));
        }
    }

    // Leaf level: types of p * u for every u in the level-0 transversal.
    void leaves(const Img& p, KeySet& out) const {
        for (const auto& u : trans[0]) {
            std::uint32_t seen = 0;
            std::uint64_t key = 0;
            for (std::size_t x = 0; x < n; ++x) {
                if (seen >> x & 1U) {
                    continue;
                }
                std::size_t len = 0;
                std::size_t y = x;
                do {
                    seen |= 1U << y;
                    y = u[p[y]];
                    ++len;
                } while (y != x);
                key += codec.weight[len];
            }
            out.insert(key);
        }
    }

    void descend(std::size_t li, const Img& p, KeySet& out) const {
        if (li == 0) {
            leaves(p, out);
            return;
        }
        for (const auto& u : trans[li]) {
            Img q{};
            for (std::size_t x = 0; x < n; ++x) {
                q[x] = u[p[x]];
            }
            descend(li - 1, q, out);
        }
    }
};

} // namespace

std::set<CycleType> cycle_type_set(const Group& group, std::uint64_t budget) {
    if (group.order() > budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "group order " + group.order().str() + " exceeds enumeration budget " + std::to_string(budget));
    }
    const std::size_t n = group.degree();
    if (group.levels().empty()) {
        return {make_cycle_type(std::vector<int>(n, 1))};
    }
    const KeyCodec codec(n);
    const Streamer st(group, codec);
    Img id{};
    for (std::size_t x = 0; x < n; ++x) {
        id[x] = static_cast<std::uint8_t>(x);
    }

    std::set<std::uint64_t> keys;
    KeySet found;
    const std::size_t top = st.trans.size() - 1;
    const std::size_t workers =
        std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), st.trans[top].size());
    if (workers <= 1 || top == 0) {
        st.descend(top, id, found);
        const auto k = found.keys();
        keys.insert(k.begin(), k.end());
    } else {
        // Split the outermost transversal between threads.
        std::vector<KeySet> partial(workers);
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::size_t k = w; k < st.trans[top].size(); k += workers) {
                    st.descend(top - 1, st.trans[top][k], partial[w]);
                }
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (const auto& part : partial) {
            const auto k = part.keys();
            keys.insert(k.begin(), k.end());
        }
    }
    std::set<CycleType> out;
    for (auto k : keys) {
        out.insert(codec.decode(k));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Transitivity and primitivity

bool is_transitive(const Group& group) {
    const std::size_t n = group.degree();
    if (n <= 1) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::deque<int> queue{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!queue.empty()) {
        const int x = queue.front();
        queue.pop_front();
        for (const auto& g : group.generators()) {
            const int y = g[x];
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                queue.push_back(y);
            }
        }
    }
    return count == n;
}

int transitivity_degree(const Group& group, int max_k) {
    const auto n = static_cast<std::uint64_t>(group.degree());
    int achieved = 0;
    for (int k = 1; k <= max_k && static_cast<std::uint64_t>(k) <= n; ++k) {
        // Orbit of the tuple (0, 1, ..., k-1) on ordered k-tuples, encoded
        // base n.
        std::uint64_t space = 1;
        std::uint64_t expected = 1;
        for (int i = 0; i < k; ++i) {
            space *= n;
            expected *= n - static_cast<std::uint64_t>(i);
        }
        std::vector<bool> seen(space, false);
        auto encode = [n](const std::vector<int>& t) {
            std::uint64_t c = 0;
            for (auto it = t.rbegin(); it != t.rend(); ++it) {
                c = c * n + static_cast<std::uint64_t>(*it);
            }
            return c;
        };
        std::vector<int> start(k);
        std::iota(start.begin(), start.end(), 0);
        std::vector<std::uint64_t> stack{encode(start)};
        seen[stack.back()] = true;
        std::uint64_t count = 1;
        std::vector<int> t(k);
        while (!stack.empty()) {
            std::uint64_t c = stack.back();
            stack.pop_back();
            for (int i = 0; i < k; ++i) {
                t[i] = static_cast<int>(c % n);
                c /= n;
            }
            for (const auto& g : group.generators()) {
                std::uint64_t img = 0;
                for (int i = k - 1; i >= 0; --i) {
                    img = img * n + static_cast<std::uint64_t>(g[t[i]]);
                }
                if (!seen[img]) {
                    seen[img] = true;
                    ++count;
                    stack.push_back(img);
                }
            }
        }
        if (count != expected) {
            break;
        }
        achieved = k;
    }
    return achieved;
}

bool is_primitive(const Group& group) {
    const std::size_t n = group.degree();
    if (!is_transitive(group)) {
        return false;
    }
    if (n <= 2) {
        return true;
    }
    for (std::size_t beta = 1; beta < n; ++beta) {
        // Finest invariant partition with 0 ~ beta.
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        auto find = [&](std::size_t x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        std::vector<std::pair<std::size_t, std::size_t>> pending{{0, beta}};
        parent[beta] = 0;
        while (!pending.empty()) {
            const auto [a, b] = pending.back();
            pending.pop_back();
            for (const auto& g : group.generators()) {
                const std::size_t ra = find(static_cast<std::size_t>(g[a]));
                const std::size_t rb = find(static_cast<std::size_t>(g[b]));
                if (ra != rb) {
                    parent[rb] = ra;
                    pending.push_back({ra, rb});
                }
            }
        }
        std::size_t block = 0;
        const std::size_t r0 = find(0);
        for (std::size_t x = 0; x < n; ++x) {
            block += find(x) == r0;
        }
        if (block < n) {
            return false;
        }
    }
    return true;
}

} // namespace trigal
