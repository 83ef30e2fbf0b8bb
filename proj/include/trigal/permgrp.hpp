#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "trigal/random.hpp"

namespace trigal {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxDegree = 30;

/// Permutation of {0, ..., n-1}. Products act left to right:
/// (a * b)(x) = b(a(x)).
class Permutation {
public:
    Permutation() = default;
    /// Identity of degree n.
    explicit Permutation(std::size_t n);
    /// Throws InvalidShape unless `images` is a bijection.
    explicit Permutation(std::vector<std::uint8_t> images);

    /// Parses "(0,1,2)(3,4)"; "()" is the identity.
    static Permutation parse_cycles(std::size_t n, std::string_view text);
    static Permutation from_cycles(std::size_t n, const std::vector<std::vector<int>>& cycles);

    std::size_t degree() const noexcept { return img_.size(); }
    int operator[](std::size_t x) const noexcept { return img_[x]; }
    const std::vector<std::uint8_t>& images() const noexcept { return img_; }

    bool is_identity() const noexcept;
    Permutation inverse() const;
    /// Smallest moved point, or degree() for the identity.
    std::size_t first_moved() const noexcept;
    std::string to_cycle_string() const;

    friend Permutation operator*(const Permutation& a, const Permutation& b);
    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint8_t> img_;
};

/// Partition of the degree; parts ascending, fixed points included.
struct CycleType {
    std::vector<int> parts;

    int degree() const;
    /// Parts other than 1, ascending; the identity gives an empty list.
    std::vector<int> moved_parts() const;
    bool is_even() const;
    /// Compact exponent notation without 1-parts, e.g. "2^4", "(2,3,6)",
    /// "(2^2,4^2)"; the identity prints as "1".
    std::string label() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

CycleType cycle_type(const Permutation& g);
/// Cycle type from any list of part sizes (sorted internally).
CycleType make_cycle_type(std::vector<int> parts);

/// Permutation group with a base and strong generating set built by
/// deterministic Schreier-Sims. Immutable after construction.
class Group {
public:
    /// Throws DegreeMismatch on mixed degrees, DegreeTooLarge above 30.
    static Group generate(const std::vector<Permutation>& generators, std::size_t degree = 0);

    std::size_t degree() const noexcept { return degree_; }
    const std::vector<Permutation>& generators() const noexcept { return gens_; }
    std::vector<int> base() const;
    std::vector<Permutation> strong_generators() const;
    /// Fundamental orbit sizes, one per base point.
    std::vector<std::size_t> orbit_sizes() const;
    const BigInt& order() const noexcept { return order_; }

    bool contains(const Permutation& g) const;
    /// Uniform random element (product of random transversal elements).
    Permutation random_element(Rng& rng) const;

    /// Calls `visit` once per group element. Streams transversal products;
    /// memory stays O(degree * base length).
    void for_each_element(const std::function<void(const Permutation&)>& visit) const;

    struct Level {
        int base_point;
        std::vector<Permutation> gens;
        std::vector<int> orbit;
        std::vector<int> position; // point -> index into orbit, or -1
        std::vector<Permutation> transversal;
        std::vector<Permutation> transversal_inv;
    };
    const std::vector<Level>& levels() const noexcept { return levels_; }

private:
    Group() = default;
    void recompute_orbit(std::size_t level);
    std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

    std::size_t degree_ = 0;
    std::vector<Permutation> gens_;
    std::vector<Level> levels_;
    BigInt order_ = 1;
};

inline constexpr std::uint64_t kEnumerationBudget = 250'000'000;

/// Every cycle type occurring in the group, identity included. Throws
/// BudgetExceeded when the order is above `budget`.
std::set<CycleType> cycle_type_set(const Group& group, std::uint64_t budget = kEnumerationBudget);

bool is_transitive(const Group& group);
/// Largest k <= max_k such that the group is k-transitive (0 if intransitive).
int transitivity_degree(const Group& group, int max_k);
bool is_primitive(const Group& group);

} // namespace trigal
