#pragma once

#include "trigal/gf.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trigal {

/// Dense univariate polynomial over a finite field. coeffs()[i] is the
/// coefficient of x^i; the vector never has trailing zeros, so the zero
/// polynomial has no coefficients and degree() == kZeroDegree.
class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);

    static Poly monomial(const Field& field, Elem c, std::size_t exponent);
    static Poly x(const Field& field) { return monomial(field, 1, 1); }
    static Poly constant(const Field& field, Elem c) { return monomial(field, c, 0); }

    /// Parses a constant-first, comma-separated coefficient list, each entry
    /// an integer or an expression in c such as "c+1".
    static Poly parse(const Field& field, std::string_view text);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }

    Poly monic() const;
    Poly derivative() const;
    Elem evaluate(Elem x) const;
    std::string to_string() const;

    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(Elem c, const Poly& f);
    friend bool operator==(const Poly& f, const Poly& g);
    /// Degree first, then coefficients from x^0 upwards.
    friend bool operator<(const Poly& f, const Poly& g);

private:
    void normalize();

    Field field_;
    std::vector<Elem> c_;
};

/// (quotient, remainder) with deg(remainder) < deg(g).
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
Poly operator/(const Poly& f, const Poly& g);
/// Monic gcd; gcd(0, 0) is zero.
Poly gcd(const Poly& f, const Poly& g);

/// base^e mod modulus by square-and-multiply.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& modulus);
/// base^(p^... ) style iterated power: applies h -> h^q mod modulus `times` times.
Poly iterated_power(Poly base, std::uint64_t q, std::uint64_t times, const Poly& modulus);

bool is_squarefree(const Poly& f);
/// Rabin's test; independent of the factorization pipeline.
bool is_irreducible(const Poly& f);

struct Factor {
    Poly poly;        // monic irreducible
    int multiplicity; // >= 1
};

struct Factorization {
    Elem unit;
    std::vector<Factor> factors; // sorted: degree, then coefficients

    /// unit * prod factor^multiplicity.
    Poly expand(const Field& field) const;
};

/// Sorted degree multiset of the irreducible factors, with multiplicity.
struct FactorPattern {
    std::vector<int> degrees;

    friend bool operator==(const FactorPattern&, const FactorPattern&) = default;
};

/// Squarefree decomposition, distinct-degree split and seeded equal-degree
/// splitting. The result does not depend on the seed.
Factorization factor(const Poly& f, std::uint64_t seed = 0);
FactorPattern factor_pattern(const Poly& f, std::uint64_t seed = 0);

/// Pattern of a polynomial already known to be squarefree; skips the
/// squarefree pass and the equal-degree split.
FactorPattern squarefree_pattern(const Poly& f);

} // namespace trigal
