#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace trigal {

/// Raw element of a finite field: the power-basis coordinates
/// (c_0, ..., c_{k-1}) packed as sum c_i * p^i. Only meaningful together
/// with the Field that produced it.
using Elem = std::uint32_t;

/// GF(p^k) realised as GF(p)[w]/(modulus).
///
/// A Field is a cheap handle onto immutable shared tables, so copies are
/// free and may be used from any thread. Two handles compare equal iff
/// (p, k, modulus) agree. Fields up to 2^20 elements use exp/log tables;
/// larger ones fall back to coordinate arithmetic.
class Field {
public:
    /// Builds GF(p^k). When `modulus` is omitted the bundled default for
    /// (p, k) is used. The modulus is constant-term first and must be
    /// monic of degree k and irreducible.
    static Field make(std::uint32_t p, std::uint32_t k = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// Parses "p", "p^k" or "p^k:c0,c1,...,1".
    static Field parse(std::string_view spec);

    /// The modulus `make` uses for (p, k) when none is supplied.
    static std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t k);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint64_t size() const noexcept;
    const std::vector<std::uint32_t>& modulus() const noexcept;

    /// Canonical spec string: "p" for prime fields, else "p^k:c0,...,1".
    std::string to_string() const;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    /// The class of w, i.e. the element written "c" in inputs.
    Elem generator() const;
    /// Image of an integer under Z -> GF(p).
    Elem from_int(std::int64_t v) const;
    Elem from_coords(std::span<const std::uint32_t> coords) const;
    std::vector<std::uint32_t> coords(Elem x) const;

    Elem add(Elem x, Elem y) const;
    Elem sub(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    Elem div(Elem x, Elem y) const;
    Elem pow(Elem x, std::uint64_t e) const;
    /// x^p.
    Elem frobenius(Elem x) const;
    /// Inverse Frobenius x^(p^(k-1)), the unique p-th root.
    Elem pth_root(Elem x) const;

    /// All p^k elements in increasing packed order, which is lexicographic
    /// on (c_{k-1}, ..., c_0).
    std::vector<Elem> elements() const;

    /// Parses an element: an integer, or a polynomial in "c" (or "w") with
    /// integer coefficients such as "c+1", "2c^2+c", "-c".
    Elem parse_element(std::string_view text) const;
    std::string format_element(Elem x) const;

    friend bool operator==(const Field& a, const Field& b);

    struct Impl;

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// An element bundled with its field. Mixed-field arithmetic throws
/// FieldMismatch rather than coercing.
class FieldElement {
public:
    FieldElement(Field field, Elem value);

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    std::vector<std::uint32_t> coeffs() const { return field_.coords(value_); }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement pow(std::uint64_t e) const;
    FieldElement inv() const;
    FieldElement frobenius() const;

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator*(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y);
    friend FieldElement operator-(const FieldElement& x);
    friend bool operator==(const FieldElement& x, const FieldElement& y);

private:
    Field field_;
    Elem value_;
};

bool is_prime(std::uint64_t n);

} // namespace trigal
