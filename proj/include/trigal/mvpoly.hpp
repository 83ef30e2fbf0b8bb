#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace trigal {

/// Variable names and characteristic shared by a family of MPolys.
class MContext {
public:
    MContext(std::uint32_t p, std::vector<std::string> variables);

    std::uint32_t characteristic() const noexcept { return p_; }
    const std::vector<std::string>& variables() const noexcept { return vars_; }
    std::size_t arity() const noexcept { return vars_.size(); }
    /// Throws UnknownVariable.
    std::size_t index_of(std::string_view name) const;

private:
    std::uint32_t p_;
    std::vector<std::string> vars_;
};

using MContextPtr = std::shared_ptr<const MContext>;
using Exponents = std::vector<std::int64_t>;

/// Sparse polynomial over GF(p). Terms live in a map keyed by exponent
/// vector, so iteration is lexicographic and equality is structural. Zero
/// coefficients are never stored.
class MPoly {
public:
    explicit MPoly(MContextPtr ctx) : ctx_(std::move(ctx)) {}

    static MPoly constant(const MContextPtr& ctx, std::int64_t c);
    static MPoly variable(const MContextPtr& ctx, std::string_view name);
    static MPoly term(const MContextPtr& ctx, std::int64_t c, Exponents exps);

    const MContextPtr& context() const noexcept { return ctx_; }
    const std::map<Exponents, std::uint32_t>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    /// Largest exponent of variable `var` (-1 for the zero polynomial).
    std::int64_t degree_in(std::size_t var) const;

    MPoly pow(std::uint64_t e) const;
    std::string to_string() const;

    /// Adds c * x^exps in place.
    void add_term(const Exponents& exps, std::uint32_t c);

    friend MPoly operator+(const MPoly& f, const MPoly& g);
    friend MPoly operator-(const MPoly& f, const MPoly& g);
    friend MPoly operator-(const MPoly& f);
    friend MPoly operator*(const MPoly& f, const MPoly& g);
    friend bool operator==(const MPoly& f, const MPoly& g);

private:
    MContextPtr ctx_;
    std::map<Exponents, std::uint32_t> terms_;
};

/// Exact substitution var := replacement.
MPoly substitute(const MPoly& f, std::string_view var, const MPoly& replacement);

/// Quotient by a triangular system of relations. Relation i is monic in its
/// bound variable and may mention only bound variables of relations <= i.
class TriangularRing {
public:
    struct Relation {
        std::size_t bound;    // variable index
        std::int64_t degree;  // degree in the bound variable
        MPoly poly;
    };

    /// `relations` pairs a bound variable name with its relation. Throws
    /// NonMonicRelation or ContextMismatch.
    TriangularRing(MContextPtr ctx, const std::vector<std::pair<std::string, MPoly>>& relations);

    const MContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Relation>& relations() const noexcept { return rels_; }

    /// Normal form: every bound variable below its relation degree.
    MPoly reduce(const MPoly& f) const;
    /// Normal form of f^e, reducing after every multiplication.
    MPoly pow(const MPoly& f, std::uint64_t e) const;

private:
    MContextPtr ctx_;
    std::vector<Relation> rels_;
};

inline MPoly qreduce(const MPoly& f, const TriangularRing& ring) { return ring.reduce(f); }

} // namespace trigal
