#include "trigal/mvpoly.hpp"

#include "trigal/error.hpp"
#include "trigal/gf.hpp"

#include <algorithm>
#include <sstream>

namespace trigal {

MContext::MContext(std::uint32_t p, std::vector<std::string> variables) : p_(p), vars_(std::move(variables)) {
    if (!is_prime(p)) {
        throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    }
}

std::size_t MContext::index_of(std::string_view name) const {
    const auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) {
        throw Error(ErrorCode::UnknownVariable, "unknown variable '" + std::string(name) + "'");
    }
    return static_cast<std::size_t>(it - vars_.begin());
}

namespace {

void require_same_context(const MPoly& f, const MPoly& g) {
    if (f.context() != g.context() &&
        (f.context()->characteristic() != g.context()->characteristic() ||
         f.context()->variables() != g.context()->variables())) {
        throw Error(ErrorCode::ContextMismatch, "polynomials from different contexts");
    }
}

std::uint32_t reduce_coeff(std::int64_t c, std::uint32_t p) {
    const std::int64_t m = c % static_cast<std::int64_t>(p);
    return static_cast<std::uint32_t>(m < 0 ? m + p : m);
}

} // namespace

MPoly MPoly::constant(const MContextPtr& ctx, std::int64_t c) {
    return term(ctx, c, Exponents(ctx->arity(), 0));
}

MPoly MPoly::variable(const MContextPtr& ctx, std::string_view name) {
    Exponents e(ctx->arity(), 0);
    e[ctx->index_of(name)] = 1;
    return term(ctx, 1, std::move(e));
}

MPoly MPoly::term(const MContextPtr& ctx, std::int64_t c, Exponents exps) {
    if (exps.size() != ctx->arity()) {
        throw Error(ErrorCode::ContextMismatch, "exponent vector arity mismatch");
    }
    MPoly f(ctx);
    f.add_term(exps, reduce_coeff(c, ctx->characteristic()));
    return f;
}

void MPoly::add_term(const Exponents& exps, std::uint32_t c) {
    const std::uint32_t p = ctx_->characteristic();
    c %= p;
    if (c == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second = static_cast<std::uint32_t>((std::uint64_t{it->second} + c) % p);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

std::int64_t MPoly::degree_in(std::size_t var) const {
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) {
        d = std::max(d, e[var]);
    }
    return d;
}

MPoly operator+(const MPoly& f, const MPoly& g) {
    require_same_context(f, g);
    MPoly r = f;
    for (const auto& [e, c] : g.terms_) {
        r.add_term(e, c);
    }
    return r;
}

MPoly operator-(const MPoly& f) {
    MPoly r(f.ctx_);
    const std::uint32_t p = f.ctx_->characteristic();
    for (const auto& [e, c] : f.terms_) {
        r.terms_.emplace(e, p - c);
    }
    return r;
}

MPoly operator-(const MPoly& f, const MPoly& g) { return f + (-g); }

MPoly operator*(const MPoly& f, const MPoly& g) {
    require_same_context(f, g);
    const std::uint32_t p = f.ctx_->characteristic();
    MPoly r(f.ctx_);
    Exponents e(f.ctx_->arity());
    for (const auto& [ef, cf] : f.terms_) {
        for (const auto& [eg, cg] : g.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ef[i] + eg[i];
            }
            r.add_term(e, static_cast<std::uint32_t>(std::uint64_t{cf} * cg % p));
        }
    }
    return r;
}

bool operator==(const MPoly& f, const MPoly& g) {
    return f.ctx_->variables() == g.ctx_->variables() && f.ctx_->characteristic() == g.ctx_->characteristic() &&
           f.terms_ == g.terms_;
}

MPoly MPoly::pow(std::uint64_t e) const {
    MPoly result = constant(ctx_, 1);
    MPoly base = *this;
    while (e) {
        if (e & 1) {
            result = result * base;
        }
        e >>= 1;
        if (e) {
            base = base * base;
        }
    }
    return result;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) {
            os << " + ";
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) {
                continue;
            }
            mono << (any_var ? "*" : "") << ctx_->variables()[i];
            if (e[i] != 1) {
                mono << '^' << e[i];
            }
            any_var = true;
        }
        if (!any_var) {
            os << c;
        } else if (c == 1) {
            os << mono.str();
        } else {
            os << c << '*' << mono.str();
        }
    }
    return os.str();
}

MPoly substitute(const MPoly& f, std::string_view var, const MPoly& replacement) {
    require_same_context(f, replacement);
    const auto& ctx = f.context();
    const std::size_t v = ctx->index_of(var);
    // Group by the exponent of var so each power of the replacement is
    // computed once.
    std::map<std::int64_t, MPoly> groups;
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        auto [it, _] = groups.try_emplace(e[v], MPoly(ctx));
        it->second.add_term(rest, c);
    }
    MPoly result(ctx);
    MPoly power = MPoly::constant(ctx, 1);
    std::int64_t have = 0;
    for (const auto& [k, coeff] : groups) {
        power = power * replacement.pow(static_cast<std::uint64_t>(k - have));
        have = k;
        result = result + coeff * power;
    }
    return result;
}

TriangularRing::TriangularRing(MContextPtr ctx, const std::vector<std::pair<std::string, MPoly>>& relations)
    : ctx_(std::move(ctx)) {
    for (const auto& [name, poly] : relations) {
        if (poly.context()->variables() != ctx_->variables() ||
            poly.context()->characteristic() != ctx_->characteristic()) {
            throw Error(ErrorCode::ContextMismatch, "relation from a different context");
        }
        const std::size_t v = ctx_->index_of(name);
        const std::int64_t d = poly.degree_in(v);
        if (d < 1) {
            throw Error(ErrorCode::NonMonicRelation, "relation for '" + name + "' does not involve it");
        }
        Exponents lead(ctx_->arity(), 0);
        lead[v] = d;
        std::size_t top_terms = 0;
        for (const auto& [e, c] : poly.terms()) {
            if (e[v] == d) {
                ++top_terms;
                if (e != lead || c != 1) {
                    throw Error(ErrorCode::NonMonicRelation, "relation for '" + name + "' is not monic");
                }
            }
        }
        if (top_terms != 1) {
            throw Error(ErrorCode::NonMonicRelation, "relation for '" + name + "' is not monic");
        }
        for (const auto& r : rels_) {
            if (r.bound == v) {
                throw Error(ErrorCode::NonMonicRelation, "variable '" + name + "' bound twice");
            }
            if (r.poly.degree_in(v) > 0) {
                throw Error(ErrorCode::NonMonicRelation, "relations are not triangular");
            }
        }
        rels_.push_back({v, d, poly});
    }
}

namespace {

// f mod (v^d + tail), processing v-exponents from the top down.
MPoly reduce_by(const MPoly& f, const TriangularRing::Relation& rel) {
    const auto& ctx = f.context();
    const std::uint32_t p = ctx->characteristic();
    const std::size_t v = rel.bound;
    if (f.degree_in(v) < rel.degree) {
        return f;
    }
    std::map<std::int64_t, std::map<Exponents, std::uint32_t>> buckets;
    for (const auto& [e, c] : f.terms()) {
        Exponents rest = e;
        rest[v] = 0;
        buckets[e[v]].emplace(std::move(rest), c);
    }
    // -tail, keyed by v-exponent.
    std::vector<std::pair<std::int64_t, std::pair<Exponents, std::uint32_t>>> neg_tail;
    for (const auto& [e, c] : rel.poly.terms()) {
        if (e[v] == rel.degree) {
            continue;
        }
        Exponents rest = e;
        rest[v] = 0;
        neg_tail.push_back({e[v], {std::move(rest), p - c}});
    }
    Exponents sum(ctx->arity());
    while (!buckets.empty()) {
        auto top = std::prev(buckets.end());
        const std::int64_t e = top->first;
        if (e < rel.degree) {
            break;
        }
        const auto terms = std::move(top->second);
        buckets.erase(top);
        for (const auto& [te, tail_term] : neg_tail) {
            const auto& [tail_exps, tail_c] = tail_term;
            auto& dest = buckets[e - rel.degree + te];
            for (const auto& [m, c] : terms) {
                for (std::size_t i = 0; i < sum.size(); ++i) {
                    sum[i] = m[i] + tail_exps[i];
                }
                const auto add = static_cast<std::uint32_t>(std::uint64_t{c} * tail_c % p);
                auto [it, inserted] = dest.try_emplace(sum, add);
                if (!inserted) {
                    it->second = static_cast<std::uint32_t>((std::uint64_t{it->second} + add) % p);
                    if (it->second == 0) {
                        dest.erase(it);
                    }
                }
            }
        }
    }
    MPoly out(ctx);
    for (auto& [e, terms] : buckets) {
        for (const auto& [m, c] : terms) {
            Exponents full = m;
            full[v] = e;
            out.add_term(full, c);
        }
    }
    return out;
}

} // namespace

MPoly TriangularRing::reduce(const MPoly& f) const {
    if (f.context()->variables() != ctx_->variables() || f.context()->characteristic() != ctx_->characteristic()) {
        throw Error(ErrorCode::ContextMismatch, "polynomial from a different context");
    }
    MPoly r = f;
    for (auto it = rels_.rbegin(); it != rels_.rend(); ++it) {
        r = reduce_by(r, *it);
    }
    return r;
}

MPoly TriangularRing::pow(const MPoly& f, std::uint64_t e) const {
    MPoly result = reduce(MPoly::constant(ctx_, 1));
    MPoly base = reduce(f);
    while (e) {
        if (e & 1) {
            result = reduce(result * base);
        }
        e >>= 1;
        if (e) {
            base = reduce(base * base);
        }
    }
    return result;
}

} // namespace trigal
