#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace trigal {

using Rational = boost::rational<std::int64_t>;

/// (i, v(a_i)); an empty valuation stands for a zero coefficient (+infinity).
struct ValuedPoint {
    std::int64_t exponent;
    std::optional<Rational> valuation;
};

struct Segment {
    Rational slope;
    std::int64_t run;

    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of the finite points, segments in increasing slope.
struct NewtonPolygon {
    std::int64_t start = 0; // smallest finite exponent
    Rational start_value{0};
    std::vector<Segment> segments;

    /// Sum of runs.
    std::int64_t width() const;
    /// Hull height at integer abscissa x within [start, start + width()].
    Rational value_at(std::int64_t x) const;
    std::string to_string() const;
};

/// Throws TooFewPoints with fewer than two finite points and InvalidShape
/// when exponents are not strictly increasing.
NewtonPolygon lower_hull(const std::vector<ValuedPoint>& points);

struct TameCycles {
    /// Cycle lengths forced on an inertia generator; empty optional means
    /// some segment is wild and nothing is deduced.
    std::optional<std::vector<std::int64_t>> cycles;
    /// Total run of slope-zero segments, which carry no claim.
    std::int64_t unconstrained_run = 0;
};

/// Each tame segment of slope h/e (lowest terms) contributes run/e cycles of
/// length e. A segment with p | e makes the whole deduction wild. p = 0 is
/// characteristic zero.
TameCycles tame_cycle_pattern(const NewtonPolygon& polygon, std::uint32_t p);

} // namespace trigal
