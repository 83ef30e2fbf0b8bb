#include "trigal/newton.hpp"

#include "trigal/error.hpp"

#include <algorithm>
#include <sstream>

namespace trigal {

std::int64_t NewtonPolygon::width() const {
    std::int64_t w = 0;
    for (const auto& s : segments) {
        w += s.run;
    }
    return w;
}

Rational NewtonPolygon::value_at(std::int64_t x) const {
    Rational v = start_value;
    std::int64_t at = start;
    for (const auto& s : segments) {
        if (x <= at + s.run) {
            return v + s.slope * (x - at);
        }
        v += s.slope * s.run;
        at += s.run;
    }
    return v;
}

std::string NewtonPolygon::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < segments.size(); ++i) {
        os << (i ? ", " : "") << '(' << segments[i].slope << ", " << segments[i].run << ')';
    }
    os << ']';
    return os.str();
}

NewtonPolygon lower_hull(const std::vector<ValuedPoint>& points) {
    struct Pt {
        std::int64_t x;
        Rational y;
    };
    std::vector<Pt> finite;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0 && points[i].exponent <= points[i - 1].exponent) {
            throw Error(ErrorCode::InvalidShape, "exponents must be strictly increasing");
        }
        if (points[i].valuation) {
            finite.push_back({points[i].exponent, *points[i].valuation});
        }
    }
    if (finite.size() < 2) {
        throw Error(ErrorCode::TooFewPoints, "a Newton polygon needs at least two finite points");
    }
    // Monotone chain; a middle point on or above the chord is dropped, which
    // also merges collinear runs.
    std::vector<Pt> hull;
    for (const auto& pt : finite) {
        while (hull.size() >= 2) {
            const Pt& a = hull[hull.size() - 2];
            const Pt& b = hull.back();
            const Rational cross = (b.y - a.y) * (pt.x - a.x) - (pt.y - a.y) * (b.x - a.x);
            if (cross.numerator() >= 0) {
                hull.pop_back();
            } else {
                break;
            }
        }
        hull.push_back(pt);
    }
    NewtonPolygon poly;
    poly.start = hull.front().x;
    poly.start_value = hull.front().y;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const std::int64_t run = hull[i].x - hull[i - 1].x;
        poly.segments.push_back({(hull[i].y - hull[i - 1].y) / run, run});
    }
    return poly;
}

TameCycles tame_cycle_pattern(const NewtonPolygon& polygon, std::uint32_t p) {
    TameCycles out;
    std::vector<std::int64_t> cycles;
    for (const auto& s : polygon.segments) {
        // Compare the numerator: rational == int recurses under C++20 with Boost 1.74.
        if (s.slope.numerator() == 0) {
            out.unconstrained_run += s.run;
            continue;
        }
        const std::int64_t e = s.slope.denominator();
        if (p != 0 && e % p == 0) {
            out.cycles.reset();
            return out;
        }
        // With integral valuations the rise h*r/e is an integer, so e | r.
        if (s.run % e != 0) {
            throw Error(ErrorCode::InvalidShape, "segment run not divisible by its ramification index; "
                                                 "valuations must be integral over the base field");
        }
        for (std::int64_t i = 0; i < s.run / e; ++i) {
            cycles.push_back(e);
        }
    }
    std::sort(cycles.begin(), cycles.end());
    out.cycles = std::move(cycles);
    return out;
}

} // namespace trigal
