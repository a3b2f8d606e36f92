// SPDX-License-Identifier: Apache-2.0
//
// zrelay: rate regions of the Gaussian Z-interference channel with a
// unidirectional digital relay link.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace zrelay {

/// Slack used for containment, vertex de-duplication and redundancy tests (bits).
inline constexpr double kBitsTol = 1e-9;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

struct Point
{
    double r1 = 0.0;
    double r2 = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double cross(Point o, Point a, Point b)
{
    return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

inline double distance(Point a, Point b) { return std::hypot(a.r1 - b.r1, a.r2 - b.r2); }

/// a*R1 + b*R2 <= c
struct HalfPlane
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    [[nodiscard]] double slack(Point p) const { return c - a * p.r1 - b * p.r2; }

    /// Scaled so that max(|a|, |b|) == 1; a zero normal is returned unchanged.
    [[nodiscard]] HalfPlane normalized() const
    {
        const double m = std::max(std::abs(a), std::abs(b));
        if (m == 0.0)
            return *this;
        return {a / m, b / m, c / m};
    }
};

class UnboundedRegionError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// {R1 <= r1_max, R2 <= r2_max, R1 + R2 <= sum_max}; +inf marks a missing constraint.
struct Pentagon
{
    double r1_max = kInf;
    double r2_max = kInf;
    double sum_max = kInf;

    void validate() const
    {
        if (std::isnan(r1_max) || std::isnan(r2_max) || std::isnan(sum_max) || r1_max < 0.0 ||
            r2_max < 0.0 || sum_max < 0.0)
            throw std::invalid_argument("Pentagon: bounds must be non-negative");
    }

    [[nodiscard]] bool is_rectangle() const { return sum_max >= r1_max + r2_max; }

    /// Tightest equivalent bounds: each constraint touches the region.
    [[nodiscard]] Pentagon tightened() const
    {
        Pentagon t;
        t.r1_max = std::min(r1_max, sum_max);
        t.r2_max = std::min(r2_max, sum_max);
        t.sum_max = std::min(sum_max, t.r1_max + t.r2_max);
        return t;
    }
};

/// Convex region of the non-negative quadrant: {R >= 0 : every half-plane holds}.
/// `vertices` is the same set as a counterclockwise boundary starting at the
/// lexicographically smallest vertex (the origin for rate regions). The
/// quadrant constraints are implicit and never stored in `halfplanes`.
struct RateRegion
{
    std::vector<HalfPlane> halfplanes;
    std::vector<Point> vertices;

    [[nodiscard]] bool empty() const { return vertices.empty(); }

    [[nodiscard]] bool contains(Point p, double slack = kBitsTol) const
    {
        if (empty() || p.r1 < -slack || p.r2 < -slack)
            return false;
        return std::all_of(halfplanes.begin(), halfplanes.end(),
                           [&](const HalfPlane& h) { return h.slack(p) >= -slack; });
    }

    /// max over the region of w1*R1 + w2*R2.
    [[nodiscard]] double support(double w1, double w2) const
    {
        double best = -kInf;
        for (const auto& v : vertices)
            best = std::max(best, w1 * v.r1 + w2 * v.r2);
        return best;
    }

    [[nodiscard]] double max_r1() const { return support(1.0, 0.0); }
    [[nodiscard]] double max_r2() const { return support(0.0, 1.0); }
    [[nodiscard]] double max_sum_rate() const { return support(1.0, 1.0); }
};

inline double polygon_area(std::span<const Point> poly)
{
    double twice = 0.0;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& p = poly[i];
        const Point& q = poly[(i + 1) % poly.size()];
        twice += p.r1 * q.r2 - q.r1 * p.r2;
    }
    return 0.5 * std::abs(twice);
}

inline double area(const RateRegion& r) { return polygon_area(r.vertices); }

namespace detail {

// Drops repeated and (nearly) collinear vertices from a closed polygon.
inline std::vector<Point> simplify_polygon(std::vector<Point> poly, double tol = 1e-12)
{
    bool changed = true;
    while (changed && poly.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < poly.size() && poly.size() >= 3; ++i) {
            const Point& prev = poly[(i + poly.size() - 1) % poly.size()];
            const Point& cur = poly[i];
            const Point& next = poly[(i + 1) % poly.size()];
            // Drop duplicates and vertices within tol of the line through their neighbours.
            const double span = distance(prev, next);
            if (distance(prev, cur) <= tol || std::abs(cross(prev, cur, next)) <= tol * span) {
                poly.erase(poly.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (poly.size() < 3) {
        // Degenerate (segment or point); keep distinct endpoints only.
        std::vector<Point> out;
        for (const auto& p : poly)
            if (std::none_of(out.begin(), out.end(), [&](const Point& q) { return distance(p, q) <= tol; }))
                out.push_back(p);
        return out;
    }
    return poly;
}

inline void rotate_to_lexicographic_min(std::vector<Point>& poly)
{
    if (poly.empty())
        return;
    auto it = std::min_element(poly.begin(), poly.end(), [](const Point& x, const Point& y) {
        if (std::abs(x.r1 - y.r1) > 1e-15)
            return x.r1 < y.r1;
        return x.r2 < y.r2;
    });
    std::rotate(poly.begin(), it, poly.end());
}

inline bool is_quadrant_edge(Point p, Point q, double tol)
{
    return (std::abs(p.r1) <= tol && std::abs(q.r1) <= tol) || (std::abs(p.r2) <= tol && std::abs(q.r2) <= tol);
}

// Half-planes through the polygon edges (CCW), skipping edges on the axes.
inline std::vector<HalfPlane> edge_halfplanes(const std::vector<Point>& poly, double tol)
{
    std::vector<HalfPlane> out;
    if (poly.size() < 3)
        return out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i];
        const Point q = poly[(i + 1) % poly.size()];
        if (is_quadrant_edge(p, q, tol))
            continue;
        // Outward normal of a CCW edge p->q is (dy, -dx).
        const double a = q.r2 - p.r2;
        const double b = p.r1 - q.r1;
        out.push_back(HalfPlane{a, b, a * p.r1 + b * p.r2}.normalized());
    }
    return out;
}

// Sutherland-Hodgman step: keep the part of a convex polygon where h holds.
inline std::vector<Point> clip(const std::vector<Point>& poly, const HalfPlane& h)
{
    std::vector<Point> out;
    if (poly.empty())
        return out;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point p = poly[i];
        const Point q = poly[(i + 1) % poly.size()];
        const double sp = h.slack(p);
        const double sq = h.slack(q);
        if (sp >= 0.0)
            out.push_back(p);
        if ((sp >= 0.0) != (sq >= 0.0)) {
            const double t = sp / (sp - sq);
            Point x{p.r1 + t * (q.r1 - p.r1), p.r2 + t * (q.r2 - p.r2)};
            // Axis-aligned edges: solve the line exactly instead of interpolating.
            if (p.r1 == q.r1 && h.b != 0.0)
                x = {p.r1, (h.c - h.a * p.r1) / h.b};
            else if (p.r2 == q.r2 && h.a != 0.0)
                x = {(h.c - h.b * p.r2) / h.a, p.r2};
            out.push_back(x);
        }
    }
    return out;
}

} // namespace detail

/// Vertex enumeration of {R >= 0 : halfplanes}. Empty intersection gives an
/// empty region; an unbounded one throws UnboundedRegionError. Only the
/// half-planes supporting an edge are kept.
inline RateRegion region_from_halfplanes(std::span<const HalfPlane> halfplanes)
{
    constexpr double kBox = 1e6;
    std::vector<Point> poly{{0.0, 0.0}, {kBox, 0.0}, {kBox, kBox}, {0.0, kBox}};
    for (const auto& h : halfplanes) {
        if (h.a == 0.0 && h.b == 0.0) {
            if (h.c < -kBitsTol)
                return {};
            continue;
        }
        if (std::isinf(h.c) && h.c > 0.0)
            continue;
        poly = detail::clip(poly, h.normalized());
        if (poly.empty())
            return {};
    }
    for (const auto& v : poly)
        if (v.r1 >= 0.5 * kBox || v.r2 >= 0.5 * kBox)
            throw UnboundedRegionError("region is unbounded in the non-negative quadrant");

    poly = detail::simplify_polygon(std::move(poly));
    detail::rotate_to_lexicographic_min(poly);

    RateRegion region;
    region.vertices = poly;
    if (poly.size() >= 3) {
        // Keep input rows that are tight along an edge; fall back to the edge lines.
        for (const auto& e : detail::edge_halfplanes(poly, 1e-12)) {
            const HalfPlane* match = nullptr;
            for (const auto& h : halfplanes) {
                const HalfPlane n = h.normalized();
                if (std::abs(n.a - e.a) <= 1e-9 && std::abs(n.b - e.b) <= 1e-9 && std::abs(n.c - e.c) <= 1e-9) {
                    match = &h;
                    break;
                }
            }
            region.halfplanes.push_back(match ? match->normalized() : e);
        }
    }
    return region;
}

/// Counterclockwise convex hull (Andrew's monotone chain), collinear points dropped.
inline std::vector<Point> convex_hull(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
        return x.r1 < y.r1 || (x.r1 == y.r1 && x.r2 < y.r2);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Point> hull(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0)
            --k;
        hull[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0)
            --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// Region spanned by the convex hull of `pts` (assumed in the quadrant).
inline RateRegion region_from_points(std::vector<Point> pts)
{
    RateRegion region;
    auto hull = detail::simplify_polygon(convex_hull(std::move(pts)));
    detail::rotate_to_lexicographic_min(hull);
    region.halfplanes = detail::edge_halfplanes(hull, 1e-12);
    region.vertices = std::move(hull);
    return region;
}

inline RateRegion pentagon_to_region(const Pentagon& p)
{
    p.validate();
    const HalfPlane hs[] = {{1.0, 0.0, p.r1_max}, {0.0, 1.0, p.r2_max}, {1.0, 1.0, p.sum_max}};
    return region_from_halfplanes(hs);
}

/// Reads the three pentagon bounds back from a region via its support function.
inline Pentagon region_to_pentagon(const RateRegion& r)
{
    return {r.max_r1(), r.max_r2(), r.max_sum_rate()};
}

/// Euclidean distance from p to a convex polygon (0 inside).
inline double distance_to_polygon(Point p, const std::vector<Point>& poly)
{
    if (poly.empty())
        return kInf;
    if (poly.size() == 1)
        return distance(p, poly[0]);
    bool inside = poly.size() >= 3;
    double best = kInf;
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point a = poly[i];
        const Point b = poly[(i + 1) % poly.size()];
        if (cross(a, b, p) < 0.0)
            inside = false;
        const double dx = b.r1 - a.r1, dy = b.r2 - a.r2;
        const double len2 = dx * dx + dy * dy;
        double t = len2 > 0.0 ? ((p.r1 - a.r1) * dx + (p.r2 - a.r2) * dy) / len2 : 0.0;
        t = std::clamp(t, 0.0, 1.0);
        best = std::min(best, distance(p, {a.r1 + t * dx, a.r2 + t * dy}));
    }
    return inside ? 0.0 : best;
}

/// Hausdorff distance between two convex regions. For convex sets the
/// directed distance is attained at a vertex, so vertex sweeps are exact.
inline double hausdorff_distance(const RateRegion& x, const RateRegion& y)
{
    if (x.empty() && y.empty())
        return 0.0;
    if (x.empty() || y.empty())
        return kInf;
    double d = 0.0;
    for (const auto& v : x.vertices)
        d = std::max(d, distance_to_polygon(v, y.vertices));
    for (const auto& v : y.vertices)
        d = std::max(d, distance_to_polygon(v, x.vertices));
    return d;
}

/// True when every point of `inner` lies in `outer` (vertex test, convex sets).
inline bool region_contains(const RateRegion& outer, const RateRegion& inner, double slack = kBitsTol)
{
    return std::all_of(inner.vertices.begin(), inner.vertices.end(),
                       [&](const Point& v) { return outer.contains(v, slack); });
}

namespace detail {

// Upper boundary R2 = f(R1) of a down-closed region, on [0, max R1].
class UpperBoundary
{
public:
    explicit UpperBoundary(const RateRegion& r)
    {
        for (const auto& h : r.halfplanes)
            if (h.a < -1e-12 || h.b < -1e-12)
                throw std::invalid_argument("union area: region is not down-closed");
        if (!r.empty() && !r.contains({0.0, 0.0}))
            throw std::invalid_argument("union area: region does not contain the origin");
        // CCW from the origin: the upper chain runs from the topmost vertex at
        // max R1 back to the R2 axis with decreasing R1.
        const double xmax = r.max_r1();
        std::size_t start = 0;
        double best = -kInf;
        for (std::size_t i = 0; i < r.vertices.size(); ++i)
            if (r.vertices[i].r1 >= xmax - 1e-15 && r.vertices[i].r2 > best) {
                best = r.vertices[i].r2;
                start = i;
            }
        for (std::size_t i = start; i < r.vertices.size(); ++i)
            chain_.push_back(r.vertices[i]);
        std::reverse(chain_.begin(), chain_.end()); // increasing R1
        if (chain_.empty() || chain_.front().r1 > 1e-15)
            chain_.insert(chain_.begin(), Point{0.0, chain_.empty() ? 0.0 : chain_.front().r2});
    }

    [[nodiscard]] double xmax() const { return chain_.empty() ? 0.0 : chain_.back().r1; }

    [[nodiscard]] double operator()(double x) const
    {
        if (chain_.empty() || x > xmax())
            return 0.0;
        auto it = std::lower_bound(chain_.begin(), chain_.end(), x,
                                   [](const Point& p, double v) { return p.r1 < v; });
        if (it == chain_.begin())
            return it->r2;
        if (it == chain_.end())
            return chain_.back().r2;
        const Point b = *it;
        const Point a = *(it - 1);
        if (b.r1 - a.r1 <= 0.0)
            return std::max(a.r2, b.r2);
        return a.r2 + (b.r2 - a.r2) * (x - a.r1) / (b.r1 - a.r1);
    }

    [[nodiscard]] std::vector<double> breakpoints() const
    {
        std::vector<double> xs;
        for (const auto& p : chain_)
            xs.push_back(p.r1);
        return xs;
    }

private:
    std::vector<Point> chain_;
};

struct Line
{
    double y0;    // value at the interval start
    double slope;
};

// Exact integral over [x0, x1] of the pointwise maximum of lines.
inline double integrate_upper_envelope(const std::vector<Line>& lines, double x0, double x1)
{
    const double len = x1 - x0;
    if (lines.empty() || len <= 0.0)
        return 0.0;
    auto pick = [&](double t) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            const double vi = lines[i].y0 + lines[i].slope * t;
            const double vb = lines[best].y0 + lines[best].slope * t;
            if (vi > vb || (vi == vb && lines[i].slope > lines[best].slope))
                best = i;
        }
        return best;
    };
    double t = 0.0;
    double total = 0.0;
    std::size_t cur = pick(0.0);
    while (t < len) {
        double next_t = len;
        std::size_t next = cur;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (lines[i].slope <= lines[cur].slope)
                continue;
            const double tc = (lines[cur].y0 - lines[i].y0) / (lines[i].slope - lines[cur].slope);
            if (tc > t && tc < next_t) {
                next_t = tc;
                next = i;
            }
        }
        const Line& l = lines[cur];
        total += (next_t - t) * (l.y0 + 0.5 * l.slope * (t + next_t));
        t = next_t;
        if (next == cur)
            break;
        cur = next;
    }
    return total;
}

} // namespace detail

/// Exact area of the union of down-closed convex regions (all rate regions are).
inline double union_area(std::span<const RateRegion> regions)
{
    std::vector<detail::UpperBoundary> bounds;
    std::vector<double> xs{0.0};
    for (const auto& r : regions) {
        if (r.empty())
            continue;
        bounds.emplace_back(r);
        auto b = bounds.back().breakpoints();
        xs.insert(xs.end(), b.begin(), b.end());
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
        const double x0 = xs[k], x1 = xs[k + 1];
        const double len = x1 - x0;
        if (len <= 0.0)
            continue;
        // Every boundary is linear on [x0, x1]: all chain vertices are breakpoints.
        std::vector<detail::Line> lines;
        for (const auto& f : bounds) {
            if (f.xmax() <= x0)
                continue;
            const double ya = f(x0);
            lines.push_back({ya, (f(x1) - ya) / len});
        }
        total += detail::integrate_upper_envelope(lines, x0, x1);
    }
    return total;
}

struct SweepUnion
{
    RateRegion hull;          // convex hull of the union
    double hull_area = 0.0;
    double union_area = 0.0;  // area of the raw union

    /// Relative area the hull adds on top of the union.
    [[nodiscard]] double hull_excess() const
    {
        return hull_area > 0.0 ? (hull_area - union_area) / hull_area : 0.0;
    }
    [[nodiscard]] bool hull_needed(double rel_tol = 1e-6) const { return hull_excess() >= rel_tol; }
};

/// Convex hull of the union of down-closed regions, with the area the hull added.
inline SweepUnion union_over_sweep(std::span<const RateRegion> regions)
{
    if (regions.empty())
        throw std::domain_error("union_over_sweep: empty region list");
    std::vector<Point> pts;
    for (const auto& r : regions)
        pts.insert(pts.end(), r.vertices.begin(), r.vertices.end());
    SweepUnion u;
    u.hull = region_from_points(std::move(pts));
    u.hull_area = area(u.hull);
    u.union_area = regions.size() == 1 ? area(regions[0]) : union_area(regions);
    return u;
}

struct ConcavityReport
{
    bool monotone_ok = true;
    bool concave_ok = true;
    double max_monotone_violation = 0.0;  // largest increase of R2 between samples
    double max_concavity_violation = 0.0; // largest increase of the secant slope
    double max_violation = 0.0;
};

/// Checks that a sampled boundary R2(R1), with strictly increasing R1, is
/// nonincreasing and concave (secant slopes nonincreasing) within `tol`.
inline ConcavityReport check_boundary_concavity(std::span<const Point> curve, double tol = kBitsTol)
{
    if (curve.size() < 3)
        throw std::domain_error("check_boundary_concavity: need at least 3 samples");
    for (std::size_t i = 1; i < curve.size(); ++i)
        if (!(curve[i].r1 > curve[i - 1].r1))
            throw std::domain_error("check_boundary_concavity: R1 samples must be strictly increasing");

    ConcavityReport rep;
    std::vector<double> slopes;
    for (std::size_t i = 1; i < curve.size(); ++i) {
        const double dy = curve[i].r2 - curve[i - 1].r2;
        rep.max_monotone_violation = std::max(rep.max_monotone_violation, dy);
        slopes.push_back(dy / (curve[i].r1 - curve[i - 1].r1));
    }
    for (std::size_t i = 1; i < slopes.size(); ++i)
        rep.max_concavity_violation = std::max(rep.max_concavity_violation, slopes[i] - slopes[i - 1]);
    rep.monotone_ok = rep.max_monotone_violation <= tol;
    rep.concave_ok = rep.max_concavity_violation <= tol;
    rep.max_violation = std::max(rep.max_monotone_violation, rep.max_concavity_violation);
    return rep;
}

} // namespace zrelay
