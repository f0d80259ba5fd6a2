#include "atb/geometry.hpp"

#include <algorithm>

namespace atb {

int orientation(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c) {
    Rat v = cross2(Vec2Q(b - a), Vec2Q(c - a));
    if (v > 0) return 1;
    if (v < 0) return -1;
    return 0;
}

bool point_on_segment(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

bool segments_intersect(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    return (o1 == 0 && point_on_segment(c, a, b)) || (o2 == 0 && point_on_segment(d, a, b)) ||
           (o3 == 0 && point_on_segment(a, c, d)) || (o4 == 0 && point_on_segment(b, c, d));
}

bool segments_cross_properly(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d) {
    int o1 = orientation(a, b, c), o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a), o4 = orientation(c, d, b);
    return o1 * o2 < 0 && o3 * o4 < 0;
}

bool segment_inside_segment(const Vec2Q& p, const Vec2Q& q, const Vec2Q& a, const Vec2Q& b) {
    return point_on_segment(p, a, b) && point_on_segment(q, a, b);
}

PointLocation locate_point(const Vec2Q& p, const std::vector<Vec2Q>& polygon) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        if (point_on_segment(p, polygon[i], polygon[(i + 1) % n])) return PointLocation::Boundary;
    // Crossing-number walk with half-open edges, exact over the rationals.
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q& a = polygon[i];
        const Vec2Q& b = polygon[(i + 1) % n];
        if ((a.y() > p.y()) != (b.y() > p.y())) {
            // x-coordinate of the edge at height p.y
            Rat t = (p.y() - a.y()) / (b.y() - a.y());
            Rat x = a.x() + t * (b.x() - a.x());
            if (x > p.x()) inside = !inside;
        }
    }
    return inside ? PointLocation::Inside : PointLocation::Outside;
}

Rat twice_signed_area(const std::vector<Vec2Q>& polygon) {
    Rat acc(0);
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q& a = polygon[i];
        const Vec2Q& b = polygon[(i + 1) % n];
        acc += a.x() * b.y() - b.x() * a.y();
    }
    return acc;
}

bool polygon_is_simple(const std::vector<Vec2Q>& polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i)
        if (polygon[i] == polygon[(i + 1) % n]) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q& a = polygon[i];
        const Vec2Q& b = polygon[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const Vec2Q& c = polygon[j];
            const Vec2Q& d = polygon[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) {
                // Consecutive edges share exactly their common endpoint; a
                // doubled-back spike would overlap along a segment.
                const Vec2Q& shared = (j == i + 1) ? b : a;
                const Vec2Q& other1 = (j == i + 1) ? a : c;
                const Vec2Q& other2 = (j == i + 1) ? d : b;
                if (orientation(shared, other1, other2) == 0) {
                    Vec2Q u = other1 - shared, v = other2 - shared;
                    if (u.dot(v) > 0) return false;
                }
                continue;
            }
            if (segments_intersect(a, b, c, d)) return false;
        }
    }
    return true;
}

bool polygon_is_convex_ccw(const std::vector<Vec2Q>& polygon) {
    const std::size_t n = polygon.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        if (orientation(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) != 1) return false;
    }
    return true;
}

bool segment_intersects_polygon_boundary_properly(const Vec2Q& a, const Vec2Q& b,
                                                  const std::vector<Vec2Q>& polygon) {
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i)
        if (segments_cross_properly(a, b, polygon[i], polygon[(i + 1) % n])) return true;
    return false;
}

bool segment_in_closed_polygon(const Vec2Q& a, const Vec2Q& b, const std::vector<Vec2Q>& polygon) {
    if (locate_point(a, polygon) == PointLocation::Outside ||
        locate_point(b, polygon) == PointLocation::Outside)
        return false;
    if (a == b) return true;
    // Split the segment at every boundary intersection and probe each piece.
    std::vector<Rat> cuts{Rat(0), Rat(1)};
    const Vec2Q dir = b - a;
    const std::size_t n = polygon.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2Q& c = polygon[i];
        const Vec2Q& d = polygon[(i + 1) % n];
        const Vec2Q e = d - c;
        Rat denom = cross2(dir, e);
        if (denom != 0) {
            Rat t = cross2(Vec2Q(c - a), e) / denom;
            Rat s = cross2(Vec2Q(c - a), dir) / denom;
            if (t >= 0 && t <= 1 && s >= 0 && s <= 1) cuts.push_back(t);
        } else if (orientation(a, b, c) == 0) {
            // Collinear edge: its endpoints delimit an overlap interval.
            Rat dd = dir.dot(dir);
            for (const Vec2Q& q : {c, d}) {
                Rat t = Vec2Q(q - a).dot(dir) / dd;
                if (t >= 0 && t <= 1) cuts.push_back(t);
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (cuts[i] == cuts[i + 1]) continue;
        Rat mid = (cuts[i] + cuts[i + 1]) / Rat(2);
        Vec2Q p = a + Vec2Q(mid * dir.x(), mid * dir.y());
        if (locate_point(p, polygon) == PointLocation::Outside) return false;
    }
    return true;
}

bool polygon_inside_closed(const std::vector<Vec2Q>& inner, const std::vector<Vec2Q>& outer) {
    const std::size_t n = inner.size();
    for (std::size_t i = 0; i < n; ++i)
        if (!segment_in_closed_polygon(inner[i], inner[(i + 1) % n], outer)) return false;
    // No outer vertex may sit strictly inside `inner` (a notch of `outer`
    // poking into it would put one there).
    for (const Vec2Q& q : outer)
        if (locate_point(q, inner) == PointLocation::Inside) return false;
    return true;
}

bool interior_inside_interior(const std::vector<Vec2Q>& inner, const std::vector<Vec2Q>& outer) {
    if (!polygon_inside_closed(inner, outer)) return false;
    // Containment in the closed region plus no boundary piercing means the
    // open regions nest; a centroid probe guards against degenerate inputs.
    Vec2Q centroid(Rat(0), Rat(0));
    for (const Vec2Q& p : inner) centroid += p;
    centroid /= Rat(Int(inner.size()));
    return locate_point(centroid, outer) != PointLocation::Outside;
}

}  // namespace atb
