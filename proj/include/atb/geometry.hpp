#pragma once

#include "atb/affine.hpp"

#include <vector>

namespace atb {

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right, 0 collinear.
int orientation(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c);

bool point_on_segment(const Vec2Q& p, const Vec2Q& a, const Vec2Q& b);  // endpoints included

/// Segments share at least one point (touching counts).
bool segments_intersect(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d);

/// Segments cross at a single interior point of both.
bool segments_cross_properly(const Vec2Q& a, const Vec2Q& b, const Vec2Q& c, const Vec2Q& d);

/// Segment [p, q] is contained in segment [a, b].
bool segment_inside_segment(const Vec2Q& p, const Vec2Q& q, const Vec2Q& a, const Vec2Q& b);

enum class PointLocation { Outside, Boundary, Inside };

/// Exact location of a point relative to a simple polygon (any orientation).
PointLocation locate_point(const Vec2Q& p, const std::vector<Vec2Q>& polygon);

/// Twice the signed shoelace area; positive for counterclockwise walks.
Rat twice_signed_area(const std::vector<Vec2Q>& polygon);

bool polygon_is_simple(const std::vector<Vec2Q>& polygon);
bool polygon_is_convex_ccw(const std::vector<Vec2Q>& polygon);  // strict turns only

/// interior(inner) subset of interior(outer), for simple polygons.
/// Touching along the boundary is allowed; crossing or poking out is not.
bool interior_inside_interior(const std::vector<Vec2Q>& inner, const std::vector<Vec2Q>& outer);

/// Every point of the segment [a, b] lies in the closed region.
bool segment_in_closed_polygon(const Vec2Q& a, const Vec2Q& b, const std::vector<Vec2Q>& polygon);

/// Every point of `inner` lies in the closed region bounded by `outer`.
bool polygon_inside_closed(const std::vector<Vec2Q>& inner, const std::vector<Vec2Q>& outer);

bool segment_intersects_polygon_boundary_properly(const Vec2Q& a, const Vec2Q& b,
                                                  const std::vector<Vec2Q>& polygon);

}  // namespace atb
