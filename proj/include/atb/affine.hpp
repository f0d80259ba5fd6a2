#pragma once

#include "atb/numeric.hpp"

#include <optional>

namespace atb {

inline Int det2(const Mat2Z& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }
inline Int cross2(const Vec2Z& a, const Vec2Z& b) { return a.x() * b.y() - a.y() * b.x(); }
inline Rat cross2(const Vec2Q& a, const Vec2Q& b) { return a.x() * b.y() - a.y() * b.x(); }

inline bool is_zero(const Vec2Z& v) { return v.x() == 0 && v.y() == 0; }
inline bool is_zero(const Vec2Q& v) { return v.x() == 0 && v.y() == 0; }

/// Divides out the gcd of the components; direction is preserved.
/// The zero vector has no direction and is rejected.
Vec2Z primitive(const Vec2Z& v);

/// Primitive integer direction of a rational displacement.
Vec2Z primitive_direction(const Vec2Q& v);

/// The rational lambda >= 0 with v = lambda * primitive_direction(v).
/// This is the lattice length of the segment spanned by v.
Rat lattice_length(const Vec2Q& v);

bool is_primitive(const Vec2Z& v);

/// True iff the pair spans the integer lattice, i.e. |det(u v)| = 1.
/// This is the smoothness test at a polygon vertex.
bool is_unimodular_pair(const Vec2Z& u, const Vec2Z& v);

/// The unique w with det(u, w) = 1 and 0 <= <w, u> < <u, u>.
/// Fixes a deterministic lattice complement of a primitive vector;
/// for the axis directions it is the counterclockwise quarter turn.
Vec2Z canonical_complement(const Vec2Z& u);

/// An integral affine transformation of the plane: a GL(2,Z) linear part
/// plus a rational translation. These are the symmetries under which all
/// diagram invariants in this library are preserved.
struct AffineMap {
    Mat2Z linear;
    Vec2Q translation;

    static AffineMap identity();
};

bool is_valid(const AffineMap& m);  // |det| = 1

Vec2Q apply(const AffineMap& m, const Vec2Q& p);
AffineMap compose(const AffineMap& a, const AffineMap& b);  // a after b
AffineMap invert(const AffineMap& a);

inline bool operator==(const AffineMap& a, const AffineMap& b) {
    return a.linear == b.linear && a.translation == b.translation;
}

}  // namespace atb
