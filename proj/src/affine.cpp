#include "atb/affine.hpp"

namespace atb {

Vec2Z primitive(const Vec2Z& v) {
    if (is_zero(v)) throw SemanticError("degenerate direction");
    Int g = gcd_int(v.x(), v.y());
    return Vec2Z(v.x() / g, v.y() / g);
}

Vec2Z primitive_direction(const Vec2Q& v) {
    if (is_zero(v)) throw SemanticError("degenerate direction");
    Int q = boost::multiprecision::lcm(denominator(v.x()), denominator(v.y()));
    Vec2Z w(numerator(v.x() * q), numerator(v.y() * q));
    return primitive(w);
}

Rat lattice_length(const Vec2Q& v) {
    if (is_zero(v)) return Rat(0);
    Vec2Z u = primitive_direction(v);
    // v = lambda * u with u primitive; read lambda off a nonzero component.
    return u.x() != 0 ? v.x() / Rat(u.x()) : v.y() / Rat(u.y());
}

bool is_primitive(const Vec2Z& v) {
    return !is_zero(v) && gcd_int(v.x(), v.y()) == 1;
}

bool is_unimodular_pair(const Vec2Z& u, const Vec2Z& v) {
    if (!is_primitive(u) || !is_primitive(v))
        throw SemanticError("is_unimodular_pair: inputs must be primitive");
    Int d = cross2(u, v);
    return d == 1 || d == -1;
}

Vec2Z canonical_complement(const Vec2Z& u) {
    if (!is_primitive(u)) throw SemanticError("canonical_complement: input must be primitive");
    // Extended gcd gives some w0 with det(u, w0) = u.x*w0.y - u.y*w0.x = 1;
    // then normalize by shearing along u until 0 <= <w, u> < <u, u>.
    Int x = u.x(), y = u.y();
    Int s, t;  // s*x + t*y = 1
    {
        Int a = x, b = y, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
        while (b != 0) {
            Int q = a / b;  // truncated division is fine for the gcd loop
            Int r = a - q * b;
            a = b; b = r;
            Int s2 = s0 - q * s1; s0 = s1; s1 = s2;
            Int t2 = t0 - q * t1; t0 = t1; t1 = t2;
        }
        if (a < 0) { a = -a; s0 = -s0; t0 = -t0; }
        s = s0; t = t0;
    }
    Vec2Z w(-t, s);  // det(u, w) = x*s - y*(-t) = x*s + y*t = 1
    Int uu = x * x + y * y;
    Int dot = w.x() * x + w.y() * y;
    // floor division of dot by uu
    Int k = dot / uu;
    if (dot % uu != 0 && ((dot < 0) != (uu < 0))) k -= 1;
    w -= Vec2Z(k * x, k * y);
    return w;
}

AffineMap AffineMap::identity() {
    AffineMap m;
    m.linear << 1, 0, 0, 1;
    m.translation = Vec2Q(Rat(0), Rat(0));
    return m;
}

bool is_valid(const AffineMap& m) {
    Int d = det2(m.linear);
    return d == 1 || d == -1;
}

Vec2Q apply(const AffineMap& m, const Vec2Q& p) {
    return m.linear.cast<Rat>() * p + m.translation;
}

AffineMap compose(const AffineMap& a, const AffineMap& b) {
    AffineMap r;
    r.linear = a.linear * b.linear;
    r.translation = a.linear.cast<Rat>() * b.translation + a.translation;
    return r;
}

AffineMap invert(const AffineMap& a) {
    Int d = det2(a.linear);
    if (d != 1 && d != -1) throw SemanticError("invert: map is not unimodular");
    AffineMap r;
    // adjugate over det; det = +-1 keeps everything integral
    r.linear << a.linear(1, 1) / d, -a.linear(0, 1) / d,
                -a.linear(1, 0) / d, a.linear(0, 0) / d;
    r.translation = -(r.linear.cast<Rat>() * a.translation);
    return r;
}

}  // namespace atb
