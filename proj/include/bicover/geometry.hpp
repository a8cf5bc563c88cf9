#pragma once

#include <algorithm>

#include "bicover/rational.hpp"

namespace bicover {

struct Point2 {
    Rational x;
    Rational y;
    friend bool operator==(const Point2&, const Point2&) = default;
    friend auto operator<=>(const Point2&, const Point2&) = default;
};

/// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn, 0 collinear.
inline int orient(const Point2& a, const Point2& b, const Point2& c) {
    return ((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)).sign();
}

/// c lies on the closed segment ab, given that a, b, c are collinear.
inline bool within_box(const Point2& a, const Point2& b, const Point2& c) {
    return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= c.y &&
           c.y <= std::max(a.y, b.y);
}

/// Closed segments ab and cd share at least one point.
inline bool segments_intersect(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    const int o1 = orient(a, b, c);
    const int o2 = orient(a, b, d);
    const int o3 = orient(c, d, a);
    const int o4 = orient(c, d, b);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    return (o1 == 0 && within_box(a, b, c)) || (o2 == 0 && within_box(a, b, d)) ||
           (o3 == 0 && within_box(c, d, a)) || (o4 == 0 && within_box(c, d, b));
}

/// Collinear closed segments overlapping in more than a single point.
inline bool collinear_overlap(const Point2& a, const Point2& b, const Point2& c, const Point2& d) {
    if (orient(a, b, c) != 0 || orient(a, b, d) != 0) return false;
    if (a == b || c == d) return false;
    // Project on the dominant axis of ab.
    const bool use_x = a.x != b.x;
    auto key = [&](const Point2& p) { return use_x ? p.x : p.y; };
    const Rational lo = std::max(std::min(key(a), key(b)), std::min(key(c), key(d)));
    const Rational hi = std::min(std::max(key(a), key(b)), std::max(key(c), key(d)));
    return lo < hi;
}

}  // namespace bicover
