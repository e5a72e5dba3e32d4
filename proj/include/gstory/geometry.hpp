#pragma once

#include <cstdint>

namespace gstory {

/// Integer grid point. All layout coordinates are exact integers.
struct Point {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Closed axis-aligned integer rectangle [xmin,xmax] x [ymin,ymax].
struct GridBox {
    long long xmin = 0;
    long long xmax = 0;
    long long ymin = 0;
    long long ymax = 0;

    bool contains(Point p) const {
        return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
    }
    long long width() const { return xmax - xmin + 1; }
    long long height() const { return ymax - ymin + 1; }

    friend bool operator==(const GridBox&, const GridBox&) = default;
};

} // namespace gstory
