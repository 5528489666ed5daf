#include "ht/sampling.hpp"

#include <cmath>

namespace ht {

Point4 Rng::admissible_point(Scale s, double margin, double floor) {
    const double t = s.t();
    for (;;) {
        const Point4 x = point_box();
        const double size = x.x1 * x.x1 + std::abs(t) * (x.x2 * x.x2 + x.x3 * x.x3);
        const double d = std::abs(x.x1 * x.x1 - t * (x.x2 * x.x2 + x.x3 * x.x3));
        if (size >= floor && d >= margin * size) return x;
    }
}

std::vector<Point4> admissible_points(Rng& rng, Scale s, int count, double margin,
                                      double floor) {
    std::vector<Point4> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back(rng.admissible_point(s, margin, floor));
    return pts;
}

} // namespace ht
