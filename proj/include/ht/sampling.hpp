#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ht/hypercomplex.hpp"
#include "ht/point4.hpp"

namespace ht {

/// Deterministic 64-bit seeded sample source for the certification
/// sweeps.  The mapping from raw draws to doubles is fixed here so runs
/// are reproducible bit for bit under one seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo, double hi) {
        const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    HElem helem_box(Scale s, double box = 1.0) {
        const double x0 = uniform(-box, box), x1 = uniform(-box, box);
        const double x2 = uniform(-box, box), x3 = uniform(-box, box);
        return HElem::from_coords(s, x0, x1, x2, x3);
    }

    /// Element rescaled to a target operator norm in (lo, hi).
    HElem helem_with_norm(Scale s, double lo, double hi) {
        for (;;) {
            const HElem q = helem_box(s);
            const double n = norm(q, NormKind::Op);
            if (n < 1e-6) continue;
            return (uniform(lo, hi) / n) * q;
        }
    }

    Point4 point_box(double box = 1.0) {
        return {uniform(-box, box), uniform(-box, box), uniform(-box, box),
                uniform(-box, box)};
    }

    /// Point in the [-1,1]^4 box, away from the null cone: relative
    /// margin |det vec| >= margin * (x1^2+|t|(x2^2+x3^2)) plus a floor on
    /// the vector-part size so 1/vec derivatives stay well conditioned.
    Point4 admissible_point(Scale s, double margin = 0.1, double floor = 0.3);

private:
    std::mt19937_64 gen_;
};

std::vector<Point4> admissible_points(Rng& rng, Scale s, int count, double margin = 0.1,
                                      double floor = 0.3);

} // namespace ht
