#pragma once

namespace ht {

/// Real coordinates of q_t = x0 + x1 i + x2 j_t + x3 k_t.
struct Point4 {
    double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

} // namespace ht
