#pragma once

#include <array>
#include <functional>

namespace ht {

/// Second-order forward jet over a (non-commutative) ring R: value, the
/// four first partials, and the ten distinct second partials in the real
/// coordinates x0..x3.  Multiplication keeps factor order, so the jet of
/// an H_t-valued expression is exact to roundoff.  Nest (R = Jet2T<...>)
/// for higher derivative orders.
template <class R>
struct Jet2T {
    R value;
    std::array<R, 4> grad;
    std::array<R, 10> hess; // upper triangle, see hess_index

    static constexpr int hess_index(int u, int v) {
        if (u > v) { const int w = u; u = v; v = w; }
        // (0,0)(0,1)(0,2)(0,3)(1,1)(1,2)(1,3)(2,2)(2,3)(3,3)
        constexpr int base[4] = {0, 4, 7, 9};
        return base[u] + (v - u);
    }

    const R& d2(int u, int v) const { return hess[static_cast<std::size_t>(hess_index(u, v))]; }

    friend Jet2T operator+(const Jet2T& f, const Jet2T& g) {
        Jet2T r = f;
        r.value = f.value + g.value;
        for (int i = 0; i < 4; ++i) r.grad[i] = f.grad[i] + g.grad[i];
        for (int i = 0; i < 10; ++i) r.hess[i] = f.hess[i] + g.hess[i];
        return r;
    }
    friend Jet2T operator-(const Jet2T& f, const Jet2T& g) {
        Jet2T r = f;
        r.value = f.value - g.value;
        for (int i = 0; i < 4; ++i) r.grad[i] = f.grad[i] - g.grad[i];
        for (int i = 0; i < 10; ++i) r.hess[i] = f.hess[i] - g.hess[i];
        return r;
    }
    friend Jet2T operator*(const Jet2T& f, const Jet2T& g) {
        Jet2T r = f;
        r.value = f.value * g.value;
        for (int i = 0; i < 4; ++i) r.grad[i] = f.grad[i] * g.value + f.value * g.grad[i];
        for (int u = 0; u < 4; ++u)
            for (int v = u; v < 4; ++v) {
                const int i = hess_index(u, v);
                r.hess[i] = f.hess[i] * g.value + f.grad[u] * g.grad[v] +
                            f.grad[v] * g.grad[u] + f.value * g.hess[i];
            }
        return r;
    }
    friend Jet2T operator*(double x, const Jet2T& f) {
        Jet2T r = f;
        r.value = x * f.value;
        for (int i = 0; i < 4; ++i) r.grad[i] = x * f.grad[i];
        for (int i = 0; i < 10; ++i) r.hess[i] = x * f.hess[i];
        return r;
    }
    Jet2T operator-() const { return -1.0 * *this; }
};

template <class R>
Jet2T<R> jet_constant(const R& v) {
    const R z = v - v;
    Jet2T<R> j{v, {z, z, z, z}, {z, z, z, z, z, z, z, z, z, z}};
    return j;
}

/// Coordinate jet for variable l: value v, unit first partial, flat second.
template <class R>
Jet2T<R> jet_variable(const R& v, int l, const R& one) {
    Jet2T<R> j = jet_constant(v);
    j.grad[static_cast<std::size_t>(l)] = one;
    return j;
}

/// Jet of the pointwise inverse: d(f^{-1}) = -f^{-1} (df) f^{-1} and its
/// second-order extension.  `inv` inverts a ring value.
template <class R, class Inv>
Jet2T<R> jet_inverse(const Jet2T<R>& f, Inv&& inv) {
    const R g = inv(f.value);
    Jet2T<R> r = jet_constant(g);
    std::array<R, 4> dg = r.grad;
    for (int u = 0; u < 4; ++u) dg[u] = -1.0 * (g * f.grad[u] * g);
    r.grad = dg;
    for (int u = 0; u < 4; ++u)
        for (int v = u; v < 4; ++v) {
            const int i = Jet2T<R>::hess_index(u, v);
            r.hess[i] = g * f.grad[u] * g * f.grad[v] * g +
                        g * f.grad[v] * g * f.grad[u] * g - g * f.hess[i] * g;
        }
    return r;
}

} // namespace ht
