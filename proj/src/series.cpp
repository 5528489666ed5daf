#include "ht/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ht {

namespace {

void require_same_scale(const PowerSeries& f, const PowerSeries& g, const char* op) {
    if (f.scale() != g.scale()) {
        std::ostringstream os;
        os << op << ": scale mismatch (t = " << f.scale().t() << " vs " << g.scale().t() << ")";
        throw ScaleMismatch(os.str());
    }
}

} // namespace

PowerSeries::PowerSeries(Scale s, std::vector<HElem> coeffs)
    : scale_(s), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(HElem::zero(s));
    for (const HElem& c : coeffs_)
        if (c.scale() != s) throw ScaleMismatch("PowerSeries: coefficient scale differs");
}

PowerSeries PowerSeries::zero(Scale s, int trunc) {
    return {s, std::vector<HElem>(static_cast<std::size_t>(trunc) + 1, HElem::zero(s))};
}

PowerSeries PowerSeries::constant(const HElem& c, int trunc) {
    PowerSeries f = zero(c.scale(), trunc);
    f.coeffs_[0] = c;
    return f;
}

PowerSeries PowerSeries::monomial(Scale s, int n, int trunc) {
    PowerSeries f = zero(s, std::max(trunc, n));
    f.coeffs_[static_cast<std::size_t>(n)] = HElem::one(s);
    return f;
}

HElem PowerSeries::coeff(int n) const {
    if (n < 0 || n > trunc()) return HElem::zero(scale_);
    return coeffs_[static_cast<std::size_t>(n)];
}

PowerSeries PowerSeries::truncated(int order) const {
    std::vector<HElem> c(coeffs_.begin(),
                         coeffs_.begin() + std::min<std::size_t>(coeffs_.size(), order + 1));
    c.resize(static_cast<std::size_t>(order) + 1, HElem::zero(scale_));
    return {scale_, std::move(c)};
}

PowerSeries PowerSeries::operator-() const {
    PowerSeries f = *this;
    for (HElem& c : f.coeffs_) c = -c;
    return f;
}

PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    require_same_scale(f, g, "series add");
    const int n = std::min(f.trunc(), g.trunc());
    std::vector<HElem> c;
    c.reserve(n + 1);
    for (int k = 0; k <= n; ++k) c.push_back(f.coeff(k) + g.coeff(k));
    return {f.scale_, std::move(c)};
}

PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) { return f + (-g); }

PowerSeries operator*(const PowerSeries& f, const HElem& c) {
    PowerSeries r = f;
    for (HElem& x : r.coeffs_) x = x * c;
    return r;
}

PowerSeries operator*(const HElem& c, const PowerSeries& f) {
    PowerSeries r = f;
    for (HElem& x : r.coeffs_) x = c * x;
    return r;
}

PowerSeries operator*(double x, const PowerSeries& f) {
    PowerSeries r = f;
    for (HElem& c : r.coeffs_) c = x * c;
    return r;
}

PowerSeries star_mul(const PowerSeries& f, const PowerSeries& g) {
    require_same_scale(f, g, "star_mul");
    const int n = std::min(f.trunc(), g.trunc());
    std::vector<HElem> c(static_cast<std::size_t>(n) + 1, HElem::zero(f.scale()));
    for (int m = 0; m <= n; ++m) {
        HElem acc = HElem::zero(f.scale());
        for (int k = 0; k <= m; ++k) acc = acc + f.coeff(m - k) * g.coeff(k);
        c[static_cast<std::size_t>(m)] = acc;
    }
    return {f.scale(), std::move(c)};
}

PowerSeries star_inverse(const PowerSeries& f) {
    const HElem a0 = f.coeff(0);
    HElem a0inv = HElem::zero(f.scale());
    try {
        a0inv = inverse(a0);
    } catch (const NonInvertible& e) {
        throw NonInvertibleConstantTerm(std::string("star_inverse: ") + e.what());
    }
    const int n = f.trunc();
    std::vector<HElem> b(static_cast<std::size_t>(n) + 1, HElem::zero(f.scale()));
    b[0] = a0inv;
    for (int m = 1; m <= n; ++m) {
        HElem acc = HElem::zero(f.scale());
        for (int k = 0; k < m; ++k) acc = acc + f.coeff(m - k) * b[static_cast<std::size_t>(k)];
        b[static_cast<std::size_t>(m)] = -(a0inv * acc);
    }
    return {f.scale(), std::move(b)};
}

PowerSeries star_inverse_neumann(const PowerSeries& f) {
    const HElem a0 = f.coeff(0);
    HElem a0inv = HElem::zero(f.scale());
    try {
        a0inv = inverse(a0);
    } catch (const NonInvertible& e) {
        throw NonInvertibleConstantTerm(std::string("star_inverse_neumann: ") + e.what());
    }
    // f = (1 - g) a0 with g = (1 - f a0^{-1}); f^{-star} = a0^{-1} sum g^{star n}.
    PowerSeries g = PowerSeries::constant(HElem::one(f.scale()), f.trunc()) - f * a0inv;
    PowerSeries acc = PowerSeries::constant(HElem::one(f.scale()), f.trunc());
    PowerSeries pow = g;
    for (int n = 1; n <= f.trunc(); ++n) {
        acc = acc + pow;
        pow = star_mul(pow, g);
    }
    return a0inv * acc;
}

HElem eval(const PowerSeries& f, const HElem& q) {
    if (f.scale() != q.scale()) throw ScaleMismatch("eval: scale mismatch");
    HElem acc = f.coeff(f.trunc());
    for (int n = f.trunc() - 1; n >= 0; --n) acc = f.coeff(n) + q * acc;
    return acc;
}

PowerSeries conj_series(const PowerSeries& f, AdjointKind kind) {
    std::vector<HElem> c;
    c.reserve(f.coeffs().size());
    for (const HElem& x : f.coeffs()) c.push_back(adjoint(x, kind));
    return {f.scale(), std::move(c)};
}

PowerSeries backward_shift(const PowerSeries& f) {
    std::vector<HElem> c(f.coeffs().begin() + 1, f.coeffs().end());
    if (c.empty()) c.push_back(HElem::zero(f.scale()));
    return {f.scale(), std::move(c)};
}

HElem geo_closed_form(const HElem& q, const HElem& p) {
    if (q.scale() != p.scale()) throw ScaleMismatch("geo_closed_form: scale mismatch");
    if (!(norm(q, NormKind::Op) * norm(p, NormKind::Op) < 1.0))
        throw NotContractive("geo_closed_form: ||q|| ||p|| >= 1");
    const HElem one = HElem::one(q.scale());
    const HElem quad = det(q) * (p * p) - (2.0 * re(q)) * p + one;
    return (one - adjoint(q, AdjointKind::Circled) * p) * inverse(quad);
}

HElem hardy_kernel(const HElem& q, const HElem& p, int trunc) {
    if (q.scale() != p.scale()) throw ScaleMismatch("hardy_kernel: scale mismatch");
    if (!(norm(q, NormKind::Op) * norm(p, NormKind::Op) < 1.0))
        throw NotContractive("hardy_kernel: ||q|| ||p|| >= 1");
    const HElem pc = adjoint(p, AdjointKind::Circled);
    HElem acc = HElem::one(q.scale());
    HElem qn = HElem::one(q.scale());
    HElem pn = HElem::one(q.scale());
    for (int n = 1; n <= trunc; ++n) {
        qn = qn * q;
        pn = pn * pc;
        acc = acc + qn * pn;
    }
    return acc;
}

} // namespace ht
