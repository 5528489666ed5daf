#include "ht/htmatrix.hpp"

#include <cmath>
#include <sstream>

namespace ht {

namespace {

void require_same_scale(const HMatrix& x, const HMatrix& y, const char* op) {
    if (x.scale() != y.scale()) {
        std::ostringstream os;
        os << op << ": scale mismatch (t = " << x.scale().t() << " vs " << y.scale().t() << ")";
        throw ScaleMismatch(os.str());
    }
}

void require_shape(bool ok, const char* what) {
    if (!ok) throw DimensionMismatch(what);
}

} // namespace

HMatrix::HMatrix(Scale s, int rows, int cols)
    : scale_(s), rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, HElem::zero(s)) {
    require_shape(rows > 0 && cols > 0, "HMatrix: non-positive dimensions");
}

HMatrix::HMatrix(Scale s, int rows, int cols, std::vector<HElem> entries)
    : scale_(s), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require_shape(rows > 0 && cols > 0, "HMatrix: non-positive dimensions");
    require_shape(entries_.size() == static_cast<std::size_t>(rows) * cols,
                  "HMatrix: rows*cols != entry count");
    for (const HElem& e : entries_)
        if (e.scale() != s) throw ScaleMismatch("HMatrix: entry scale differs from matrix scale");
}

HMatrix HMatrix::identity(Scale s, int n) {
    HMatrix m(s, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, HElem::one(s));
    return m;
}

void HMatrix::set(int r, int c, const HElem& v) {
    if (v.scale() != scale_) throw ScaleMismatch("HMatrix::set: scale mismatch");
    entries_[index(r, c)] = v;
}

HMatrix HMatrix::operator-() const {
    HMatrix m = *this;
    for (HElem& e : m.entries_) e = -e;
    return m;
}

HMatrix operator+(const HMatrix& x, const HMatrix& y) {
    require_same_scale(x, y, "madd");
    require_shape(x.rows_ == y.rows_ && x.cols_ == y.cols_, "madd: shape mismatch");
    HMatrix m = x;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = m.entries_[i] + y.entries_[i];
    return m;
}

HMatrix operator-(const HMatrix& x, const HMatrix& y) {
    require_same_scale(x, y, "msub");
    require_shape(x.rows_ == y.rows_ && x.cols_ == y.cols_, "msub: shape mismatch");
    HMatrix m = x;
    for (std::size_t i = 0; i < m.entries_.size(); ++i) m.entries_[i] = m.entries_[i] - y.entries_[i];
    return m;
}

HMatrix operator*(const HMatrix& x, const HMatrix& y) {
    require_same_scale(x, y, "mmul");
    require_shape(x.cols_ == y.rows_, "mmul: inner dimensions differ");
    HMatrix m(x.scale_, x.rows_, y.cols_);
    for (int r = 0; r < x.rows_; ++r)
        for (int c = 0; c < y.cols_; ++c) {
            HElem acc = HElem::zero(x.scale_);
            for (int k = 0; k < x.cols_; ++k) acc = acc + x.at(r, k) * y.at(k, c);
            m.set(r, c, acc);
        }
    return m;
}

HMatrix operator*(double x, const HMatrix& m) {
    HMatrix r = m;
    for (HElem& e : r.entries_) e = x * e;
    return r;
}

HMatrix HMatrix::block(int r0, int c0, int nr, int nc) const {
    require_shape(r0 >= 0 && c0 >= 0 && r0 + nr <= rows_ && c0 + nc <= cols_,
                  "block: out of range");
    HMatrix m(scale_, nr, nc);
    for (int r = 0; r < nr; ++r)
        for (int c = 0; c < nc; ++c) m.set(r, c, at(r0 + r, c0 + c));
    return m;
}

std::vector<cplx> HMatrix::embed() const {
    const int er = 2 * rows_, ec = 2 * cols_;
    std::vector<cplx> e(static_cast<std::size_t>(er) * ec);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) {
            const Mat2c m = at(r, c).to_matrix();
            e[(2 * r) * ec + 2 * c] = m.m00;
            e[(2 * r) * ec + 2 * c + 1] = m.m01;
            e[(2 * r + 1) * ec + 2 * c] = m.m10;
            e[(2 * r + 1) * ec + 2 * c + 1] = m.m11;
        }
    return e;
}

HMatrix madjoint(const HMatrix& m, AdjointKind kind) {
    HMatrix r(m.scale(), m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r.set(j, i, adjoint(m.at(i, j), kind));
    return r;
}

namespace {

HMatrix minvert_impl(const HMatrix& m, double tol) {
    const int n = m.rows();
    if (n == 1) {
        const HElem& q = m.at(0, 0);
        HMatrix r(m.scale(), 1, 1);
        try {
            r.set(0, 0, tol > 0.0 ? inverse(q, tol) : inverse(q));
        } catch (const NonInvertible& e) {
            throw NoInvertiblePivot(std::string("minvert: ") + e.what());
        }
        return r;
    }
    const int h = (n + 1) / 2;
    const HMatrix a = m.block(0, 0, h, h);
    const HMatrix b = m.block(0, h, h, n - h);
    const HMatrix c = m.block(h, 0, n - h, h);
    const HMatrix d = m.block(h, h, n - h, n - h);

    auto assemble = [&](const HMatrix& tl, const HMatrix& tr, const HMatrix& bl,
                        const HMatrix& br) {
        HMatrix r(m.scale(), n, n);
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < h; ++j) r.set(i, j, tl.at(i, j));
        for (int i = 0; i < h; ++i)
            for (int j = 0; j < n - h; ++j) r.set(i, h + j, tr.at(i, j));
        for (int i = 0; i < n - h; ++i)
            for (int j = 0; j < h; ++j) r.set(h + i, j, bl.at(i, j));
        for (int i = 0; i < n - h; ++i)
            for (int j = 0; j < n - h; ++j) r.set(h + i, h + j, br.at(i, j));
        return r;
    };

    try {
        // Leading pivot: invert A, then the Schur complement D - C A^{-1} B.
        const HMatrix ai = minvert_impl(a, tol);
        const HMatrix ds = d - c * ai * b;
        const HMatrix dsi = minvert_impl(ds, tol);
        return assemble(ai + ai * b * dsi * c * ai, -(ai * b * dsi), -(dsi * c * ai), dsi);
    } catch (const Error&) {
        // Trailing pivot: invert D, then A - B D^{-1} C.
        try {
            const HMatrix di = minvert_impl(d, tol);
            const HMatrix as = a - b * di * c;
            const HMatrix asi = minvert_impl(as, tol);
            return assemble(asi, -(asi * b * di), -(di * c * asi),
                            di + di * c * asi * b * di);
        } catch (const Error&) {
            throw NoInvertiblePivot("minvert: neither Schur pivot admitted an inverse");
        }
    }
}

} // namespace

HMatrix minvert(const HMatrix& m, double tol) {
    if (m.rows() != m.cols()) throw DimensionMismatch("minvert: matrix not square");
    return minvert_impl(m, tol);
}

double mnorm_hs(const HMatrix& m) {
    double s = 0.0;
    for (const HElem& e : m.entries()) {
        const double n = norm(e, NormKind::HS);
        s += n * n;
    }
    return std::sqrt(s);
}

double max_entry_op_norm(const HMatrix& m) {
    double s = 0.0;
    for (const HElem& e : m.entries()) s = std::max(s, norm(e, NormKind::Op));
    return s;
}

double mnorm_op(const HMatrix& m) {
    if (m.rows() == 1 && m.cols() == 1) return norm(m.at(0, 0), NormKind::Op);
    const int er = 2 * m.rows(), ec = 2 * m.cols();
    const std::vector<cplx> e = m.embed();
    if (mnorm_hs(m) == 0.0) return 0.0;

    // Power iteration on M* M with a fixed, slightly tilted start vector.
    std::vector<cplx> v(ec), mv(er), w(ec);
    for (int i = 0; i < ec; ++i) v[i] = 1.0 + 0.013 * i;
    double lambda = 0.0;
    for (int it = 0; it < 10000; ++it) {
        for (int r = 0; r < er; ++r) {
            cplx acc = 0.0;
            for (int c = 0; c < ec; ++c) acc += e[r * ec + c] * v[c];
            mv[r] = acc;
        }
        for (int c = 0; c < ec; ++c) {
            cplx acc = 0.0;
            for (int r = 0; r < er; ++r) acc += std::conj(e[r * ec + c]) * mv[r];
            w[c] = acc;
        }
        double vv = 0.0, wn = 0.0;
        cplx vw = 0.0;
        for (int c = 0; c < ec; ++c) {
            vv += std::norm(v[c]);
            wn += std::norm(w[c]);
            vw += std::conj(v[c]) * w[c];
        }
        const double next = vw.real() / vv;
        const double scale = std::sqrt(wn);
        if (scale == 0.0) return 0.0;
        for (int c = 0; c < ec; ++c) v[c] = w[c] / scale;
        if (it > 2 && std::abs(next - lambda) <= 1e-12 * std::max(1.0, std::abs(next))) {
            lambda = next;
            break;
        }
        lambda = next;
    }
    return std::sqrt(std::max(lambda, 0.0));
}

HMatrix stein_solve(const HMatrix& a, const HMatrix& c, AdjointKind kind) {
    require_same_scale(a, c, "stein_solve");
    if (a.rows() != a.cols()) throw DimensionMismatch("stein_solve: A not square");
    if (c.cols() != a.rows()) throw DimensionMismatch("stein_solve: C column count != N");
    const double na = mnorm_op(a);
    if (!(na < 1.0)) {
        std::ostringstream os;
        os << "stein_solve: ||A||_op = " << na << " >= 1";
        throw NotContractive(os.str());
    }
    const HMatrix ak = madjoint(a, kind);
    HMatrix term = madjoint(c, kind) * c;
    HMatrix g = term;
    for (int n = 1; n < 100000; ++n) {
        term = ak * term * a;
        g = g + term;
        if (mnorm_hs(term) < 1e-15 * mnorm_hs(g)) break;
    }
    return g;
}

HMatrix diag(std::span<const HElem> entries) {
    if (entries.empty()) throw DimensionMismatch("diag: empty input");
    HMatrix m(entries.front().scale(), static_cast<int>(entries.size()),
              static_cast<int>(entries.size()));
    for (int i = 0; i < m.rows(); ++i) m.set(i, i, entries[i]);
    return m;
}

HMatrix gram_points(std::span<const HElem> points, AdjointKind kind) {
    if (points.empty()) throw DimensionMismatch("gram_points: no points");
    const Scale s = points.front().scale();
    for (const HElem& p : points)
        if (norm(p, NormKind::Op) >= 1.0)
            throw NotInUnitBall("gram_points: point with operator norm >= 1");
    std::vector<HElem> dk;
    dk.reserve(points.size());
    for (const HElem& p : points) dk.push_back(adjoint(p, kind));
    const HMatrix a = diag(dk);
    HMatrix ones(s, 1, static_cast<int>(points.size()));
    for (int j = 0; j < ones.cols(); ++j) ones.set(0, j, HElem::one(s));
    return stein_solve(a, ones, kind);
}

} // namespace ht
