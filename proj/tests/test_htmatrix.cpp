#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ht/htmatrix.hpp"
#include "ht/json_io.hpp"
#include "ht/sampling.hpp"

using namespace ht;

namespace {

HMatrix random_matrix(Rng& rng, Scale s, int r, int c, double box = 1.0) {
    HMatrix m(s, r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.set(i, j, rng.helem_box(s, box));
    return m;
}

double dist(const HMatrix& x, const HMatrix& y) { return max_entry_op_norm(x - y); }

} // namespace

TEST_CASE("madjoint basics and contravariance") {
    const Scale s(1.5);
    Rng rng(3);
    HMatrix one_by_one(s, 1, 1);
    const HElem q = rng.helem_box(s);
    one_by_one.set(0, 0, q);
    CHECK(dist(madjoint(one_by_one, AdjointKind::Circled), one_by_one) > 0.0);
    CHECK(madjoint(one_by_one, AdjointKind::Circled)
              .at(0, 0)
              .bitwise_equal(adjoint(q, AdjointKind::Circled)));
    const HMatrix eye = HMatrix::identity(s, 3);
    CHECK(dist(madjoint(eye, AdjointKind::Circled), eye) == 0.0);
    CHECK(dist(madjoint(eye, AdjointKind::Bracket), eye) == 0.0);

    const HMatrix a = random_matrix(rng, s, 2, 3);
    const HMatrix b = random_matrix(rng, s, 3, 2);
    for (auto k : {AdjointKind::Circled, AdjointKind::Bracket})
        CHECK(dist(madjoint(a * b, k), madjoint(b, k) * madjoint(a, k)) < 1e-13);
}

TEST_CASE("schur identity reconstructs the block matrix") {
    Rng rng(5);
    for (double t : {-1.0, 0.5, 2.0}) {
        const Scale s(t);
        for (int rep = 0; rep < 20; ++rep) {
            // blocks, with A kept invertible
            const int n = 2, m = 2;
            HMatrix a = random_matrix(rng, s, n, n);
            a = a + 3.0 * HMatrix::identity(s, n);
            const HMatrix b = random_matrix(rng, s, n, m);
            const HMatrix c = random_matrix(rng, s, m, n);
            const HMatrix d = random_matrix(rng, s, m, m);

            HMatrix full(s, n + m, n + m);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) full.set(i, j, a.at(i, j));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) full.set(i, n + j, b.at(i, j));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) full.set(n + i, j, c.at(i, j));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) full.set(n + i, n + j, d.at(i, j));

            const HMatrix ai = minvert(a);
            const HMatrix schur = d - c * ai * b;
            HMatrix left = HMatrix::identity(s, n + m);
            HMatrix mid = HMatrix::zero(s, n + m, n + m);
            HMatrix right = HMatrix::identity(s, n + m);
            const HMatrix cai = c * ai;
            const HMatrix aib = ai * b;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j) left.set(n + i, j, cai.at(i, j));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) mid.set(i, j, a.at(i, j));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) mid.set(n + i, n + j, schur.at(i, j));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < m; ++j) right.set(i, n + j, aib.at(i, j));

            CHECK(dist(left * mid * right, full) <
                  1e-10 * std::max(1.0, mnorm_op(full)));
        }
    }
}

TEST_CASE("minvert examples") {
    const Scale s2(2.0);
    const HMatrix eye = HMatrix::identity(s2, 4);
    CHECK(dist(minvert(eye), eye) < 1e-15);

    HMatrix d(s2, 2, 2);
    d.set(0, 0, 2.0 * HElem::one(s2));
    d.set(1, 1, HElem::unit_j(s2));
    const HMatrix di = minvert(d);
    CHECK(dist(di.block(0, 0, 1, 1), 0.5 * HMatrix::identity(s2, 1)) < 1e-15);
    CHECK(norm(di.at(1, 1) - 0.5 * HElem::unit_j(s2), NormKind::Op) < 1e-15);

    const Scale s1(1.0);
    HMatrix zero_div(s1, 1, 1);
    zero_div.set(0, 0, HElem::one(s1) + HElem::unit_j(s1));
    CHECK_THROWS_AS(minvert(zero_div), NoInvertiblePivot);

    HMatrix rect(s1, 2, 3);
    CHECK_THROWS_AS(minvert(rect), DimensionMismatch);
}

TEST_CASE("minvert is two-sided on random matrices") {
    Rng rng(7);
    for (double t : {-2.0, -1.0, 0.5, 1.0, 2.0}) {
        const Scale s(t);
        for (int n : {1, 2, 3, 4, 5}) {
            const HMatrix m = random_matrix(rng, s, n, n) + 2.5 * HMatrix::identity(s, n);
            const HMatrix x = minvert(m);
            const double cond = mnorm_op(m) * mnorm_op(x);
            CHECK(dist(m * x, HMatrix::identity(s, n)) < 1e-9 * cond);
            CHECK(dist(x * m, HMatrix::identity(s, n)) < 1e-9 * cond);
        }
    }
}

TEST_CASE("operator norm of the embedding") {
    const Scale s2(2.0);
    CHECK(mnorm_op(HMatrix::identity(s2, 3)) == doctest::Approx(1.0).epsilon(1e-10));
    HMatrix j(s2, 1, 1);
    j.set(0, 0, HElem::unit_j(s2));
    CHECK(mnorm_op(j) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(mnorm_op(HMatrix::zero(s2, 3, 2)) == 0.0);

    // diagonal oracle: norm of a diagonal matrix is the max entry norm
    Rng rng(9);
    for (double t : {-1.0, 1.0, 2.0}) {
        const Scale s(t);
        std::vector<HElem> d;
        double expect = 0.0;
        for (int i = 0; i < 4; ++i) {
            d.push_back(rng.helem_box(s, 2.0));
            expect = std::max(expect, norm(d.back(), NormKind::Op));
        }
        CHECK(mnorm_op(diag(d)) == doctest::Approx(expect).epsilon(1e-9));
    }

    // lower bound sanity ||Mv|| <= ||M|| ||v|| on random vectors
    const Scale s(0.5);
    const HMatrix m = random_matrix(rng, s, 3, 3);
    const double nm = mnorm_op(m);
    for (int rep = 0; rep < 10; ++rep) {
        const HMatrix v = random_matrix(rng, s, 3, 1);
        CHECK(mnorm_op(m * v) <= nm * mnorm_op(v) * (1.0 + 1e-9));
    }
}

TEST_CASE("stein solve") {
    const Scale s(1.0);
    Rng rng(11);

    // A = 0: single term C^k C
    const HMatrix zero_a = HMatrix::zero(s, 2, 2);
    const HMatrix c = random_matrix(rng, s, 1, 2);
    for (auto k : {AdjointKind::Circled, AdjointKind::Bracket}) {
        const HMatrix g = stein_solve(zero_a, c, k);
        CHECK(dist(g, madjoint(c, k) * c) < 1e-14);
    }

    // scalar geometric series
    for (double x : {0.3, -0.5, 0.7}) {
        HMatrix a(s, 1, 1);
        a.set(0, 0, x * HElem::one(s));
        HMatrix ones(s, 1, 1);
        ones.set(0, 0, HElem::one(s));
        const HMatrix g = stein_solve(a, ones, AdjointKind::Circled);
        CHECK(norm(g.at(0, 0) - (1.0 / (1.0 - x * x)) * HElem::one(s), NormKind::Op) < 1e-12);
    }

    // random contractive A: residual and self-adjointness
    for (double t : {-1.0, 0.5, 2.0}) {
        const Scale st(t);
        for (auto k : {AdjointKind::Circled, AdjointKind::Bracket}) {
            HMatrix a = random_matrix(rng, st, 3, 3);
            a = (0.6 / std::max(mnorm_op(a), 1e-9)) * a;
            const HMatrix cc = random_matrix(rng, st, 1, 3);
            const HMatrix g = stein_solve(a, cc, k);
            const double residual =
                max_entry_op_norm(g - madjoint(a, k) * g * a - madjoint(cc, k) * cc);
            CHECK(residual < 1e-10 * std::max(1.0, mnorm_op(g)));
            CHECK(dist(madjoint(g, k), g) < 1e-12 * std::max(1.0, mnorm_op(g)));
        }
    }

    // non-contractive A is refused
    HMatrix big(s, 1, 1);
    big.set(0, 0, 2.0 * HElem::one(s));
    HMatrix ones(s, 1, 1);
    ones.set(0, 0, HElem::one(s));
    CHECK_THROWS_AS(stein_solve(big, ones, AdjointKind::Circled), NotContractive);
}

TEST_CASE("gram matrix of interpolation points") {
    const Scale s(-1.0);
    const std::vector<HElem> zero_pt = {HElem::zero(s)};
    const HMatrix g0 = gram_points(zero_pt, AdjointKind::Circled);
    CHECK(norm(g0.at(0, 0) - HElem::one(s), NormKind::Op) < 1e-14);

    const double x = 0.4;
    const std::vector<HElem> one_pt = {x * HElem::one(s)};
    const HMatrix g1 = gram_points(one_pt, AdjointKind::Circled);
    CHECK(norm(g1.at(0, 0) - (1.0 / (1.0 - x * x)) * HElem::one(s), NormKind::Op) < 1e-12);

    const std::vector<HElem> two = {HElem::zero(s), x * HElem::one(s)};
    const HMatrix g2 = gram_points(two, AdjointKind::Circled);
    CHECK(norm(g2.at(0, 0) - HElem::one(s), NormKind::Op) < 1e-12);
    CHECK(norm(g2.at(0, 1) - HElem::one(s), NormKind::Op) < 1e-12);
    CHECK(norm(g2.at(1, 0) - HElem::one(s), NormKind::Op) < 1e-12);
    CHECK(norm(g2.at(1, 1) - (1.0 / (1.0 - x * x)) * HElem::one(s), NormKind::Op) < 1e-12);

    const std::vector<HElem> far = {2.0 * HElem::one(s)};
    CHECK_THROWS_AS(gram_points(far, AdjointKind::Circled), NotInUnitBall);
}

TEST_CASE("hmatrix json round trip") {
    Rng rng(13);
    const Scale s(0.5);
    const HMatrix m = random_matrix(rng, s, 2, 3);
    const HMatrix back = hmatrix_from_json(to_json(m));
    CHECK(dist(back, m) == 0.0);
}
