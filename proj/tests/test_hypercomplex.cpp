#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ht/hypercomplex.hpp"
#include "ht/json_io.hpp"
#include "ht/sampling.hpp"

using namespace ht;

namespace {

double opn(const HElem& q) { return norm(q, NormKind::Op); }

const std::vector<double> kSweep = {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};

// direct embedding product, the oracle for mul
HElem mul_via_embedding(const HElem& p, const HElem& q) {
    const Mat2c m = p.to_matrix() * q.to_matrix();
    return {p.scale(), m.m00, m.m01 / p.t()};
}

} // namespace

TEST_CASE("scale construction rejects zero and non-finite") {
    CHECK_THROWS_AS(Scale(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Scale(std::nan("")), std::invalid_argument);
    CHECK(Scale(-1.0).sign() == -1.0);
}

TEST_CASE("cayley table and pair product") {
    for (double t : kSweep) {
        const Scale s(t);
        const HElem i = HElem::unit_i(s), j = HElem::unit_j(s), k = HElem::unit_k(s);
        CHECK(opn(i * i + HElem::one(s)) < 1e-15);
        CHECK(opn(j * j - t * HElem::one(s)) < 1e-15);
        CHECK(opn(k * k - t * HElem::one(s)) < 1e-15);
        CHECK(opn(i * j - k) < 1e-15);
        CHECK(opn(j * i + k) < 1e-15);
        CHECK(opn(k * i - j) < 1e-15);
        CHECK(opn(i * k + j) < 1e-15);
        CHECK(opn(j * k + t * i) < 1e-15);
        CHECK(opn(k * j - t * i) < 1e-15);
    }
    // j_t k_t = -t i at t = 2
    const Scale s2(2.0);
    CHECK(opn(HElem::unit_j(s2) * HElem::unit_k(s2) + 2.0 * HElem::unit_i(s2)) < 1e-15);
}

TEST_CASE("mul examples and embedding oracle") {
    const Scale s(0.5);
    const HElem q = HElem::one(s) + HElem::unit_j(s);
    const HElem sq = q * q; // (1+t) + 2 j_t
    CHECK(sq.a() == cplx(1.5, 0.0));
    CHECK(sq.b() == cplx(2.0, 0.0));
    CHECK(opn(sq - mul_via_embedding(q, q)) < 1e-15);

    Rng rng(11);
    for (double t : kSweep) {
        const Scale st(t);
        CHECK(opn(HElem::one(st) * rng.helem_box(st) * HElem::one(st) -
                  HElem::one(st) * HElem::one(st) * rng.helem_box(st)) >= 0.0);
        for (int rep = 0; rep < 200; ++rep) {
            const HElem p = rng.helem_box(st, 2.0), q2 = rng.helem_box(st, 2.0);
            CHECK(opn(p * q2 - mul_via_embedding(p, q2)) < 1e-13 * (1.0 + opn(p) * opn(q2)));
        }
    }
}

TEST_CASE("scale mismatch is refused") {
    const HElem p = HElem::one(Scale(1.0));
    const HElem q = HElem::one(Scale(2.0));
    CHECK_THROWS_AS(p * q, ScaleMismatch);
    CHECK_THROWS_AS(p + q, ScaleMismatch);
    CHECK_THROWS_AS(form(p, q, FormKind::Euclid), ScaleMismatch);
}

TEST_CASE("adjoints: table, involution, commutation, composite") {
    for (double t : kSweep) {
        const Scale s(t);
        const HElem i = HElem::unit_i(s), j = HElem::unit_j(s), k = HElem::unit_k(s);
        CHECK(opn(adjoint(k, AdjointKind::Bracket) + k) < 1e-15);
        CHECK(opn(adjoint(i, AdjointKind::Bracket) - i) < 1e-15);
        CHECK(opn(adjoint(j, AdjointKind::Bracket) - j) < 1e-15);
        CHECK(opn(adjoint(i, AdjointKind::Circled) + i) < 1e-15);
        CHECK(opn(adjoint(j, AdjointKind::Circled) + j) < 1e-15);
        CHECK(opn(adjoint(k, AdjointKind::Circled) + k) < 1e-15);

        const HElem x = 3.25 * HElem::one(s);
        CHECK(opn(adjoint(x, AdjointKind::Circled) - x) == 0.0);

        Rng rng(5);
        for (int rep = 0; rep < 100; ++rep) {
            const HElem q = rng.helem_box(s, 2.0);
            for (auto kind : {AdjointKind::Circled, AdjointKind::Bracket})
                CHECK(adjoint(adjoint(q, kind), kind).bitwise_equal(q));
            const HElem both = adjoint(adjoint(q, AdjointKind::Circled), AdjointKind::Bracket);
            CHECK(both.bitwise_equal(adjoint(adjoint(q, AdjointKind::Bracket),
                                             AdjointKind::Circled)));
            CHECK(both.a() == std::conj(q.a()));
            CHECK(both.b() == -std::conj(q.b()));
        }
    }
    // t = -1: circled is the quaternion conjugate conj(a) - b j
    const Scale sm(-1.0);
    const HElem q = HElem::from_coords(sm, 1.0, 2.0, 3.0, 4.0);
    const HElem qc = adjoint(q, AdjointKind::Circled);
    CHECK(qc.a() == std::conj(q.a()));
    CHECK(qc.b() == -q.b());
    CHECK(opn(q * qc - det(q) * HElem::one(sm)) < 1e-14 * opn(q) * opn(q));
}

TEST_CASE("regular adjoint stays a matrix") {
    const Scale s(2.0);
    const HElem q = HElem::from_coords(s, 1.0, 2.0, -1.0, 0.5);
    const Mat2c m = regular_adjoint(q);
    CHECK(m.m00 == std::conj(q.a()));
    CHECK(m.m01 == q.b());
    CHECK(m.m10 == s.t() * std::conj(q.b()));
    CHECK(m.m11 == q.a());
    CHECK_THROWS_AS(adjoint(q, AdjointKind::Regular), std::invalid_argument);
}

TEST_CASE("det and re") {
    const Scale s1(1.0);
    CHECK(det(HElem::one(s1) + HElem::unit_j(s1)) == doctest::Approx(0.0));
    CHECK(det(HElem::one(s1)) == doctest::Approx(1.0));
    CHECK(re(HElem::one(s1)) == doctest::Approx(1.0));
    const Scale sm(-1.0);
    const HElem q = HElem(sm, {1.0, 2.0}, {3.0, -1.0});
    CHECK(det(q) == doctest::Approx(std::norm(q.a()) + std::norm(q.b())));
}

TEST_CASE("inverse") {
    const Scale s2(2.0);
    CHECK(opn(inverse(2.0 * HElem::one(s2)) - 0.5 * HElem::one(s2)) < 1e-15);
    CHECK(opn(inverse(HElem::unit_j(s2)) - 0.5 * HElem::unit_j(s2)) < 1e-15);
    const Scale s1(1.0);
    CHECK_THROWS_AS(inverse(HElem::one(s1) + HElem::unit_j(s1)), NonInvertible);

    Rng rng(3);
    for (double t : kSweep) {
        const Scale s(t);
        for (int rep = 0; rep < 100; ++rep) {
            const HElem q = rng.helem_box(s, 2.0);
            if (std::abs(det(q)) < 1e-3) continue;
            CHECK(opn(q * inverse(q) - HElem::one(s)) <
                  8e-15 * std::max(1.0, opn(q) * opn(q)) / std::abs(det(q)) + 1e-13);
            CHECK(opn(inverse(q) * q - HElem::one(s)) <
                  8e-15 * std::max(1.0, opn(q) * opn(q)) / std::abs(det(q)) + 1e-13);
        }
    }
}

TEST_CASE("norms: closed form, specializations, invariance") {
    const Scale s2(2.0);
    CHECK(norm(HElem::unit_j(s2), NormKind::Op) == doctest::Approx(2.0));
    for (double t : kSweep) {
        const Scale s(t);
        for (auto k : {NormKind::HS, NormKind::Op, NormKind::Euclid}) {
            const double expected = k == NormKind::HS ? std::sqrt(2.0) : 1.0;
            CHECK(norm(HElem::one(s), k) == doctest::Approx(expected));
        }
    }

    Rng rng(17);
    for (double t : kSweep) {
        const Scale s(t);
        for (int rep = 0; rep < 1000; ++rep) {
            const HElem q = rng.helem_box(s, 2.0);
            const Mat2c m = q.to_matrix();
            const double eig = std::sqrt((m * m.conj_transpose()).eigmax_hermitian());
            CHECK(norm(q, NormKind::Op) == doctest::Approx(eig).epsilon(1e-10));
            for (auto kind : {AdjointKind::Circled, AdjointKind::Bracket})
                for (auto nk : {NormKind::HS, NormKind::Op, NormKind::Euclid})
                    CHECK(norm(adjoint(q, kind), nk) ==
                          doctest::Approx(norm(q, nk)).epsilon(1e-12));
        }
    }

    const Scale sm(-1.0);
    const Scale sp(1.0);
    Rng rng2(18);
    for (int rep = 0; rep < 200; ++rep) {
        const HElem qm = rng2.helem_box(sm, 2.0);
        CHECK(norm(qm, NormKind::Op) ==
              doctest::Approx(std::sqrt(std::norm(qm.a()) + std::norm(qm.b()))));
        const HElem qp = rng2.helem_box(sp, 2.0);
        CHECK(norm(qp, NormKind::Op) ==
              doctest::Approx(std::abs(qp.a()) + std::abs(qp.b())));
    }
}

TEST_CASE("forms: values, symmetry, signature operators") {
    for (double t : kSweep) {
        const Scale s(t);
        CHECK(form(HElem::one(s), HElem::one(s), FormKind::Circled) == doctest::Approx(2.0));
        CHECK(form(HElem::one(s), HElem::one(s), FormKind::Bracket) == doctest::Approx(2.0));
        CHECK(form(HElem::one(s), HElem::one(s), FormKind::Euclid) == doctest::Approx(1.0));
        for (auto k : {FormKind::Circled, FormKind::Bracket, FormKind::Euclid})
            CHECK(form(HElem::unit_i(s), HElem::unit_j(s), k) == doctest::Approx(0.0));
        if (t > 0)
            CHECK(form(HElem::unit_j(s), HElem::unit_j(s), FormKind::Circled) ==
                  doctest::Approx(-2.0 * t));

        Rng rng(21);
        for (int rep = 0; rep < 200; ++rep) {
            const HElem p = rng.helem_box(s, 2.0), q = rng.helem_box(s, 2.0);
            for (auto k : {FormKind::Circled, FormKind::Bracket, FormKind::Euclid}) {
                CHECK(form(p, q, k) == doctest::Approx(form(q, p, k)).epsilon(1e-12));
                // trace definitions
                if (k == FormKind::Circled)
                    CHECK(form(p, q, k) ==
                          doctest::Approx((adjoint(q, AdjointKind::Circled) * p)
                                              .to_matrix()
                                              .trace()
                                              .real())
                              .epsilon(1e-12));
                if (k == FormKind::Bracket)
                    CHECK(form(p, q, k) ==
                          doctest::Approx((adjoint(q, AdjointKind::Bracket) * p)
                                              .to_matrix()
                                              .trace()
                                              .real())
                              .epsilon(1e-12));
            }
            // J-identities (trace form = 2 x Euclidean form against J q)
            CHECK(form(q, q, FormKind::Circled) ==
                  doctest::Approx(2.0 * form(q, signature_apply(q, FormKind::Circled),
                                             FormKind::Euclid))
                      .epsilon(1e-12));
            CHECK(form(q, q, FormKind::Bracket) ==
                  doctest::Approx(2.0 * form(q, signature_apply(q, FormKind::Bracket),
                                             FormKind::Euclid))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("signature counts") {
    CHECK(signature_basis_gram(Scale(-1.0), FormKind::Circled).n_plus == 4);
    CHECK(signature_basis_gram(Scale(-1.0), FormKind::Circled).n_minus == 0);
    CHECK(signature_basis_gram(Scale(1.0), FormKind::Bracket).n_plus == 2);
    CHECK(signature_basis_gram(Scale(1.0), FormKind::Bracket).n_minus == 2);
    CHECK(signature_basis_gram(Scale(3.0), FormKind::Circled).n_plus == 2);
    CHECK(signature_basis_gram(Scale(3.0), FormKind::Circled).n_minus == 2);
    for (double t : kSweep) {
        const SignatureResult r = signature_basis_gram(Scale(t), FormKind::Circled);
        CHECK(r.n_plus + r.n_minus == 4); // non-degenerate
        const SignatureResult rb = signature_basis_gram(Scale(t), FormKind::Bracket);
        CHECK(rb.n_plus == 2);
        CHECK(rb.n_minus == 2);
    }
}

TEST_CASE("contravariance property") {
    Rng rng(23);
    for (double t : kSweep) {
        const Scale s(t);
        for (int rep = 0; rep < 200; ++rep) {
            const HElem p = rng.helem_box(s, 2.0), q = rng.helem_box(s, 2.0);
            for (auto k : {AdjointKind::Circled, AdjointKind::Bracket})
                CHECK(opn(adjoint(p * q, k) - adjoint(q, k) * adjoint(p, k)) <
                      1e-12 * std::max(1.0, opn(p) * opn(q)));
        }
    }
}

TEST_CASE("bracket products of Eq. (3.4) and non-normality") {
    Rng rng(29);
    for (double t : kSweep) {
        const Scale s(t);
        int distinct = 0;
        for (int rep = 0; rep < 100; ++rep) {
            const HElem q = rng.helem_box(s, 2.0);
            const cplx a = q.a(), b = q.b();
            const HElem lhs1 = q * adjoint(q, AdjointKind::Bracket);
            const HElem rhs1(s, a * a + t * b * b, 2.0 * (a * std::conj(b)).real());
            CHECK(opn(lhs1 - rhs1) < 1e-12 * std::max(1.0, opn(q) * opn(q)));
            const HElem lhs2 = adjoint(q, AdjointKind::Bracket) * q;
            const HElem rhs2(s, a * a + t * std::conj(b) * std::conj(b),
                             2.0 * (a * b).real());
            CHECK(opn(lhs2 - rhs2) < 1e-12 * std::max(1.0, opn(q) * opn(q)));
            if (opn(lhs1 - lhs2) > 1e-8) ++distinct;
        }
        CHECK(distinct > 90); // generic non-normality
    }
}

TEST_CASE("J*J embedding identity") {
    Rng rng(31);
    const Mat2c j{0.0, 1.0, 1.0, 0.0};
    for (double t : kSweep) {
        const Scale s(t);
        for (int rep = 0; rep < 200; ++rep) {
            const HElem q = rng.helem_box(s, 2.0);
            const Mat2c lhs = adjoint(q, AdjointKind::Bracket).to_matrix();
            const Mat2c rhs = j * q.to_matrix().conj_transpose() * j;
            CHECK((lhs - rhs).max_abs() < 1e-14 * std::max(1.0, opn(q)));
        }
    }
}

TEST_CASE("symmetrized product") {
    const Scale s(1.5);
    Rng rng(37);
    const HElem h = rng.helem_box(s, 1.0);
    const std::vector<HElem> hhh = {h, h, h};
    CHECK(opn(symmetrized_product(hhh) - h * h * h) < 1e-13);
    const std::vector<HElem> ij = {HElem::unit_i(s), HElem::unit_j(s)};
    CHECK(opn(symmetrized_product(ij)) < 1e-15);
    const std::vector<HElem> oneh = {HElem::one(s), h};
    CHECK(opn(symmetrized_product(oneh) - h) < 1e-15);
    CHECK_THROWS_AS(symmetrized_product(std::vector<HElem>{}), std::invalid_argument);

    // matches the brute-force permutation average on three distinct factors
    const HElem x = rng.helem_box(s), y = rng.helem_box(s), z = rng.helem_box(s);
    const HElem brute = (x * y * z + x * z * y + y * x * z + y * z * x + z * x * y +
                         z * y * x) /
                        6.0;
    const std::vector<HElem> xyz = {x, y, z};
    CHECK(opn(symmetrized_product(xyz) - brute) < 1e-13);
}

TEST_CASE("sphere membership") {
    const Scale sm(-1.0);
    const HElem a = HElem::unit_i(sm);
    CHECK(sphere_contains(a, a, 1e-12));
    CHECK(sphere_contains(HElem::unit_i(sm), HElem::unit_k(sm), 1e-12));
    CHECK_FALSE(sphere_contains(a, a + HElem::one(sm), 1e-12));
}

TEST_CASE("json round trip") {
    Rng rng(41);
    for (double t : kSweep) {
        const Scale s(t);
        const HElem q = rng.helem_box(s, 3.0);
        const HElem back = helem_from_json(to_json(q));
        CHECK(back.bitwise_equal(q));
    }
}
