#include "generators.hpp"
#include "ncg/linalg.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <limits>

using namespace ncg;

namespace {

const ParamList kQP = make_params({"q", "p"});

Scalar q(int e = 1) { return Scalar::param(kQP, "q", e); }
Scalar p(int e = 1) { return Scalar::param(kQP, "p", e); }

}  // namespace

TEST(GaussRat, FieldOperations) {
    GaussRat a = GaussRat::frac(3, 4, -1, 2);
    GaussRat b = GaussRat::frac(-2, 3, 5, 1);
    EXPECT_EQ(a * a.inverse(), GaussRat(1));
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ(GaussRat::i() * GaussRat::i(), GaussRat(-1));
    EXPECT_EQ(GaussRat::frac(2, 4), GaussRat::frac(1, 2));
    EXPECT_THROW(GaussRat(0).inverse(), std::domain_error);
    EXPECT_EQ(GaussRat::i().pow(-2), GaussRat(-1));
}

TEST(Scalar, RingExamples) {
    EXPECT_EQ((q() + 1) * (q() - 1), q(2) - 1);
    EXPECT_EQ(q() * q(-1), Scalar(1));
    EXPECT_EQ((q() - q(-1)) + q(-1), q());
}

TEST(Scalar, EvaluateExamples) {
    Scalar s = 1 + q(-2);
    EXPECT_TRUE(s.evaluate_at({{"q", GaussRat::i()}}).is_zero());

    // (1 + q^-4) at q^2 = i: rewrite in t = q^2 and evaluate at t = i.
    Scalar quartic = 1 + q(-4);
    Scalar in_t = quartic.deflate("q", 2);
    EXPECT_TRUE(in_t.evaluate_at({{"q", GaussRat::i()}}).is_zero());
    EXPECT_THROW((1 + q(-3)).deflate("q", 2), std::domain_error);

    ParamList kk = make_params({"kappa"});
    EXPECT_TRUE(Scalar::param(kk, "kappa").evaluate_at({{"kappa", GaussRat(0)}}).is_zero());
}

TEST(Scalar, EvaluateErrors) {
    EXPECT_THROW(q(-1).evaluate_at({{"q", GaussRat(0)}}), std::domain_error);
    EXPECT_THROW((q() + p()).evaluate_at({{"q", GaussRat(1)}}), std::invalid_argument);
    EXPECT_EQ(q(2).evaluate_at({{"q", GaussRat(0)}}), GaussRat(0));
}

TEST(Scalar, ParameterListMismatch) {
    ParamList other = make_params({"x", "y"});
    Scalar x = Scalar::param(other, "x");
    EXPECT_THROW(x + q(), ParamMismatch);
    EXPECT_THROW(x * q(), ParamMismatch);
    // Constants combine with anything, equal lists combine even if distinct objects.
    EXPECT_NO_THROW(Scalar(3) + q());
    ParamList same = make_params({"q", "p"});
    EXPECT_EQ(Scalar::param(same, "q") + q(), 2 * q());
}

TEST(Scalar, ExponentOverflowIsAnError) {
    Scalar big = Scalar::param(kQP, "q", std::numeric_limits<std::int32_t>::max());
    EXPECT_THROW(big * q(), std::overflow_error);
    Scalar small = Scalar::param(kQP, "q", std::numeric_limits<std::int32_t>::min());
    EXPECT_THROW(small.inverse(), std::overflow_error);
}

TEST(Scalar, SubstituteMonomial) {
    Scalar s = q(-1) - p();
    EXPECT_EQ(s.substitute("p", q(-1)), Scalar(0));
    EXPECT_EQ((p(-2) * q()).substitute("p", q(-1)), q(3));
}

TEST(Scalar, Derivative) {
    ParamList xs = make_params({"x0", "x1"});
    Scalar x0 = Scalar::param(xs, "x0"), x1 = Scalar::param(xs, "x1");
    Scalar f = x0 * x0 * x1 + 3 * x1;
    EXPECT_EQ(f.derivative("x0"), 2 * x0 * x1);
    EXPECT_EQ(f.derivative("x1"), x0 * x0 + 3);
}

TEST(Scalar, TextRoundTrip) {
    EXPECT_EQ((q(-1) - p()).str(), "q^-1 - p");
    EXPECT_EQ(Scalar::parse("q^-1 - p", kQP), q(-1) - p());
    EXPECT_EQ(Scalar::parse("(1 + 2*i)*q^2 - 3/4*i", kQP),
              Scalar(GaussRat::frac(1, 1, 2, 1)) * q(2) - Scalar(GaussRat::frac(0, 1, 3, 4)));
    EXPECT_EQ(Scalar::parse("q/p", kQP), q() * p(-1));
    EXPECT_THROW(Scalar::parse("q + r", kQP), std::invalid_argument);

    prop::Gen gen(11);
    for (int k = 0; k < 300; ++k) {
        Scalar s = gen.laurent(kQP);
        EXPECT_EQ(Scalar::parse(s.str(), kQP), s) << s.str();
    }
}

TEST(Scalar, RingLawsRandomized) {
    prop::Gen gen(1);
    for (int k = 0; k < 200; ++k) {
        Scalar a = gen.laurent(kQP), b = gen.laurent(kQP), c = gen.laurent(kQP);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a - a, Scalar(0));
    }
}

TEST(Scalar, EvaluationIsHomomorphism) {
    prop::Gen gen(2);
    for (int k = 0; k < 200; ++k) {
        Scalar a = gen.laurent(kQP), b = gen.laurent(kQP);
        GaussRat qv = gen.gauss(), pv = gen.gauss();
        if (qv.is_zero() || pv.is_zero()) continue;
        std::map<std::string, GaussRat> pt{{"q", qv}, {"p", pv}};
        EXPECT_EQ((a * b).evaluate_at(pt), a.evaluate_at(pt) * b.evaluate_at(pt));
        EXPECT_EQ((a + b).evaluate_at(pt), a.evaluate_at(pt) + b.evaluate_at(pt));
    }
}

TEST(Linalg, SolveLinearExamples) {
    auto id = solve_linear(ScalarMatrix::identity(3), ScalarMatrix(3, 1));
    EXPECT_EQ(id.kernel.size(), 0u);
    auto zero = solve_linear(ScalarMatrix(2, 2), ScalarMatrix(2, 1));
    EXPECT_EQ(zero.kernel.size(), 2u);
    EXPECT_TRUE(zero.consistent);
}

TEST(Linalg, SolveLinearResubstitution) {
    prop::Gen gen(3);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = std::size_t(gen.integer(1, 5)), n = std::size_t(gen.integer(1, 5));
        ScalarMatrix a(m, n), x(n, 1);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < n; ++c)
                if (gen.integer(0, 3)) a(r, c) = Scalar(gen.gauss());
        for (std::size_t c = 0; c < n; ++c) x(c, 0) = Scalar(gen.rational());
        ScalarMatrix b = a * x;
        auto sol = solve_linear(a, b);
        ASSERT_TRUE(sol.consistent);
        EXPECT_EQ(a * sol.particular, b);
        for (const auto& v : sol.kernel) {
            ScalarMatrix kv(n, 1);
            for (std::size_t c = 0; c < n; ++c) kv(c, 0) = v[c];
            EXPECT_TRUE((a * kv).is_zero());
        }
        EXPECT_EQ(sol.rank + sol.kernel.size(), n);
    }
}

TEST(Linalg, SolveLinearSymbolicUnitPivots) {
    // [[q, 1], [0, p]] x = [1, 1]
    ScalarMatrix a = ScalarMatrix::from_rows({{q(), Scalar(1)}, {Scalar(0), p()}});
    ScalarMatrix b = ScalarMatrix::from_rows({{Scalar(1)}, {Scalar(1)}});
    auto sol = solve_linear(a, b);
    EXPECT_EQ(a * sol.particular, b);
    ScalarMatrix bad = ScalarMatrix::from_rows({{q() + 1}});
    EXPECT_THROW(solve_linear(bad, ScalarMatrix(1, 1)), std::domain_error);
}

TEST(Linalg, Determinant) {
    ScalarMatrix a = ScalarMatrix::from_rows({{q(), Scalar(1)}, {p(), q()}});
    EXPECT_EQ(a.determinant(), q(2) - p());
    prop::Gen gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = std::size_t(gen.integer(1, 5));
        ScalarMatrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = Scalar(gen.rational());
        Scalar det = m.determinant();
        auto sol = solve_linear(m, ScalarMatrix(n, 1));
        EXPECT_EQ(det.is_zero(), sol.rank < n);
        // det(2m) = 2^n det(m)
        EXPECT_EQ((Scalar(2) * m).determinant(), Scalar(GaussRat(2).pow(long(n))) * det);
    }
}

TEST(Linalg, EigenNumeric) {
    auto ev = eigen_numeric(ScalarMatrix::from_rows({{Scalar(2), Scalar(0)}, {Scalar(0), Scalar(8)}}));
    ASSERT_EQ(ev.size(), 2u);
    EXPECT_NEAR(ev[0], 2, 1e-9);
    EXPECT_NEAR(ev[1], 8, 1e-9);
    ev = eigen_numeric(ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(1), Scalar(0)}}));
    EXPECT_NEAR(ev[0], -1, 1e-9);
    EXPECT_NEAR(ev[1], 1, 1e-9);
    EXPECT_THROW(eigen_numeric(ScalarMatrix::from_rows({{Scalar(0), Scalar(1)}, {Scalar(2), Scalar(0)}})),
                 std::invalid_argument);
}

TEST(Linalg, EigenNumericKnownRationalSpectrum) {
    // Q diag(d) Q^T with Q a rational orthogonal matrix built from a Pythagorean triple.
    prop::Gen gen(5);
    ScalarMatrix qm = ScalarMatrix::from_rows({{Scalar(GaussRat::frac(3, 5)), Scalar(GaussRat::frac(4, 5)), Scalar(0)},
                                               {Scalar(GaussRat::frac(-4, 5)), Scalar(GaussRat::frac(3, 5)), Scalar(0)},
                                               {Scalar(0), Scalar(0), Scalar(1)}});
    for (int trial = 0; trial < 20; ++trial) {
        std::array<GaussRat, 3> d{gen.rational(), gen.rational(), gen.rational()};
        ScalarMatrix dm(3, 3);
        for (int k = 0; k < 3; ++k) dm(k, k) = Scalar(d[k]);
        auto ev = eigen_numeric(qm * dm * qm.transpose());
        std::vector<double> want{d[0].re().get_d(), d[1].re().get_d(), d[2].re().get_d()};
        std::sort(want.begin(), want.end());
        for (int k = 0; k < 3; ++k) EXPECT_NEAR(ev[k], want[k], 1e-9);
    }
}

TEST(Linalg, LeviCivita) {
    std::array<int, 4> a{0, 1, 2, 3}, b{1, 0, 2, 3}, c{0, 0, 2, 3}, d{3, 2, 1, 0};
    EXPECT_EQ(levi_civita(a), GaussRat(1));
    EXPECT_EQ(levi_civita(b), GaussRat(-1));
    EXPECT_EQ(levi_civita(c), GaussRat(0));
    EXPECT_EQ(levi_civita(d), GaussRat(1));
}
