#include "generators.hpp"
#include "ncg/matrix_geometry.hpp"

#include <gtest/gtest.h>

using namespace ncg;

namespace {

Scalar num(long v) { return Scalar(GaussRat(v)); }
const Scalar kI(GaussRat::i());

Mat random_matrix(prop::Gen& gen, std::size_t n) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            if (gen.integer(0, 2)) m(r, c) = Scalar(gen.gauss());
    return m;
}

Form random_form(prop::Gen& gen, const MatrixAlgebra& a, int degree, int terms = 3) {
    Form w(a.n());
    for (int t = 0; t < terms; ++t) {
        Mask m = 0;
        while (degree_of(m) < degree) m |= Mask(1) << gen.integer(0, long(a.dim()) - 1);
        w.add(m, random_matrix(gen, a.n()));
    }
    return w;
}

Form half_c_theta_theta(const MatrixAlgebra& a, std::size_t k) {
    Form r(a.n());
    for (std::size_t m = 0; m < a.dim(); ++m)
        for (std::size_t l = 0; l < a.dim(); ++l) {
            const GaussRat& c = a.C(m, l, k);
            if (c.is_zero()) continue;
            r += Scalar(c * GaussRat::frac(1, 2)) * wedge(a.theta(m), a.theta(l));
        }
    return r;
}

}  // namespace

TEST(MatrixGeometry, PauliStructureConstants) {
    auto a = MatrixAlgebra::build(2);
    ASSERT_EQ(a.dim(), 3u);
    // direct commutator oracle: i[s1, s2] = i * 2i s3 = -2 s3
    Mat direct = kI * commutator(a.E(0), a.E(1));
    EXPECT_EQ(direct, num(-2) * a.E(2));
    EXPECT_EQ(a.C(0, 1, 2), GaussRat(-2));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(a.g(k, m), GaussRat(k == m ? 8 : 0));
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) EXPECT_TRUE(a.C(k, k, l).is_zero());
}

TEST(MatrixGeometry, StructureDataAllSizes) {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = MatrixAlgebra::build(n);
        const std::size_t N = a.dim();
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t m = 0; m < N; ++m) {
                Mat rebuilt = Scalar(a.t(k, m) / GaussRat(long(n))) * a.unit();
                for (std::size_t j = 0; j < N; ++j)
                    rebuilt += Scalar(a.S(k, m, j) - GaussRat::i() * GaussRat::frac(1, 2) * a.C(k, m, j)) * a.E(j);
                EXPECT_EQ(a.E(k) * a.E(m), rebuilt);
                EXPECT_EQ(a.g(k, m), a.g(m, k));
                EXPECT_TRUE(a.C(k, m, k).is_zero());
                for (std::size_t l = 0; l < N; ++l) {
                    EXPECT_EQ(a.C(k, m, l), -a.C(m, k, l));
                    EXPECT_EQ(a.S(k, m, l), a.S(m, k, l));
                }
            }
        auto ratio = a.killing_trace_ratio();
        ASSERT_TRUE(ratio.has_value());
        EXPECT_EQ(*ratio, GaussRat(long(2 * n)));
        EXPECT_TRUE(a.metric_diagonal());
    }
}

TEST(MatrixGeometry, DerivationBracketMatchesStructureConstants) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        for (std::size_t k = 0; k < a.dim(); ++k)
            for (std::size_t m = 0; m < a.dim(); ++m)
                for (std::size_t l = 0; l < a.dim(); ++l) EXPECT_EQ(a.bracket(k, m, l), a.C(k, m, l));
    }
}

TEST(MatrixGeometry, DifferentialExamples) {
    auto a = MatrixAlgebra::build(2);
    EXPECT_TRUE(a.d(Form::zero_form(a.unit())).is_zero());
    for (std::size_t k = 0; k < 3; ++k) {
        Form de = a.d(Form::zero_form(a.E(k)));
        // oracle: dE_k(d_m) = i[E_m, E_k]
        for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(de.coefficient(Mask(1) << m), kI * commutator(a.E(m), a.E(k)));
        // with i[E_k, E_m] = C_km^l E_l the result reads -C_km^l E_l theta^m
        Form expected(2);
        for (std::size_t m = 0; m < 3; ++m)
            for (std::size_t l = 0; l < 3; ++l)
                if (!a.C(k, m, l).is_zero()) expected.add(Mask(1) << m, Scalar(-a.C(k, m, l)) * a.E(l));
        EXPECT_EQ(de, expected);
        EXPECT_TRUE(a.d(de).is_zero());
    }
}

TEST(MatrixGeometry, ThetaStructureEquation) {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = MatrixAlgebra::build(n);
        for (std::size_t k = 0; k < a.dim(); ++k)
            EXPECT_TRUE((a.d(a.theta(k)) + half_c_theta_theta(a, k)).is_zero()) << "n=" << n << " k=" << k;
    }
}

TEST(MatrixGeometry, MaurerCartan) {
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = MatrixAlgebra::build(n);
        Form th = a.canonical_theta();
        EXPECT_TRUE((a.d(th) + wedge(th, th)).is_zero()) << "n=" << n;
    }
}

TEST(MatrixGeometry, OnlyMinusIScalingSolvesMaurerCartan) {
    auto a = MatrixAlgebra::build(2);
    for (GaussRat c : {GaussRat(1), GaussRat::i(), GaussRat(-1), -GaussRat::i(), GaussRat(2)}) {
        Form th = a.scaled_theta(c);
        bool flat = (a.d(th) + wedge(th, th)).is_zero();
        EXPECT_EQ(flat, c == -GaussRat::i());
    }
}

TEST(MatrixGeometry, DSquaredZeroRandomized) {
    prop::Gen gen(21);
    for (std::size_t n : {2u, 3u, 4u}) {
        auto a = MatrixAlgebra::build(n);
        int trials = n == 4 ? 30 : 80;
        for (int t = 0; t < trials; ++t) {
            int p = int(gen.integer(0, long(a.dim()) - 2));
            if (n == 4) p = int(gen.integer(0, 5));
            Form w = random_form(gen, a, p, 2);
            EXPECT_TRUE(a.d(a.d(w)).is_zero()) << "n=" << n << " degree " << p;
        }
    }
}

TEST(MatrixGeometry, GradedLeibnizRandomized) {
    prop::Gen gen(22);
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        for (int t = 0; t < 60; ++t) {
            int p = int(gen.integer(0, 3)), r = int(gen.integer(0, 3));
            if (p + r >= int(a.dim())) continue;
            Form x = random_form(gen, a, p, 2), y = random_form(gen, a, r, 2);
            Form lhs = a.d(wedge(x, y));
            Form rhs = wedge(a.d(x), y);
            Form tail = wedge(x, a.d(y));
            rhs += (p % 2) ? -tail : tail;
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(MatrixGeometry, WedgeExamples) {
    auto a = MatrixAlgebra::build(2);
    EXPECT_TRUE(wedge(a.theta(0), a.theta(0)).is_zero());
    EXPECT_EQ(wedge(a.theta(0), a.theta(1)), -wedge(a.theta(1), a.theta(0)));
    Form e1 = Form::generator(2, 0, a.E(0)), e2 = Form::generator(2, 1, a.E(1));
    Form lhs = wedge(e1, e2) + wedge(e2, e1);
    Form rhs = Form::monomial(0b11, a.E(0) * a.E(1) - a.E(1) * a.E(0));
    EXPECT_EQ(lhs, rhs);
    prop::Gen gen(23);
    auto b = MatrixAlgebra::build(3);
    for (int t = 0; t < 30; ++t) {
        Form x = random_form(gen, b, 1), y = random_form(gen, b, 2), z = random_form(gen, b, 1);
        EXPECT_EQ(wedge(wedge(x, y), z), wedge(x, wedge(y, z)));
    }
}

TEST(MatrixGeometry, InteriorAndLie) {
    auto a = MatrixAlgebra::build(2);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t m = 0; m < 3; ++m) {
            Form r = a.interior(a.basis_field(m), a.theta(k));
            EXPECT_EQ(r, k == m ? Form::zero_form(a.unit()) : Form(2));
        }
    Form omega = a.symplectic_form();
    for (std::size_t k = 0; k < 3; ++k) {
        EXPECT_TRUE(a.lie(a.basis_field(k), omega).is_zero());
        EXPECT_TRUE(a.lie(a.basis_field(k), a.canonical_theta()).is_zero());
    }
    prop::Gen gen(24);
    for (int t = 0; t < 20; ++t) {
        Derivation x;
        // only holds for central components; matrix-valued ones leave commutators behind
        for (int k = 0; k < 3; ++k) x.components.push_back(Scalar(gen.gauss()) * a.unit());
        Form w = random_form(gen, a, 2);
        EXPECT_TRUE(a.interior(x, a.interior(x, w)).is_zero());
    }
    EXPECT_THROW(a.interior(a.basis_field(0), Form::zero_form(a.unit())), std::invalid_argument);
}

TEST(MatrixGeometry, LieDerivativeOfSymplecticFormAllSizes) {
    for (std::size_t n : {3u, 4u}) {
        auto a = MatrixAlgebra::build(n);
        Form omega = a.symplectic_form();
        EXPECT_TRUE(a.d(omega).is_zero());
        for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_TRUE(a.lie(a.basis_field(k), omega).is_zero());
    }
}

TEST(MatrixGeometry, PoissonBracketIsCommutator) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        EXPECT_EQ(a.symplectic_rank(), a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) {
            for (std::size_t m = 0; m < a.dim(); ++m)
                EXPECT_EQ(a.poisson(a.E(k), a.E(m)), kI * commutator(a.E(k), a.E(m)));
            EXPECT_TRUE(a.poisson(a.E(k), a.unit()).is_zero());
        }
    }
    auto a = MatrixAlgebra::build(2);
    Mat jac = a.poisson(a.E(0), a.poisson(a.E(1), a.E(2))) + a.poisson(a.E(1), a.poisson(a.E(2), a.E(0))) +
              a.poisson(a.E(2), a.poisson(a.E(0), a.E(1)));
    EXPECT_TRUE(jac.is_zero());
}

TEST(MatrixGeometry, HamiltonianFieldsOfGenerators) {
    auto a = MatrixAlgebra::build(2);
    for (std::size_t k = 0; k < 3; ++k) {
        Derivation h = a.hamiltonian(a.E(k));
        for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(h.components[m], m == k ? -a.unit() : Mat(2, 2));
    }
}

TEST(MatrixGeometry, HodgeAndIntegration) {
    for (std::size_t n : {2u, 3u}) {
        auto a = MatrixAlgebra::build(n);
        Form eta = Form::monomial(a.top_mask(), a.unit());
        EXPECT_EQ(a.integrate(eta), Scalar(GaussRat(long(n))));
        EXPECT_EQ(a.hodge(Form::zero_form(a.unit())), eta);
        prop::Gen gen(25);
        for (int p = 0; p <= int(a.dim()); ++p) {
            Form w = random_form(gen, a, p, 2);
            EXPECT_EQ(a.hodge(a.hodge(w)), Scalar(a.hodge_square_factor(p)) * w);
        }
    }
    auto a = MatrixAlgebra::build(2);
    // (theta^1, theta^1) = n / t_11
    EXPECT_EQ(a.inner(a.theta(0), a.theta(0)), Scalar(GaussRat(2) / a.t(0, 0)));
    EXPECT_EQ(a.inner(a.theta(0), a.theta(0)), Scalar(1));
    Form x = Form::generator(2, 0, a.E(0)) + Form::generator(2, 1, a.E(2));
    Form y = Form::generator(2, 0, a.E(1)) + Form::generator(2, 1, a.E(0) + a.E(2));
    EXPECT_EQ(a.inner(x, y), a.inner(y, x));
}

TEST(MatrixGeometry, DerivationsAreNotALeftModule) {
    auto a = MatrixAlgebra::build(2);
    Derivation x = a.basis_field(0);
    x.components[0] = a.E(0);
    EXPECT_FALSE(a.leibniz_defect(x, a.E(1), a.E(2)).is_zero());
    EXPECT_TRUE(a.leibniz_defect(a.basis_field(0), a.E(1), a.E(2)).is_zero());
}

TEST(MatrixGeometry, UserSuppliedBasis) {
    auto pauli = MatrixAlgebra::gell_mann_basis(2);
    std::vector<Mat> skew{pauli[0] + pauli[1], pauli[1], num(2) * pauli[2]};
    auto a = MatrixAlgebra::from_basis(skew);
    EXPECT_FALSE(a.metric_diagonal());
    Form th = a.canonical_theta();
    EXPECT_TRUE((a.d(th) + wedge(th, th)).is_zero());
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t m = 0; m < 3; ++m)
            EXPECT_EQ(a.poisson(a.E(k), a.E(m)), kI * commutator(a.E(k), a.E(m)));
    EXPECT_THROW(a.hodge(a.theta(0)), std::domain_error);

    std::vector<Mat> bad{pauli[0], pauli[0], pauli[2]};
    EXPECT_THROW(MatrixAlgebra::from_basis(bad), std::invalid_argument);
    std::vector<Mat> nonherm{pauli[0], kI * pauli[1], pauli[2]};
    EXPECT_THROW(MatrixAlgebra::from_basis(nonherm), std::invalid_argument);
    EXPECT_THROW(MatrixAlgebra::build(1), std::invalid_argument);
}

TEST(MatrixGeometry, BasisFromJson) {
    std::string text = R"({"n": 2, "basis": [
        [[["0","0"],["1","0"]], [["1","0"],["0","0"]]],
        [[["0","0"],["0","-1"]], [["0","1"],["0","0"]]],
        [[["1/2","0"],["0","0"]], [["0","0"],["-1/2","0"]]]]})";
    auto a = MatrixAlgebra::from_json(text);
    EXPECT_EQ(a.C(0, 1, 2), GaussRat(-4));
    // Killing and trace forms stay proportional under any change of basis.
    auto ratio = a.killing_trace_ratio();
    ASSERT_TRUE(ratio.has_value());
    EXPECT_EQ(*ratio, GaussRat(4));
}

TEST(MatrixGeometry, SymmetricCoefficientsTraceCondition) {
    // S_km^k = 0 holds for the Pauli basis but not for n = 3 (the d-symbol has d_118 != 0).
    auto a = MatrixAlgebra::build(2);
    for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t m = 0; m < 3; ++m) EXPECT_TRUE(a.S(k, m, k).is_zero());
    auto b = MatrixAlgebra::build(3);
    bool any_nonzero = false;
    for (std::size_t k = 0; k < 8; ++k)
        for (std::size_t m = 0; m < 8; ++m) any_nonzero |= !b.S(k, m, k).is_zero();
    EXPECT_TRUE(any_nonzero);
}
