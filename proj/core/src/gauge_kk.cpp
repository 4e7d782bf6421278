#include "ncg/gauge_kk.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

namespace ncg {

namespace {

const char* const kCoordNames[] = {"x0", "x1", "x2", "x3"};

std::vector<CentralForm> shifted_generators(const MatrixAlgebra& a) {
    if (kSpacetimeDim + a.dim() > 32) throw std::invalid_argument("internal algebra too large for hybrid forms");
    std::vector<CentralForm> out(kSpacetimeDim);
    for (std::size_t k = 0; k < a.dim(); ++k) {
        CentralForm f;
        for (const auto& [m, c] : a.d_generator(k)) f.emplace(m << kSpacetimeDim, c);
        out.push_back(std::move(f));
    }
    return out;
}

Tensor2 tensor2(std::size_t a, std::size_t b) { return Tensor2(a, std::vector<Scalar>(b)); }
Tensor3 tensor3(std::size_t a, std::size_t b, std::size_t c) { return Tensor3(a, tensor2(b, c)); }

}  // namespace

const ParamList& kk_params() {
    static const ParamList params = make_params({"x0", "x1", "x2", "x3", "minv"});
    return params;
}

Scalar kk_coordinate(std::size_t mu) { return Scalar::param(kk_params(), kCoordNames[mu]); }
Scalar kk_minv(int power) { return Scalar::param(kk_params(), "minv", power); }

GaugeFields GaugeFields::zero(std::size_t dim) {
    GaugeFields f;
    f.A0.assign(kSpacetimeDim, Scalar());
    f.A = tensor2(dim, kSpacetimeDim);
    f.B0.assign(dim, Scalar());
    f.B = tensor2(dim, dim);
    return f;
}

KaluzaKlein::KaluzaKlein(MatrixAlgebra internal)
    : Calculus(internal.n(), shifted_generators(internal)), alg_(std::move(internal)) {}

std::pair<int, int> KaluzaKlein::bidegree(Mask m) {
    Mask low = (Mask(1) << kSpacetimeDim) - 1;
    return {degree_of(m & low), degree_of(m >> kSpacetimeDim)};
}

Mat KaluzaKlein::lambda(std::size_t k) const { return Scalar(GaussRat::i()) * alg_.E(k); }

Mat KaluzaKlein::partial(std::size_t leg, const Mat& f) const {
    if (leg < kSpacetimeDim) {
        const char* name = kCoordNames[leg];
        return f.map([name](const Scalar& s) { return s.derivative(name); });
    }
    return alg_.partial(leg - kSpacetimeDim, f);
}

std::pair<Derivation, Derivation> KaluzaKlein::split(const Derivation& x) const {
    if (x.components.size() != legs()) throw std::invalid_argument("vector field has the wrong number of components");
    Derivation space = x, inner = x;
    for (std::size_t leg = 0; leg < legs(); ++leg)
        (leg < kSpacetimeDim ? inner : space).components[leg] = Mat(n_, n_);
    return {space, inner};
}

std::vector<Scalar> KaluzaKlein::lambda_components(const Mat& x) const {
    auto c = alg_.decompose(x);
    const Scalar minus_i(-GaussRat::i());
    for (std::size_t l = 1; l < c.size(); ++l) c[l] = minus_i * c[l];
    return c;
}

Mat KaluzaKlein::from_lambda(const Scalar& singlet, const std::vector<Scalar>& comps) const {
    Mat r = singlet * alg_.unit();
    for (std::size_t k = 0; k < comps.size(); ++k)
        if (!comps[k].is_zero()) r += comps[k] * lambda(k);
    return r;
}

Form KaluzaKlein::connection(const GaugeFields& f) const {
    const std::size_t N = alg_.dim();
    Form a(n_);
    for (std::size_t mu = 0; mu < kSpacetimeDim; ++mu) {
        std::vector<Scalar> comps(N);
        for (std::size_t k = 0; k < N; ++k) comps[k] = f.A[k][mu];
        a.add(dx(mu), from_lambda(f.A0[mu], comps));
    }
    for (std::size_t l = 0; l < N; ++l) {
        std::vector<Scalar> comps(N);
        for (std::size_t m = 0; m < N; ++m) comps[m] = f.B[m][l];
        comps[l] -= Scalar(1);
        a.add(theta(l), from_lambda(f.B0[l], comps));
    }
    return a;
}

GaugeFields KaluzaKlein::fields_of(const Form& a) const {
    if (a.degree() > 1 || a.degree() == 0) throw std::invalid_argument("connection must be a 1-form");
    const std::size_t N = alg_.dim();
    GaugeFields f = GaugeFields::zero(N);
    for (std::size_t mu = 0; mu < kSpacetimeDim; ++mu) {
        auto c = lambda_components(a.coefficient(dx(mu)));
        f.A0[mu] = c[0];
        for (std::size_t k = 0; k < N; ++k) f.A[k][mu] = c[k + 1];
    }
    for (std::size_t l = 0; l < N; ++l) {
        auto c = lambda_components(a.coefficient(theta(l)));
        f.B0[l] = c[0];
        for (std::size_t m = 0; m < N; ++m) f.B[m][l] = c[m + 1];
        f.B[l][l] += Scalar(1);
    }
    return f;
}

Form KaluzaKlein::curvature(const Form& a) const { return d(a) + wedge(a, a); }

FieldStrength KaluzaKlein::field_strength(const Form& a) const {
    const std::size_t N = alg_.dim();
    (void)fields_of(a);
    Form f = curvature(a);
    FieldStrength fs{tensor2(4, 4), tensor3(N, 4, 4), tensor2(4, N), tensor3(N, 4, N), tensor2(N, N), tensor3(N, N, N)};
    const Scalar m1 = kk_minv(1), m2 = kk_minv(2);
    for (const auto& [mask, coeff] : f.terms()) {
        auto [ps, pi] = bidegree(mask);
        auto c = lambda_components(coeff);
        Mask low = mask & ((Mask(1) << kSpacetimeDim) - 1);
        Mask high = mask >> kSpacetimeDim;
        if (ps == 2) {
            std::size_t mu = __builtin_ctz(low), nu = 31 - __builtin_clz(low);
            fs.F0[mu][nu] = c[0];
            fs.F0[nu][mu] = -c[0];
            for (std::size_t k = 0; k < N; ++k) {
                fs.G[k][mu][nu] = c[k + 1];
                fs.G[k][nu][mu] = -c[k + 1];
            }
        } else if (ps == 1 && pi == 1) {
            std::size_t mu = __builtin_ctz(low), l = __builtin_ctz(high);
            fs.DB0[mu][l] = m1 * c[0];
            for (std::size_t m = 0; m < N; ++m) fs.DB[m][mu][l] = m1 * c[m + 1];
        } else if (pi == 2) {
            std::size_t k = __builtin_ctz(high), l = 31 - __builtin_clz(high);
            fs.Gpot0[k][l] = m2 * c[0];
            fs.Gpot0[l][k] = -(m2 * c[0]);
            for (std::size_t m = 0; m < N; ++m) {
                fs.Gpot[m][k][l] = m2 * c[m + 1];
                fs.Gpot[m][l][k] = -(m2 * c[m + 1]);
            }
        } else {
            throw std::logic_error("curvature of a 1-form has a component that is not of degree 2");
        }
    }
    return fs;
}

FieldStrength KaluzaKlein::field_strength_closed(const GaugeFields& f) const {
    const std::size_t N = alg_.dim();
    FieldStrength fs{tensor2(4, 4), tensor3(N, 4, 4), tensor2(4, N), tensor3(N, 4, N), tensor2(N, N), tensor3(N, N, N)};
    auto C = [&](std::size_t a, std::size_t b, std::size_t c) { return Scalar(alg_.C(a, b, c)); };
    auto dmu = [](const Scalar& s, std::size_t mu) { return s.derivative(kCoordNames[mu]); };
    const Scalar m1 = kk_minv(1), m2 = kk_minv(2);

    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = 0; nu < 4; ++nu) {
            if (mu == nu) continue;
            fs.F0[mu][nu] = dmu(f.A0[nu], mu) - dmu(f.A0[mu], nu);
            for (std::size_t k = 0; k < N; ++k) {
                Scalar g = dmu(f.A[k][nu], mu) - dmu(f.A[k][mu], nu);
                for (std::size_t l = 0; l < N; ++l)
                    for (std::size_t m = 0; m < N; ++m) {
                        if (alg_.C(l, m, k).is_zero()) continue;
                        g += C(l, m, k) * f.A[l][mu] * f.A[m][nu];
                    }
                fs.G[k][mu][nu] = g;
            }
        }
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t k = 0; k < N; ++k) {
            fs.DB0[mu][k] = m1 * dmu(f.B0[k], mu);
            for (std::size_t m = 0; m < N; ++m) {
                Scalar v = dmu(f.B[m][k], mu);
                for (std::size_t s = 0; s < N; ++s)
                    for (std::size_t r = 0; r < N; ++r) {
                        if (alg_.C(s, r, m).is_zero()) continue;
                        v += C(s, r, m) * f.A[s][mu] * f.B[r][k];
                    }
                fs.DB[m][mu][k] = m1 * v;
            }
        }
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l) {
            if (k == l) continue;
            Scalar s0;
            for (std::size_t p = 0; p < N; ++p)
                if (!alg_.C(k, l, p).is_zero()) s0 -= C(k, l, p) * f.B0[p];
            fs.Gpot0[k][l] = m2 * s0;
            for (std::size_t m = 0; m < N; ++m) {
                Scalar v;
                for (std::size_t s = 0; s < N; ++s)
                    for (std::size_t r = 0; r < N; ++r) {
                        if (alg_.C(s, r, m).is_zero()) continue;
                        v += C(s, r, m) * f.B[s][k] * f.B[r][l];
                    }
                for (std::size_t p = 0; p < N; ++p)
                    if (!alg_.C(k, l, p).is_zero()) v -= C(k, l, p) * f.B[m][p];
                fs.Gpot[m][k][l] = m2 * v;
            }
        }
    return fs;
}

Form KaluzaKlein::reassemble(const FieldStrength& fs) const {
    const std::size_t N = alg_.dim();
    const Scalar u1 = kk_minv(-1), u2 = kk_minv(-2);
    Form f(n_);
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t nu = mu + 1; nu < 4; ++nu) {
            std::vector<Scalar> comps(N);
            for (std::size_t k = 0; k < N; ++k) comps[k] = fs.G[k][mu][nu];
            f.add(dx(mu) | dx(nu), from_lambda(fs.F0[mu][nu], comps));
        }
    for (std::size_t mu = 0; mu < 4; ++mu)
        for (std::size_t l = 0; l < N; ++l) {
            std::vector<Scalar> comps(N);
            for (std::size_t m = 0; m < N; ++m) comps[m] = u1 * fs.DB[m][mu][l];
            f.add(dx(mu) | theta(l), from_lambda(u1 * fs.DB0[mu][l], comps));
        }
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = k + 1; l < N; ++l) {
            std::vector<Scalar> comps(N);
            for (std::size_t m = 0; m < N; ++m) comps[m] = u2 * fs.Gpot[m][k][l];
            f.add(theta(k) | theta(l), from_lambda(u2 * fs.Gpot0[k][l], comps));
        }
    return f;
}

Form KaluzaKlein::gauge_transform(const Form& a, const Mat& u) const {
    Mat uinv = inverse(u);
    return uinv * a * u + uinv * d(Form::zero_form(u));
}

VacuumResult vacuum_check(const MatrixAlgebra& a, const RatTensor2& b) {
    const std::size_t N = a.dim();
    if (b.size() != N) throw std::invalid_argument("vacuum tensor has the wrong size");
    VacuumResult res;
    res.vacuum = true;
    res.residual.assign(N, RatTensor2(N, std::vector<GaussRat>(N)));
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l) {
                GaussRat v(0);
                for (std::size_t s = 0; s < N; ++s) {
                    if (b[s][k].is_zero()) continue;
                    for (std::size_t r = 0; r < N; ++r)
                        if (!a.C(s, r, m).is_zero() && !b[r][l].is_zero()) v += a.C(s, r, m) * b[s][k] * b[r][l];
                }
                for (std::size_t p = 0; p < N; ++p)
                    if (!a.C(k, l, p).is_zero()) v -= a.C(k, l, p) * b[m][p];
                if (!v.is_zero()) res.vacuum = false;
                res.residual[m][k][l] = v;
            }
    return res;
}

RatTensor2 identity_vacuum(std::size_t dim) {
    RatTensor2 b(dim, std::vector<GaussRat>(dim));
    for (std::size_t k = 0; k < dim; ++k) b[k][k] = GaussRat(1);
    return b;
}

RatTensor2 transport(const MatrixAlgebra& a, const RatTensor2& b, const Mat& u) {
    const std::size_t N = a.dim();
    Mat uinv = inverse(u);
    const Scalar i(GaussRat::i());
    RatTensor2 out(N, std::vector<GaussRat>(N));
    for (std::size_t l = 0; l < N; ++l) {
        Mat phi(a.n(), a.n());
        for (std::size_t m = 0; m < N; ++m)
            if (!b[m][l].is_zero()) phi += Scalar(b[m][l]) * i * a.E(m);
        auto c = a.decompose(uinv * phi * u);
        for (std::size_t m = 0; m < N; ++m) out[m][l] = (c[m + 1] * Scalar(-GaussRat::i())).constant_term();
    }
    return out;
}

std::vector<Mat> finite_unitary_set(std::size_t n) {
    std::vector<Mat> out;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    const GaussRat phases[] = {GaussRat(1), GaussRat::i(), GaussRat(-1), -GaussRat::i()};
    std::size_t combos = 1;
    for (std::size_t k = 1; k < n; ++k) combos *= 4;
    do {
        for (std::size_t code = 0; code < combos; ++code) {
            Mat u(n, n);
            std::size_t c = code;
            for (std::size_t r = 0; r < n; ++r) {
                GaussRat ph = r == 0 ? GaussRat(1) : phases[c % 4];
                if (r > 0) c /= 4;
                u(r, perm[r]) = Scalar(ph);
            }
            out.push_back(std::move(u));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            Mat u = Mat::identity(n);
            u(j, j) = Scalar(GaussRat::frac(3, 5));
            u(k, k) = Scalar(GaussRat::frac(3, 5));
            u(j, k) = Scalar(GaussRat::frac(-4, 5));
            u(k, j) = Scalar(GaussRat::frac(4, 5));
            out.push_back(std::move(u));
        }
    return out;
}

bool gauge_related(const MatrixAlgebra& a, const RatTensor2& from, const RatTensor2& to,
                   const std::vector<Mat>& unitaries) {
    for (const auto& u : unitaries)
        if (transport(a, from, u) == to) return true;
    return false;
}

std::vector<RatTensor2> random_vacuum_search(const MatrixAlgebra& a, std::uint64_t seed, int trials, int range) {
    const std::size_t N = a.dim();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> value(-range, range);
    std::bernoulli_distribution sparse(0.7);
    std::set<std::vector<std::vector<std::string>>> seen;
    std::vector<RatTensor2> found;
    for (int t = 0; t < trials; ++t) {
        RatTensor2 b(N, std::vector<GaussRat>(N));
        for (auto& row : b)
            for (auto& v : row)
                if (!sparse(rng)) v = GaussRat(long(value(rng)));
        if (!vacuum_check(a, b).vacuum) continue;
        std::vector<std::vector<std::string>> key(N);
        for (std::size_t m = 0; m < N; ++m)
            for (const auto& v : b[m]) key[m].push_back(v.str());
        if (seen.insert(key).second) found.push_back(std::move(b));
    }
    return found;
}

namespace {

using RatMatrix = std::vector<std::vector<GaussRat>>;

RatMatrix rat_matrix(std::size_t r, std::size_t c) { return RatMatrix(r, std::vector<GaussRat>(c)); }

ScalarMatrix block(const RatMatrix& m, const std::vector<std::size_t>& idx) {
    ScalarMatrix out(idx.size(), idx.size());
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = Scalar(m[idx[r]][idx[c]]);
    return out;
}

void require_block_diagonal(const RatMatrix& m, const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
    for (auto r : a)
        for (auto c : b)
            if (!m[r][c].is_zero() || !m[c][r].is_zero())
                throw std::logic_error("singlet and adjoint modes mix in the mass matrix");
}

}  // namespace

MassSpectrum mass_spectrum(const MatrixAlgebra& a, const RatTensor2& b, InternalMetric metric) {
    if (!vacuum_check(a, b).vacuum) throw std::invalid_argument("mass spectrum requested away from a vacuum");
    const std::size_t N = a.dim(), A = N + 1;

    GaussRat scale(1);
    if (metric == InternalMetric::Killing) {
        auto ratio = a.killing_trace_ratio();
        if (!ratio) throw std::domain_error("Killing form is not proportional to the trace form");
        scale = *ratio;
    }
    // h and its inverse on internal legs; G on the singlet + lambda components
    RatMatrix hinv = rat_matrix(N, N), G = rat_matrix(A, A);
    GaussRat inv_scale = scale.inverse();
    G[0][0] = GaussRat(long(a.n()));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            hinv[k][m] = a.t_inv(k, m) * inv_scale;
            G[k + 1][m + 1] = a.t(k, m) * scale;
        }
    // [T_a, T_b] = f(a, b, c) T_c with T_0 = 1, T_{k+1} = lambda_k
    auto f = [&](std::size_t x, std::size_t y, std::size_t c) -> GaussRat {
        if (x == 0 || y == 0 || c == 0) return GaussRat(0);
        return a.C(x - 1, y - 1, c - 1);
    };
    // vacuum phi^c_l
    auto phi = [&](std::size_t c, std::size_t l) -> GaussRat { return c == 0 ? GaussRat(0) : b[c - 1][l]; };

    MassSpectrum out;
    out.metric = metric;

    // Gauge bosons: M_ab = h^{ll'} G_cc' [T_a, phi_l]^c [T_b, phi_l']^c'
    {
        std::vector<RatMatrix> X(N, rat_matrix(A, A));  // X[l][a][c]
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t x = 0; x < A; ++x)
                for (std::size_t c = 0; c < A; ++c) {
                    GaussRat v(0);
                    for (std::size_t y = 0; y < A; ++y) {
                        GaussRat p = phi(y, l);
                        if (!p.is_zero()) v += f(x, y, c) * p;
                    }
                    X[l][x][c] = v;
                }
        RatMatrix M = rat_matrix(A, A);
        for (std::size_t x = 0; x < A; ++x)
            for (std::size_t y = 0; y < A; ++y) {
                GaussRat acc(0);
                for (std::size_t l = 0; l < N; ++l)
                    for (std::size_t l2 = 0; l2 < N; ++l2) {
                        if (hinv[l][l2].is_zero()) continue;
                        for (std::size_t c = 0; c < A; ++c) {
                            if (X[l][x][c].is_zero()) continue;
                            for (std::size_t c2 = 0; c2 < A; ++c2)
                                if (!G[c][c2].is_zero() && !X[l2][y][c2].is_zero())
                                    acc += hinv[l][l2] * G[c][c2] * X[l][x][c] * X[l2][y][c2];
                        }
                    }
                M[x][y] = acc;
            }
        std::vector<std::size_t> singlet{0}, adjoint(N);
        std::iota(adjoint.begin(), adjoint.end(), 1);
        require_block_diagonal(M, singlet, adjoint);
        out.gauge_singlet = eigen_generalized(block(M, singlet), block(G, singlet));
        out.gauge_adjoint = eigen_generalized(block(M, adjoint), block(G, adjoint));
    }

    // Scalars: mass matrix 1/2 J^T W J over ordered internal pairs, kinetic G (x) h^-1.
    {
        const std::size_t rows = N * N * A, cols = A * N;
        auto row = [&](std::size_t k, std::size_t l, std::size_t c) { return (k * N + l) * A + c; };
        auto col = [&](std::size_t x, std::size_t s) { return x * N + s; };
        RatMatrix J = rat_matrix(rows, cols);
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t c = 0; c < A; ++c)
                    for (std::size_t x = 0; x < A; ++x)
                        for (std::size_t s = 0; s < N; ++s) {
                            GaussRat v(0);
                            for (std::size_t y = 0; y < A; ++y) {
                                if (s == k && !phi(y, l).is_zero()) v += f(x, y, c) * phi(y, l);
                                if (s == l && !phi(y, k).is_zero()) v += f(y, x, c) * phi(y, k);
                            }
                            if (x == c) v -= a.C(k, l, s);
                            J[row(k, l, c)][col(x, s)] = v;
                        }
        // Y = (h^-1 (x) h^-1 (x) G) J, applied one factor at a time
        RatMatrix Y = rat_matrix(rows, cols), Z = rat_matrix(rows, cols);
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t c = 0; c < A; ++c)
                    for (std::size_t c2 = 0; c2 < A; ++c2) {
                        if (G[c][c2].is_zero()) continue;
                        for (std::size_t j = 0; j < cols; ++j)
                            if (!J[row(k, l, c2)][j].is_zero()) Y[row(k, l, c)][j] += G[c][c2] * J[row(k, l, c2)][j];
                    }
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t l2 = 0; l2 < N; ++l2) {
                    if (hinv[l][l2].is_zero()) continue;
                    for (std::size_t c = 0; c < A; ++c)
                        for (std::size_t j = 0; j < cols; ++j)
                            if (!Y[row(k, l2, c)][j].is_zero()) Z[row(k, l, c)][j] += hinv[l][l2] * Y[row(k, l2, c)][j];
                }
        for (auto& r : Y)
            for (auto& v : r) v = GaussRat(0);
        for (std::size_t k = 0; k < N; ++k)
            for (std::size_t k2 = 0; k2 < N; ++k2) {
                if (hinv[k][k2].is_zero()) continue;
                for (std::size_t l = 0; l < N; ++l)
                    for (std::size_t c = 0; c < A; ++c)
                        for (std::size_t j = 0; j < cols; ++j)
                            if (!Z[row(k2, l, c)][j].is_zero()) Y[row(k, l, c)][j] += hinv[k][k2] * Z[row(k2, l, c)][j];
            }
        RatMatrix M = rat_matrix(cols, cols), K = rat_matrix(cols, cols);
        const GaussRat half = GaussRat::frac(1, 2);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t x = 0; x < cols; ++x) {
                if (J[r][x].is_zero()) continue;
                GaussRat jx = half * J[r][x];
                for (std::size_t y = 0; y < cols; ++y)
                    if (!Y[r][y].is_zero()) M[x][y] += jx * Y[r][y];
            }
        for (std::size_t x = 0; x < A; ++x)
            for (std::size_t x2 = 0; x2 < A; ++x2)
                for (std::size_t s = 0; s < N; ++s)
                    for (std::size_t s2 = 0; s2 < N; ++s2) K[col(x, s)][col(x2, s2)] = G[x][x2] * hinv[s][s2];
        std::vector<std::size_t> singlet, adjoint;
        for (std::size_t x = 0; x < A; ++x)
            for (std::size_t s = 0; s < N; ++s) (x == 0 ? singlet : adjoint).push_back(col(x, s));
        require_block_diagonal(M, singlet, adjoint);
        out.scalar_singlet = eigen_generalized(block(M, singlet), block(K, singlet));
        out.higgs = eigen_generalized(block(M, adjoint), block(K, adjoint));
    }

    double top = 1.0;
    for (const auto* v : {&out.gauge_singlet, &out.gauge_adjoint, &out.scalar_singlet, &out.higgs})
        for (double e : *v) top = std::max(top, std::abs(e));
    auto massless = [&](const std::vector<double>& v) {
        return std::all_of(v.begin(), v.end(), [&](double e) { return std::abs(e) < 1e-12 * top; });
    };
    if (massless(out.gauge_singlet)) out.massless.push_back("A0");
    if (massless(out.gauge_adjoint)) out.massless.push_back("A");
    if (massless(out.scalar_singlet)) out.massless.push_back("B0");
    if (massless(out.higgs)) out.massless.push_back("B");
    return out;
}

std::vector<std::pair<double, std::size_t>> spectrum_levels(const std::vector<double>& ev, double tol) {
    double top = 1.0;
    for (double e : ev) top = std::max(top, std::abs(e));
    std::vector<std::pair<double, std::size_t>> levels;
    for (double e : ev) {
        if (!levels.empty() && std::abs(e - levels.back().first) <= tol * top)
            ++levels.back().second;
        else
            levels.emplace_back(e, 1);
    }
    return levels;
}

LinearConnection::LinearConnection(const MatrixAlgebra& a) : alg_(a), dim_(a.dim()) {
    omega_.assign(dim_ * dim_ * dim_, GaussRat(0));
    const GaussRat half = GaussRat::frac(-1, 2);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t s = 0; s < dim_; ++s)
            for (std::size_t t = 0; t < dim_; ++t) omega_[(r * dim_ + s) * dim_ + t] = half * a.C(s, t, r);
}

Form LinearConnection::omega_form(std::size_t r, std::size_t s) const {
    Form w(alg_.n());
    for (std::size_t t = 0; t < dim_; ++t)
        if (!omega(r, s, t).is_zero()) w.add(Mask(1) << t, Scalar(omega(r, s, t)) * alg_.unit());
    return w;
}

Form LinearConnection::torsion(std::size_t k) const {
    Form t = alg_.d(alg_.theta(k));
    for (std::size_t s = 0; s < dim_; ++s) t += wedge(omega_form(k, s), alg_.theta(s));
    return t;
}

bool LinearConnection::metric_compatible(InternalMetric metric) const {
    GaussRat scale(1);
    if (metric == InternalMetric::Killing) {
        auto ratio = alg_.killing_trace_ratio();
        if (!ratio) return false;
        scale = *ratio;
    }
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t l = 0; l < dim_; ++l)
            for (std::size_t m = 0; m < dim_; ++m) {
                GaussRat v(0);
                for (std::size_t r = 0; r < dim_; ++r)
                    v += alg_.t(k, r) * scale * omega(r, l, m) + alg_.t(l, r) * scale * omega(r, k, m);
                if (!v.is_zero()) return false;
            }
    return true;
}

bool LinearConnection::central() const {
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t s = 0; s < dim_; ++s) {
            Form w = omega_form(r, s);
            for (const auto& [m, c] : w.terms())
                for (std::size_t f = 0; f < dim_; ++f)
                    if (!commutator(alg_.E(f), c).is_zero()) return false;
        }
    return true;
}

std::vector<GaussRat> LinearConnection::curvature_forms() const {
    std::vector<GaussRat> R(dim_ * dim_ * dim_ * dim_, GaussRat(0));
    const GaussRat half = GaussRat::frac(1, 2);
    for (std::size_t r = 0; r < dim_; ++r)
        for (std::size_t s = 0; s < dim_; ++s) {
            Form omega2 = alg_.d(omega_form(r, s));
            for (std::size_t t = 0; t < dim_; ++t) omega2 += wedge(omega_form(r, t), omega_form(t, s));
            for (const auto& [mask, c] : omega2.terms()) {
                if (degree_of(mask) != 2) throw std::logic_error("curvature is not a 2-form");
                GaussRat v = c(0, 0).constant_term();
                if (c != Scalar(v) * alg_.unit()) throw std::logic_error("curvature coefficient is not central");
                std::size_t m = __builtin_ctz(mask), n = 31 - __builtin_clz(mask);
                R[index(r, s, m, n)] = half * v;
                R[index(r, s, n, m)] = -(half * v);
            }
        }
    return R;
}

std::vector<GaussRat> LinearConnection::curvature_tensor() const {
    const std::size_t N = dim_;
    const GaussRat half = GaussRat::frac(1, 2);
    auto at2 = [N](std::size_t a, std::size_t b) { return a * N + b; };
    // d theta^t as an antisymmetric 2-tensor, theta^a ^ theta^b = 1/2 (a (x) b - b (x) a)
    std::vector<std::vector<GaussRat>> dth(N, std::vector<GaussRat>(N * N));
    for (std::size_t t = 0; t < N; ++t)
        for (const auto& [mask, v] : alg_.d_generator(t)) {
            std::size_t a = __builtin_ctz(mask), b = 31 - __builtin_clz(mask);
            dth[t][at2(a, b)] += half * v;
            dth[t][at2(b, a)] -= half * v;
        }
    // D theta^s = -omega^s_uv theta^v (x) theta^u
    std::vector<std::vector<GaussRat>> Dth(N, std::vector<GaussRat>(N * N));
    for (std::size_t s = 0; s < N; ++s)
        for (std::size_t u = 0; u < N; ++u)
            for (std::size_t v = 0; v < N; ++v) Dth[s][at2(v, u)] -= omega(s, u, v);

    // D^2 theta^k = sum_{s,t} -omega^k_st D(theta^t (x) theta^s) with
    // D(alpha (x) theta^s) = d alpha (x) theta^s - 1/2 (1 - sigma_12)(alpha (x) D theta^s)
    std::vector<GaussRat> R(N * N * N * N, GaussRat(0));
    std::vector<GaussRat> T(N * N * N);
    for (std::size_t k = 0; k < N; ++k) {
        std::fill(T.begin(), T.end(), GaussRat(0));
        for (std::size_t s = 0; s < N; ++s)
            for (std::size_t t = 0; t < N; ++t) {
                GaussRat w = -omega(k, s, t);
                if (w.is_zero()) continue;
                for (std::size_t a = 0; a < N; ++a)
                    for (std::size_t b = 0; b < N; ++b) {
                        GaussRat v = dth[t][at2(a, b)];
                        if (!v.is_zero()) T[(a * N + b) * N + s] += w * v;
                    }
                // alpha (x) D theta^s with alpha = theta^t, then antisymmetrize legs 1, 2
                for (std::size_t b = 0; b < N; ++b)
                    for (std::size_t l = 0; l < N; ++l) {
                        GaussRat x = Dth[s][at2(b, l)];
                        if (x.is_zero()) continue;
                        T[(t * N + b) * N + l] -= half * w * x;
                        T[(b * N + t) * N + l] += half * w * x;
                    }
            }
        // D^2 theta^k = -R^k_lab theta^a (x) theta^b (x) theta^l
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t a = 0; a < N; ++a)
                for (std::size_t b = 0; b < N; ++b) R[index(k, l, a, b)] = -T[(a * N + b) * N + l];
    }
    return R;
}

std::vector<GaussRat> LinearConnection::curvature_closed() const {
    const std::size_t N = dim_;
    std::vector<GaussRat> R(N * N * N * N, GaussRat(0));
    const GaussRat eighth = GaussRat::frac(1, 8);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t l = 0; l < N; ++l)
            for (std::size_t m = 0; m < N; ++m)
                for (std::size_t n = 0; n < N; ++n) {
                    GaussRat v(0);
                    for (std::size_t r = 0; r < N; ++r)
                        if (!alg_.C(l, r, k).is_zero() && !alg_.C(m, n, r).is_zero()) v += alg_.C(l, r, k) * alg_.C(m, n, r);
                    R[index(k, l, m, n)] = eighth * v;
                }
    return R;
}

}  // namespace ncg
