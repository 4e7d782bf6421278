#include "ncg/matrix_geometry.hpp"

#include <json.hpp>

namespace ncg {

namespace {

Scalar num(long v) { return Scalar(GaussRat(v)); }

}  // namespace

std::vector<Mat> MatrixAlgebra::gell_mann_basis(std::size_t n) {
    if (n < 2) throw std::invalid_argument("matrix algebra needs n >= 2");
    std::vector<Mat> basis;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = j + 1; k < n; ++k) {
            Mat sym(n, n), anti(n, n);
            sym(j, k) = num(1);
            sym(k, j) = num(1);
            anti(j, k) = Scalar(-GaussRat::i());
            anti(k, j) = Scalar(GaussRat::i());
            basis.push_back(sym);
            basis.push_back(anti);
        }
    for (std::size_t l = 1; l < n; ++l) {
        Mat d(n, n);
        for (std::size_t j = 0; j < l; ++j) d(j, j) = num(1);
        d(l, l) = num(-long(l));
        basis.push_back(d);
    }
    return basis;
}

MatrixAlgebra MatrixAlgebra::build(std::size_t n) { return MatrixAlgebra(n, gell_mann_basis(n)); }

MatrixAlgebra MatrixAlgebra::from_basis(std::vector<Mat> basis) {
    if (basis.empty()) throw std::invalid_argument("empty basis");
    std::size_t n = basis[0].rows();
    return MatrixAlgebra(n, std::move(basis));
}

MatrixAlgebra MatrixAlgebra::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Mat> basis;
    for (const auto& jm : j.at("basis")) {
        if (jm.size() != n) throw std::invalid_argument("basis matrix has wrong row count");
        Mat m(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            if (jm[r].size() != n) throw std::invalid_argument("basis matrix has wrong column count");
            for (std::size_t c = 0; c < n; ++c) {
                const auto& e = jm[r][c];
                auto part = [](const nlohmann::json& v) {
                    return v.is_string() ? parse_rational(v.get<std::string>()) : mpq_class(v.get<long>());
                };
                m(r, c) = Scalar(GaussRat(part(e.at(0)), part(e.at(1))));
            }
        }
        basis.push_back(std::move(m));
    }
    return MatrixAlgebra(n, std::move(basis));
}

MatrixAlgebra::MatrixAlgebra(std::size_t n, std::vector<Mat> basis) : Calculus(n, {}), basis_(std::move(basis)) {
    if (n < 2) throw std::invalid_argument("matrix algebra needs n >= 2");
    if (basis_.size() != n * n - 1)
        throw std::invalid_argument("basis must contain n^2 - 1 matrices");
    if (basis_.size() > 31) throw std::invalid_argument("n too large for mask storage");
    for (const auto& e : basis_) {
        if (e.rows() != n || e.cols() != n) throw std::invalid_argument("basis matrix has wrong size");
        if (!e.is_constant()) throw std::invalid_argument("basis matrix must be numeric");
        if (e.adjoint() != e) throw std::invalid_argument("basis matrix is not hermitian");
        if (!e.trace().is_zero()) throw std::invalid_argument("basis matrix is not traceless");
    }
    compute_structure();
}

void MatrixAlgebra::compute_structure() {
    const std::size_t N = dim();
    t_.assign(N * N, GaussRat(0));
    Mat gram(N, N);
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            t_[k * N + m] = (basis_[k] * basis_[m]).trace().constant_term();
            gram(k, m) = Scalar(t_[k * N + m]);
        }
    auto sol = solve_linear(gram, Mat::identity(N));
    if (sol.rank != N) throw std::invalid_argument("basis is linearly dependent");
    t_inv_.assign(N * N, GaussRat(0));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) t_inv_[k * N + m] = sol.particular(k, m).constant_term();

    c_.assign(N * N * N, GaussRat(0));
    s_.assign(N * N * N, GaussRat(0));
    const Scalar i(GaussRat::i());
    const Scalar half(GaussRat::frac(1, 2));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            auto cc = decompose(i * commutator(basis_[k], basis_[m]));
            if (!cc[0].is_zero()) throw std::logic_error("commutator has an identity component");
            auto ss = decompose(half * (basis_[k] * basis_[m] + basis_[m] * basis_[k]));
            for (std::size_t l = 0; l < N; ++l) {
                c_[(k * N + m) * N + l] = cc[l + 1].constant_term();
                s_[(k * N + m) * N + l] = ss[l + 1].constant_term();
            }
        }
    g_.assign(N * N, GaussRat(0));
    for (std::size_t k = 0; k < N; ++k)
        for (std::size_t m = 0; m < N; ++m) {
            GaussRat acc(0);
            for (std::size_t l = 0; l < N; ++l)
                for (std::size_t p = 0; p < N; ++p) {
                    const GaussRat& a = C(k, l, p);
                    if (a.is_zero()) continue;
                    const GaussRat& b = C(p, m, l);
                    if (!b.is_zero()) acc += a * b;
                }
            g_[k * N + m] = acc;
        }

    // [d_a, d_b] = sum_l c_l d_l, solved from the action on every basis matrix.
    Mat lhs(N * (N + 1), N);
    for (std::size_t m = 0; m < N; ++m)
        for (std::size_t l = 0; l < N; ++l) {
            auto v = decompose(partial(l, basis_[m]));
            for (std::size_t r = 0; r <= N; ++r) lhs(m * (N + 1) + r, l) = v[r];
        }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t a = 0; a < N; ++a)
        for (std::size_t b = a + 1; b < N; ++b) pairs.emplace_back(a, b);
    Mat rhs(N * (N + 1), pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [a, b] = pairs[p];
        for (std::size_t m = 0; m < N; ++m) {
            Mat z = partial(a, partial(b, basis_[m])) - partial(b, partial(a, basis_[m]));
            auto v = decompose(z);
            for (std::size_t r = 0; r <= N; ++r) rhs(m * (N + 1) + r, p) = v[r];
        }
    }
    auto bsol = solve_linear(lhs, rhs);
    if (!bsol.consistent || bsol.rank != N)
        throw std::logic_error("derivation brackets are not inner combinations");
    bracket_.assign(N * N * N, GaussRat(0));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [a, b] = pairs[p];
        for (std::size_t l = 0; l < N; ++l) {
            GaussRat v = bsol.particular(l, p).constant_term();
            bracket_[(a * N + b) * N + l] = v;
            bracket_[(b * N + a) * N + l] = -v;
        }
    }
    // d theta^k (d_a, d_b) = -theta^k([d_a, d_b])
    d_generators_.assign(N, {});
    for (std::size_t k = 0; k < N; ++k)
        for (auto [a, b] : pairs) {
            const GaussRat& v = bracket(a, b, k);
            if (!v.is_zero()) d_generators_[k].emplace((Mask(1) << a) | (Mask(1) << b), -v);
        }
}

std::optional<GaussRat> MatrixAlgebra::killing_trace_ratio() const {
    std::optional<GaussRat> ratio;
    for (std::size_t k = 0; k < t_.size(); ++k) {
        if (t_[k].is_zero()) {
            if (!g_[k].is_zero()) return std::nullopt;
            continue;
        }
        GaussRat r = g_[k] / t_[k];
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

bool MatrixAlgebra::metric_diagonal() const {
    for (std::size_t k = 0; k < dim(); ++k)
        for (std::size_t m = 0; m < dim(); ++m)
            if (k != m && !t(k, m).is_zero()) return false;
    return true;
}

std::vector<Scalar> MatrixAlgebra::decompose(const Mat& x) const {
    const std::size_t N = dim();
    std::vector<Scalar> out(N + 1);
    out[0] = x.trace() * Scalar(GaussRat(long(n_)).inverse());
    std::vector<Scalar> proj(N);
    for (std::size_t j = 0; j < N; ++j) proj[j] = (basis_[j] * x).trace();
    for (std::size_t l = 0; l < N; ++l) {
        Scalar acc;
        for (std::size_t j = 0; j < N; ++j) {
            const GaussRat& w = t_inv(l, j);
            if (!w.is_zero() && !proj[j].is_zero()) acc += Scalar(w) * proj[j];
        }
        out[l + 1] = std::move(acc);
    }
    return out;
}

Mat MatrixAlgebra::compose(const std::vector<Scalar>& coeffs) const {
    Mat r = coeffs.at(0) * unit();
    for (std::size_t l = 0; l < dim(); ++l)
        if (!coeffs.at(l + 1).is_zero()) r += coeffs[l + 1] * basis_[l];
    return r;
}

Mat MatrixAlgebra::partial(std::size_t leg, const Mat& f) const {
    return Scalar(GaussRat::i()) * commutator(basis_.at(leg), f);
}

Form MatrixAlgebra::theta(std::size_t k) const { return Form::generator(n_, k, unit()); }

Form MatrixAlgebra::scaled_theta(const GaussRat& c) const {
    Form r(n_);
    for (std::size_t k = 0; k < dim(); ++k) r.add(Mask(1) << k, Scalar(c) * basis_[k]);
    return r;
}

Form MatrixAlgebra::canonical_theta() const { return scaled_theta(-GaussRat::i()); }

Form MatrixAlgebra::symplectic_form() const { return Scalar(GaussRat::i()) * d(canonical_theta()); }

namespace {

// Rows (b, component) and columns a of the map h -> sum_a h^a Omega(d_a, d_b).
Mat omega_pairing(const MatrixAlgebra& a, const Form& omega) {
    const std::size_t N = a.dim();
    Mat m(N * (N + 1), N);
    for (std::size_t x = 0; x < N; ++x)
        for (std::size_t b = 0; b < N; ++b) {
            auto v = a.decompose(a.evaluate2(omega, a.basis_field(x), a.basis_field(b)));
            for (std::size_t r = 0; r <= N; ++r) m(b * (N + 1) + r, x) = v[r];
        }
    return m;
}

}  // namespace

std::size_t MatrixAlgebra::symplectic_rank() const {
    const std::size_t N = dim();
    return solve_linear(omega_pairing(*this, symplectic_form()), Mat(N * (N + 1), 1)).rank;
}

Derivation MatrixAlgebra::hamiltonian(const Mat& f) const {
    const std::size_t N = dim();
    Mat pairing = omega_pairing(*this, symplectic_form());
    Mat rhs(N * (N + 1), 1);
    for (std::size_t b = 0; b < N; ++b) {
        auto v = decompose(partial(b, f));
        for (std::size_t r = 0; r <= N; ++r) rhs(b * (N + 1) + r, 0) = v[r];
    }
    auto sol = solve_linear(pairing, rhs);
    if (sol.rank != N) throw std::domain_error("symplectic form is degenerate");
    if (!sol.consistent) throw std::domain_error("no hamiltonian vector field for this element");
    Derivation x;
    for (std::size_t k = 0; k < N; ++k) x.components.push_back(sol.particular(k, 0) * unit());
    return x;
}

Mat MatrixAlgebra::poisson(const Mat& f, const Mat& g) const {
    return evaluate2(symplectic_form(), hamiltonian(f), hamiltonian(g));
}

Form MatrixAlgebra::hodge(const Form& w) const {
    if (!metric_diagonal()) throw std::domain_error("hodge star needs a diagonal trace metric");
    Form r(n_);
    const Mask top = top_mask();
    for (const auto& [m, f] : w.terms()) {
        Mask rest = top & ~m;
        GaussRat factor(long(wedge_sign(m, rest)));
        for (std::size_t k = 0; k < dim(); ++k)
            if (m & (Mask(1) << k)) factor *= t_inv(k, k);
        r.add(rest, Scalar(factor) * f);
    }
    return r;
}

GaussRat MatrixAlgebra::hodge_square_factor(int p) const {
    GaussRat det(1);
    for (std::size_t k = 0; k < dim(); ++k) det *= t(k, k);
    int N = int(dim());
    GaussRat sign((p * (N - p)) % 2 ? -1 : 1);
    return sign / det;
}

Scalar MatrixAlgebra::integrate(const Form& w) const { return w.coefficient(top_mask()).trace(); }

Scalar MatrixAlgebra::inner(const Form& a, const Form& b) const { return integrate(wedge(a, hodge(b))); }

}  // namespace ncg
