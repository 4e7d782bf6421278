#include "ncg/deformation.hpp"

#include <stdexcept>

namespace ncg {

namespace {

const Scalar kI = Scalar(GaussRat::i());

std::vector<std::string> kappa_names() {
    std::vector<std::string> n;
    for (int mu = 0; mu < 4; ++mu) n.push_back("x" + std::to_string(mu));
    for (int mu = 0; mu < 4; ++mu) n.push_back("L" + std::to_string(mu));
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) n.push_back("M" + std::to_string(mu) + std::to_string(nu));
    return n;
}

ParamList pick_params(const Scalar& kappa, ParamList params) {
    if (params) return params;
    if (kappa.params()) return kappa.params();
    return make_params({});
}

bool is_zero(const KappaAlgebra::Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

KappaAlgebra::Vec& axpy(KappaAlgebra::Vec& y, const Scalar& a, const KappaAlgebra::Vec& x) {
    if (a.is_zero()) return y;
    for (std::size_t k = 0; k < y.size(); ++k)
        if (!x[k].is_zero()) y[k] += a * x[k];
    return y;
}

}  // namespace

std::pair<int, std::size_t> KappaAlgebra::M(int mu, int nu) {
    if (mu == nu) return {0, 0};
    int sign = 1;
    if (mu > nu) {
        std::swap(mu, nu);
        sign = -1;
    }
    static constexpr int offset[4] = {0, 3, 5, 6};
    return {sign, std::size_t(8 + offset[mu] + (nu - mu - 1))};
}

KappaAlgebra KappaAlgebra::symbolic() {
    ParamList p = make_params({"kappa"});
    return KappaAlgebra(Scalar::param(p, "kappa"), p);
}

KappaAlgebra::KappaAlgebra(const Scalar& kappa, ParamList params)
    : params_(pick_params(kappa, std::move(params))),
      kappa_(kappa.with_params(params_)),
      table_(kSize * kSize, Vec(kSize)),
      uea_(kappa_names(), params_) {
    const Scalar ik = kI * kappa_;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Vec m = m_vec(mu, nu);
            Vec ikm = zero();
            axpy(ikm, ik, m);
            if (mu < nu) {
                set(x(mu), x(nu), ikm);
                set(L(mu), L(nu), ikm);
            }
            set(x(mu), L(nu), ikm);
        }
    for (int lam = 0; lam < 4; ++lam)
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = mu + 1; nu < 4; ++nu) {
                Vec v = zero();
                if (lam == nu) axpy(v, kI * Scalar(metric(lam)), unit(L(mu)));
                if (lam == mu) axpy(v, -kI * Scalar(metric(lam)), unit(L(nu)));
                std::size_t m = M(mu, nu).second;
                set(x(lam), m, v);
                set(L(lam), m, v);
            }
    for (int lam = 0; lam < 4; ++lam)
        for (int rho = lam + 1; rho < 4; ++rho)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = mu + 1; nu < 4; ++nu) {
                    std::size_t a = M(lam, rho).second, b = M(mu, nu).second;
                    if (a >= b) continue;
                    Vec v = zero();
                    if (lam == nu) axpy(v, kI * Scalar(metric(lam)), m_vec(mu, rho));
                    if (rho == nu) axpy(v, -kI * Scalar(metric(rho)), m_vec(mu, lam));
                    if (rho == mu) axpy(v, kI * Scalar(metric(rho)), m_vec(nu, lam));
                    if (lam == mu) axpy(v, -kI * Scalar(metric(lam)), m_vec(nu, rho));
                    set(a, b, v);
                }
    for (std::size_t a = 0; a < kSize; ++a)
        for (std::size_t b = 0; b < a; ++b) uea_.add_rule(a, b, NCPoly::word(Word{char(b), char(a)}) + element(bracket(a, b)));
}

void KappaAlgebra::set(std::size_t a, std::size_t b, const Vec& v) {
    table_[a * kSize + b] = v;
    Vec neg = zero();
    axpy(neg, Scalar(-1), v);
    table_[b * kSize + a] = neg;
}

KappaAlgebra::Vec KappaAlgebra::unit(std::size_t k) const {
    Vec v = zero();
    v.at(k) = Scalar(1).with_params(params_);
    return v;
}

KappaAlgebra::Vec KappaAlgebra::m_vec(int mu, int nu) const {
    auto [s, k] = M(mu, nu);
    Vec v = zero();
    if (s != 0) v[k] = Scalar(s).with_params(params_);
    return v;
}

KappaAlgebra::Vec KappaAlgebra::bracket(const Vec& u, const Vec& v) const {
    Vec r = zero();
    for (std::size_t a = 0; a < kSize; ++a) {
        if (u[a].is_zero()) continue;
        for (std::size_t b = 0; b < kSize; ++b)
            if (!v[b].is_zero()) axpy(r, u[a] * v[b], bracket(a, b));
    }
    return r;
}

NCPoly KappaAlgebra::element(const Vec& v) const {
    NCPoly p;
    for (std::size_t k = 0; k < kSize; ++k) p.add(Word(1, char(k)), v[k]);
    return p;
}

std::string KappaAlgebra::str(const Vec& v) const { return uea_.str(element(v)); }

NCPoly KappaAlgebra::casimir2() const {
    NCPoly c;
    for (int mu = 0; mu < 4; ++mu) {
        for (int rho = 0; rho < 4; ++rho) {
            NCPoly m = m_poly(mu, rho);
            c += (kappa_ * Scalar(metric(mu) * metric(rho))) * concat(m, m);
        }
        c += Scalar(2 * metric(mu)) * concat(gen(L(mu)), gen(L(mu)));
    }
    return uea_.normal_form(c);
}

NCPoly KappaAlgebra::casimir4() const {
    NCPoly c;
    for (int rho = 0; rho < 4; ++rho) {
        NCPoly w;
        for (int lam = 0; lam < 4; ++lam)
            for (int mu = 0; mu < 4; ++mu)
                for (int nu = 0; nu < 4; ++nu) {
                    int idx[4] = {rho, lam, mu, nu};
                    int s = permutation_sign(idx);
                    if (s != 0) w += Scalar(s) * concat(gen(L(lam)), m_poly(mu, nu));
                }
        c += Scalar(metric(rho)) * concat(w, w);
    }
    return uea_.normal_form(c);
}

NCPoly KappaAlgebra::pseudoscalar_mm() const {
    NCPoly c;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = 0; sg < 4; ++sg) {
                    int idx[4] = {mu, nu, rho, sg};
                    int s = permutation_sign(idx);
                    if (s != 0) c += Scalar(s) * concat(m_poly(mu, nu), m_poly(rho, sg));
                }
    return uea_.normal_form(c);
}

NCPoly KappaAlgebra::casimir4_corrected() const {
    NCPoly v = pseudoscalar_mm();
    return casimir4() + (kappa_ * Scalar(GaussRat::frac(1, 16))) * uea_.multiply(v, v);
}

CheckReport jacobi_check(const KappaAlgebra& alg) {
    const auto n = KappaAlgebra::kSize;
    std::size_t triples = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                ++triples;
                auto ea = alg.unit(a), eb = alg.unit(b), ec = alg.unit(c);
                auto j = alg.bracket(alg.bracket(ea, eb), ec);
                auto t2 = alg.bracket(alg.bracket(eb, ec), ea);
                auto t3 = alg.bracket(alg.bracket(ec, ea), eb);
                for (std::size_t k = 0; k < n; ++k) j[k] += t2[k] + t3[k];
                if (!is_zero(j))
                    return make_check("kappa-jacobi", "Jacobi identity of the kappa algebra", false,
                                      alg.names()[a] + "," + alg.names()[b] + "," + alg.names()[c] + ": " + alg.str(j));
            }
    CheckReport r = make_check("kappa-jacobi", "Jacobi identity of the kappa algebra", triples == 364);
    return r;
}

CheckReport bracket_antisymmetry_check(const KappaAlgebra& alg) {
    for (std::size_t a = 0; a < KappaAlgebra::kSize; ++a)
        for (std::size_t b = 0; b < KappaAlgebra::kSize; ++b) {
            auto s = alg.bracket(a, b);
            axpy(s, Scalar(1), alg.bracket(b, a));
            if (!is_zero(s))
                return make_check("kappa-antisymmetry", "bracket table antisymmetry", false,
                                  alg.names()[a] + "," + alg.names()[b]);
        }
    return make_check("kappa-antisymmetry", "bracket table antisymmetry", true);
}

CheckReport uea_confluence_check(const KappaAlgebra& alg) {
    ConfluenceReport c = alg.uea().confluence();
    std::string w;
    if (!c.confluent) {
        const auto& f = c.failures.front();
        w = alg.uea().str(f.overlap) + ": " + alg.uea().str(f.left) + " vs " + alg.uea().str(f.right);
    }
    return make_check("kappa-pbw-confluence", "PBW ordering of the enveloping algebra", c.confluent, w);
}

CentralityResult element_centrality(const KappaAlgebra& alg, const NCPoly& c, const std::string& id) {
    CentralityResult out;
    std::string witness;
    for (std::size_t k = 0; k < KappaAlgebra::kSize; ++k) {
        out.residuals.push_back(alg.uea().commutator(c, alg.gen(k)));
        if (witness.empty() && !out.residuals.back().is_zero())
            witness = "[C, " + alg.names()[k] + "] = " + alg.uea().str(out.residuals.back());
    }
    out.report = make_check(id, "centrality in the enveloping algebra", witness.empty(), witness);
    return out;
}

CentralityResult casimir_centrality(const KappaAlgebra& alg, CasimirKind which) {
    if (which == CasimirKind::C2) return element_centrality(alg, alg.casimir2(), "casimir-quadratic-central");
    return element_centrality(alg, alg.casimir4(), "casimir-quartic-central");
}

CheckReport center_diff_check(const KappaAlgebra& alg) {
    for (int mu = 0; mu < 4; ++mu) {
        NCPoly d = alg.gen(KappaAlgebra::x(mu)) - alg.gen(KappaAlgebra::L(mu));
        for (std::size_t k = 0; k < KappaAlgebra::kSize; ++k) {
            NCPoly r = alg.uea().commutator(d, alg.gen(k));
            if (!r.is_zero())
                return make_check("x-minus-L-central", "x - L lies in the center", false,
                                  "[x" + std::to_string(mu) + " - L" + std::to_string(mu) + ", " + alg.names()[k] +
                                      "] = " + alg.uea().str(r));
        }
    }
    return make_check("x-minus-L-central", "x - L lies in the center", true);
}

Mat4 identity4() {
    Mat4 m{};
    for (int k = 0; k < 4; ++k) m[k][k] = GaussRat(1);
    return m;
}

Mat4 rotation_generator(int i, int j) {
    Mat4 m{};
    m[i][j] = GaussRat(-1);
    m[j][i] = GaussRat(1);
    return m;
}

Mat4 boost_generator(int i) {
    Mat4 m{};
    m[0][i] = GaussRat(1);
    m[i][0] = GaussRat(1);
    return m;
}

std::vector<Mat4> symmetry_generators(SymmetryGroup g) {
    std::vector<Mat4> out;
    if (g == SymmetryGroup::Trivial) return out;
    out = {rotation_generator(1, 2), rotation_generator(1, 3), rotation_generator(2, 3)};
    if (g == SymmetryGroup::Lorentz)
        for (int i = 1; i < 4; ++i) out.push_back(boost_generator(i));
    return out;
}

InvariantTensors invariant_antisym_solver(const std::vector<Mat4>& generators) {
    std::vector<std::pair<int, int>> pairs;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) pairs.emplace_back(mu, nu);
    InvariantTensors out;
    out.system = ScalarMatrix(generators.size() * 6, 6);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const Mat4& m = generators[g];
        for (std::size_t u = 0; u < 6; ++u) {
            Mat4 om{};
            om[pairs[u].first][pairs[u].second] = GaussRat(1);
            om[pairs[u].second][pairs[u].first] = GaussRat(-1);
            for (std::size_t r = 0; r < 6; ++r) {
                auto [mu, nu] = pairs[r];
                GaussRat v;
                for (int rho = 0; rho < 4; ++rho) v += m[mu][rho] * om[rho][nu] + m[nu][rho] * om[mu][rho];
                out.system(g * 6 + r, u) = Scalar(v);
            }
        }
    }
    std::vector<std::vector<Scalar>> kernel;
    if (generators.empty()) {
        for (std::size_t u = 0; u < 6; ++u) {
            std::vector<Scalar> e(6);
            e[u] = Scalar(1);
            kernel.push_back(e);
        }
    } else {
        kernel = solve_linear(out.system, ScalarMatrix(out.system.rows(), 1)).kernel;
    }
    out.dimension = kernel.size();
    for (const auto& k : kernel) {
        Mat4 om{};
        for (std::size_t u = 0; u < 6; ++u) {
            GaussRat c = k[u].constant_term();
            om[pairs[u].first][pairs[u].second] = c;
            om[pairs[u].second][pairs[u].first] = -c;
        }
        out.basis.push_back(om);
    }
    return out;
}

InvariantTensors invariant_antisym_solver(SymmetryGroup g) { return invariant_antisym_solver(symmetry_generators(g)); }

namespace {

std::vector<ScalarMatrix> matrix_units(std::size_t n) {
    std::vector<ScalarMatrix> out;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            ScalarMatrix e(n, n);
            e(i, j) = Scalar(1);
            out.push_back(e);
        }
    return out;
}

}  // namespace

BilinearCocycle product_cocycle(std::size_t n) {
    return {n, [](const ScalarMatrix& f, const ScalarMatrix& g) { return f * g; }, "c(f,g) = fg"};
}

BilinearCocycle zero_cocycle(std::size_t n) {
    return {n, [n](const ScalarMatrix&, const ScalarMatrix&) { return ScalarMatrix(n, n); }, "c = 0"};
}

BilinearCocycle half_commutator_cocycle(std::size_t n) {
    return {n,
            [](const ScalarMatrix& f, const ScalarMatrix& g) {
                return Scalar(GaussRat::frac(0, 1, 1, 2)) * commutator(f, g);
            },
            "c(f,g) = i/2 [f,g]"};
}

ScalarMatrix cocycle_bracket(const BilinearCocycle& b, const ScalarMatrix& f, const ScalarMatrix& g) {
    return kI * (b.c(f, g) - b.c(g, f));
}

std::vector<CheckReport> cocycle_first_order_check(const BilinearCocycle& b) {
    auto basis = matrix_units(b.n);
    auto br = [&](const ScalarMatrix& f, const ScalarMatrix& g) { return cocycle_bracket(b, f, g); };
    std::string w_identity, w_derivation, w_reality;
    for (std::size_t fi = 0; fi < basis.size(); ++fi)
        for (std::size_t gi = 0; gi < basis.size(); ++gi) {
            const auto& f = basis[fi];
            const auto& g = basis[gi];
            for (std::size_t hi = 0; hi < basis.size() && w_identity.empty(); ++hi) {
                const auto& h = basis[hi];
                ScalarMatrix lhs = kI * (commutator(h, b.c(f, g)) - b.c(commutator(h, f), g) - b.c(f, commutator(h, g)));
                ScalarMatrix rhs = f * br(h, g) - br(h, f * g) + br(h, f) * g;
                if (lhs != rhs)
                    w_identity = "basis (" + std::to_string(fi) + "," + std::to_string(gi) + "," + std::to_string(hi) +
                                 "): " + (lhs - rhs).str();
            }
            ScalarMatrix one = ScalarMatrix::identity(b.n);
            if (w_derivation.empty() && br(one, f * g) != br(one, f) * g + f * br(one, g))
                w_derivation = "basis (" + std::to_string(fi) + "," + std::to_string(gi) + ")";
            if (w_reality.empty() && b.c(f, g).adjoint() != b.c(g.adjoint(), f.adjoint()))
                w_reality = "basis (" + std::to_string(fi) + "," + std::to_string(gi) + "): " +
                            (b.c(f, g).adjoint() - b.c(g.adjoint(), f.adjoint())).str();
        }
    std::vector<CheckReport> out;
    out.push_back(make_check("cocycle-first-order", "first-order associativity of the deformed product",
                             w_identity.empty(), w_identity));
    out.push_back(make_check("cocycle-central-derivation", "bracket with a central element is a derivation",
                             w_derivation.empty(), w_derivation));
    CheckReport real = make_check("cocycle-reality", "reality of the first-order term", w_reality.empty(), w_reality);
    if (!w_reality.empty()) real.status = CheckStatus::Warn;
    out.push_back(real);
    for (auto& r : out) r.params.emplace_back("cocycle", b.name);
    return out;
}

OrbitInvariants orbit_invariants(const Mat4& om) {
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu)
            if (om[mu][nu] != -om[nu][mu]) throw std::invalid_argument("orbit_invariants: tensor is not antisymmetric");
    OrbitInvariants r;
    for (int mu = 0; mu < 4; ++mu)
        for (int rho = 0; rho < 4; ++rho)
            r.alpha += GaussRat(KappaAlgebra::metric(mu) * KappaAlgebra::metric(rho)) * om[mu][rho] * om[mu][rho];
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    int idx[4] = {a, b, c, d};
                    int s = permutation_sign(idx);
                    if (s != 0) r.beta += GaussRat(s) * om[a][b] * om[c][d];
                }
    return r;
}

Mat4 boost_x1(const GaussRat& ch, const GaussRat& sh) {
    Mat4 m = identity4();
    m[0][0] = ch;
    m[1][1] = ch;
    m[0][1] = sh;
    m[1][0] = sh;
    return m;
}

bool PoincareAction::is_lorentz(const Mat4& l) {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            GaussRat s;
            for (int k = 0; k < 4; ++k) s += l[k][a] * GaussRat(KappaAlgebra::metric(k)) * l[k][b];
            if (s != GaussRat(a == b ? KappaAlgebra::metric(a) : 0)) return false;
        }
    return true;
}

PoincareAction::PoincareAction(const KappaAlgebra& alg, const Mat4& l, const std::array<GaussRat, 4>& a)
    : alg_(&alg) {
    if (!is_lorentz(l)) throw std::invalid_argument("PoincareAction: matrix does not preserve the metric");
    for (int m = 0; m < 4; ++m)
        for (int n = 0; n < 4; ++n)
            inv_[m][n] = GaussRat(KappaAlgebra::metric(m) * KappaAlgebra::metric(n)) * l[n][m];
    images_.resize(KappaAlgebra::kSize);
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = 0; nu < 4; ++nu) {
            Scalar c(inv_[mu][nu]);
            images_[KappaAlgebra::x(mu)] += c * (alg.gen(KappaAlgebra::x(nu)) - NCPoly(Scalar(a[nu])));
            images_[KappaAlgebra::L(mu)] += c * alg.gen(KappaAlgebra::L(nu));
        }
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) {
            NCPoly img;
            for (int rho = 0; rho < 4; ++rho)
                for (int sg = 0; sg < 4; ++sg)
                    img += Scalar(inv_[mu][rho] * inv_[nu][sg]) * alg.m_poly(rho, sg);
            images_[KappaAlgebra::M(mu, nu).second] = img;
        }
}

NCPoly PoincareAction::apply(const NCPoly& e) const {
    NCPoly out;
    for (const auto& [w, c] : e.terms()) {
        NCPoly t(Scalar(1));
        for (char g : w) t = alg_->uea().multiply(t, images_[std::size_t(g)]);
        out += c * t;
    }
    return out;
}

}  // namespace ncg
