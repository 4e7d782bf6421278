#include "ncg/suites.hpp"

#include "ncg/deformation.hpp"
#include "ncg/quantum.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace ncg {

namespace {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }
    GaussRat gauss() { return GaussRat::frac(integer(-4, 4), integer(1, 4), integer(-3, 3), integer(1, 3)); }

private:
    std::mt19937_64 eng_;
};

Mat random_matrix(Rng& r, std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (r.integer(0, 2)) m(i, j) = Scalar(r.gauss());
    return m;
}

Form random_form(Rng& r, const MatrixAlgebra& a, int degree, int terms = 2) {
    Form w(a.n());
    for (int t = 0; t < terms; ++t) {
        Mask m = 0;
        while (degree_of(m) < degree) m |= Mask(1) << r.integer(0, long(a.dim()) - 1);
        w.add(m, random_matrix(r, a.n()));
    }
    return w;
}

Form half_c_theta_theta(const MatrixAlgebra& a, std::size_t k) {
    Form r(a.n());
    for (std::size_t m = 0; m < a.dim(); ++m)
        for (std::size_t l = 0; l < a.dim(); ++l)
            if (!a.C(m, l, k).is_zero())
                r += Scalar(a.C(m, l, k) * GaussRat::frac(1, 2)) * wedge(a.theta(m), a.theta(l));
    return r;
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

std::vector<CheckReport> one(CheckReport r) { return {std::move(r)}; }

// ---------------------------------------------------------------- matrix

std::vector<CheckTask> matrix_tasks(const SuiteOptions& o) {
    const std::size_t n = o.n;
    const std::uint64_t seed = o.seed;
    std::vector<CheckTask> t;
    t.push_back({"matrix", "structure", {"build_algebra", "scalar_arith"}, [n] {
                     auto a = MatrixAlgebra::build(n);
                     bool anti = true, br = true;
                     for (std::size_t k = 0; k < a.dim(); ++k)
                         for (std::size_t m = 0; m < a.dim(); ++m)
                             for (std::size_t l = 0; l < a.dim(); ++l) {
                                 anti = anti && a.C(k, m, l) == -a.C(m, k, l);
                                 br = br && a.bracket(k, m, l) == a.C(k, m, l);
                             }
                     return std::vector<CheckReport>{
                         make_check("structure-constants-antisymmetric", "C_km^l = -C_mk^l", anti),
                         make_check("derivation-bracket", "[d_k, d_m] = C_km^l d_l", br)};
                 }});
    t.push_back({"matrix", "maurer-cartan", {"differential", "canonical_theta", "wedge"}, [n] {
                     auto a = MatrixAlgebra::build(n);
                     Form th = a.canonical_theta();
                     Form r = a.d(th) + wedge(th, th);
                     std::vector<CheckReport> out{make_check("maurer-cartan", "d theta + theta^theta = 0", r.is_zero(), r.str())};
                     std::string w;
                     for (std::size_t k = 0; k < a.dim() && w.empty(); ++k) {
                         Form s = a.d(a.theta(k)) + half_c_theta_theta(a, k);
                         if (!s.is_zero()) w = "k=" + std::to_string(k) + ": " + s.str();
                     }
                     out.push_back(make_check("theta-structure-equation", "d theta^k + 1/2 C theta theta = 0", w.empty(), w));
                     return out;
                 }});
    t.push_back({"matrix", "symplectic", {"symplectic", "interior_and_lie"}, [n] {
                     auto a = MatrixAlgebra::build(n);
                     Form om = a.symplectic_form();
                     std::vector<CheckReport> out;
                     out.push_back(make_check("symplectic-closed", "d Omega = 0", a.d(om).is_zero()));
                     std::string w;
                     for (std::size_t k = 0; k < a.dim() && w.empty(); ++k) {
                         Form l = a.lie(a.basis_field(k), om);
                         if (!l.is_zero()) w = "k=" + std::to_string(k) + ": " + l.str();
                     }
                     out.push_back(make_check("symplectic-lie-invariant", "L_k Omega = 0 for every k", w.empty(), w));
                     bool pb = true, dual = true;
                     const Scalar i(GaussRat::i());
                     for (std::size_t k = 0; k < a.dim(); ++k)
                         for (std::size_t m = 0; m < a.dim(); ++m) {
                             pb = pb && a.poisson(a.E(k), a.E(m)) == i * commutator(a.E(k), a.E(m));
                             Form r = a.interior(a.basis_field(m), a.theta(k));
                             dual = dual && r == (k == m ? Form::zero_form(a.unit()) : Form(a.n()));
                         }
                     out.push_back(make_check("poisson-is-commutator", "{E_k, E_m} = i [E_k, E_m]", pb));
                     out.push_back(make_check("interior-duality", "theta^k(d_m) = delta^k_m", dual));
                     CheckReport rank = make_check("symplectic-nondegenerate", "Omega has full rank",
                                                   a.symplectic_rank() == a.dim());
                     out.push_back(rank);
                     return out;
                 }});
    t.push_back({"matrix", "randomized", {"differential", "wedge"}, [n, seed] {
                     auto a = MatrixAlgebra::build(n);
                     Rng r(seed * 1000 + n);
                     const int trials = 200;
                     const int max_deg = std::min<int>(int(a.dim()) - 2, n >= 4 ? 4 : 8);
                     std::string w1, w2;
                     for (int k = 0; k < trials; ++k) {
                         int p = int(r.integer(0, max_deg));
                         Form f = random_form(r, a, p);
                         if (!a.d(a.d(f)).is_zero() && w1.empty()) w1 = f.str();
                     }
                     for (int k = 0; k < trials; ++k) {
                         int p = int(r.integer(0, std::min(3, max_deg))), s = int(r.integer(0, std::min(3, max_deg)));
                         if (p + s >= int(a.dim())) s = 0;
                         Form x = random_form(r, a, p), y = random_form(r, a, s);
                         Form rhs = wedge(a.d(x), y);
                         Form tail = wedge(x, a.d(y));
                         rhs += (p % 2) ? -tail : tail;
                         if (a.d(wedge(x, y)) != rhs && w2.empty()) w2 = x.str() + " ; " + y.str();
                     }
                     CheckReport d2 = make_check("d-squared-randomized", "d^2 = 0 on random forms", w1.empty(), w1);
                     CheckReport lb = make_check("graded-leibniz-randomized", "d(xy) = dx y + (-1)^p x dy", w2.empty(), w2);
                     d2.params.emplace_back("samples", std::to_string(trials));
                     lb.params.emplace_back("samples", std::to_string(trials));
                     return std::vector<CheckReport>{d2, lb};
                 }});
    t.push_back({"matrix", "hodge", {"hodge_integrate"}, [n, seed] {
                     auto a = MatrixAlgebra::build(n);
                     std::vector<CheckReport> out;
                     Form eta = a.hodge(Form::zero_form(a.unit()));
                     Scalar vol = a.integrate(eta);
                     out.push_back(make_check("volume-integral", "integral of the volume form is the trace of 1",
                                              vol == Scalar(GaussRat(long(n))), vol.str()));
                     Rng r(seed * 77 + n);
                     std::string w;
                     for (int p = 0; p <= int(a.dim()) && w.empty(); ++p) {
                         if (n >= 4 && p > 2 && p < int(a.dim()) - 2) continue;
                         Form f = random_form(r, a, p, 1);
                         if (a.hodge(a.hodge(f)) != Scalar(a.hodge_square_factor(p)) * f) w = "degree " + std::to_string(p);
                     }
                     out.push_back(make_check("hodge-square", "star star = c_p on p-forms", w.empty(), w));
                     Form x = random_form(r, a, 1), y = random_form(r, a, 1);
                     out.push_back(make_check("inner-product-symmetric", "(a, b) = (b, a) on 1-forms",
                                              a.inner(x, y) == a.inner(y, x)));
                     return out;
                 }});
    return t;
}

// ---------------------------------------------------------------- gauge

RatTensor2 pick_vacuum(const MatrixAlgebra& a, const std::string& v) {
    if (v == "zero") return RatTensor2(a.dim(), std::vector<GaussRat>(a.dim()));
    return identity_vacuum(a.dim());
}

std::vector<CheckTask> gauge_tasks(const SuiteOptions& o) {
    const std::size_t n = o.n;
    const std::string vac = o.vacuum;
    const InternalMetric metric = o.metric;
    const std::uint64_t seed = o.seed;
    std::vector<CheckTask> t;
    t.push_back({"gauge", "split", {"split_derivation"}, [n] {
                     KaluzaKlein kk(MatrixAlgebra::build(n));
                     bool ok = true;
                     for (std::size_t leg = 0; leg < kk.legs(); ++leg) {
                         Derivation x = kk.basis_field(leg);
                         x.components[leg] = kk_coordinate(leg % kSpacetimeDim) * kk.internal().unit();
                         auto [s, i] = kk.split(x);
                         for (std::size_t k = 0; k < kk.legs(); ++k) {
                             ok = ok && s.components[k] + i.components[k] == x.components[k];
                             ok = ok && (k < kSpacetimeDim ? i.components[k].is_zero() : s.components[k].is_zero());
                         }
                     }
                     return one(make_check("split-derivation", "X = X_spacetime + X_internal", ok));
                 }});
    t.push_back({"gauge", "hybrid-d", {"hybrid_d"}, [n, seed] {
                     KaluzaKlein kk(MatrixAlgebra::build(n));
                     Rng r(seed * 31 + n);
                     std::string w;
                     for (int k = 0; k < 20 && w.empty(); ++k) {
                         Form f(kk.n());
                         Mask m = 0;
                         int deg = int(r.integer(0, 2));
                         while (degree_of(m) < deg) m |= Mask(1) << r.integer(0, long(kk.legs()) - 1);
                         Mat c = random_matrix(r, kk.n());
                         c = kk_coordinate(std::size_t(r.integer(0, 3))) * c + c;
                         f.add(m, c);
                         if (!kk.d(kk.d(f)).is_zero()) w = f.str();
                     }
                     return one(make_check("hybrid-d-squared", "d^2 = 0 on hybrid forms", w.empty(), w));
                 }});
    t.push_back({"gauge", "field-strength", {"field_strength"}, [n] {
                     KaluzaKlein kk(MatrixAlgebra::build(n));
                     GaugeFields f = GaugeFields::zero(kk.internal_dim());
                     f.A0[0] = kk_coordinate(1);
                     f.A[0][2] = kk_coordinate(3) * Scalar(2);
                     f.B[1][0] = kk_coordinate(0);
                     f.B0[0] = Scalar(GaussRat::frac(1, 2));
                     Form a = kk.connection(f);
                     FieldStrength fs = kk.field_strength(a);
                     return std::vector<CheckReport>{
                         make_check("field-strength-closed-form", "expanded dA + A^A matches the component formulas",
                                    fs == kk.field_strength_closed(f)),
                         make_check("field-strength-reassembles", "components rebuild the curvature form",
                                    kk.reassemble(fs) == kk.curvature(a))};
                 }});
    t.push_back({"gauge", "vacua", {"vacuum_check"}, [n] {
                     auto a = MatrixAlgebra::build(n);
                     std::vector<CheckReport> out;
                     for (const char* v : {"zero", "delta"}) {
                         auto res = vacuum_check(a, pick_vacuum(a, v));
                         CheckReport r = make_check(std::string("vacuum-") + v, std::string("B = ") + v + " solves G = 0", res.vacuum);
                         r.params.emplace_back("vacuum", v);
                         out.push_back(r);
                     }
                     RatTensor2 two = identity_vacuum(a.dim());
                     two[0][0] = GaussRat(2);
                     out.push_back(make_check("vacuum-rejects-non-solution", "B = delta + e_11 is not a vacuum",
                                              !vacuum_check(a, two).vacuum));
                     return out;
                 }});
    t.push_back({"gauge", "spectrum", {"mass_spectrum", "eigen_numeric"}, [n, vac, metric] {
                     auto a = MatrixAlgebra::build(n);
                     MassSpectrum s = mass_spectrum(a, pick_vacuum(a, vac), metric);
                     std::vector<CheckReport> out;
                     double scale = 1;
                     for (const auto* fam : {&s.gauge_singlet, &s.gauge_adjoint, &s.scalar_singlet, &s.higgs})
                         for (double e : *fam) scale = std::max(scale, std::abs(e));
                     bool u1 = !s.gauge_singlet.empty() && std::abs(s.gauge_singlet[0]) < 1e-12 * scale;
                     CheckReport m = make_check("u1-massless", "singlet gauge field has zero mass^2", u1,
                                                s.gauge_singlet.empty() ? "" : fmt(s.gauge_singlet[0]));
                     out.push_back(m);
                     auto levels = spectrum_levels(s.higgs);
                     if (vac == "delta") {
                         bool ok = levels.size() == 3 && std::abs(levels[0].first) < 1e-12 * scale &&
                                   std::abs(levels[2].first / levels[1].first - 4.0) < 1e-9 * 4.0;
                         std::string lv;
                         for (const auto& [v, mult] : levels) lv += fmt(v) + "x" + std::to_string(mult) + " ";
                         CheckReport r = make_check("higgs-three-levels", "mass^2 levels 0, m1, 4 m1", ok, lv);
                         for (std::size_t k = 0; k < levels.size(); ++k)
                             r.params.emplace_back("level" + std::to_string(k), fmt(levels[k].first) + " x" + std::to_string(levels[k].second));
                         out.push_back(r);
                     } else {
                         double c = s.higgs.empty() ? 0 : s.higgs[0];
                         bool ok = c > 0;
                         for (const auto* fam : {&s.scalar_singlet, &s.higgs})
                             for (double e : *fam) ok = ok && std::abs(e / c - 1.0) < 1e-9;
                         CheckReport r = make_check("b-family-degenerate", "all B masses equal at B = 0", ok);
                         r.params.emplace_back("mass2", fmt(c));
                         out.push_back(r);
                     }
                     CheckReport m2 = make_check("spectrum-recorded", "absolute mass^2 values for this metric", true);
                     m2.params.emplace_back("metric", metric == InternalMetric::Trace ? "trace" : "killing");
                     m2.params.emplace_back("vacuum", vac);
                     std::string all;
                     for (double e : s.higgs) all += fmt(e) + " ";
                     m2.params.emplace_back("higgs", all);
                     out.push_back(m2);
                     return out;
                 }});
    t.push_back({"gauge", "linear-connection", {"linear_connection"}, [n] {
                     auto a = MatrixAlgebra::build(n);
                     LinearConnection c(a);
                     bool torsion = true;
                     for (std::size_t k = 0; k < a.dim(); ++k) torsion = torsion && c.torsion(k).is_zero();
                     auto closed = c.curvature_closed();
                     return std::vector<CheckReport>{
                         make_check("connection-torsion-free", "D theta^k has no torsion", torsion),
                         make_check("connection-metric", "omega preserves the trace metric", c.metric_compatible(InternalMetric::Trace)),
                         make_check("curvature-from-d-squared", "D^2 theta expansion equals 1/8 C C",
                                    c.curvature_tensor() == closed),
                         make_check("curvature-from-forms", "d omega + omega^omega equals 1/8 C C",
                                    c.curvature_forms() == closed)};
                 }});
    return t;
}

// ---------------------------------------------------------------- deformation

KappaAlgebra make_kappa(const std::optional<GaussRat>& k) {
    return k ? KappaAlgebra(Scalar(*k)) : KappaAlgebra::symbolic();
}

Mat4 conj4(const Mat4& l, const Mat4& om) {
    Mat4 r{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) r[a][b] += l[a][c] * om[c][d] * l[b][d];
    return r;
}

std::vector<CheckTask> deformation_tasks(const SuiteOptions& o) {
    const auto kappa = o.kappa;
    std::vector<CheckTask> t;
    auto tag = [kappa](std::vector<CheckReport> v) {
        for (auto& r : v) r.params.emplace_back("kappa", kappa ? kappa->str() : "kappa");
        return v;
    };
    t.push_back({"deformation", "lie", {"build_kappa_algebra", "jacobi_check"}, [=] {
                     KappaAlgebra a = make_kappa(kappa);
                     return tag({jacobi_check(a), bracket_antisymmetry_check(a)});
                 }});
    t.push_back({"deformation", "uea", {"uea_normal_order"}, [=] {
                     KappaAlgebra a = make_kappa(kappa);
                     return tag({uea_confluence_check(a)});
                 }});
    t.push_back({"deformation", "casimirs", {"casimir_centrality", "levi_civita"}, [=] {
                     KappaAlgebra a = make_kappa(kappa);
                     return tag({casimir_centrality(a, CasimirKind::C2).report, casimir_centrality(a, CasimirKind::C4).report,
                                 element_centrality(a, a.casimir4_corrected(), "casimir-quartic-corrected-central").report});
                 }});
    t.push_back({"deformation", "center", {"center_diff_check"}, [=] {
                     KappaAlgebra a = make_kappa(kappa);
                     return tag({center_diff_check(a)});
                 }});
    t.push_back({"deformation", "no-go", {"invariant_antisym_solver", "solve_linear"}, [] {
                     std::vector<CheckReport> out;
                     const std::pair<SymmetryGroup, std::pair<const char*, std::size_t>> cases[] = {
                         {SymmetryGroup::Trivial, {"trivial", 6}},
                         {SymmetryGroup::Rotations, {"rotations", 0}},
                         {SymmetryGroup::Lorentz, {"lorentz", 0}}};
                     for (const auto& [g, info] : cases) {
                         auto inv = invariant_antisym_solver(g);
                         CheckReport r = make_check(std::string("invariant-antisym-") + info.first,
                                                    "dimension of invariant constant antisymmetric tensors",
                                                    inv.dimension == info.second, std::to_string(inv.dimension));
                         r.params.emplace_back("dimension", std::to_string(inv.dimension));
                         out.push_back(r);
                     }
                     return out;
                 }});
    t.push_back({"deformation", "cocycles", {"cocycle_first_order_check"}, [] {
                     std::vector<CheckReport> out;
                     const std::pair<BilinearCocycle, const char*> cases[] = {{zero_cocycle(2), "zero"},
                                                                              {half_commutator_cocycle(2), "half-commutator"}};
                     for (const auto& [b, label] : cases) {
                         auto v = cocycle_first_order_check(b);
                         for (auto& r : v) {
                             r.id += std::string("-") + label;
                             r.params.emplace_back("cocycle", b.name);
                             out.push_back(r);
                         }
                     }
                     return out;
                 }});
    t.push_back({"deformation", "orbits", {"orbit_invariants"}, [] {
                     Mat4 om{};
                     om[0][1] = GaussRat(1);
                     om[1][0] = GaussRat(-1);
                     om[2][3] = GaussRat(2);
                     om[3][2] = GaussRat(-2);
                     auto base = orbit_invariants(om);
                     auto moved = orbit_invariants(conj4(boost_x1(GaussRat::frac(5, 4), GaussRat::frac(3, 4)), om));
                     CheckReport r = make_check("orbit-invariants-lorentz", "alpha, beta unchanged by a boost",
                                                base.alpha == moved.alpha && base.beta == moved.beta,
                                                moved.alpha.str() + ", " + moved.beta.str());
                     r.params.emplace_back("alpha", base.alpha.str());
                     r.params.emplace_back("beta", base.beta.str());
                     return one(r);
                 }});
    t.push_back({"deformation", "poincare", {"poincare_action"}, [=] {
                     KappaAlgebra a = make_kappa(kappa);
                     PoincareAction act(a, boost_x1(GaussRat::frac(5, 4), GaussRat::frac(3, 4)),
                                        {GaussRat(1), GaussRat(0), GaussRat::frac(1, 2), GaussRat(0)});
                     std::string w;
                     for (std::size_t i = 0; i < KappaAlgebra::kSize && w.empty(); ++i)
                         for (std::size_t j = i + 1; j < KappaAlgebra::kSize && w.empty(); ++j) {
                             NCPoly lhs = act.apply(a.uea().commutator(a.gen(i), a.gen(j)));
                             NCPoly rhs = a.uea().commutator(act.image(i), act.image(j));
                             if (lhs != rhs) w = a.names()[i] + ", " + a.names()[j];
                         }
                     return tag({make_check("poincare-action-algebra-map", "action commutes with brackets", w.empty(), w)});
                 }});
    return t;
}

// ---------------------------------------------------------------- quantum

std::vector<CheckTask> quantum_tasks(const SuiteOptions& o) {
    std::vector<CheckTask> t;
    t.push_back({"quantum", "rewrite", {"normal_order", "confluence_check"}, [] { return quantum_rewrite_checks(); }});
    t.push_back({"quantum", "covariance", {"covariance_check"}, [] { return covariance_checks(); }});
    t.push_back({"quantum", "qdet", {"qdet_ops"}, [] { return qdet_checks(QuantumGroup::generic()); }});
    t.push_back({"quantum", "hopf", {"hopf_ops"}, [] { return hopf_checks(QuantumGroup::generic()); }});
    t.push_back({"quantum", "rtt", {"rtt_check"}, [] { return rtt_checks(); }});
    t.push_back({"quantum", "sigma", {"sigma_ops"}, [] { return sigma_checks(QuantumPlane()); }});
    t.push_back({"quantum", "connection", {"quantum_connection", "evaluate_at"},
                 [] { return connection_checks(QuantumPlane()); }});
    t.push_back({"quantum", "classical-limit", {"normal_order"}, [] { return specialization_checks(); }});
    if (o.q) {
        GaussRat q = *o.q;
        t.push_back({"quantum", "evaluation", {"evaluate_at", "sigma_ops", "quantum_connection"},
                     [q] { return quantum_evaluation_checks(q); }});
    }
    if (o.p) {
        GaussRat p = *o.p;
        t.push_back({"quantum", "evaluated-p", {"qdet_ops", "hopf_ops"}, [p] {
                         QuantumGroup g{Scalar(p)};
                         auto v = qdet_checks(g);
                         auto h = hopf_checks(g);
                         v.insert(v.end(), h.begin(), h.end());
                         for (auto& r : v) {
                             r.id += "-at-p";
                             r.params.emplace_back("p", p.str());
                         }
                         return v;
                     }});
    }
    return t;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"matrix", "gauge", "deformation", "quantum"};
    return names;
}

std::vector<CheckTask> suite_tasks(const std::string& suite, const SuiteOptions& opts) {
    if (opts.n < 2) throw std::invalid_argument("n must be at least 2");
    if (opts.q && opts.q->is_zero()) throw std::invalid_argument("q must be nonzero");
    if (opts.p && opts.p->is_zero()) throw std::invalid_argument("p must be nonzero");
    if (opts.vacuum != "zero" && opts.vacuum != "delta") throw std::invalid_argument("vacuum must be zero or delta");
    if (suite == "all") {
        std::vector<CheckTask> all;
        for (const auto& s : suite_names()) {
            auto part = suite_tasks(s, opts);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    if (suite == "matrix") return matrix_tasks(opts);
    if (suite == "gauge") return gauge_tasks(opts);
    if (suite == "deformation") return deformation_tasks(opts);
    if (suite == "quantum") return quantum_tasks(opts);
    throw std::invalid_argument("unknown suite: " + suite);
}

std::vector<CheckReport> run_tasks(const std::vector<CheckTask>& tasks, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::vector<CheckReport>> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k; (k = next.fetch_add(1)) < tasks.size();) {
            auto start = std::chrono::steady_clock::now();
            std::vector<CheckReport> out;
            try {
                out = tasks[k].run();
            } catch (const std::exception& e) {
                CheckReport r = make_check(tasks[k].name + "-error", "task raised an exception", false, e.what());
                out.push_back(r);
            }
            double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            for (auto& r : out) {
                r.suite = tasks[k].suite;
                if (r.wall_ms == 0) r.wall_ms = ms / double(out.size());
            }
            results[k] = std::move(out);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < std::min<std::size_t>(threads, tasks.size()); ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    std::vector<CheckReport> flat;
    for (auto& r : results) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

}  // namespace ncg
