// Runs the end-to-end acceptance criteria and prints one PASS/FAIL line per criterion.
// Exits 0 whenever every criterion could be evaluated; red criteria are reported, not hidden.
#include "ncg/suites.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <string>
#include <vector>

using namespace ncg;

namespace {

struct Outcome {
    std::vector<std::string> failed;
    std::size_t checked = 0;
    double seconds = 0;
};

std::vector<CheckReport> run_named(const std::string& suite, const SuiteOptions& o, const std::set<std::string>& names) {
    std::vector<CheckTask> keep;
    for (auto& t : suite_tasks(suite, o))
        if (names.count(t.name)) keep.push_back(std::move(t));
    return run_tasks(keep);
}

std::string label(const CheckReport& r) {
    std::string s = r.id;
    for (const auto& [k, v] : r.params)
        if (k == "n" || k == "vacuum") s += " " + k + "=" + v;
    return s;
}

void require(Outcome& out, const std::vector<CheckReport>& reports, const std::set<std::string>& ids, const std::string& tag = "") {
    std::set<std::string> seen;
    for (const auto& r : reports) {
        if (!ids.count(r.id)) continue;
        seen.insert(r.id);
        ++out.checked;
        if (r.status != CheckStatus::Pass) out.failed.push_back(label(r) + tag + (r.witness.empty() ? "" : " [" + r.witness.substr(0, 80) + "]"));
    }
    for (const auto& id : ids)
        if (!seen.count(id)) out.failed.push_back(id + tag + " missing");
}

const CheckReport* find(const std::vector<CheckReport>& reports, const std::string& id) {
    for (const auto& r : reports)
        if (r.id == id) return &r;
    return nullptr;
}

std::string param(const CheckReport& r, const std::string& key) {
    for (const auto& [k, v] : r.params)
        if (k == key) return v;
    return "";
}

template <class F>
Outcome timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = f();
    o.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
}

void print(int k, const char* title, const char* tolerance, const Outcome& o, double limit_s = 0) {
    bool slow = limit_s > 0 && o.seconds > limit_s;
    bool ok = o.failed.empty() && !slow && o.checked > 0;
    std::printf("%s criterion %d: %s (checks %zu, tolerance %s, %.2f s", ok ? "PASS" : "FAIL", k, title, o.checked, tolerance,
                o.seconds);
    if (limit_s > 0) std::printf(", limit %.0f s", limit_s);
    std::printf(")\n");
    for (const auto& f : o.failed) std::printf("     red: %s\n", f.c_str());
    if (slow) std::printf("     red: runtime over limit\n");
}

SuiteOptions with_n(std::size_t n) {
    SuiteOptions o;
    o.n = n;
    return o;
}

}  // namespace

int main() {
    int red = 0;
    auto report = [&](int k, const char* title, const char* tol, const Outcome& o, double limit = 0) {
        print(k, title, tol, o, limit);
        if (!o.failed.empty() || (limit > 0 && o.seconds > limit)) ++red;
    };

    report(1, "matrix geometry Maurer-Cartan, structure equation, symplectic invariance, Poisson bracket", "exact", timed([] {
               Outcome o;
               for (std::size_t n : {2, 3, 4})
                   require(o, run_named("matrix", with_n(n), {"maurer-cartan", "symplectic"}),
                           {"maurer-cartan", "theta-structure-equation", "symplectic-lie-invariant", "poisson-is-commutator"},
                           " n=" + std::to_string(n));
               return o;
           }),
           60);

    report(2, "d^2 = 0 and graded Leibniz on 200 random forms", "exact", timed([] {
               Outcome o;
               for (std::size_t n : {2, 3})
                   require(o, run_named("matrix", with_n(n), {"randomized"}), {"d-squared-randomized", "graded-leibniz-randomized"},
                           " n=" + std::to_string(n));
               return o;
           }));

    report(3, "gauge vacua, Higgs levels 1:4, massless U(1), degenerate B family at B=0", "1e-9 relative", timed([] {
               Outcome o;
               SuiteOptions d = with_n(2);
               require(o, run_named("gauge", d, {"vacua", "spectrum"}), {"vacuum-zero", "vacuum-delta", "u1-massless", "higgs-three-levels"},
                       " vacuum=delta");
               SuiteOptions z = with_n(2);
               z.vacuum = "zero";
               require(o, run_named("gauge", z, {"spectrum"}), {"u1-massless", "b-family-degenerate"}, " vacuum=zero");
               return o;
           }));

    report(4, "linear connection curvature equals 1/8 C C", "exact", timed([] {
               Outcome o;
               for (std::size_t n : {2, 3})
                   require(o, run_named("gauge", with_n(n), {"linear-connection"}), {"curvature-from-d-squared"},
                           " n=" + std::to_string(n));
               return o;
           }));

    report(5, "kappa algebra Jacobi, C2 and C4 central, x - L central", "exact", timed([] {
               Outcome o;
               require(o, run_named("deformation", {}, {"lie", "casimirs", "center"}),
                       {"kappa-jacobi", "casimir-quadratic-central", "casimir-quartic-central", "x-minus-L-central"});
               return o;
           }),
           120);

    report(6, "invariant antisymmetric tensors: dims 0, 0, 6", "exact", timed([] {
               Outcome o;
               require(o, run_named("deformation", {}, {"no-go"}),
                       {"invariant-antisym-rotations", "invariant-antisym-lorentz", "invariant-antisym-trivial"});
               return o;
           }));

    report(7, "quantum group confluence, RTT at p = 1/q, antipode, Hopf maps, area element", "exact", timed([] {
               Outcome o;
               require(o, run_named("quantum", {}, {"rewrite", "covariance", "hopf", "rtt"}),
                       {"manin-confluence", "glpq-confluence", "forms-confluence", "glpq-manin-confluence", "glpq-exterior-confluence",
                        "rtt-sl-q", "antipode-left-inverse", "antipode-right-inverse", "coproduct-algebra-map", "counit-algebra-map",
                        "area-element-transforms-by-det"});
               return o;
           }));

    report(8, "quantum plane theta relations, sigma, curvature prefactor", "exact", timed([] {
               Outcome o;
               require(o, run_named("quantum", {}, {"sigma", "connection"}),
                       {"theta-squared", "theta-commutes-x", "theta-commutes-y", "theta-commutes-xi", "theta-commutes-eta",
                        "sigma-inverts-qR", "sigma-eigenvectors", "curvature-prefactor-q-i", "curvature-prefactor-q-1"});
               for (const auto& [point, expected] : std::vector<std::pair<const char*, const char*>>{{"i", "0"}, {"1", "4"}}) {
                   SuiteOptions e;
                   e.q = point[0] == 'i' ? GaussRat::i() : GaussRat(1);
                   auto reports = run_named("quantum", e, {"evaluation"});
                   const CheckReport* r = find(reports, "curvature-prefactor-at-point");
                   ++o.checked;
                   if (!r || param(*r, "value") != expected)
                       o.failed.push_back(std::string("curvature-prefactor-at-point q=") + point + " value " +
                                          (r ? param(*r, "value") : "missing"));
               }
               return o;
           }));

    std::printf("%d of 8 criteria red\n", red);
    return 0;
}
