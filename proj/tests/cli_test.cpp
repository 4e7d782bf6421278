#include "ncg/suites.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sys/wait.h>

using namespace ncg;
using json = nlohmann::json;

namespace {

struct CliResult {
    int code;
    std::string out;
};

CliResult run(const std::string& args) {
    std::string cmd = std::string(NCG_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r{0, {}};
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, {}};
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

json strip_times(json j) {
    for (auto& c : j["checks"]) c.erase("wall_ms");
    return j;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("ncg_cli_test_" + name)).string();
}

}  // namespace

TEST(Suites, EveryOperationIsReachable) {
    const std::set<std::string> ops = {
        // scalar_core
        "scalar_arith", "evaluate_at", "solve_linear", "eigen_numeric", "levi_civita",
        // matrix_geometry
        "build_algebra", "differential", "canonical_theta", "wedge", "interior_and_lie", "symplectic", "hodge_integrate",
        // gauge_kk
        "split_derivation", "hybrid_d", "field_strength", "vacuum_check", "mass_spectrum", "linear_connection",
        // deformation_poincare
        "build_kappa_algebra", "jacobi_check", "uea_normal_order", "casimir_centrality", "center_diff_check",
        "invariant_antisym_solver", "cocycle_first_order_check", "orbit_invariants", "poincare_action",
        // quantum_algebra
        "normal_order", "confluence_check", "covariance_check", "qdet_ops", "hopf_ops", "rtt_check", "sigma_ops",
        "quantum_connection"};
    SuiteOptions o;
    o.q = GaussRat(2);
    o.p = GaussRat(3);
    std::set<std::string> seen;
    for (const auto& t : suite_tasks("all", o)) seen.insert(t.ops.begin(), t.ops.end());
    for (const auto& op : ops) EXPECT_TRUE(seen.count(op)) << op;
    for (const auto& op : seen) EXPECT_TRUE(ops.count(op)) << "unlisted " << op;
}

TEST(Suites, CheckIdsUniqueAndOrderStable) {
    SuiteOptions o;
    auto a = run_tasks(suite_tasks("all", o), 4);
    auto b = run_tasks(suite_tasks("all", o), 1);
    ASSERT_EQ(a.size(), b.size());
    std::set<std::pair<std::string, std::string>> ids;
    for (std::size_t k = 0; k < a.size(); ++k) {
        EXPECT_EQ(a[k].id, b[k].id);
        EXPECT_EQ(a[k].status, b[k].status);
        EXPECT_EQ(a[k].witness, b[k].witness);
        EXPECT_TRUE(ids.insert({a[k].suite, a[k].id}).second) << a[k].id;
    }
}

TEST(Suites, RejectsBadOptions) {
    SuiteOptions o;
    o.n = 1;
    EXPECT_THROW(suite_tasks("matrix", o), std::invalid_argument);
    o.n = 2;
    o.q = GaussRat(0);
    EXPECT_THROW(suite_tasks("quantum", o), std::invalid_argument);
    o.q.reset();
    EXPECT_THROW(suite_tasks("nothing", o), std::invalid_argument);
}

TEST(Cli, NormalForms) {
    EXPECT_EQ(run("nf glpq da").out, "ad + (q^-1 - p)*bc\n");
    EXPECT_EQ(run("nf manin yx").out, "q^-1*xy\n");
    EXPECT_EQ(run("nf glpq a").out, "a\n");
    EXPECT_EQ(run("nf glpq az").code, 2);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run("verify matrix --n 2").code, 0);
    // the quantum suite carries failing printed relations
    EXPECT_EQ(run("verify quantum").code, 1);
    EXPECT_EQ(run("verify matrix --n 1").code, 2);
    EXPECT_EQ(run("verify nowhere").code, 2);
    EXPECT_EQ(run("verify quantum --q-eval 0").code, 2);
    EXPECT_EQ(run("verify matrix --bogus").code, 2);
}

TEST(Cli, ReportSchemaAndDeterminism) {
    std::string p1 = temp_path("a.json"), p2 = temp_path("b.json");
    ASSERT_EQ(run("verify matrix --n 2 --seed 5 --out " + p1).code, 0);
    ASSERT_EQ(run("verify matrix --n 2 --seed 5 --out " + p2).code, 0);
    std::ifstream f1(p1), f2(p2);
    json a = json::parse(f1), b = json::parse(f2);
    EXPECT_FALSE(std::filesystem::exists(p1 + ".tmp"));
    for (const char* key : {"version", "invocation", "checks", "summary"}) EXPECT_TRUE(a.contains(key)) << key;
    EXPECT_EQ(a["summary"]["fail"], 0);
    bool has_mc = false;
    for (const auto& c : a["checks"]) {
        for (const char* key : {"suite", "id", "anchor", "params", "status", "witness", "wall_ms"})
            EXPECT_TRUE(c.contains(key)) << key;
        has_mc = has_mc || c["id"] == "maurer-cartan";
    }
    EXPECT_TRUE(has_mc);
    // invocation differs only in the output path
    a["invocation"].erase("args");
    b["invocation"].erase("args");
    EXPECT_EQ(strip_times(a).dump(), strip_times(b).dump());
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST(Cli, PrefactorVanishesAtI) {
    CliResult r = run("verify quantum --q-eval i --json");
    json j = json::parse(r.out);
    bool found = false;
    for (const auto& c : j["checks"])
        if (c["id"] == "curvature-prefactor-at-point") {
            found = true;
            EXPECT_EQ(c["params"]["value"], "0");
        }
    EXPECT_TRUE(found);
}

TEST(Cli, SpectrumThreeLevels) {
    CliResult r = run("spectrum --n 2 --vacuum delta");
    ASSERT_EQ(r.code, 0);
    json j = json::parse(r.out);
    ASSERT_EQ(j["higgs_levels"].size(), 3u);
    double m1 = j["higgs_levels"][1]["mass2"], m2 = j["higgs_levels"][2]["mass2"];
    EXPECT_NEAR(m2 / m1, 4.0, 1e-9);
    EXPECT_EQ(j["metric"], "trace");
}
