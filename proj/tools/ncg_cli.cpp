#include "ncg/quantum.hpp"
#include "ncg/suites.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

using json = nlohmann::ordered_json;
using namespace ncg;

namespace {

constexpr const char* kVersion = "0.1.0";

GaussRat parse_point(const std::string& text) {
    Scalar s = Scalar::parse(text, make_params({}));
    if (!s.is_constant()) throw std::invalid_argument("not a number: " + text);
    return s.constant_term();
}

void write_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << text;
        os.flush();
        if (!os) throw std::runtime_error("write failed: " + tmp.string());
    }
    fs::rename(tmp, target);
}

json report_json(const CheckReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    return json{{"suite", r.suite},   {"id", r.id},           {"anchor", r.anchor},  {"params", params},
                {"status", to_string(r.status)}, {"witness", r.witness}, {"wall_ms", r.wall_ms}};
}

Presentation named_presentation(const std::string& name) {
    if (name == "manin") return manin_plane();
    if (name == "glpq") return QuantumGroup::generic().algebra();
    if (name == "slq") return QuantumGroup::sl_q().algebra();
    if (name == "forms") return quantum_plane_forms();
    if (name == "exterior") return exterior_pair(ppow(1));
    throw std::invalid_argument("unknown presentation: " + name + " (manin, glpq, slq, forms, exterior)");
}

const char* metric_name(InternalMetric m) { return m == InternalMetric::Trace ? "trace" : "killing"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of matrix geometry, Kaluza-Klein gauge models, deformations and quantum groups"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    SuiteOptions opts;
    std::string suite, q_text, p_text, kappa_text, metric = "trace", out_path;
    bool as_json = false;
    unsigned threads = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", opts.n, "matrix size n >= 2")->check(CLI::Range(2, 8));
        sub->add_option("--vacuum", opts.vacuum, "vacuum for the gauge model")->check(CLI::IsMember({"zero", "delta"}));
        sub->add_option("--metric", metric, "internal metric")->check(CLI::IsMember({"trace", "killing"}));
        sub->add_option("--out", out_path, "write the JSON report to this file");
        sub->add_flag("--json", as_json, "print JSON on stdout");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "matrix | gauge | deformation | quantum | all")
        ->required()
        ->check(CLI::IsMember({"matrix", "gauge", "deformation", "quantum", "all"}));
    add_common(verify);
    verify->add_option("--q-eval", q_text, "evaluate at this q (e.g. 2, 1/3, i)");
    verify->add_option("--p-eval", p_text, "evaluate at this p");
    verify->add_option("--kappa-eval", kappa_text, "use this kappa instead of the formal parameter");
    verify->add_option("--seed", opts.seed, "seed for randomized checks");
    verify->add_option("--threads", threads, "worker threads (0 = hardware)");

    CLI::App* spectrum = app.add_subcommand("spectrum", "mass spectrum of the gauge model at a vacuum");
    add_common(spectrum);

    std::string pres_name, word, pres_file;
    CLI::App* nf = app.add_subcommand("nf", "normal form of a word");
    nf->add_option("presentation", pres_name, "manin | glpq | slq | forms | exterior | file");
    nf->add_option("word", word, "expression to normal order")->required();
    nf->add_option("--file", pres_file, "presentation JSON (when presentation is 'file')");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        opts.metric = metric == "killing" ? InternalMetric::Killing : InternalMetric::Trace;
        if (!q_text.empty()) opts.q = parse_point(q_text);
        if (!p_text.empty()) opts.p = parse_point(p_text);
        if (!kappa_text.empty()) opts.kappa = parse_point(kappa_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::vector<std::string> args(argv + 1, argv + argc);

    if (*nf) {
        try {
            Presentation p = pres_name == "file" || !pres_file.empty()
                                 ? [&] {
                                       std::ifstream is(pres_file);
                                       if (!is) throw std::invalid_argument("cannot read " + pres_file);
                                       std::string text((std::istreambuf_iterator<char>(is)), {});
                                       return Presentation::from_json(text);
                                   }()
                                 : named_presentation(pres_name);
            std::cout << p.str(p.normal_form(p.parse(word))) << "\n";
            return 0;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }

    json doc;
    int code = 0;
    if (*spectrum) {
        try {
            auto a = MatrixAlgebra::build(opts.n);
            RatTensor2 b = opts.vacuum == "zero" ? RatTensor2(a.dim(), std::vector<GaussRat>(a.dim())) : identity_vacuum(a.dim());
            MassSpectrum s = mass_spectrum(a, b, opts.metric);
            json fam = json::object();
            fam["gauge_singlet"] = s.gauge_singlet;
            fam["gauge_adjoint"] = s.gauge_adjoint;
            fam["scalar_singlet"] = s.scalar_singlet;
            fam["higgs"] = s.higgs;
            json levels = json::array();
            for (const auto& [v, m] : spectrum_levels(s.higgs)) levels.push_back({{"mass2", v}, {"multiplicity", m}});
            doc = json{{"version", kVersion},
                       {"invocation", json{{"command", "spectrum"}, {"args", args}}},
                       {"n", opts.n},
                       {"vacuum", opts.vacuum},
                       {"metric", metric_name(opts.metric)},
                       {"units", "mass^2 in units of m^2"},
                       {"massless", s.massless},
                       {"families", fam},
                       {"higgs_levels", levels}};
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::vector<CheckTask> tasks;
        try {
            tasks = suite_tasks(suite, opts);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        auto reports = run_tasks(tasks, threads);
        int pass = 0, fail = 0, warn = 0;
        json checks = json::array();
        for (const auto& r : reports) {
            (r.status == CheckStatus::Pass ? pass : r.status == CheckStatus::Fail ? fail : warn)++;
            checks.push_back(report_json(r));
        }
        json params = json::object();
        params["n"] = opts.n;
        params["q"] = opts.q ? opts.q->str() : "q";
        params["p"] = opts.p ? opts.p->str() : "p";
        params["kappa"] = opts.kappa ? opts.kappa->str() : "kappa";
        params["vacuum"] = opts.vacuum;
        params["metric"] = metric_name(opts.metric);
        params["seed"] = opts.seed;
        doc = json{{"version", kVersion},
                   {"invocation", json{{"command", "verify"}, {"suite", suite}, {"params", params}, {"args", args}}},
                   {"checks", checks},
                   {"summary", json{{"pass", pass}, {"fail", fail}, {"warn", warn}}}};
        code = fail ? 1 : 0;
        if (as_json) {
            std::cout << doc.dump(2) << "\n";
        } else {
            for (const auto& r : reports) {
                std::printf("%-5s %-12s %-44s", to_string(r.status), r.suite.c_str(), r.id.c_str());
                if (!r.witness.empty()) std::printf("  %s", r.witness.substr(0, 160).c_str());
                std::printf("\n");
            }
            std::printf("pass %d  fail %d  warn %d\n", pass, fail, warn);
        }
    }

    if (!out_path.empty()) {
        try {
            write_atomic(out_path, doc.dump(2) + "\n");
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
    }
    return code;
}
