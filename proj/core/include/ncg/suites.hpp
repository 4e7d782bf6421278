#pragma once

#include "ncg/gauge_kk.hpp"
#include "ncg/report.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ncg {

struct SuiteOptions {
    std::size_t n = 2;
    std::optional<GaussRat> q, p, kappa;
    std::string vacuum = "delta";  // zero | delta
    InternalMetric metric = InternalMetric::Trace;
    std::uint64_t seed = 1;
};

// One unit of work in a suite. `ops` names the library operations the task exercises.
struct CheckTask {
    std::string suite;
    std::string name;
    std::vector<std::string> ops;
    std::function<std::vector<CheckReport>()> run;
};

const std::vector<std::string>& suite_names();  // matrix, gauge, deformation, quantum
// "all" expands to every suite. Throws std::invalid_argument on bad input.
std::vector<CheckTask> suite_tasks(const std::string& suite, const SuiteOptions& opts);
// Runs tasks on up to `threads` workers; results keep task order. Exceptions become failed checks.
std::vector<CheckReport> run_tasks(const std::vector<CheckTask>& tasks, unsigned threads = 0);

}  // namespace ncg
