#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ncg {

enum class CheckStatus { Pass, Fail, Warn };

inline const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Warn: return "warn";
    }
    return "?";
}

// Outcome of one verification. The suite name and parameters are filled in by
// whoever runs the check; the witness holds an expression dump on failure.
struct CheckReport {
    std::string suite;
    std::string id;
    std::string anchor;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;
    double wall_ms = 0;

    bool passed() const { return status == CheckStatus::Pass; }
};

inline CheckReport make_check(std::string id, std::string anchor, bool ok, std::string witness = {}) {
    CheckReport r;
    r.id = std::move(id);
    r.anchor = std::move(anchor);
    r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
    if (!ok) r.witness = std::move(witness);
    return r;
}

}  // namespace ncg
