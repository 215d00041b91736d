#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "ezdop/jobfile.hpp"

namespace ezdop {

inline const char* version_string() { return "0.1.0"; }
inline const char* report_schema() { return "ezdop-report/1"; }

struct Report {
    nlohmann::json doc;
    int exit_code = 0;
    std::string human_summary;
};

// Executes every statement in order. Definitions bind names; commands append
// report items. Verdicts (including "infeasible") exit 0; errors exit 1.
Report run_jobfile(const JobFile& job, uint64_t seed = 0);

// Convenience: parse text, then run. Parse errors become an error report.
Report run_job_text(const std::string& text, uint64_t seed = 0);

// End-to-end reproduction of the shipped worked example; every item must
// pass, otherwise the exit code is 2.
Report run_reproduce_example();

}  // namespace ezdop
