#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace plancherel {

// One verification criterion outcome. `worst` is the criterion's headline
// statistic (max |z|, max abs error, defect) and `threshold` its gate.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double worst = 0.0;
    double threshold = 0.0;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyOptions {
    std::uint64_t seed = 0x5eed0001u;
    int threads = 0;      // 0 = hardware concurrency
    bool quick = false;   // reduced sample counts for smoke runs
    std::string out_dir;  // when nonempty, CSV artifacts land here
};

// Suite names: combinatorics rsk kernel-static kernel-dynamic measure static
// dynamic equivalence probe bulk edge first-row all.
const std::vector<std::string>& suite_names();
std::vector<int> criteria_for_suite(const std::string& suite);
std::vector<CriterionResult> run_criteria(const std::vector<int>& ids, const VerifyOptions& opts);

nlohmann::json verdict_json(const std::string& suite, const std::vector<CriterionResult>& results);

}  // namespace plancherel
