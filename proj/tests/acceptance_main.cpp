// Acceptance suite: runs every verification criterion at full sample sizes
// and prints one PASS/FAIL line per criterion. Nonzero exit on any failure.

#include <cstdio>
#include <cstring>
#include <string>

#include "plancherel/verify.hpp"

int main(int argc, char** argv) {
    plancherel::VerifyOptions opts;
    std::string suite = "all";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) opts.quick = true;
        else if (std::strcmp(argv[i], "--suite") == 0 && i + 1 < argc) suite = argv[++i];
        else if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opts.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--out-dir") == 0 && i + 1 < argc) opts.out_dir = argv[++i];
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            opts.threads = std::atoi(argv[++i]);
    }

    const auto ids = plancherel::criteria_for_suite(suite);
    bool all_pass = true;
    for (int id : ids) {
        const auto results = plancherel::run_criteria({id}, opts);
        for (const auto& r : results) {
            std::printf("[%s] criterion %2d %-24s worst=%-12.5g gate=%-10.4g (%.1fs) %s\n",
                        r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(), r.worst, r.threshold,
                        r.seconds, r.detail.c_str());
            std::fflush(stdout);
            all_pass = all_pass && r.pass;
        }
    }
    if (!all_pass) {
        std::printf("acceptance: at least one criterion failed\n");
        return 1;
    }
    std::printf("acceptance: all criteria passed\n");
    return 0;
}
