// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
#include <cstdio>
#include <cstdlib>
#include <exception>

#include "ffva/acceptance.hpp"
#include "ffva/parallel.hpp"

int main() {
    ffva::AcceptanceOptions options;
    options.jobs = ffva::default_jobs();
    bool all = true;
    for (int id = 1; id <= ffva::kCriterionCount; ++id) {
        try {
            const auto r = ffva::run_criterion(id, options);
            std::printf("%s\n", r.line().c_str());
            all = all && r.pass();
        } catch (const std::exception& e) {
            std::printf("criterion %d FAIL  error: %s\n", id, e.what());
            all = false;
        }
        std::fflush(stdout);
    }
    return all ? EXIT_SUCCESS : EXIT_FAILURE;
}
