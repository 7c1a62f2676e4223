#include "oracle.hpp"

#include "sec/repro.hpp"

#include <iostream>

// Runs every acceptance criterion with the brute-force 2-SE oracle attached
// and exits nonzero if any of them fails.
int main(int argc, char ** argv)
{
    sec::repro::Options options;
    options.oracle = oracle::two_se;

    int only = 0;
    if (argc > 1)
        only = std::stoi(argv[1]);

    bool failed = false;
    for (int id = 1; id <= sec::repro::criterion_count; ++id) {
        if (only && id != only)
            continue;
        auto r = sec::repro::run_criterion(id, options);
        std::cout << sec::repro::format(r) << std::endl;
        failed = failed || r.status != sec::repro::Status::Pass;
    }
    return failed ? 1 : 0;
}
