#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "quartic/verify/suites.hpp"

// One line per acceptance criterion; failing checks are listed under it.
int main(int argc, char** argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 0;
    quartic::VerificationContext ctx(seed);
    int failed = 0;
    for (int i = 1; i <= 10; ++i) {
        auto r = quartic::run_criterion(i, ctx);
        std::cout << "criterion " << std::setw(2) << i << ": " << (r.pass() ? "PASS" : "FAIL") << "  " << r.title << "  ("
                  << r.checks.size() << " checks, " << std::fixed << std::setprecision(1) << r.seconds << " s)\n";
        for (auto& c : r.checks)
            if (!c.pass) std::cout << "    failed: " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
        std::cout.flush();
        if (!r.pass()) ++failed;
    }
    std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all 10 criteria passed") << "\n";
    return failed ? 1 : 0;
}
