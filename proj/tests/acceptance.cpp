// Acceptance suite: runs every verification criterion over its full grid and
// prints one pass/fail line per criterion.  All comparisons are exact; there
// are no tolerances anywhere.  Exit status 0 only when everything passes.

#include <cstdio>
#include <exception>

#include "ribbonres/suites.hpp"
#include "ribbonres/report.hpp"

int main() {
    using namespace ribbonres;
    bool all_ok = true;
    for (const auto& crit : suites::all_criteria()) {
        Stopwatch sw;
        bool ok = false;
        long checks = 0, failed = 0;
        std::string detail;
        try {
            Report rep = crit.run({});
            ok = rep.all_pass();
            checks = static_cast<long>(rep.items.size());
            for (auto& c : rep.items)
                if (!c.pass) ++failed;
            if (!ok && rep.first_failure())
                detail = rep.first_failure()->check + " " + rep.first_failure()->params.dump();
        } catch (const std::exception& e) {
            detail = e.what();
        }
        std::printf("[%s] criterion %2d %-20s  (%ld checks, %ld failed, %.1fs)%s%s\n",
                    ok ? "PASS" : "FAIL", crit.number, crit.name.c_str(), checks, failed,
                    sw.millis() / 1000.0, detail.empty() ? "" : "  first: ",
                    detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
