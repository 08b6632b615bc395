// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Usage: acceptance [path-to-freewitt-cli]

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "freewitt/check/selftest.hpp"

namespace {

using freewitt::check::CriterionResult;

std::string capture(const std::string& cmd, int& status) {
    std::string out;
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), n);
    status = pclose(pipe.release());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    const freewitt::check::SuiteOptions opt{8, 42};
    // Runtime budgets in seconds; 0 means none.
    const double budget[] = {10, 0, 0, 0, 30, 0, 60, 0, 0};
    int failures = 0;
    int id = 0;
    for (auto fn : freewitt::check::all_criteria()) {
        ++id;
        const auto t0 = std::chrono::steady_clock::now();
        CriterionResult r = freewitt::check::run_criterion(fn, opt);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (r.id == 0) r.id = id;
        if (budget[id - 1] > 0 && secs >= budget[id - 1] && r.pass) {
            r.pass = false;
            r.detail = "over the " + std::to_string(static_cast<int>(budget[id - 1])) + " s budget";
        }
        if (id == 9 && r.pass && argc > 1) {
            const std::string cmd = std::string(argv[1]) + " selftest --order 8 --seed 42";
            int s1 = 0;
            int s2 = 0;
            const auto first = capture(cmd, s1);
            const auto second = capture(cmd, s2);
            r.checks += 1;
            if (s1 != 0 || s2 != 0 || first.empty() || first != second) {
                r.pass = false;
                r.detail = "CLI selftest output differs between runs or exits nonzero";
            }
        }
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " (" << r.checks
                  << " checks, " << static_cast<long>(secs * 1000) << " ms)";
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << std::endl;
        failures += r.pass ? 0 : 1;
    }
    std::cout << (9 - failures) << "/9 acceptance criteria passed" << std::endl;
    return failures == 0 ? 0 : 1;
}
