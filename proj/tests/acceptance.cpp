// Acceptance gate: runs the CLI `suite --seed 7`, checks every criterion
// report at its pinned tolerance, prints one pass/fail line per criterion,
// and re-runs the suite to verify byte-identical output (criterion 10).
//
// Usage: acceptance <path-to-qrlab-cli>

#include <array>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "qrlab/report.hpp"

namespace {

struct RunResult {
    std::string output;
    int exit_code = -1;
};

RunResult run_command(const std::string& cmd) {
    RunResult result;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return result;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), n);
    const int status = pclose(pipe);
    result.exit_code = (status >= 0 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
    return result;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-qrlab-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string cmd = "\"" + cli + "\" suite --seed 7";

    const RunResult first = run_command(cmd);
    if (first.exit_code < 0 || first.output.empty()) {
        std::cerr << "FAIL: could not run " << cmd << "\n";
        return 1;
    }

    std::vector<qrlab::VerificationReport> reports;
    try {
        reports = qrlab::reports_from_json(first.output);
    } catch (const std::exception& e) {
        std::cerr << "FAIL: suite output is not parseable JSON: " << e.what() << "\n";
        return 1;
    }

    int failures = 0;
    for (const auto& r : reports) {
        const bool ok = r.pass || !r.applicable;
        if (!ok) ++failures;
        std::printf("%-38s %s  (measured=%.3e, bound=%.3e)%s\n", r.theorem_id.c_str(),
                    ok ? "PASS" : "FAIL", r.lhs, r.rhs, r.applicable ? "" : "  [not applicable]");
    }

    const RunResult second = run_command(cmd);
    const bool deterministic =
        second.exit_code == first.exit_code && second.output == first.output;
    std::printf("%-38s %s  (%zu bytes%s)\n", "acc10-suite-determinism",
                deterministic ? "PASS" : "FAIL", first.output.size(),
                deterministic ? ", byte-identical" : ", outputs differ");
    if (!deterministic) ++failures;

    if (first.exit_code != 0) {
        std::printf("%-38s FAIL  (suite exit code %d)\n", "suite-exit-code", first.exit_code);
        ++failures;
    }

    std::printf("\n%d criterion report(s), %d failure(s)\n",
                static_cast<int>(reports.size()) + 1, failures);
    return failures == 0 ? 0 : 1;
}
