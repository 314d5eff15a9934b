// Acceptance run: the full verification at rank <= 8, summarised as one
// PASS/FAIL line per criterion, plus the runtime envelope.

#include <chrono>
#include <iostream>
#include <map>
#include <string>

#include "rootposet/verify.hpp"

using namespace rootposet;

namespace {

const std::map<int, std::string> criteria = {
    {1, "edge types of H(Delta+)"},
    {2, "short-root diagram"},
    {3, "weight diagrams and sl2 restriction"},
    {4, "ad-nilpotent ideal counts and Narayana polynomials"},
    {5, "minimal elements of the affine Weyl group"},
    {6, "edge types of H(AD): four characterisations and D_min"},
    {7, "sl4 golden case"},
    {8, "Abelian ideals: counts, per-type edges, alcoves in 2A"},
    {9, "commutative roots"},
    {10, "classes of commutative roots"},
    {11, "Suter's automorphism tau"},
    {12, "long Abelian ideals"},
    {13, "covering polynomials"},
    {14, "binomial identity"},
    {15, "performance envelope"},
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main() {
    constexpr double full_limit = 600.0;  // all suites, rank <= 8
    constexpr double small_limit = 30.0;  // all suites, rank <= 4

    auto t0 = std::chrono::steady_clock::now();
    VerifyOptions small;
    small.max_rank = 4;
    const auto small_report = run_verify(small);
    const double small_time = seconds_since(t0);

    t0 = std::chrono::steady_clock::now();
    const auto full = run_verify(VerifyOptions{});
    const double full_time = seconds_since(t0);

    std::cout << full.text() << '\n';

    struct Tally {
        std::size_t checks = 0;
        std::size_t failed = 0;
        std::string first_failure;
    };
    std::map<int, Tally> tally;
    for (const auto& c : full.checks) {
        if (c.status == Status::Note) continue;
        auto& t = tally[c.criterion];
        ++t.checks;
        if (c.status == Status::Fail) {
            if (!t.failed) t.first_failure = c.name + ": " + c.detail;
            ++t.failed;
        }
    }
    auto& perf = tally[15];
    perf.checks = 2;
    if (full_time > full_limit) {
        ++perf.failed;
        perf.first_failure = "rank <= 8 took " + std::to_string(full_time) + " s";
    }
    if (small_time > small_limit || !small_report.passed()) {
        ++perf.failed;
        if (perf.first_failure.empty())
            perf.first_failure = small_report.passed() ? "rank <= 4 took " + std::to_string(small_time) + " s"
                                                       : "rank <= 4 run has failures";
    }

    bool ok = true;
    for (const auto& [id, title] : criteria) {
        const auto& t = tally[id];
        const bool pass = t.checks > 0 && t.failed == 0;
        ok = ok && pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title << " (" << t.checks << " checks";
        if (id == 15) std::cout << "; rank <= 8 in " << full_time << " s, rank <= 4 in " << small_time << " s";
        std::cout << ')';
        if (t.checks == 0) std::cout << " - no checks ran";
        if (t.failed) std::cout << " - " << t.first_failure;
        std::cout << '\n';
    }
    return ok ? 0 : 1;
}
