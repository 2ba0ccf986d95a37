#include <pseudowalk/verify.hpp>

#include <cstdio>
#include <map>
#include <string>

// One line per criterion; a criterion passes when every case tagged with it passes.
int main(int argc, char** argv)
{
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const std::map<int, std::string> titles = {
        {1, "step law"},
        {2, "generator identity"},
        {3, "n-step law and distribution function"},
        {4, "roots of P_z"},
        {5, "generating functions against the absorbing DP"},
        {6, "law of the overshoot"},
        {7, "pseudo-moments of the overshoot"},
        {8, "gambler's ruin"},
        {9, "boundary calculus and strong pseudo-Markov identities"},
        {10, "alternating sums, lacunary systems, structured inverse"},
        {11, "continuum limit"},
    };
    struct Tally {
        int total = 0, passed = 0;
        double worst = 0.0;
    };
    std::map<int, Tally> tally;
    for (const auto& [k, t] : titles) tally[k] = {};
    for (const pw::CaseResult& c : pw::run_verification("all")) {
        Tally& t = tally[c.criterion];
        ++t.total;
        if (c.pass) ++t.passed;
        if (!c.pass || verbose) std::printf("  %s %s max_error=%.3g\n", c.pass ? "ok  " : "FAIL", c.id.c_str(), c.max_error);
        t.worst = std::max(t.worst, c.max_error);
    }
    int failed = 0;
    for (const auto& [k, t] : tally) {
        const bool ok = t.total > 0 && t.passed == t.total;
        failed += !ok;
        std::printf("%s criterion %2d  %-55s %4d/%-4d cases  max_error=%.3g\n", ok ? "PASS" : "FAIL", k, titles.at(k).c_str(), t.passed,
                    t.total, t.worst);
    }
    std::printf("%d of %zu criteria passed\n", int(tally.size()) - failed, tally.size());
    return failed == 0 ? 0 : 1;
}
