// Acceptance gate. Runs the full battery at the default truncation and
// prints one PASS/FAIL line per criterion. Exits nonzero if anything fails.

#include "qgl21/checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace qgl21;

namespace {

struct Criterion {
    std::string label;
    std::function<CheckResult()> run;
};

std::string spectralTag(const Spectral& s) {
    return "(" + std::to_string(s.s0) + "," + std::to_string(s.s1) + "," +
           std::to_string(s.s2) + ")";
}

}  // namespace

int main() {
    const CheckContext base;  // truncation 4, spectral (1,1,1)
    const std::vector<Spectral> spectrals{{1, 1, 1}, {1, 0, 0}, {2, 1, 1}};

    auto suites = [&base](std::vector<std::string> names) {
        return [&base, names]() {
            for (const std::string& nm : names) {
                CheckResult r = findCheck(nm)->run(base);
                if (!r.pass) return r;
            }
            return CheckResult{"", true, ""};
        };
    };

    auto overSpectrals = [&spectrals](std::string name) {
        return [&spectrals, name]() {
            for (const Spectral& s : spectrals) {
                CheckContext ctx;
                ctx.spectral = s;
                CheckResult r = findCheck(name)->run(ctx);
                if (!r.pass) {
                    r.witness = "spectral " + spectralTag(s) + ": " + r.witness;
                    return r;
                }
            }
            return CheckResult{name, true, ""};
        };
    };

    const std::vector<Criterion> criteria = {
        {"defining relations hold symbolically and in the vector representation",
         suites({"defining-relations"})},
        {"loop generator images satisfy the affine relations",
         suites({"jimbo-homomorphism"})},
        {"recursive root vector images match their closed forms",
         suites({"f-image-table"})},
        {"imaginary central elements commute and have the stated eigenvalues",
         suites({"phi-central", "phi-eigenvalues"})},
        {"Yang-Baxter equation holds for three spectral weights",
         overSpectrals("ybe")},
        {"exchange relation holds for three spectral weights",
         overSpectrals("exchange")},
        {"Gauss factorization, series recurrences, and quadratic identities hold",
         suites({"factorization", "gen-series-recurrences"})},
        {"weighted supertraces are central and match the imaginary family",
         suites({"phi-ctilde", "s-square-twist"})},
        {"engine soundness: associativity, representation, signs, supertrace",
         [] { return runSoundness(1000, 20260819u); }},
    };

    bool anyFail = false;
    int idx = 0;
    for (const Criterion& c : criteria) {
        ++idx;
        auto t0 = std::chrono::steady_clock::now();
        CheckResult r = c.run();
        auto t1 = std::chrono::steady_clock::now();
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (r.pass) {
            std::printf("PASS  criterion %d: %s  (%lld ms)\n", idx, c.label.c_str(),
                        static_cast<long long>(ms));
        } else {
            std::printf("FAIL  criterion %d: %s  (%lld ms)  [%s] %s\n", idx,
                        c.label.c_str(), static_cast<long long>(ms), r.name.c_str(),
                        r.witness.c_str());
            anyFail = true;
        }
    }
    std::printf("%s\n", anyFail ? "acceptance: FAILED" : "acceptance: all criteria pass");
    return anyFail ? 1 : 0;
}
