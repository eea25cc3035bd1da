#pragma once

#include "qgl21/central.hpp"
#include "qgl21/check.hpp"
#include "qgl21/monodromy.hpp"

#include <functional>
#include <string>
#include <vector>

namespace qgl21 {

// Knobs a verification suite runs with: the series truncation order and
// the spectral grading triple used by the z-dependent matrix checks.
struct CheckContext {
    int truncation = 4;
    Spectral spectral{1, 1, 1};
};

// A named suite.  The anchor names the piece of the construction the
// suite certifies; run() folds all sub-checks into one result whose
// witness describes the first failure.
struct NamedCheck {
    std::string name;
    std::string anchor;
    std::function<CheckResult(const CheckContext&)> run;
};

// All suites in fixed report order.
const std::vector<NamedCheck>& allChecks();

// Lookup by suite name; nullptr when the name is unknown.
const NamedCheck* findCheck(const std::string& name);

// Shared cache of root-vector towers, keyed by depth.
const EpsVectors& epsAt(int maxN);

// Randomized engine self-checks: straightening associativity on the
// requested number of monomial triples, image consistency of every
// straightening rule under the vector representation, properties of the
// omega involution, the graded tensor sign rule, and supercyclicity of
// the trace functional.  Deterministic for a fixed seed.
CheckResult runSoundness(int triples, unsigned seed);

// Deliberately broken inputs must fail: a corrupted R-matrix entry
// breaks the Yang-Baxter equation, a zeroed lower block breaks the
// exchange relation, and a plain raising letter is not central.
CheckResult runNegativeControls(const CheckContext& ctx);

}  // namespace qgl21
