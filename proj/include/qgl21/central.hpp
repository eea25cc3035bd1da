#pragma once

#include "qgl21/check.hpp"
#include "qgl21/jimbo.hpp"
#include "qgl21/reps.hpp"

#include <vector>

namespace qgl21 {

// The universal finite operator: raising letters below the diagonal
// against the Cartan dressing diag(q^{-K_1}, q^{-K_2}, q^{K_3}).
GOp2 universalM();

// Its lowering twin, with the barred long letter F13 - kappa F12 F23.
GOp2 universalMSigma();

// Weighted supertraces C_n = str_w B^n of powers of B = M^sigma M,
// with weights (1, q^2, q^2); indices 1..maxN.
std::vector<El> traceCs(int maxN);

// Centrality of the first two traces and the change of basis from the
// bar-flipped traces to the imaginary central elements, degrees 1..4.
// Needs eps built to depth 4.
std::vector<CheckResult> checkCentralTraces(const EpsVectors& eps);

// The square of the antipode is conjugation by q^{2K_2 + 2K_3}.
std::vector<CheckResult> checkSquaredAntipode();

}  // namespace qgl21
