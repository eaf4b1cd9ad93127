#pragma once

#include <cstdint>
#include <optional>

#include "ramsey/coloring.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

// Symmetric local lemma bookkeeping for the base bound: a bad event is one
// copy receiving at most q-1 colors from lists of size t.
struct LllParameters {
    int t = 0;
    double pBad = 0.0;  // C(r*t, q-1) * ((q-1)/t)^r
    double d = 0.0;     // r * C(n, p-k)
    bool ok = false;    // e * pBad * (d+1) <= 1
};

LllParameters lll_parameters(int n, const RamseyParams& P, int t);

// ceil(C * n^((p-k)/s)), the list size the local lemma bound asks for
long long lll_budget(int n, const RamseyParams& P, double C);

struct MtOptions {
    long long maxResamples = -1;     // -1: 1000 * |E(G)|
    long long stagnationWindow = 0;  // 0: off; else fail early when the
                                     // violated count stops improving
};

struct MtResult {
    bool success = false;
    PartialColoring coloring{0};
    long long resamples = 0;
    // failure diagnosis
    long long violatedRemaining = 0;
    std::int64_t firstViolated = -1;
};

// Moser-Tardos resampling: color every edge independently from its list,
// then repeatedly re-randomize the lowest-index violated copy until none
// remains or the cap is hit. Deterministic under a fixed seed.
MtResult moser_tardos_color(const HostGraph& g, int q, const ListAssignment& L, const CopySet& copies,
                            std::uint64_t seed, MtOptions opts = {},
                            const PartialColoring* initial = nullptr);

}  // namespace ramsey
