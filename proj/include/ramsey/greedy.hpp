#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ramsey/forbidden.hpp"

namespace ramsey {

enum class GreedyOrder { Permutation, PairStream };

struct GreedyConfig {
    GreedyOrder order = GreedyOrder::Permutation;
    int maxRetriesPerEdge = 0;  // 0: whole list (permutation) / T attempts per edge share (stream)
    int maxRestarts = 5;
    std::uint64_t seed = 0;
    bool hybridRepair = false;   // hand failures to resampling
    bool checkInvariants = false;  // full spanned-config scan after every acceptance
};

struct StuckReport {
    std::int32_t edge = -1;
    std::vector<ColorId> list;
    // per list color, one copy witnessing the conflict
    std::vector<std::pair<ColorId, std::int64_t>> conflicts;
};

struct GreedyResult {
    bool success = false;
    PartialColoring coloring{0};
    int restartsUsed = 0;
    long long attempts = 0;
    std::optional<StuckReport> stuck;
    bool repaired = false;  // success came from the hybrid repair phase
};

// Randomized conflict-free assignment: keep the partial coloring free of
// forbidden configurations (per conflicts_with) while extending it to all
// edges; restart on a stuck edge.
GreedyResult greedy_color(const HostGraph& g, const ListAssignment& L, const CopySet& copies,
                          const RamseyParams& P, GreedyConfig cfg);

}  // namespace ramsey
