#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ramsey/hypergraph.hpp"

namespace ramsey {

using ColorId = std::int32_t;

enum class ListMode { SharedPalette, RandomFromPool, Disjoint };

// One color list per host edge, all of size T, sorted ascending.
struct ListAssignment {
    int T = 0;
    std::vector<std::vector<ColorId>> lists;

    const std::vector<ColorId>& list(int edge) const { return lists[edge]; }
    void validate(const HostGraph& g) const;
};

ListAssignment make_lists(const HostGraph& g, int T, ListMode mode, int poolSize = 0,
                          std::uint64_t seed = 0);

// Partial edge coloring; -1 marks uncolored edges.
struct PartialColoring {
    std::vector<ColorId> color;
    int coloredCount = 0;

    explicit PartialColoring(int m = 0) : color(m, -1) {}
    bool total() const { return coloredCount == static_cast<int>(color.size()); }
    void assign(int e, ColorId c) {
        if (color[e] < 0) ++coloredCount;
        color[e] = c;
    }
    void clear(int e) {
        if (color[e] >= 0) --coloredCount;
        color[e] = -1;
    }
};

struct Violation {
    std::int64_t copyId;
    int distinctColors;
    bool operator==(const Violation& o) const = default;
};

struct ViolationReport {
    std::vector<Violation> violations;  // ascending by copyId
    bool valid = false;
};

// Copies on which the coloring uses at most q-1 distinct colors. Parallelized
// over the copy list; the serial variant is the reference for tests and bench.
ViolationReport verify_coloring(int q, const PartialColoring& phi, const CopySet& copies);
ViolationReport verify_coloring_serial(int q, const PartialColoring& phi, const CopySet& copies);

// distinct colors appearing on the edges of one copy, sorted
std::vector<ColorId> colors_on_copy(const PartialColoring& phi, const CopySet& copies, std::int64_t copyId);

int count_distinct_colors(const PartialColoring& phi, std::span<const std::int32_t> edges);

// number of distinct colors in a total coloring
int colors_used(const PartialColoring& phi);

// Witness format: one line per edge, "v1 ... vk color".
void write_witness(std::ostream& out, const HostGraph& g, const PartialColoring& phi);
PartialColoring read_witness(std::istream& in, const HostGraph& g);

}  // namespace ramsey
