#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "ramsey/util.hpp"

namespace ramsey {

// k-uniform host whose edges get colored. Edges are sorted k-tuples over
// 0..n-1, stored flat. Complete hosts resolve edge ids by colex rank; other
// hosts fall back to an ordered map.
struct HostGraph {
    int n = 0;
    int k = 0;
    bool complete = false;
    std::vector<std::int32_t> edgeVerts;  // m*k

    int m() const { return k == 0 ? 0 : static_cast<int>(edgeVerts.size() / k); }

    std::span<const std::int32_t> edge(int id) const {
        return {edgeVerts.data() + static_cast<std::size_t>(id) * k, static_cast<std::size_t>(k)};
    }

    // id of a sorted k-tuple, or -1 if not an edge of the host.
    int edge_id(std::span<const std::int32_t> verts) const;

    std::map<std::vector<std::int32_t>, std::int32_t> lookup;  // empty for complete hosts

    void validate() const;  // invariant check, throws std::invalid_argument
};

HostGraph complete_host(int n, int k);
HostGraph host_from_edges(int n, int k, std::vector<std::vector<std::int32_t>> edges);

// Pattern F. Same storage as HostGraph but over 0..p-1 and with the
// no-isolated-vertex restriction.
struct PatternGraph {
    int p = 0;
    int k = 0;
    std::vector<std::int32_t> edgeVerts;  // r*k

    int r() const { return k == 0 ? 0 : static_cast<int>(edgeVerts.size() / k); }
    std::span<const std::int32_t> edge(int id) const {
        return {edgeVerts.data() + static_cast<std::size_t>(id) * k, static_cast<std::size_t>(k)};
    }
    bool is_complete() const { return static_cast<std::uint64_t>(r()) == binomial(p, k); }
    void validate() const;
};

PatternGraph complete_pattern(int p, int k);
PatternGraph pattern_from_edges(int p, int k, std::vector<std::vector<std::int32_t>> edges);

// Text edge-list format: first line "n k", then one edge per line.
HostGraph read_host(std::istream& in);
PatternGraph read_pattern(std::istream& in);
void write_host(std::ostream& out, const HostGraph& g);

struct RamseyParams {
    int k = 0;
    int p = 0;
    int r = 0;
    int q = 0;
    int s = 0;          // r - q + 1
    Rat beta;           // 1 / (2(p-k))
    bool nonIntegral = false;  // (p-k) % s != 0
};

RamseyParams make_params(const PatternGraph& f, int q);
RamseyParams make_params(int k, int p, int r, int q);

// All copies of F in G, deduplicated by edge set. Per-copy data is stored
// flat; edge lists are sorted ascending. edgeMasks hold, for each copy edge,
// the bitmask of its vertices within the copy's sorted vertex list (needed by
// the potential machinery; requires p <= 16).
struct CopySet {
    int p = 0;
    int r = 0;
    int k = 0;
    std::int64_t count = 0;

    std::vector<std::int32_t> edgeIds;      // count*r
    std::vector<std::uint16_t> edgeMasks;   // count*r
    std::vector<std::int32_t> copyVerts;    // count*p, sorted
    std::vector<std::int32_t> vertexImage;  // count*p, image of pattern vertex j

    std::vector<std::int64_t> idxOff;   // m+1 offsets into idxCopy
    std::vector<std::int32_t> idxCopy;  // copy ids, ascending per edge

    std::span<const std::int32_t> edges_of(std::int64_t c) const {
        return {edgeIds.data() + c * r, static_cast<std::size_t>(r)};
    }
    std::span<const std::uint16_t> masks_of(std::int64_t c) const {
        return {edgeMasks.data() + c * r, static_cast<std::size_t>(r)};
    }
    std::span<const std::int32_t> verts_of(std::int64_t c) const {
        return {copyVerts.data() + c * p, static_cast<std::size_t>(p)};
    }
    std::span<const std::int32_t> image_of(std::int64_t c) const {
        return {vertexImage.data() + c * p, static_cast<std::size_t>(p)};
    }
    // copies whose edge set contains the given host edge
    std::span<const std::int32_t> copies_containing(int edgeId) const;

    bool copy_contains_edge(std::int64_t c, std::int32_t edgeId) const;
};

// Fast enumeration: complete patterns are unranked directly, general patterns
// run a backtracking search over vertex images (degree-descending order) with
// dedup by induced edge set.
CopySet enumerate_copies(const HostGraph& g, const PatternGraph& f);

// Plain backtracking over all injective maps, no shortcuts. Kept as the
// reference implementation for tests and the benchmark.
CopySet enumerate_copies_reference(const HostGraph& g, const PatternGraph& f);

}  // namespace ramsey
