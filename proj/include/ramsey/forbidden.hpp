#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "ramsey/coloring.hpp"
#include "ramsey/hypergraph.hpp"

namespace ramsey {

// One edge-color pair of the bipartite instance; a matching is a set of
// members with pairwise distinct edges.
struct Member {
    std::int32_t edge;
    ColorId color;
    bool operator==(const Member&) const = default;
    auto operator<=>(const Member&) const = default;
};

struct MatchingStats {
    int m = 0;    // |M|
    int v = 0;    // |V(M)|
    int ell = 0;  // |C(M)|
};

MatchingStats matching_stats(std::span<const Member> members, const HostGraph& g);

// Integer-scaled potential (p-k)*(m - ell) - (v-k)*(r-q+1). Equals (p-k)
// times the rational potential, so sign tests stay exact.
inline long long scaled_potential_value(const MatchingStats& st, const RamseyParams& P) {
    return static_cast<long long>(P.p - P.k) * (st.m - st.ell) -
           static_cast<long long>(st.v - P.k) * P.s;
}

long long scaled_potential(std::span<const Member> members, const HostGraph& g, const RamseyParams& P);

struct IndexTriple {
    int m, v, ell;
    bool operator==(const IndexTriple&) const = default;
    auto operator<=>(const IndexTriple&) const = default;
};

// Feasible (size, spanned-vertices, colors) triples of forbidden configs:
// 2 <= m <= r, k+1 <= v <= p, 1 <= ell <= r with
// (p-k)*m >= (p-k)*ell + (v-k)*(r-q+1).
struct IndexSet {
    std::vector<IndexTriple> triples;  // sorted
    bool contains(int m, int v, int ell) const;
};

IndexSet index_triples(const RamseyParams& P);

struct ForbiddenConfig {
    std::vector<Member> members;  // sorted
    std::int64_t witnessCopy = -1;
    IndexTriple triple{0, 0, 0};
};

struct ForbiddenCheck {
    bool forbidden = false;
    std::int64_t witnessCopy = -1;
};

// Minimal forbidden configuration test: |M| >= 2, E(M) inside some copy,
// scaled potential >= 0, and every proper submatching of size >= 2 has
// scaled potential <= -1 (exhaustive subset scan).
ForbiddenCheck is_forbidden(std::span<const Member> members, const CopySet& copies,
                            const HostGraph& g, const RamseyParams& P);

// True iff current + candidate spans a forbidden configuration. `current`
// must itself be avoiding (then any violating subset through the candidate
// contains a minimal one through it, so minimality need not be rechecked).
bool conflicts_with(const PartialColoring& current, Member candidate, const CopySet& copies,
                    const HostGraph& g, const RamseyParams& P);

// Like conflicts_with but reports a copy witnessing the conflict.
std::optional<std::int64_t> conflict_witness(const PartialColoring& current, Member candidate,
                                             const CopySet& copies, const HostGraph& g,
                                             const RamseyParams& P);

struct EnumLimits {
    int sizeCap = 0;                    // 0 = up to r members
    std::size_t maxConfigs = 2000000;   // explosion guard
};

// Materialize every minimal forbidden configuration over a shared palette
// {0..paletteSize-1}, deduplicated across copies (lowest witness copy kept),
// sorted by member list. Intended for small hosts and palettes.
std::vector<ForbiddenConfig> enumerate_H(const HostGraph& g, int paletteSize, const CopySet& copies,
                                         const RamseyParams& P, EnumLimits limits = {});
std::vector<ForbiddenConfig> enumerate_H_serial(const HostGraph& g, int paletteSize,
                                                const CopySet& copies, const RamseyParams& P,
                                                EnumLimits limits = {});

// Copies whose full matching under a total coloring has nonnegative scaled
// potential; identical to the set of copies seeing at most q-1 colors.
std::vector<std::int64_t> potential_violated_copies(const PartialColoring& phi, const CopySet& copies,
                                                    const RamseyParams& P);

// A minimal forbidden configuration spanned by the coloring, if any.
std::optional<ForbiddenConfig> find_spanned_config(const PartialColoring& phi, const CopySet& copies,
                                                   const HostGraph& g, const RamseyParams& P);

// Budget derived from n: T = ceil(C * (n^(p-k) / ln n)^(1/s)), D = T/2 exact.
struct BudgetParameters {
    int T = 0;
    Rat D;
    Rat beta;
    double C = 0.0;
};

BudgetParameters budget(int n, const RamseyParams& P, double C);

// J = (A,B): A = host edges, B = (edge, color) pairs. The structure is the
// list assignment itself; this records the measured shape.
struct BipartiteInstance {
    int numA = 0;
    long long numB = 0;
    int T = 0;
    const ListAssignment* lists = nullptr;
    int minADegree = 0;
    int maxADegree = 0;
    int maxBDegree = 0;   // 1 by construction
    int maxCodegree = 0;  // over vertex pairs
    bool twoBounded = true;
};

BipartiteInstance build_instance(const HostGraph& g, const ListAssignment& L);

// Audit dump, one config per line: "m v l | v1-..-vk:color ... | copy-id".
void write_config_dump(std::ostream& out, std::span<const ForbiddenConfig> configs, const HostGraph& g);

}  // namespace ramsey
