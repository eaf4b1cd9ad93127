#include "ramsey/coloring.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

void ListAssignment::validate(const HostGraph& g) const {
    if (static_cast<int>(lists.size()) != g.m())
        throw std::invalid_argument("lists: one list per host edge required");
    for (const auto& l : lists)
        if (static_cast<int>(l.size()) != T)
            throw std::invalid_argument("lists: every list must have size T");
}

ListAssignment make_lists(const HostGraph& g, int T, ListMode mode, int poolSize, std::uint64_t seed) {
    if (T < 1) throw std::invalid_argument("make_lists: T must be >= 1");
    ListAssignment L;
    L.T = T;
    L.lists.resize(g.m());
    switch (mode) {
        case ListMode::SharedPalette: {
            std::vector<ColorId> shared(T);
            std::iota(shared.begin(), shared.end(), 0);
            for (auto& l : L.lists) l = shared;
            break;
        }
        case ListMode::Disjoint: {
            for (int e = 0; e < g.m(); ++e) {
                L.lists[e].resize(T);
                std::iota(L.lists[e].begin(), L.lists[e].end(), e * T);
            }
            break;
        }
        case ListMode::RandomFromPool: {
            if (poolSize < T) throw std::invalid_argument("make_lists: pool smaller than T");
            std::mt19937_64 rng(seed);
            std::vector<ColorId> pool(poolSize);
            std::iota(pool.begin(), pool.end(), 0);
            for (int e = 0; e < g.m(); ++e) {
                // partial Fisher-Yates: first T entries become the list
                for (int i = 0; i < T; ++i) {
                    std::uniform_int_distribution<int> d(i, poolSize - 1);
                    std::swap(pool[i], pool[d(rng)]);
                }
                L.lists[e].assign(pool.begin(), pool.begin() + T);
                std::sort(L.lists[e].begin(), L.lists[e].end());
            }
            break;
        }
    }
    return L;
}

int count_distinct_colors(const PartialColoring& phi, std::span<const std::int32_t> edges) {
    ColorId seen[32];
    int cnt = 0;
    for (auto e : edges) {
        ColorId c = phi.color[e];
        if (c < 0) continue;
        bool dup = false;
        for (int i = 0; i < cnt; ++i)
            if (seen[i] == c) { dup = true; break; }
        if (!dup) {
            if (cnt < 32) seen[cnt] = c;
            ++cnt;
        }
    }
    return cnt;
}

namespace {

ViolationReport verify_impl(int q, const PartialColoring& phi, const CopySet& copies, bool parallel) {
    if (!phi.total()) throw std::invalid_argument("verify_coloring: coloring must be total");
    ViolationReport rep;
    if (!parallel) {
        for (std::int64_t c = 0; c < copies.count; ++c) {
            int d = count_distinct_colors(phi, copies.edges_of(c));
            if (d <= q - 1) rep.violations.push_back({c, d});
        }
    } else {
#ifdef _OPENMP
        std::vector<std::vector<Violation>> perThread;
#pragma omp parallel
        {
#pragma omp single
            perThread.resize(omp_get_num_threads());
            auto& mine = perThread[omp_get_thread_num()];
#pragma omp for schedule(static)
            for (std::int64_t c = 0; c < copies.count; ++c) {
                int d = count_distinct_colors(phi, copies.edges_of(c));
                if (d <= q - 1) mine.push_back({c, d});
            }
        }
        for (auto& v : perThread)
            rep.violations.insert(rep.violations.end(), v.begin(), v.end());
        std::sort(rep.violations.begin(), rep.violations.end(),
                  [](const Violation& a, const Violation& b) { return a.copyId < b.copyId; });
#else
        return verify_impl(q, phi, copies, false);
#endif
    }
    rep.valid = rep.violations.empty();
    return rep;
}

}  // namespace

ViolationReport verify_coloring(int q, const PartialColoring& phi, const CopySet& copies) {
    return verify_impl(q, phi, copies, true);
}

ViolationReport verify_coloring_serial(int q, const PartialColoring& phi, const CopySet& copies) {
    return verify_impl(q, phi, copies, false);
}

std::vector<ColorId> colors_on_copy(const PartialColoring& phi, const CopySet& copies, std::int64_t copyId) {
    std::vector<ColorId> out;
    for (auto e : copies.edges_of(copyId)) {
        if (phi.color[e] < 0) throw std::invalid_argument("colors_on_copy: copy has an uncolored edge");
        out.push_back(phi.color[e]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int colors_used(const PartialColoring& phi) {
    if (!phi.total()) throw std::invalid_argument("colors_used: coloring must be total");
    std::vector<ColorId> c(phi.color);
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return static_cast<int>(c.size());
}

void write_witness(std::ostream& out, const HostGraph& g, const PartialColoring& phi) {
    for (int e = 0; e < g.m(); ++e) {
        if (phi.color[e] < 0) continue;
        for (auto v : g.edge(e)) out << v << ' ';
        out << phi.color[e] << '\n';
    }
}

PartialColoring read_witness(std::istream& in, const HostGraph& g) {
    PartialColoring phi(g.m());
    std::string line;
    std::vector<std::int32_t> tuple(g.k);
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<long long> vals;
        long long x;
        while (ls >> x) vals.push_back(x);
        if (vals.empty()) continue;
        if (static_cast<int>(vals.size()) != g.k + 1)
            throw std::invalid_argument("witness: expected k vertices and a color: " + line);
        for (int i = 0; i < g.k; ++i) tuple[i] = static_cast<std::int32_t>(vals[i]);
        std::sort(tuple.begin(), tuple.end());
        int id = g.edge_id({tuple.data(), tuple.size()});
        if (id < 0) throw std::invalid_argument("witness: unknown edge: " + line);
        phi.assign(id, static_cast<ColorId>(vals[g.k]));
    }
    return phi;
}

}  // namespace ramsey
