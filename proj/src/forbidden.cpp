#include "ramsey/forbidden.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

MatchingStats matching_stats(std::span<const Member> members, const HostGraph& g) {
    MatchingStats st;
    st.m = static_cast<int>(members.size());
    std::vector<std::int32_t> edges, verts;
    std::vector<ColorId> cols;
    for (const auto& mb : members) {
        edges.push_back(mb.edge);
        cols.push_back(mb.color);
        auto e = g.edge(mb.edge);
        verts.insert(verts.end(), e.begin(), e.end());
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("matching: duplicate host edge");
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    st.v = static_cast<int>(verts.size());
    st.ell = static_cast<int>(cols.size());
    return st;
}

long long scaled_potential(std::span<const Member> members, const HostGraph& g, const RamseyParams& P) {
    return scaled_potential_value(matching_stats(members, g), P);
}

bool IndexSet::contains(int m, int v, int ell) const {
    return std::binary_search(triples.begin(), triples.end(), IndexTriple{m, v, ell});
}

IndexSet index_triples(const RamseyParams& P) {
    IndexSet I;
    for (int m = 2; m <= P.r; ++m)
        for (int v = P.k + 1; v <= P.p; ++v)
            for (int ell = 1; ell <= P.r; ++ell) {
                if (static_cast<long long>(P.p - P.k) * m >=
                    static_cast<long long>(P.p - P.k) * ell + static_cast<long long>(v - P.k) * P.s) {
                    if (m <= ell) throw std::logic_error("index_triples: m > ell must hold");
                    I.triples.push_back({m, v, ell});
                }
            }
    std::sort(I.triples.begin(), I.triples.end());
    return I;
}

namespace {

// scratch buffers for the subset scans, grown once per thread
struct Scratch {
    std::vector<std::uint32_t> vmask;
    std::vector<std::int32_t> edges;
    std::vector<std::uint16_t> masks;
    std::vector<ColorId> colors;
};

Scratch& scratch() {
    thread_local Scratch s;
    return s;
}

int distinct_small(const ColorId* cols, const int* idx, int cnt, ColorId extra, bool useExtra) {
    ColorId seen[24];
    int out = 0;
    if (useExtra) seen[out++] = extra;
    for (int i = 0; i < cnt; ++i) {
        ColorId c = cols[idx[i]];
        bool dup = false;
        for (int j = 0; j < out; ++j)
            if (seen[j] == c) { dup = true; break; }
        if (!dup) seen[out++] = c;
    }
    return out;
}

}  // namespace

ForbiddenCheck is_forbidden(std::span<const Member> members, const CopySet& copies,
                            const HostGraph& g, const RamseyParams& P) {
    ForbiddenCheck res;
    const int m = static_cast<int>(members.size());
    MatchingStats st = matching_stats(members, g);  // also rejects duplicate edges
    if (m < 2 || m > copies.r) return res;

    std::int64_t witness = -1;
    for (auto c : copies.copies_containing(members[0].edge)) {
        bool all = true;
        for (const auto& mb : members)
            if (!copies.copy_contains_edge(c, mb.edge)) { all = false; break; }
        if (all) { witness = c; break; }
    }
    if (witness < 0) return res;
    if (scaled_potential_value(st, P) < 0) return res;

    // minimality: every proper submatching of size >= 2 must have rho <= -1
    std::vector<Member> sub;
    for (std::uint32_t mask = 1; mask + 1 < (1u << m); ++mask) {
        if (std::popcount(mask) < 2) continue;
        sub.clear();
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) sub.push_back(members[i]);
        if (scaled_potential(sub, g, P) >= 0) return res;
    }
    res.forbidden = true;
    res.witnessCopy = witness;
    return res;
}

std::optional<std::int64_t> conflict_witness(const PartialColoring& current, Member candidate,
                                             const CopySet& copies, const HostGraph& g,
                                             const RamseyParams& P) {
    if (current.color[candidate.edge] >= 0)
        throw std::invalid_argument("conflicts_with: candidate edge already colored");
    const int pk = P.p - P.k;
    // smallest number of non-candidate members in a conflicting subset
    const int jmin = (P.s + pk - 1) / pk;
    auto& scr = scratch();

    for (auto c : copies.copies_containing(candidate.edge)) {
        auto edges = copies.edges_of(c);
        auto masks = copies.masks_of(c);
        scr.edges.clear();
        scr.masks.clear();
        scr.colors.clear();
        std::uint16_t candMask = 0;
        for (int j = 0; j < copies.r; ++j) {
            if (edges[j] == candidate.edge) {
                candMask = masks[j];
            } else if (current.color[edges[j]] >= 0) {
                scr.edges.push_back(edges[j]);
                scr.masks.push_back(masks[j]);
                scr.colors.push_back(current.color[edges[j]]);
            }
        }
        const int x = static_cast<int>(scr.edges.size());
        if (x < jmin) continue;
        const std::uint32_t full = (x >= 31) ? 0 : (1u << x);
        if (full == 0) throw SizeLimitError("conflicts_with: too many colored edges per copy");
        if (scr.vmask.size() < full) scr.vmask.resize(full);
        scr.vmask[0] = candMask;
        for (std::uint32_t sub = 1; sub < full; ++sub) {
            int low = std::countr_zero(sub);
            scr.vmask[sub] = scr.vmask[sub & (sub - 1)] | scr.masks[low];
            const int j = std::popcount(sub);
            if (j < jmin) continue;
            // distinct colors of the subset plus the candidate
            ColorId seen[24];
            int ell = 1;
            seen[0] = candidate.color;
            for (std::uint32_t rest = sub; rest; rest &= rest - 1) {
                ColorId col = scr.colors[std::countr_zero(rest)];
                bool dup = false;
                for (int t = 0; t < ell; ++t)
                    if (seen[t] == col) { dup = true; break; }
                if (!dup) seen[ell++] = col;
            }
            const int v = std::popcount(scr.vmask[sub]);
            if (static_cast<long long>(pk) * (j + 1 - ell) >= static_cast<long long>(v - P.k) * P.s)
                return c;
        }
    }
    return std::nullopt;
}

bool conflicts_with(const PartialColoring& current, Member candidate, const CopySet& copies,
                    const HostGraph& g, const RamseyParams& P) {
    return conflict_witness(current, candidate, copies, g, P).has_value();
}

namespace {

// minimal forbidden configurations inside one copy over a shared palette;
// emits canonical (sorted) member lists
template <typename Emit>
void copy_configs(const CopySet& copies, std::int64_t c, int paletteSize, const RamseyParams& P,
                  int sizeCap, Emit&& emit) {
    const int r = copies.r;
    auto edges = copies.edges_of(c);
    auto masks = copies.masks_of(c);
    const int cap = sizeCap > 0 ? std::min(sizeCap, r) : r;

    std::vector<int> pick;      // indices of the chosen edges
    std::vector<ColorId> col;   // their colors
    std::vector<Member> members;

    auto scan_assignments = [&](int m) {
        // vertex count is fixed by the edge subset
        std::uint16_t vm = 0;
        for (int i : pick) vm |= masks[i];
        const int v = std::popcount(static_cast<std::uint32_t>(vm));
        col.assign(m, 0);
        while (true) {
            ColorId seen[24];
            int ell = 0;
            for (int i = 0; i < m; ++i) {
                bool dup = false;
                for (int t = 0; t < ell; ++t)
                    if (seen[t] == col[i]) { dup = true; break; }
                if (!dup) seen[ell++] = col[i];
            }
            long long rho = static_cast<long long>(P.p - P.k) * (m - ell) -
                            static_cast<long long>(v - P.k) * P.s;
            if (rho >= 0) {
                // minimality: all proper submatchings of size >= 2 negative
                bool minimal = true;
                for (std::uint32_t sub = 1; minimal && sub + 1 < (1u << m); ++sub) {
                    const int j = std::popcount(sub);
                    if (j < 2) continue;
                    std::uint16_t svm = 0;
                    ColorId sseen[24];
                    int sell = 0;
                    for (std::uint32_t rest = sub; rest; rest &= rest - 1) {
                        int i = std::countr_zero(rest);
                        svm |= masks[pick[i]];
                        bool dup = false;
                        for (int t = 0; t < sell; ++t)
                            if (sseen[t] == col[i]) { dup = true; break; }
                        if (!dup) sseen[sell++] = col[i];
                    }
                    long long srho = static_cast<long long>(P.p - P.k) * (j - sell) -
                                     static_cast<long long>(std::popcount(static_cast<std::uint32_t>(svm)) - P.k) * P.s;
                    if (srho >= 0) minimal = false;
                }
                if (minimal) {
                    members.clear();
                    for (int i = 0; i < m; ++i) members.push_back({edges[pick[i]], col[i]});
                    std::sort(members.begin(), members.end());
                    emit(members, IndexTriple{m, v, ell});
                }
            }
            // odometer over palette^m
            int i = m - 1;
            while (i >= 0 && col[i] == paletteSize - 1) col[i--] = 0;
            if (i < 0) break;
            ++col[i];
        }
    };

    auto subsets = [&](auto&& self, int next, int want) -> void {
        if (want == 0) {
            scan_assignments(static_cast<int>(pick.size()));
            return;
        }
        for (int i = next; i + want <= r; ++i) {
            pick.push_back(i);
            self(self, i + 1, want - 1);
            pick.pop_back();
        }
    };
    for (int m = 2; m <= cap; ++m) subsets(subsets, 0, m);
}

}  // namespace

std::vector<ForbiddenConfig> enumerate_H(const HostGraph& g, int paletteSize, const CopySet& copies,
                                         const RamseyParams& P, EnumLimits limits) {
    if (paletteSize < 1) throw std::invalid_argument("enumerate_H: palette must be nonempty");
    if (copies.r > 20) throw SizeLimitError("enumerate_H: pattern too large");

    using Key = std::vector<Member>;
    std::map<Key, std::pair<std::int64_t, IndexTriple>> merged;
    std::atomic<bool> overflow{false};

#ifdef _OPENMP
    std::vector<std::map<Key, std::pair<std::int64_t, IndexTriple>>> perThread;
#pragma omp parallel
    {
#pragma omp single
        perThread.resize(omp_get_num_threads());
        auto& mine = perThread[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 8)
        for (std::int64_t c = 0; c < copies.count; ++c) {
            if (overflow.load(std::memory_order_relaxed)) continue;
            copy_configs(copies, c, paletteSize, P, limits.sizeCap,
                         [&](const std::vector<Member>& members, IndexTriple t) {
                             auto [it, fresh] = mine.try_emplace(members, c, t);
                             if (!fresh && c < it->second.first) it->second.first = c;
                             if (mine.size() > limits.maxConfigs) overflow = true;
                         });
        }
    }
    for (auto& part : perThread)
        for (auto& [k, v] : part) {
            auto [it, fresh] = merged.try_emplace(k, v);
            if (!fresh && v.first < it->second.first) it->second.first = v.first;
        }
#else
    for (std::int64_t c = 0; c < copies.count && !overflow; ++c) {
        copy_configs(copies, c, paletteSize, P, limits.sizeCap,
                     [&](const std::vector<Member>& members, IndexTriple t) {
                         merged.try_emplace(members, c, t);
                         if (merged.size() > limits.maxConfigs) overflow = true;
                     });
    }
#endif
    if (overflow || merged.size() > limits.maxConfigs)
        throw SizeLimitError("enumerate_H: configuration count exceeds ceiling");

    std::vector<ForbiddenConfig> out;
    out.reserve(merged.size());
    for (auto& [members, wc] : merged)
        out.push_back({members, wc.first, wc.second});
    return out;
}

std::vector<ForbiddenConfig> enumerate_H_serial(const HostGraph& g, int paletteSize,
                                                const CopySet& copies, const RamseyParams& P,
                                                EnumLimits limits) {
    // straightforward reference: test every (edge subset, color assignment)
    // of every copy against is_forbidden
    if (paletteSize < 1) throw std::invalid_argument("enumerate_H: palette must be nonempty");
    const int r = copies.r;
    const int cap = limits.sizeCap > 0 ? std::min(limits.sizeCap, r) : r;
    std::set<std::vector<Member>> seen;
    std::vector<ForbiddenConfig> out;

    for (std::int64_t c = 0; c < copies.count; ++c) {
        auto edges = copies.edges_of(c);
        for (std::uint32_t mask = 0; mask < (1u << r); ++mask) {
            const int m = std::popcount(mask);
            if (m < 2 || m > cap) continue;
            std::vector<std::int32_t> chosen;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) chosen.push_back(edges[i]);
            std::vector<ColorId> col(m, 0);
            while (true) {
                std::vector<Member> members;
                for (int i = 0; i < m; ++i) members.push_back({chosen[i], col[i]});
                std::sort(members.begin(), members.end());
                if (!seen.count(members)) {
                    auto chk = is_forbidden(members, copies, g, P);
                    if (chk.forbidden) {
                        seen.insert(members);
                        out.push_back({members, chk.witnessCopy,
                                       [&] {
                                           auto st = matching_stats(members, g);
                                           return IndexTriple{st.m, st.v, st.ell};
                                       }()});
                        if (out.size() > limits.maxConfigs)
                            throw SizeLimitError("enumerate_H: configuration count exceeds ceiling");
                    }
                }
                int i = m - 1;
                while (i >= 0 && col[i] == paletteSize - 1) col[i--] = 0;
                if (i < 0) break;
                ++col[i];
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const ForbiddenConfig& a, const ForbiddenConfig& b) { return a.members < b.members; });
    return out;
}

std::vector<std::int64_t> potential_violated_copies(const PartialColoring& phi, const CopySet& copies,
                                                    const RamseyParams& P) {
    if (!phi.total()) throw std::invalid_argument("potential scan: coloring must be total");
    std::vector<std::int64_t> out;
    for (std::int64_t c = 0; c < copies.count; ++c) {
        MatchingStats st;
        st.m = copies.r;
        st.v = copies.p;
        st.ell = count_distinct_colors(phi, copies.edges_of(c));
        if (scaled_potential_value(st, P) >= 0) out.push_back(c);
    }
    return out;
}

std::optional<ForbiddenConfig> find_spanned_config(const PartialColoring& phi, const CopySet& copies,
                                                   const HostGraph& g, const RamseyParams& P) {
    std::vector<Member> cur, sub;
    for (std::int64_t c = 0; c < copies.count; ++c) {
        auto edges = copies.edges_of(c);
        cur.clear();
        for (auto e : edges)
            if (phi.color[e] >= 0) cur.push_back({e, phi.color[e]});
        const int x = static_cast<int>(cur.size());
        if (x < 2) continue;
        for (std::uint32_t mask = 1; mask < (1u << x); ++mask) {
            if (std::popcount(mask) < 2) continue;
            sub.clear();
            for (int i = 0; i < x; ++i)
                if (mask & (1u << i)) sub.push_back(cur[i]);
            if (scaled_potential(sub, g, P) < 0) continue;
            // descend to an inclusion-minimal violating submatching
            bool shrunk = true;
            while (shrunk && sub.size() > 2) {
                shrunk = false;
                for (std::size_t i = 0; i < sub.size(); ++i) {
                    std::vector<Member> smaller(sub);
                    smaller.erase(smaller.begin() + i);
                    if (scaled_potential(smaller, g, P) >= 0) {
                        sub = std::move(smaller);
                        shrunk = true;
                        break;
                    }
                }
            }
            std::sort(sub.begin(), sub.end());
            auto chk = is_forbidden(sub, copies, g, P);
            auto st = matching_stats(sub, g);
            return ForbiddenConfig{sub, chk.witnessCopy, {st.m, st.v, st.ell}};
        }
    }
    return std::nullopt;
}

BudgetParameters budget(int n, const RamseyParams& P, double C) {
    if (n < 3) throw std::invalid_argument("budget: n must be at least 3");
    if (C <= 0) throw std::invalid_argument("budget: C must be positive");
    BudgetParameters B;
    B.C = C;
    B.beta = P.beta;
    const double x = (P.p - P.k) * std::log(double(n)) - std::log(std::log(double(n)));
    B.T = static_cast<int>(ceil_tol(C * std::exp(x / P.s)));
    B.D = Rat(B.T, 2);
    return B;
}

BipartiteInstance build_instance(const HostGraph& g, const ListAssignment& L) {
    L.validate(g);
    BipartiteInstance J;
    J.lists = &L;
    J.T = L.T;
    J.numA = g.m();
    J.minADegree = INT32_MAX;
    for (const auto& l : L.lists) {
        for (std::size_t i = 1; i < l.size(); ++i)
            if (l[i] == l[i - 1]) throw std::invalid_argument("build_instance: duplicate color in a list");
        J.numB += static_cast<long long>(l.size());
        J.minADegree = std::min(J.minADegree, static_cast<int>(l.size()));
        J.maxADegree = std::max(J.maxADegree, static_cast<int>(l.size()));
    }
    if (g.m() == 0) J.minADegree = 0;
    // each B vertex (e,c) lies in exactly the edge {e,(e,c)}; two J-edges
    // meet in at most the shared A vertex, so pair codegrees stay <= 1
    J.maxBDegree = J.numB > 0 ? 1 : 0;
    J.maxCodegree = J.numB > 0 ? 1 : 0;
    J.twoBounded = true;
    return J;
}

void write_config_dump(std::ostream& out, std::span<const ForbiddenConfig> configs, const HostGraph& g) {
    for (const auto& cfg : configs) {
        out << cfg.triple.m << ' ' << cfg.triple.v << ' ' << cfg.triple.ell << " |";
        for (const auto& mb : cfg.members) {
            out << ' ';
            auto e = g.edge(mb.edge);
            for (std::size_t i = 0; i < e.size(); ++i) out << (i ? "-" : "") << e[i];
            out << ':' << mb.color;
        }
        out << " | " << cfg.witnessCopy << '\n';
    }
}

}  // namespace ramsey
