#include "ramsey/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ramsey/lll.hpp"

namespace ramsey {

namespace {

StuckReport diagnose(const PartialColoring& phi, int edge, const ListAssignment& L,
                     const CopySet& copies, const HostGraph& g, const RamseyParams& P) {
    StuckReport rep;
    rep.edge = edge;
    rep.list = L.list(edge);
    for (ColorId c : rep.list) {
        auto w = conflict_witness(phi, {edge, c}, copies, g, P);
        if (w) rep.conflicts.emplace_back(c, *w);
    }
    return rep;
}

void check_avoiding(const PartialColoring& phi, const CopySet& copies, const HostGraph& g,
                    const RamseyParams& P) {
    if (auto cfg = find_spanned_config(phi, copies, g, P))
        throw std::logic_error("greedy invariant broken: partial coloring spans a forbidden configuration");
}

}  // namespace

GreedyResult greedy_color(const HostGraph& g, const ListAssignment& L, const CopySet& copies,
                          const RamseyParams& P, GreedyConfig cfg) {
    L.validate(g);
    if (cfg.maxRestarts < 0 || cfg.maxRetriesPerEdge < 0)
        throw std::invalid_argument("greedy: limits must be nonnegative");
    const int m = g.m();

    GreedyResult res;
    std::mt19937_64 rng(cfg.seed);
    std::vector<int> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<ColorId> tryOrder;

    for (int restart = 0; restart <= cfg.maxRestarts; ++restart) {
        res.restartsUsed = restart;
        PartialColoring phi(m);
        int stuckEdge = -1;

        if (cfg.order == GreedyOrder::Permutation) {
            std::shuffle(perm.begin(), perm.end(), rng);
            for (int e : perm) {
                tryOrder = L.list(e);
                std::shuffle(tryOrder.begin(), tryOrder.end(), rng);
                const int tries = cfg.maxRetriesPerEdge > 0
                                      ? std::min<int>(cfg.maxRetriesPerEdge, tryOrder.size())
                                      : static_cast<int>(tryOrder.size());
                bool placed = false;
                for (int i = 0; i < tries && !placed; ++i) {
                    ++res.attempts;
                    if (!conflicts_with(phi, {e, tryOrder[i]}, copies, g, P)) {
                        phi.assign(e, tryOrder[i]);
                        placed = true;
                        if (cfg.checkInvariants) check_avoiding(phi, copies, g, P);
                    }
                }
                if (!placed) { stuckEdge = e; break; }
            }
        } else {
            // random pair stream: keep drawing (uncolored edge, list color)
            std::vector<int> pool(m);
            std::iota(pool.begin(), pool.end(), 0);
            const long long perEdge = cfg.maxRetriesPerEdge > 0 ? cfg.maxRetriesPerEdge : L.T;
            long long budget = perEdge * static_cast<long long>(m);
            int lastRejected = -1;
            while (!pool.empty() && budget > 0) {
                std::uniform_int_distribution<std::size_t> de(0, pool.size() - 1);
                const std::size_t slot = de(rng);
                const int e = pool[slot];
                const auto& list = L.list(e);
                std::uniform_int_distribution<std::size_t> dc(0, list.size() - 1);
                const ColorId c = list[dc(rng)];
                ++res.attempts;
                --budget;
                if (conflicts_with(phi, {e, c}, copies, g, P)) {
                    lastRejected = e;
                    continue;
                }
                phi.assign(e, c);
                pool[slot] = pool.back();
                pool.pop_back();
                if (cfg.checkInvariants) check_avoiding(phi, copies, g, P);
            }
            if (!pool.empty()) {
                stuckEdge = lastRejected >= 0 ? lastRejected : pool.front();
                // prefer an uncolored edge whose whole list conflicts
                for (int e : pool) {
                    bool allBad = true;
                    for (ColorId c : L.list(e))
                        if (!conflicts_with(phi, {e, c}, copies, g, P)) { allBad = false; break; }
                    if (allBad) { stuckEdge = e; break; }
                }
            }
        }

        if (stuckEdge < 0) {
            res.success = true;
            res.coloring = std::move(phi);
            res.stuck.reset();
            return res;
        }
        res.stuck = diagnose(phi, stuckEdge, L, copies, g, P);
        res.coloring = std::move(phi);
    }

    if (cfg.hybridRepair) {
        MtOptions mo;
        MtResult mt = moser_tardos_color(g, P.q, L, copies, cfg.seed ^ 0x9e3779b97f4a7c15ULL, mo,
                                         &res.coloring);
        if (mt.success) {
            res.success = true;
            res.repaired = true;
            res.coloring = std::move(mt.coloring);
            res.stuck.reset();
        }
    }
    return res;
}

}  // namespace ramsey
