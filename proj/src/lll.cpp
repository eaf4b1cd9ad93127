#include "ramsey/lll.hpp"

#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace ramsey {

LllParameters lll_parameters(int n, const RamseyParams& P, int t) {
    if (t < P.q - 1 || P.q < 2)
        throw std::invalid_argument("lll_parameters: need t >= q-1 >= 1");
    LllParameters out;
    out.t = t;
    const double logP =
        log_binomial(static_cast<long long>(P.r) * t, P.q - 1) +
        P.r * (std::log(double(P.q - 1)) - std::log(double(t)));
    out.pBad = std::exp(logP);
    out.d = double(P.r) * std::exp(log_binomial(n, P.p - P.k));
    // evaluated in log space so large d cannot overflow the test
    out.ok = 1.0 + logP + std::log(out.d + 1.0) <= 0.0;
    return out;
}

long long lll_budget(int n, const RamseyParams& P, double C) {
    if (C <= 0) throw std::invalid_argument("lll_budget: C must be positive");
    const double expo = double(P.p - P.k) / double(P.s);
    return ceil_tol(C * std::pow(double(n), expo));
}

MtResult moser_tardos_color(const HostGraph& g, int q, const ListAssignment& L, const CopySet& copies,
                            std::uint64_t seed, MtOptions opts, const PartialColoring* initial) {
    L.validate(g);
    const int m = g.m();
    const long long cap = opts.maxResamples >= 0 ? opts.maxResamples : 1000LL * m;

    MtResult res;
    res.coloring = PartialColoring(m);
    std::mt19937_64 rng(seed);

    auto draw = [&](int e) {
        const auto& list = L.list(e);
        std::uniform_int_distribution<std::size_t> d(0, list.size() - 1);
        return list[d(rng)];
    };

    for (int e = 0; e < m; ++e) {
        if (initial && initial->color[e] >= 0)
            res.coloring.assign(e, initial->color[e]);
        else
            res.coloring.assign(e, draw(e));
    }

    auto violated_now = [&](std::int64_t c) {
        return count_distinct_colors(res.coloring, copies.edges_of(c)) <= q - 1;
    };

    std::set<std::int64_t> violated;
    std::vector<char> flag(copies.count, 0);
    for (std::int64_t c = 0; c < copies.count; ++c)
        if (violated_now(c)) {
            violated.insert(c);
            flag[c] = 1;
        }

    // epoch stamps to visit each affected copy once per resample
    std::vector<std::int64_t> stamp(copies.count, -1);
    long long best = static_cast<long long>(violated.size());
    long long sinceImprove = 0;

    while (!violated.empty()) {
        if (res.resamples >= cap ||
            (opts.stagnationWindow > 0 && sinceImprove >= opts.stagnationWindow)) {
            res.violatedRemaining = static_cast<long long>(violated.size());
            res.firstViolated = *violated.begin();
            return res;
        }
        const std::int64_t c = *violated.begin();
        auto edges = copies.edges_of(c);
        for (auto e : edges) res.coloring.color[e] = draw(e);
        ++res.resamples;

        for (auto e : edges) {
            for (auto c2 : copies.copies_containing(e)) {
                if (stamp[c2] == res.resamples) continue;
                stamp[c2] = res.resamples;
                const bool bad = violated_now(c2);
                if (bad && !flag[c2]) {
                    violated.insert(c2);
                    flag[c2] = 1;
                } else if (!bad && flag[c2]) {
                    violated.erase(c2);
                    flag[c2] = 0;
                }
            }
        }
        const long long count = static_cast<long long>(violated.size());
        if (count < best) {
            best = count;
            sinceImprove = 0;
        } else {
            ++sinceImprove;
        }
    }
    res.success = true;
    return res;
}

}  // namespace ramsey
