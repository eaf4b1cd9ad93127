#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ramsey {

namespace {

// colex successor of a sorted k-subset of 0..n-1; returns false when done
bool next_combination(std::vector<std::int32_t>& v, int n) {
    const int k = static_cast<int>(v.size());
    for (int i = 0; i < k; ++i) {
        std::int32_t limit = (i + 1 < k) ? v[i + 1] : n;
        if (v[i] + 1 < limit) {
            ++v[i];
            for (int j = 0; j < i; ++j) v[j] = j;
            return true;
        }
    }
    return false;
}

// colex rank of sorted subset: sum C(v[i], i+1)
std::int64_t colex_rank(std::span<const std::int32_t> v) {
    std::int64_t rank = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
        rank += static_cast<std::int64_t>(binomial(v[i], static_cast<long long>(i) + 1));
    return rank;
}

void colex_unrank(std::int64_t rank, int k, std::vector<std::int32_t>& out) {
    out.resize(k);
    for (int i = k; i >= 1; --i) {
        // largest v with C(v, i) <= rank
        std::int32_t v = i - 1;
        while (static_cast<std::int64_t>(binomial(v + 1, i)) <= rank) ++v;
        out[i - 1] = v;
        rank -= static_cast<std::int64_t>(binomial(v, i));
    }
}

void check_edge_tuple(std::span<const std::int32_t> e, int n, int k, const char* what) {
    if (static_cast<int>(e.size()) != k) throw std::invalid_argument(std::string(what) + ": edge arity mismatch");
    for (int i = 0; i < k; ++i) {
        if (e[i] < 0 || e[i] >= n) throw std::invalid_argument(std::string(what) + ": vertex out of range");
        if (i > 0 && e[i] <= e[i - 1]) throw std::invalid_argument(std::string(what) + ": edge vertices not distinct");
    }
}

}  // namespace

int HostGraph::edge_id(std::span<const std::int32_t> verts) const {
    if (static_cast<int>(verts.size()) != k) return -1;
    for (int i = 0; i < k; ++i) {
        if (verts[i] < 0 || verts[i] >= n) return -1;
        if (i > 0 && verts[i] <= verts[i - 1]) return -1;
    }
    if (complete) return static_cast<int>(colex_rank(verts));
    auto it = lookup.find(std::vector<std::int32_t>(verts.begin(), verts.end()));
    return it == lookup.end() ? -1 : it->second;
}

void HostGraph::validate() const {
    if (k < 2) throw std::invalid_argument("host: k must be >= 2");
    if (n < k) throw std::invalid_argument("host: n must be >= k");
    std::set<std::vector<std::int32_t>> seen;
    for (int e = 0; e < m(); ++e) {
        auto ed = edge(e);
        check_edge_tuple(ed, n, k, "host");
        if (!seen.insert(std::vector<std::int32_t>(ed.begin(), ed.end())).second)
            throw std::invalid_argument("host: duplicate edge");
    }
}

HostGraph complete_host(int n, int k) {
    if (k < 2) throw std::invalid_argument("complete_host: k must be >= 2");
    if (n < k) throw std::invalid_argument("complete_host: n must be >= k");
    HostGraph g;
    g.n = n;
    g.k = k;
    g.complete = true;
    const std::uint64_t m = binomial(n, k);
    g.edgeVerts.reserve(m * k);
    std::vector<std::int32_t> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    do {
        g.edgeVerts.insert(g.edgeVerts.end(), cur.begin(), cur.end());
    } while (next_combination(cur, n));
    return g;
}

HostGraph host_from_edges(int n, int k, std::vector<std::vector<std::int32_t>> edges) {
    HostGraph g;
    g.n = n;
    g.k = k;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    g.edgeVerts.reserve(edges.size() * k);
    for (const auto& e : edges) g.edgeVerts.insert(g.edgeVerts.end(), e.begin(), e.end());
    g.validate();
    if (static_cast<std::uint64_t>(g.m()) == binomial(n, k)) {
        // all k-subsets present: regenerate in colex order so ranked lookup applies
        return complete_host(n, k);
    }
    for (int e = 0; e < g.m(); ++e) {
        auto ed = g.edge(e);
        g.lookup.emplace(std::vector<std::int32_t>(ed.begin(), ed.end()), e);
    }
    return g;
}

void PatternGraph::validate() const {
    if (k < 2) throw std::invalid_argument("pattern: k must be >= 2");
    if (p <= k) throw std::invalid_argument("pattern: needs more vertices than the uniformity");
    if (r() < 1) throw std::invalid_argument("pattern: needs at least one edge");
    std::set<std::vector<std::int32_t>> seen;
    std::vector<char> covered(p, 0);
    for (int e = 0; e < r(); ++e) {
        auto ed = edge(e);
        check_edge_tuple(ed, p, k, "pattern");
        if (!seen.insert(std::vector<std::int32_t>(ed.begin(), ed.end())).second)
            throw std::invalid_argument("pattern: duplicate edge");
        for (auto v : ed) covered[v] = 1;
    }
    for (int v = 0; v < p; ++v)
        if (!covered[v]) throw std::invalid_argument("pattern: isolated vertex not supported");
}

PatternGraph complete_pattern(int p, int k) {
    PatternGraph f;
    f.p = p;
    f.k = k;
    if (p <= k) throw std::invalid_argument("complete_pattern: p must exceed k");
    std::vector<std::int32_t> cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    do {
        f.edgeVerts.insert(f.edgeVerts.end(), cur.begin(), cur.end());
    } while (next_combination(cur, p));
    f.validate();
    return f;
}

PatternGraph pattern_from_edges(int p, int k, std::vector<std::vector<std::int32_t>> edges) {
    PatternGraph f;
    f.p = p;
    f.k = k;
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    for (const auto& e : edges) f.edgeVerts.insert(f.edgeVerts.end(), e.begin(), e.end());
    f.validate();
    return f;
}

namespace {

std::vector<std::vector<std::int32_t>> read_edge_list(std::istream& in, int& n, int& k) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("edge list: missing header line");
    std::istringstream head(line);
    if (!(head >> n >> k)) throw std::invalid_argument("edge list: header must be \"n k\"");
    std::vector<std::vector<std::int32_t>> edges;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<std::int32_t> e;
        std::int32_t v;
        while (ls >> v) e.push_back(v);
        if (e.empty()) continue;
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge list: edge with wrong arity: " + line);
        edges.push_back(std::move(e));
    }
    return edges;
}

}  // namespace

HostGraph read_host(std::istream& in) {
    int n, k;
    auto edges = read_edge_list(in, n, k);
    return host_from_edges(n, k, std::move(edges));
}

PatternGraph read_pattern(std::istream& in) {
    int p, k;
    auto edges = read_edge_list(in, p, k);
    return pattern_from_edges(p, k, std::move(edges));
}

void write_host(std::ostream& out, const HostGraph& g) {
    out << g.n << ' ' << g.k << '\n';
    for (int e = 0; e < g.m(); ++e) {
        auto ed = g.edge(e);
        for (int i = 0; i < g.k; ++i) out << (i ? " " : "") << ed[i];
        out << '\n';
    }
}

RamseyParams make_params(const PatternGraph& f, int q) {
    return make_params(f.k, f.p, f.r(), q);
}

RamseyParams make_params(int k, int p, int r, int q) {
    if (q < 1 || q > r) throw std::invalid_argument("params: q must satisfy 1 <= q <= r");
    if (p <= k) throw std::invalid_argument("params: p must exceed k");
    RamseyParams P;
    P.k = k;
    P.p = p;
    P.r = r;
    P.q = q;
    P.s = r - q + 1;
    P.beta = Rat(1, 2LL * (p - k));
    P.nonIntegral = ((p - k) % P.s) != 0;
    return P;
}

std::span<const std::int32_t> CopySet::copies_containing(int edgeId) const {
    if (edgeId < 0 || edgeId + 1 >= static_cast<int>(idxOff.size()))
        throw std::invalid_argument("copies_containing: unknown edge id");
    return {idxCopy.data() + idxOff[edgeId], static_cast<std::size_t>(idxOff[edgeId + 1] - idxOff[edgeId])};
}

bool CopySet::copy_contains_edge(std::int64_t c, std::int32_t edgeId) const {
    auto es = edges_of(c);
    return std::binary_search(es.begin(), es.end(), edgeId);
}

namespace {

std::uint16_t local_mask(std::span<const std::int32_t> edge, std::span<const std::int32_t> verts) {
    std::uint16_t mask = 0;
    for (auto v : edge) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        mask |= static_cast<std::uint16_t>(1u << (it - verts.begin()));
    }
    return mask;
}

void build_index(const HostGraph& g, CopySet& cs) {
    cs.idxOff.assign(g.m() + 1, 0);
    for (std::int64_t c = 0; c < cs.count; ++c)
        for (auto e : cs.edges_of(c)) ++cs.idxOff[e + 1];
    for (int e = 0; e < g.m(); ++e) cs.idxOff[e + 1] += cs.idxOff[e];
    cs.idxCopy.resize(cs.edgeIds.size());
    std::vector<std::int64_t> cursor(cs.idxOff.begin(), cs.idxOff.end() - 1);
    for (std::int64_t c = 0; c < cs.count; ++c)
        for (auto e : cs.edges_of(c)) cs.idxCopy[cursor[e]++] = static_cast<std::int32_t>(c);
}

void fill_copy(CopySet& cs, std::int64_t c, const std::vector<std::int32_t>& edges,
               const std::vector<std::int32_t>& image, const HostGraph& g) {
    std::vector<std::int32_t> verts(image);
    std::sort(verts.begin(), verts.end());
    std::copy(edges.begin(), edges.end(), cs.edgeIds.begin() + c * cs.r);
    std::copy(verts.begin(), verts.end(), cs.copyVerts.begin() + c * cs.p);
    std::copy(image.begin(), image.end(), cs.vertexImage.begin() + c * cs.p);
    for (int j = 0; j < cs.r; ++j)
        cs.edgeMasks[c * cs.r + j] = local_mask(g.edge(edges[j]), {verts.data(), verts.size()});
}

using DedupMap = std::map<std::vector<std::int32_t>, std::vector<std::int32_t>>;  // edge set -> image

CopySet from_dedup(const HostGraph& g, const PatternGraph& f, const DedupMap& found) {
    CopySet cs;
    cs.p = f.p;
    cs.r = f.r();
    cs.k = g.k;
    cs.count = static_cast<std::int64_t>(found.size());
    cs.edgeIds.resize(cs.count * cs.r);
    cs.edgeMasks.resize(cs.count * cs.r);
    cs.copyVerts.resize(cs.count * cs.p);
    cs.vertexImage.resize(cs.count * cs.p);
    std::int64_t c = 0;
    for (const auto& [edges, image] : found) fill_copy(cs, c++, edges, image, g);
    build_index(g, cs);
    return cs;
}

// all injective images of F's vertices, visited in a given vertex order
template <typename Leaf>
void embed(const HostGraph& g, const PatternGraph& f, const std::vector<int>& order,
           const std::vector<std::vector<int>>& coveredAt, bool pruneEarly, Leaf&& leaf) {
    const int p = f.p;
    std::vector<std::int32_t> image(p, -1);
    std::vector<char> used(g.n, 0);
    std::vector<std::int32_t> tuple(g.k);

    auto edge_ok = [&](int fe) {
        auto ed = f.edge(fe);
        for (int i = 0; i < g.k; ++i) tuple[i] = image[ed[i]];
        std::sort(tuple.begin(), tuple.end());
        return g.edge_id({tuple.data(), tuple.size()}) >= 0;
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == p) {
            leaf(image);
            return;
        }
        const int fv = order[depth];
        for (int hv = 0; hv < g.n; ++hv) {
            if (used[hv]) continue;
            image[fv] = hv;
            used[hv] = 1;
            bool ok = true;
            if (pruneEarly) {
                for (int fe : coveredAt[depth])
                    if (!edge_ok(fe)) { ok = false; break; }
            } else if (depth == p - 1) {
                for (int fe = 0; fe < f.r(); ++fe)
                    if (!edge_ok(fe)) { ok = false; break; }
            }
            if (ok) self(self, depth + 1);
            used[hv] = 0;
            image[fv] = -1;
        }
    };
    rec(rec, 0);
}

std::vector<std::int32_t> induced_edges(const HostGraph& g, const PatternGraph& f,
                                        const std::vector<std::int32_t>& image) {
    std::vector<std::int32_t> ids(f.r());
    std::vector<std::int32_t> tuple(g.k);
    for (int fe = 0; fe < f.r(); ++fe) {
        auto ed = f.edge(fe);
        for (int i = 0; i < g.k; ++i) tuple[i] = image[ed[i]];
        std::sort(tuple.begin(), tuple.end());
        ids[fe] = g.edge_id({tuple.data(), tuple.size()});
    }
    std::sort(ids.begin(), ids.end());
    return ids;
}

}  // namespace

CopySet enumerate_copies(const HostGraph& g, const PatternGraph& f) {
    if (g.k != f.k) throw std::invalid_argument("enumerate_copies: uniformity mismatch");
    f.validate();
    if (f.p > 16) throw SizeLimitError("enumerate_copies: patterns with more than 16 vertices unsupported");

    if (g.complete && f.is_complete()) {
        // one copy per p-subset of the host vertices
        CopySet cs;
        cs.p = f.p;
        cs.r = f.r();
        cs.k = g.k;
        cs.count = static_cast<std::int64_t>(binomial(g.n, f.p));
        cs.edgeIds.resize(cs.count * cs.r);
        cs.edgeMasks.resize(cs.count * cs.r);
        cs.copyVerts.resize(cs.count * cs.p);
        cs.vertexImage.resize(cs.count * cs.p);
#pragma omp parallel
        {
            std::vector<std::int32_t> verts, tuple(g.k);
            std::vector<std::int32_t> local(g.k);
#pragma omp for schedule(static)
            for (std::int64_t c = 0; c < cs.count; ++c) {
                colex_unrank(c, f.p, verts);
                std::copy(verts.begin(), verts.end(), cs.copyVerts.begin() + c * cs.p);
                std::copy(verts.begin(), verts.end(), cs.vertexImage.begin() + c * cs.p);
                for (int i = 0; i < g.k; ++i) local[i] = i;
                int j = 0;
                do {
                    for (int i = 0; i < g.k; ++i) tuple[i] = verts[local[i]];
                    cs.edgeIds[c * cs.r + j] = static_cast<std::int32_t>(colex_rank({tuple.data(), tuple.size()}));
                    std::uint16_t mask = 0;
                    for (int i = 0; i < g.k; ++i) mask |= static_cast<std::uint16_t>(1u << local[i]);
                    cs.edgeMasks[c * cs.r + j] = mask;
                    ++j;
                } while (next_combination(local, f.p));
            }
        }
        build_index(g, cs);
        return cs;
    }

    // degree-descending static vertex order
    std::vector<int> degree(f.p, 0);
    for (int e = 0; e < f.r(); ++e)
        for (auto v : f.edge(e)) ++degree[v];
    std::vector<int> order(f.p);
    for (int i = 0; i < f.p; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree[a] > degree[b]; });

    // F-edges fully covered once order[0..d] are assigned
    std::vector<int> pos(f.p);
    for (int d = 0; d < f.p; ++d) pos[order[d]] = d;
    std::vector<std::vector<int>> coveredAt(f.p);
    for (int e = 0; e < f.r(); ++e) {
        int last = 0;
        for (auto v : f.edge(e)) last = std::max(last, pos[v]);
        coveredAt[last].push_back(e);
    }

    DedupMap found;
    embed(g, f, order, coveredAt, /*pruneEarly=*/true, [&](const std::vector<std::int32_t>& image) {
        auto ids = induced_edges(g, f, image);
        found.emplace(std::move(ids), image);
    });
    return from_dedup(g, f, found);
}

CopySet enumerate_copies_reference(const HostGraph& g, const PatternGraph& f) {
    if (g.k != f.k) throw std::invalid_argument("enumerate_copies: uniformity mismatch");
    f.validate();
    if (f.p > 16) throw SizeLimitError("enumerate_copies: patterns with more than 16 vertices unsupported");
    std::vector<int> order(f.p);
    for (int i = 0; i < f.p; ++i) order[i] = i;
    std::vector<std::vector<int>> coveredAt(f.p);
    DedupMap found;
    embed(g, f, order, coveredAt, /*pruneEarly=*/false, [&](const std::vector<std::int32_t>& image) {
        auto ids = induced_edges(g, f, image);
        found.emplace(std::move(ids), image);
    });
    return from_dedup(g, f, found);
}

}  // namespace ramsey
