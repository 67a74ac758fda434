#include "derange/derangement_graph.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <thread>

namespace derange {

DerangementGraph::DerangementGraph(PermutationGroup group, int threads, long long max_order)
    : group_(std::move(group)) {
    const int n = group_.size();
    if (n > max_order) throw std::length_error("DerangementGraph: group order exceeds limit");
    const int degree = group_.degree();

    for (int i = 0; i < n; ++i)
        if (group_.fixed_points(i) == 0) derangements_.push_back(i);
    valency_ = static_cast<long long>(derangements_.size());

    adj_.assign(n, Bitset(n));
    auto build_rows = [&](int lo, int hi) {
        for (int g = lo; g < hi; ++g) {
            const Perm& pg = group_.perm(g);
            for (int h = 0; h < n; ++h) {
                if (h == g) continue;
                const Perm& ph = group_.perm(h);
                bool disagree_everywhere = true;
                for (int x = 0; x < degree; ++x) {
                    if (pg[x] == ph[x]) {
                        disagree_everywhere = false;
                        break;
                    }
                }
                if (disagree_everywhere) adj_[g].set(h);
            }
        }
    };
    if (threads <= 1 || n < 256) {
        build_rows(0, n);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo < hi) pool.emplace_back(build_rows, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    // regularity sanity: every row must match the derangement count
    for (int g = 0; g < n; ++g)
        if (adj_[g].count() != valency_) throw std::logic_error("DerangementGraph: graph is not regular");
}

std::vector<std::vector<int>> DerangementGraph::components() const {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n(), 0);
    for (int s = 0; s < n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp, queue{s};
        seen[s] = 1;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            comp.push_back(v);
            adj_[v].for_each([&](int u) {
                if (!seen[u]) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

void DerangementGraph::write_edge_list(std::ostream& os) const {
    for (int u = 0; u < n(); ++u)
        adj_[u].for_each([&](int v) {
            if (u < v) os << u << ' ' << v << '\n';
        });
}

namespace {

// Search state over the non-neighbourhood of the identity vertex.
// Candidate vertices are renumbered 0..m-1 in ascending id order.
struct RootedSearch {
    const std::vector<int>& candidate_ids;
    std::vector<Bitset> adjc;  // adjacency within candidates
    int want;                  // vertices still to pick beyond the identity
    int recolor_interval;
    std::vector<int> chosen;
    std::vector<std::vector<int>> found;  // candidate-index sets of size want
    long long nodes = 0;

    // greedy clique cover of P: an independent set meets each clique at most
    // once, so the number of cliques bounds the independent sets inside P
    int cover_bound(const Bitset& p) const {
        std::vector<Bitset> cliques;
        int m = p.capacity();
        for (int v = p.find_first(); v >= 0; v = p.find_next(v)) {
            bool placed = false;
            for (auto& k : cliques) {
                if (k.subset_of(adjc[v])) {
                    k.set(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                cliques.emplace_back(m);
                cliques.back().set(v);
            }
        }
        return static_cast<int>(cliques.size());
    }

    void run(const Bitset& p, int depth, int inherited_bound) {
        ++nodes;
        const int have = static_cast<int>(chosen.size());
        if (have == want) {
            int extra = p.find_first();
            if (extra >= 0) {
                // a strictly larger independent set exists
                auto witness = chosen;
                witness.push_back(extra);
                throw TargetExceeded(std::move(witness));
            }
            found.push_back(chosen);
            return;
        }
        int pcount = p.count();
        if (have + pcount < want) return;
        int bound = std::min(inherited_bound, pcount);
        if (depth % recolor_interval == 0) bound = std::min(bound, cover_bound(p));
        if (have + bound < want) return;

        int remaining = pcount;
        for (int v = p.find_first(); v >= 0; v = p.find_next(v), --remaining) {
            if (have + remaining < want) return;  // tail too short
            Bitset next = p;
            next.subtract(adjc[v]);
            // enumerate each set once: only candidates after v stay
            for (int w = next.find_first(); w >= 0 && w <= v; w = next.find_next(w)) next.reset(w);
            chosen.push_back(v);
            run(next, depth + 1, bound - 1 < 0 ? 0 : bound - 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

IndependentSetFamily enumerate_max_independent_sets(const DerangementGraph& graph, int target,
                                                    const SearchOptions& options) {
    const auto& group = graph.group();
    const int n = graph.n();
    const int root = group.identity();

    std::vector<int> candidate_ids;
    for (int v = 0; v < n; ++v)
        if (v != root && !graph.adjacent(root, v)) candidate_ids.push_back(v);
    const int m = static_cast<int>(candidate_ids.size());

    RootedSearch search{candidate_ids, {}, target - 1, options.recolor_interval, {}, {}, 0};
    search.adjc.assign(m, Bitset(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (graph.adjacent(candidate_ids[i], candidate_ids[j])) search.adjc[i].set(j);

    Bitset all(m);
    for (int i = 0; i < m; ++i) all.set(i);
    try {
        search.run(all, 0, m);
    } catch (TargetExceeded& e) {
        // translate candidate indices back to vertex ids
        std::vector<int> witness{root};
        for (int idx : e.witness) witness.push_back(candidate_ids[idx]);
        std::sort(witness.begin(), witness.end());
        throw TargetExceeded(std::move(witness));
    }

    // close the identity-rooted family under left translation
    std::set<std::vector<int>> family;
    for (const auto& idx_set : search.found) {
        std::vector<int> base{root};
        for (int idx : idx_set) base.push_back(candidate_ids[idx]);
        for (int a = 0; a < n; ++a) {
            std::vector<int> image;
            image.reserve(base.size());
            for (int s : base) image.push_back(group.compose_ids(a, s));
            std::sort(image.begin(), image.end());
            family.insert(std::move(image));
        }
    }

    IndependentSetFamily out;
    out.target = target;
    out.sets.assign(family.begin(), family.end());
    out.complete = true;
    out.nodes_explored = search.nodes;
    return out;
}

std::optional<std::pair<int, int>> is_stabilizer_coset(const std::vector<int>& set,
                                                       const PermutationGroup& group) {
    if (set.empty()) return std::nullopt;
    const int degree = group.degree();
    if (group.size() % degree != 0 ||
        static_cast<int>(set.size()) != group.size() / degree)
        return std::nullopt;
    for (int p = 0; p < degree; ++p) {
        int image = group.perm(set.front())[p];
        bool all = true;
        for (int g : set)
            if (group.perm(g)[p] != image) {
                all = false;
                break;
            }
        if (all) return std::make_pair(p, image);
    }
    return std::nullopt;
}

bool hoffman_certificate(const std::vector<int>& set, const DerangementGraph& graph,
                         const mpq_class& tau) {
    const long long order = graph.n();
    const long long s = static_cast<long long>(set.size());
    std::vector<char> in_set(order, 0);
    for (int v : set) in_set[v] = 1;
    // y = |G| v_S - |S| v_G, an integer multiple of the Hoffman eigenvector
    auto y = [&](int v) { return in_set[v] ? order - s : -s; };
    for (int v = 0; v < graph.n(); ++v) {
        long long acc = 0;
        graph.row(v).for_each([&](int u) { acc += y(u); });
        if (mpq_from(acc) != tau * mpq_from(y(v))) return false;
    }
    return true;
}

bool lambda_balance(const std::vector<int>& set, const std::vector<bool>& psl_mask) {
    long long inside = 0;
    for (int v : set) inside += psl_mask[v] ? 1 : 0;
    return 2 * inside == static_cast<long long>(set.size());
}

}  // namespace derange
