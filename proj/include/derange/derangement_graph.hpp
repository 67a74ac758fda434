#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "derange/bitset.hpp"
#include "derange/permutation_group.hpp"
#include "derange/rational.hpp"

namespace derange {

// Cayley graph on a permutation group whose connection set is the
// fixed-point-free elements: g ~ h iff g^-1 h has no fixed point,
// equivalently iff the permutations g and h disagree on every point.
class DerangementGraph {
public:
    explicit DerangementGraph(PermutationGroup group, int threads = 1,
                              long long max_order = kDefaultMaxOrder);

    const PermutationGroup& group() const { return group_; }
    int n() const { return static_cast<int>(adj_.size()); }
    long long valency() const { return valency_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& row(int v) const { return adj_[v]; }

    // group element ids of the connection set, ascending
    const std::vector<int>& derangements() const { return derangements_; }

    std::vector<std::vector<int>> components() const;
    void write_edge_list(std::ostream& os) const;  // "u v" per line, u < v

    static constexpr long long kDefaultMaxOrder = 20000;

private:
    PermutationGroup group_;
    std::vector<Bitset> adj_;
    std::vector<int> derangements_;
    long long valency_;
};

struct IndependentSetFamily {
    int target;                          // certified independence number
    std::vector<std::vector<int>> sets;  // sorted tuples, family in lex order
    bool complete;                       // exhaustive enumeration finished
    long long nodes_explored;
};

struct TargetExceeded : std::runtime_error {
    explicit TargetExceeded(std::vector<int> set)
        : std::runtime_error("independent set larger than the claimed independence number"),
          witness(std::move(set)) {}
    std::vector<int> witness;
};

struct SearchOptions {
    int recolor_interval = 8;  // recompute the clique-cover bound every k levels
};

// Exhaustively enumerates every maximum independent set and proves that no
// independent set exceeds `target`.  Left translation by any group element
// is a graph automorphism (adjacency depends only on g^-1 h), so the search
// explores only sets containing the identity and closes the family under
// translation afterwards.  Throws TargetExceeded if the bound is falsified.
IndependentSetFamily enumerate_max_independent_sets(const DerangementGraph& graph, int target,
                                                    const SearchOptions& options = {});

// (p, p') such that set == { g : p^g == p' } exactly, or nullopt.
std::optional<std::pair<int, int>> is_stabilizer_coset(const std::vector<int>& set,
                                                       const PermutationGroup& group);

// Checks A (v_S - |S|/|G| v_G) = tau (v_S - |S|/|G| v_G) in exact rational
// arithmetic; set must be independent and of Hoffman-bound size.
bool hoffman_certificate(const std::vector<int>& set, const DerangementGraph& graph,
                         const mpq_class& tau);

// |S ∩ mask| == |S| / 2
bool lambda_balance(const std::vector<int>& set, const std::vector<bool>& psl_mask);

}  // namespace derange
