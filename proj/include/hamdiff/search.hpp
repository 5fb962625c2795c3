#pragma once

// Exact maximum clique (branch and bound with greedy colouring bounds) and
// maximum bipartite matching.

#include "hamdiff/bitset.hpp"
#include "hamdiff/relations.hpp"

#include <chrono>
#include <cstdint>
#include <utility>
#include <vector>

namespace hamdiff {

struct CliqueResult {
    std::size_t size = 0;
    /// Vertex indices of the best clique found, ascending.
    std::vector<std::size_t> members;
    std::uint64_t nodes_explored = 0;
    std::chrono::milliseconds elapsed{0};
    /// False when the budget ran out: size is then only a lower bound.
    bool optimal = false;
};

struct CliqueOptions {
    std::chrono::milliseconds budget = std::chrono::seconds(300);
    /// Worker threads for the top-level branches. With one worker the
    /// reported family is deterministic; with more only size is.
    unsigned workers = 1;
    /// Optional starting incumbent (must be a clique).
    std::vector<std::size_t> initial;
};

/// Undirected simple graph given by symmetric adjacency rows.
class AdjacencyView {
public:
    explicit AdjacencyView(const std::vector<Bitset>& rows) : rows_(&rows) {}
    explicit AdjacencyView(const CompatibilityGraph& g);

    std::size_t order() const { return rows_ ? rows_->size() : graph_->order(); }
    const Bitset& row(std::size_t i) const { return rows_ ? (*rows_)[i] : graph_->row(i); }
    bool adjacent(std::size_t i, std::size_t j) const { return row(i).test(j); }

private:
    const std::vector<Bitset>* rows_ = nullptr;
    const CompatibilityGraph* graph_ = nullptr;
};

CliqueResult max_clique(AdjacencyView g, const CliqueOptions& options = {});
CliqueResult max_clique(const CompatibilityGraph& g, const CliqueOptions& options = {});

/// True iff members are distinct, in range, and pairwise adjacent. Throws
/// ValidationError on an out-of-range index.
bool is_clique(AdjacencyView g, const std::vector<std::size_t>& members);
bool independent_check(const CompatibilityGraph& g, const std::vector<std::size_t>& members);

class BipartiteGraph {
public:
    BipartiteGraph(std::size_t left_count, std::size_t right_count);

    /// Duplicate edges are ignored.
    void add_edge(std::size_t left, std::size_t right);

    std::size_t left_count() const { return adj_.size(); }
    std::size_t right_count() const { return right_count_; }
    const std::vector<std::size_t>& neighbours(std::size_t left) const { return adj_[left]; }
    std::size_t left_degree(std::size_t left) const { return adj_[left].size(); }
    std::size_t right_degree(std::size_t right) const;
    std::size_t edge_count() const;

private:
    std::size_t right_count_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// Maximum-cardinality matching by repeated augmenting-path search; pairs
/// are (left, right) sorted by left index.
std::vector<std::pair<std::size_t, std::size_t>> max_matching(const BipartiteGraph& g);

}  // namespace hamdiff
