#pragma once

// Explicit families of pairwise-different Hamiltonian paths, each tagged with
// the predicate it claims to satisfy.

#include "hamdiff/relations.hpp"
#include "hamdiff/search.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hamdiff {

struct ConstructedFamily {
    /// Canonical, distinct, same order.
    std::vector<HamPath> paths;
    DifferencePredicate claim;
    /// Construction name and parameters, e.g. "block(n=6,c=2)".
    std::string provenance;

    std::size_t size() const { return paths.size(); }
    int n() const { return paths.empty() ? 0 : paths.front().n(); }
};

/// Consecutive blocks {c*i+1, ..., c*i+c}, each traversed in increasing
/// order. Consecutive blocks in a path are joined by a linking edge.
class BlockSystem {
public:
    BlockSystem(int n, int c);

    int n() const { return n_; }
    int block_size() const { return c_; }
    int block_count() const { return n_ / c_; }
    /// Block index of vertex v (0-based).
    int block_of(Vertex v) const { return (v - 1) / c_; }
    /// True iff {u,v} joins consecutive vertices of one block.
    bool is_block_edge(Vertex u, Vertex v) const;
    /// Path visiting blocks in `order` (a permutation of 0..block_count-1).
    HamPath path_for(const std::vector<int>& order) const;

private:
    int n_;
    int c_;
};

/// Scans paths in lexicographic order (or a seeded shuffle) and keeps each
/// path that is different from every path kept so far.
ConstructedFamily greedy_family(int n, const DifferencePredicate& p, std::optional<std::uint64_t> seed = {});

/// Number of canonical paths H' (H included) whose union with h has no even
/// cycle, by brute force over all paths.
std::size_t count_no_even_neighbors(const HamPath& h);

/// All paths alternating between the odd and the even vertices.
ConstructedFamily bipartite_family(int n);

/// One path per block order; claim DivisibleBy(c).
ConstructedFamily block_family(int n, int c);

/// Block orders with block 0 fixed in front; claim NotDivisibleBy(c), c >= 3.
ConstructedFamily shifted_block_family(int n, int c);

/// All paths with endpoints 1 and n; claim NotDivisibleBy(c) for c >= 3, c != 4.
ConstructedFamily fixed_endpoint_family(int n, int c);

/// 2^(n/4) paths: each 4-tuple is walked as (a,b,c,d) or (b,d,a,c); claim K4.
ConstructedFamily k4_family(int n);

/// {H, H_l, H_r, H_lr}: H with its first two and/or last two vertices
/// swapped. Requires even n >= 6.
std::vector<HamPath> sH_set(const HamPath& h);

/// Paths (2i, 2i-1, ..., 1, 2i+1, ..., n) relative to h, and their mirror
/// images at the far end, for 2 <= i and 2i < n. Each creates an even cycle
/// with some member of sH_set(h).
std::vector<HamPath> sH_obstructions(const HamPath& h);

/// Incidence between the 12 five-cycles and the 10 copies of K_{2,3} in
/// K_5; left = cycles, right = bipartite graphs, adjacent iff they share a
/// Hamiltonian path.
struct M53Incidence {
    std::vector<std::vector<std::pair<Vertex, Vertex>>> cycles;
    std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartitions;
    BipartiteGraph graph;
    /// shared[l][r]: the common Hamiltonian path when adjacent.
    std::vector<std::vector<std::optional<HamPath>>> shared;
};

M53Incidence m53_incidence();

/// Ten paths of K_5, pairwise triangle-different, from a perfect matching
/// of the incidence graph.
ConstructedFamily m53_matching_family();

}  // namespace hamdiff
