#pragma once

// Pairwise difference predicates between Hamiltonian paths, their witnesses,
// and the compatibility graph whose cliques are difference families.

#include "hamdiff/bitset.hpp"
#include "hamdiff/core.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace hamdiff {

/// "Union contains a cycle with length in D" or "union contains a K4".
class DifferencePredicate {
public:
    enum class Kind { CycleIn, ContainsK4 };

    static DifferencePredicate cycle_in(DSpec d) { return DifferencePredicate(Kind::CycleIn, std::move(d)); }
    static DifferencePredicate contains_k4() { return DifferencePredicate(Kind::ContainsK4, DSpec::all()); }

    Kind kind() const { return kind_; }
    /// Meaningful only for CycleIn.
    const DSpec& dspec() const { return dspec_; }

    /// "k4" or the DSpec text.
    std::string render() const;

    bool operator==(const DifferencePredicate&) const = default;

private:
    DifferencePredicate(Kind k, DSpec d) : kind_(k), dspec_(std::move(d)) {}

    Kind kind_;
    DSpec dspec_;
};

/// Inverse of DifferencePredicate::render().
DifferencePredicate parse_predicate(std::string_view text);

struct Witness {
    enum class Kind { Cycle, Clique4 };

    Kind kind = Kind::Cycle;
    /// Cycle: canonical rotation. Clique4: the four vertices, ascending.
    std::vector<Vertex> vertices;

    bool operator==(const Witness&) const = default;
};

/// Lexicographically smallest 4-set spanning six edges of g, if any.
std::optional<std::array<Vertex, 4>> find_k4(const UnionGraph& g);
bool contains_k4(const UnionGraph& g);

bool are_different(const HamPath& a, const HamPath& b, const DifferencePredicate& p);

/// Shortest admissible witness, ties broken by the smallest sorted vertex
/// set and then the smallest canonical rotation. Empty iff !are_different.
std::optional<Witness> find_witness(const HamPath& a, const HamPath& b, const DifferencePredicate& p);

/// Checks a witness against the recomputed union of a and b.
bool witness_is_valid(const HamPath& a, const HamPath& b, const DifferencePredicate& p, const Witness& w);

/// Graph on all canonical paths of K_n (lexicographic indices); i ~ j iff
/// the predicate holds for the pair.
class CompatibilityGraph {
public:
    CompatibilityGraph(int n, DifferencePredicate predicate, std::vector<HamPath> paths,
                       std::vector<Bitset> rows);

    int n() const { return n_; }
    const DifferencePredicate& predicate() const { return predicate_; }
    std::size_t order() const { return paths_.size(); }
    const std::vector<HamPath>& paths() const { return paths_; }
    const HamPath& path(std::size_t i) const { return paths_[i]; }
    const Bitset& row(std::size_t i) const { return rows_[i]; }
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    std::size_t degree(std::size_t i) const { return rows_[i].count(); }

private:
    int n_;
    DifferencePredicate predicate_;
    std::vector<HamPath> paths_;
    std::vector<Bitset> rows_;
};

/// Largest n accepted by build_compat_graph (20160 vertices at n = 8).
inline constexpr int kMaxCompatN = 8;

/// Evaluates all pairs; `workers` threads split the rows. The result does
/// not depend on the worker count.
CompatibilityGraph build_compat_graph(int n, const DifferencePredicate& p, unsigned workers = 1);

}  // namespace hamdiff
