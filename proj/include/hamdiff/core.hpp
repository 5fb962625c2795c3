#pragma once

// Core model: vertices, canonical Hamiltonian paths of K_n, the simple-graph
// union of two paths, simple-cycle enumeration and cycle-length sets.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamdiff {

using Vertex = int;

/// Input that violates an operation's preconditions.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Request beyond the supported problem size.
class CapacityError : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Largest n for which enumerate_paths() will materialize all n!/2 paths.
inline constexpr int kMaxEnumerateN = 9;
/// Largest order supported by UnionGraph (adjacency stored as 32-bit masks).
inline constexpr int kMaxGraphN = 32;

/// Undirected Hamiltonian path of K_n on vertices 1..n, stored in canonical
/// orientation: the sequence is lexicographically <= its reversal.
class HamPath {
public:
    HamPath() = default;

    /// Canonicalizes `seq`; throws ValidationError unless seq is a
    /// permutation of 1..n with n >= 2.
    explicit HamPath(std::vector<Vertex> seq);

    int n() const { return static_cast<int>(seq_.size()); }
    const std::vector<Vertex>& seq() const { return seq_; }
    Vertex operator[](std::size_t i) const { return seq_[i]; }
    Vertex front() const { return seq_.front(); }
    Vertex back() const { return seq_.back(); }

    /// Edges as (min, max) pairs in path order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    /// Comma-separated vertex sequence, e.g. "1,2,3".
    std::string to_string() const;
    /// Inverse of to_string(); the result is canonicalized.
    static HamPath parse(std::string_view text);

    friend bool operator==(const HamPath&, const HamPath&) = default;
    friend auto operator<=>(const HamPath&, const HamPath&) = default;

private:
    std::vector<Vertex> seq_;
};

/// Lexicographic minimum of seq and its reversal.
HamPath canonicalize(std::vector<Vertex> seq);

/// All n!/2 canonical paths in lexicographic order.
std::vector<HamPath> enumerate_paths(int n);

/// Position of a canonical path in enumerate_paths(n) order, computed
/// without enumerating.
std::size_t path_index(const HamPath& path);

enum class EdgeOrigin : std::uint8_t { FirstOnly, SecondOnly, Both };

struct UnionEdge {
    Vertex u;
    Vertex v;  // u < v
    EdgeOrigin origin;
};

/// A simple graph on 1..n, usually the union of two Hamiltonian paths.
class UnionGraph {
public:
    /// Union of two paths of the same order.
    UnionGraph(const HamPath& first, const HamPath& second);
    /// Arbitrary simple graph; every edge is tagged FirstOnly. Duplicate
    /// edges collapse.
    UnionGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges);

    int n() const { return n_; }
    const std::vector<UnionEdge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(Vertex u, Vertex v) const;
    int degree(Vertex v) const;
    /// Bit (w-1) set iff {v,w} is an edge.
    std::uint32_t neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }

private:
    void add_edge(Vertex u, Vertex v, EdgeOrigin origin);

    int n_ = 0;
    std::vector<std::uint32_t> adj_;
    std::vector<UnionEdge> edges_;
};

UnionGraph union_of(const HamPath& a, const HamPath& b);

/// A simple cycle as a cyclic vertex sequence. Canonical rotation starts at
/// the smallest vertex and continues towards its smaller cycle neighbour.
struct Cycle {
    std::vector<Vertex> verts;

    std::size_t length() const { return verts.size(); }
    bool operator==(const Cycle&) const = default;
};

Cycle canonical_cycle(std::vector<Vertex> verts);

/// True iff verts is a simple cycle (>= 3 distinct vertices) of g.
bool is_cycle_of(const Cycle& c, const UnionGraph& g);

/// Visits every simple cycle of g exactly once (in canonical rotation).
/// The visitor returns false to stop early; the function then returns false.
bool for_each_cycle(const UnionGraph& g, const std::function<bool(const Cycle&)>& visit);

/// Bitmask with bit l set iff g has a simple cycle of length l.
std::uint64_t cycle_length_mask(const UnionGraph& g);

/// The set of lengths of all simple cycles of g.
std::set<int> cycle_lengths(const UnionGraph& g);

/// Decidable set of admissible cycle lengths.
class DSpec {
public:
    enum class Kind { All, Odd, Even, DivisibleBy, NotDivisibleBy, ExplicitSet };

    static DSpec all() { return DSpec(Kind::All, 0, {}); }
    static DSpec odd() { return DSpec(Kind::Odd, 0, {}); }
    static DSpec even() { return DSpec(Kind::Even, 0, {}); }
    static DSpec divisible_by(int c);
    static DSpec not_divisible_by(int c);
    static DSpec explicit_set(std::set<int> lengths);

    Kind kind() const { return kind_; }
    int modulus() const { return c_; }
    const std::set<int>& lengths() const { return set_; }

    /// Lengths below 3 are never members.
    bool contains(int length) const;

    /// Text form, inverse of parse_dspec().
    std::string render() const;

    bool operator==(const DSpec&) const = default;

private:
    DSpec(Kind kind, int c, std::set<int> s) : kind_(kind), c_(c), set_(std::move(s)) {}

    Kind kind_;
    int c_;
    std::set<int> set_;
};

/// Syntax error in a DSpec string; position() is the 0-based offending offset.
class DSpecParseError : public ValidationError {
public:
    DSpecParseError(const std::string& what, std::size_t pos)
        : ValidationError(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

/// Grammar: all | odd | even | div=<c> | ndiv=<c> | in=<l1,l2,...>
/// with c >= 2 and every li >= 3, no whitespace.
DSpec parse_dspec(std::string_view text);

}  // namespace hamdiff
