#pragma once

// Closed-form bounds on family sizes in exact rational arithmetic, and the
// structural maps behind the upper-bound arguments.

#include "hamdiff/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hamdiff {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "15/2", or "10" for integers.
std::string format_rational(const Rational& r);

Integer factorial_int(int k);
Integer binomial_int(int n, int k);

struct FormulaTable {
    std::string name;
    int n = 0;
    std::optional<int> c;
    std::optional<Rational> lower;
    std::optional<Rational> upper;
};

/// Names accepted by eval_formula, in report order:
///   all             n!/2, exact
///   prop_odd        binom(n, n/2 rounded down) for odd n, half of binom(n, n/2) for even n, exact
///   gre             bounds on even-cycle-different families (n >= 3, n != 4)
///   more            (n/c)! lower bound, c | n
///   notmore         (n/c - 1)! lower bound, c >= 3, c | n
///   fixed_endpoint  n!/(2 binom(n,2)) lower bound, c (if given) >= 3 and != 4
///   k4              2^(n/4) lower (4 | n) and (n+1)^2 (3/2)^(n-1) upper
///   k4_bipartite    bipartite-class upper bound for K4-different families
///   k4_tripartite   tripartite-class upper bound, 3 | n
const std::vector<std::string>& formula_names();

/// Throws ValidationError when the parameters do not fit the formula.
FormulaTable eval_formula(std::string_view name, int n, std::optional<int> c = {});

/// Every formula that accepts (n, c), in formula_names() order.
std::vector<FormulaTable> applicable_formulas(int n, std::optional<int> c = {});

/// Lower bound on the Hamiltonian paths of a balanced complete tripartite
/// graph on n = 3k vertices: (k!)^3 * 3 * 2^(n-1) / (n+1)^2.
Rational tripartite_path_lower_bound(int n);

/// Position-parity classes of a path; `first` holds vertex 1.
struct Bipartition {
    std::set<Vertex> first;
    std::set<Vertex> second;
    bool operator==(const Bipartition&) const = default;
    auto operator<=>(const Bipartition&) const = default;
};

Bipartition bipartition_of_path(const HamPath& h);

/// Edge set of the Hamiltonian cycle closing h, sorted (min, max) pairs.
std::vector<std::pair<Vertex, Vertex>> ham_cycle_closure(const HamPath& h);

/// Given cycles c1, c2 of g that meet in exactly one path with s >= 1 edges,
/// the cycle formed by the remaining edges (length l1 + l2 - 2s). Throws
/// ValidationError when the shared part is not a single nonempty path.
Cycle third_cycle(const Cycle& c1, const Cycle& c2, const UnionGraph& g);

/// Canonical Hamiltonian paths of the complete multipartite graph with the
/// given part sizes. Part-label strings with no two equal neighbours are
/// enumerated with memoization, then multiplied by the orderings within each
/// part. Total size at most kMaxMultipartite.
inline constexpr int kMaxMultipartite = 18;
std::uint64_t count_multipartite_ham_paths(const std::vector<int>& part_sizes);

/// Number of occurrence-count types of ternary strings of length n.
std::uint64_t string_type_count(int n);

}  // namespace hamdiff
