#include "hamdiff/constructions.hpp"
#include "hamdiff/search.hpp"

#include <doctest.h>

#include <algorithm>
#include <bit>
#include <map>
#include <random>

using namespace hamdiff;

namespace {

std::vector<Bitset> random_graph(std::size_t n, double density, std::uint32_t seed)
{
    std::mt19937 rng(seed);
    std::bernoulli_distribution edge(density);
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge(rng)) {
                rows[i].set(j);
                rows[j].set(i);
            }
    return rows;
}

/// Exhaustive clique number over all vertex subsets (n <= 20).
std::size_t subset_clique_number(const std::vector<Bitset>& rows)
{
    const std::size_t n = rows.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best)
            continue;
        bool clique = true;
        for (std::size_t i = 0; i < n && clique; ++i)
            for (std::size_t j = i + 1; j < n && clique; ++j)
                if ((mask >> i & 1U) && (mask >> j & 1U) && !rows[i].test(j))
                    clique = false;
        if (clique)
            best = size;
    }
    return best;
}

/// Exhaustive maximum matching over (next left vertex, used right set),
/// memoized on the used set.
std::size_t brute_matching(const BipartiteGraph& g, std::size_t left, std::uint32_t used,
                           std::map<std::pair<std::size_t, std::uint32_t>, std::size_t>& memo)
{
    if (left == g.left_count())
        return 0;
    if (auto it = memo.find({left, used}); it != memo.end())
        return it->second;
    std::size_t best = brute_matching(g, left + 1, used, memo);
    for (std::size_t r : g.neighbours(left))
        if (!(used >> r & 1U))
            best = std::max(best, 1 + brute_matching(g, left + 1, used | (1U << r), memo));
    memo[{left, used}] = best;
    return best;
}

const auto kOdd = DifferencePredicate::cycle_in(DSpec::odd());
const auto kEven = DifferencePredicate::cycle_in(DSpec::even());
const auto kAll = DifferencePredicate::cycle_in(DSpec::all());
const auto kTriangle = DifferencePredicate::cycle_in(DSpec::explicit_set({3}));

}  // namespace

TEST_CASE("max_clique on compatibility graphs")
{
    CHECK(max_clique(build_compat_graph(4, kAll)).size == 12);
    CHECK(max_clique(build_compat_graph(5, kAll)).size == 60);
    CHECK(max_clique(build_compat_graph(5, kOdd)).size == 10);
    const auto tri = max_clique(build_compat_graph(5, kTriangle));
    CHECK(tri.size == 10);
    CHECK(tri.optimal);

    const auto g4 = build_compat_graph(4, kTriangle);
    std::vector<Bitset> rows;
    for (std::size_t i = 0; i < g4.order(); ++i)
        rows.push_back(g4.row(i));
    const auto r4 = max_clique(g4);
    CHECK(r4.size == subset_clique_number(rows));
    CHECK(independent_check(g4, r4.members));
}

TEST_CASE("max_clique agrees with exhaustive search on random graphs")
{
    for (std::uint32_t seed = 1; seed <= 40; ++seed) {
        const double density = 0.2 + 0.02 * seed;
        const auto rows = random_graph(16, density, seed);
        const auto r = max_clique(AdjacencyView(rows));
        CHECK(r.optimal);
        CHECK(r.size == subset_clique_number(rows));
        CHECK(is_clique(AdjacencyView(rows), r.members));
    }
}

TEST_CASE("clique result cannot be improved from its own incumbent and is maximal")
{
    for (std::uint32_t seed = 100; seed < 110; ++seed) {
        const auto rows = random_graph(60, 0.6, seed);
        const AdjacencyView g(rows);
        const auto r = max_clique(g);
        CliqueOptions again;
        again.initial = r.members;
        CHECK(max_clique(g, again).size == r.size);
        for (std::size_t v = 0; v < rows.size(); ++v) {
            if (std::find(r.members.begin(), r.members.end(), v) != r.members.end())
                continue;
            CHECK_FALSE(std::all_of(r.members.begin(), r.members.end(), [&](std::size_t m) { return rows[v].test(m); }));
        }
    }
}

TEST_CASE("worker count does not change the clique number")
{
    const auto g = build_compat_graph(5, kEven);
    CliqueOptions one;
    CliqueOptions four;
    four.workers = 4;
    const auto a = max_clique(g, one);
    const auto b = max_clique(g, four);
    CHECK(a.size == b.size);
    CHECK(independent_check(g, b.members));
    for (std::uint32_t seed = 5; seed < 10; ++seed) {
        const auto rows = random_graph(80, 0.7, seed);
        CHECK(max_clique(AdjacencyView(rows), one).size == max_clique(AdjacencyView(rows), four).size);
    }
    // Single-worker runs report the same family every time.
    CHECK(max_clique(g, one).members == a.members);
}

TEST_CASE("monotonicity in the admissible length set at n = 5")
{
    const auto tri = max_clique(build_compat_graph(5, kTriangle)).size;
    const auto odd = max_clique(build_compat_graph(5, kOdd)).size;
    const auto even = max_clique(build_compat_graph(5, kEven)).size;
    const auto all = max_clique(build_compat_graph(5, kAll)).size;
    CHECK(tri <= odd);
    CHECK(even <= all);
    CHECK(tri == 10);
    CHECK(odd == 10);
    CHECK(even >= 8);
    CHECK(even <= 12);
}

TEST_CASE("budget exhaustion yields a flagged lower bound")
{
    const auto rows = random_graph(400, 0.93, 3);
    CliqueOptions opts;
    opts.budget = std::chrono::milliseconds(1);
    const auto r = max_clique(AdjacencyView(rows), opts);
    CHECK_FALSE(r.optimal);
    CHECK(r.size > 0);
    CHECK(is_clique(AdjacencyView(rows), r.members));

    opts.budget = std::chrono::milliseconds(0);
    CHECK_THROWS_AS(max_clique(AdjacencyView(rows), opts), ValidationError);
}

TEST_CASE("is_clique")
{
    const auto g = build_compat_graph(5, kTriangle);
    const auto r = max_clique(g);
    CHECK(independent_check(g, r.members));
    auto dup = r.members;
    dup.push_back(dup.front());
    CHECK_FALSE(independent_check(g, dup));
    CHECK_THROWS_AS(independent_check(g, {0, 60}), ValidationError);
}

TEST_CASE("max_matching")
{
    CHECK(max_matching(BipartiteGraph(4, 4)).empty());

    BipartiteGraph k33(3, 3);
    for (std::size_t l = 0; l < 3; ++l)
        for (std::size_t r = 0; r < 3; ++r)
            k33.add_edge(l, r);
    k33.add_edge(0, 0);
    CHECK(k33.edge_count() == 9);
    CHECK(max_matching(k33).size() == 3);
    CHECK_THROWS_AS(k33.add_edge(3, 0), ValidationError);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t left = 1 + rng() % 12;
        const std::size_t right = 1 + rng() % 12;
        std::bernoulli_distribution edge(0.05 + 0.004 * trial);
        BipartiteGraph g(left, right);
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < right; ++r)
                if (edge(rng))
                    g.add_edge(l, r);
        const auto m = max_matching(g);
        std::vector<bool> used_l(left, false), used_r(right, false);
        for (auto [l, r] : m) {
            CHECK(std::binary_search(g.neighbours(l).begin(), g.neighbours(l).end(), r));
            CHECK_FALSE(used_l[l]);
            CHECK_FALSE(used_r[r]);
            used_l[l] = used_r[r] = true;
        }
        std::map<std::pair<std::size_t, std::uint32_t>, std::size_t> memo;
        CHECK(m.size() == brute_matching(g, 0, 0, memo));
    }
}

TEST_CASE("M(5,3) incidence graph is biregular and perfectly matchable")
{
    const auto inc = m53_incidence();
    CHECK(inc.graph.left_count() == 12);
    CHECK(inc.graph.right_count() == 10);
    for (std::size_t l = 0; l < 12; ++l)
        CHECK(inc.graph.left_degree(l) == 5);
    for (std::size_t r = 0; r < 10; ++r)
        CHECK(inc.graph.right_degree(r) == 6);
    CHECK(max_matching(inc.graph).size() == 10);

    const auto family = m53_matching_family();
    const auto g = build_compat_graph(5, kTriangle);
    std::vector<std::size_t> idx;
    for (const auto& p : family.paths)
        idx.push_back(path_index(p));
    CHECK(independent_check(g, idx));
}
