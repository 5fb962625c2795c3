#include "hamdiff/certificate.hpp"
#include "hamdiff/constructions.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hamdiff;

namespace {

const auto kEven = DifferencePredicate::cycle_in(DSpec::even());
const auto kAll = DifferencePredicate::cycle_in(DSpec::all());

bool pairwise_valid(const ConstructedFamily& f)
{
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            if (!are_different(f.paths[i], f.paths[j], f.claim))
                return false;
    return true;
}

bool canonical_and_distinct(const ConstructedFamily& f)
{
    std::set<HamPath> seen;
    for (const auto& p : f.paths) {
        if (canonicalize(p.seq()) != p || p.n() != f.n())
            return false;
        seen.insert(p);
    }
    return seen.size() == f.size();
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

/// Some cycle of the union has (c-1) block edges per linking edge, i.e.
/// whole blocks joined by as many linking edges as blocks.
bool has_balanced_block_cycle(const BlockSystem& blocks, const HamPath& a, const HamPath& b)
{
    bool found = false;
    for_each_cycle(union_of(a, b), [&](const Cycle& c) {
        std::size_t inside = 0, linking = 0;
        for (std::size_t i = 0; i < c.verts.size(); ++i) {
            const Vertex u = c.verts[i];
            const Vertex v = c.verts[(i + 1) % c.verts.size()];
            (blocks.is_block_edge(u, v) ? inside : linking) += 1;
        }
        found = inside == static_cast<std::size_t>(blocks.block_size() - 1) * linking &&
                c.length() % static_cast<std::size_t>(blocks.block_size()) == 0;
        return !found;
    });
    return found;
}

}  // namespace

TEST_CASE("greedy_family")
{
    const auto all4 = greedy_family(4, kAll);
    CHECK(all4.size() == 12);

    const auto g5 = greedy_family(5, kEven);
    CHECK(g5.size() >= 8);
    CHECK(pairwise_valid(g5));
    CHECK(canonical_and_distinct(g5));

    const auto g6 = greedy_family(6, kEven);
    CHECK(g6.size() >= 60);
    CHECK(pairwise_valid(g6));

    const auto seeded = greedy_family(5, kEven, 42);
    CHECK(pairwise_valid(seeded));
    CHECK(seeded.paths == greedy_family(5, kEven, 42).paths);
}

TEST_CASE("greedy size meets the blocked-set bound for n = 5, 6, 7")
{
    for (int n = 5; n <= 7; ++n) {
        const auto paths = enumerate_paths(n);
        std::size_t max_blocked = 0;
        // Exhaustive for n <= 6; sampled for n = 7 (constancy is checked below).
        std::mt19937 rng(static_cast<unsigned>(n));
        const std::size_t samples = n <= 6 ? paths.size() : 20;
        for (std::size_t s = 0; s < samples; ++s) {
            const auto& h = n <= 6 ? paths[s] : paths[rng() % paths.size()];
            max_blocked = std::max(max_blocked, count_no_even_neighbors(h));
        }
        CHECK(greedy_family(n, kEven).size() >= ceil_div(paths.size(), max_blocked));
    }
}

TEST_CASE("count_no_even_neighbors is constant")
{
    for (const auto& h : enumerate_paths(5))
        CHECK(count_no_even_neighbors(h) == 8);
    for (const auto& h : enumerate_paths(6))
        CHECK(count_no_even_neighbors(h) == 6);
    const auto seven = enumerate_paths(7);
    std::mt19937 rng(2024);
    for (int s = 0; s < 50; ++s)
        CHECK(count_no_even_neighbors(seven[rng() % seven.size()]) == 14);
}

TEST_CASE("bipartite_family")
{
    const auto f4 = bipartite_family(4);
    CHECK(f4.size() == 4);
    const auto f5 = bipartite_family(5);
    CHECK(f5.size() == 6);
    for (int n = 4; n <= 7; ++n) {
        const auto f = bipartite_family(n);
        CHECK(canonical_and_distinct(f));
        CHECK(pairwise_valid(f));
        for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j)
                for (int l : cycle_lengths(union_of(f.paths[i], f.paths[j])))
                    CHECK(l % 2 == 0);
    }
    CHECK_THROWS_AS(bipartite_family(3), ValidationError);
}

TEST_CASE("block_family")
{
    const auto f = block_family(6, 2);
    REQUIRE(f.size() == 6);
    CHECK(std::find(f.paths.begin(), f.paths.end(), HamPath({1, 2, 5, 6, 3, 4})) != f.paths.end());
    CHECK(pairwise_valid(f));

    const auto f63 = block_family(6, 3);
    REQUIRE(f63.size() == 2);
    CHECK(f63.paths[0] == HamPath({1, 2, 3, 4, 5, 6}));
    CHECK(f63.paths[1] == HamPath({4, 5, 6, 1, 2, 3}));
    CHECK(cycle_lengths(union_of(f63.paths[0], f63.paths[1])).contains(6));

    const auto f84 = block_family(8, 4);
    REQUIRE(f84.size() == 2);
    CHECK(cycle_lengths(union_of(f84.paths[0], f84.paths[1])).contains(8));

    for (auto [n, c] : {std::pair{6, 2}, {8, 2}, {6, 3}, {9, 3}, {8, 4}}) {
        const auto fam = block_family(n, c);
        const BlockSystem blocks(n, c);
        CHECK(canonical_and_distinct(fam));
        CHECK(pairwise_valid(fam));
        for (std::size_t i = 0; i < fam.size(); ++i)
            for (std::size_t j = i + 1; j < fam.size(); ++j)
                CHECK(has_balanced_block_cycle(blocks, fam.paths[i], fam.paths[j]));
    }
    CHECK_THROWS_AS(block_family(7, 2), ValidationError);
    CHECK_THROWS_AS(block_family(6, 1), ValidationError);
}

TEST_CASE("shifted_block_family")
{
    const auto f93 = shifted_block_family(9, 3);
    REQUIRE(f93.size() == 2);
    CHECK(shifted_block_family(6, 3).size() == 1);
    const auto f123 = shifted_block_family(12, 3);
    CHECK(f123.size() == 6);
    for (const auto* fam : {&f93, &f123}) {
        CHECK(pairwise_valid(*fam));
        for (std::size_t i = 0; i < fam->size(); ++i)
            for (std::size_t j = i + 1; j < fam->size(); ++j) {
                const auto lengths = cycle_lengths(union_of(fam->paths[i], fam->paths[j]));
                CHECK(std::any_of(lengths.begin(), lengths.end(), [](int l) { return l % 3 == 2; }));
            }
    }
    CHECK_THROWS_AS(shifted_block_family(6, 2), ValidationError);
    CHECK_THROWS_AS(shifted_block_family(10, 3), ValidationError);
}

TEST_CASE("fixed_endpoint_family")
{
    const auto f = fixed_endpoint_family(5, 3);
    CHECK(f.size() == 6);
    for (const auto& p : f.paths) {
        CHECK(p.front() == 1);
        CHECK(p.back() == 5);
    }
    CHECK(fixed_endpoint_family(4, 3).size() == 2);
    for (int n = 5; n <= 6; ++n)
        for (int c : {3, 5, 6, 7}) {
            const auto fam = fixed_endpoint_family(n, c);
            CHECK(canonical_and_distinct(fam));
            CHECK(pairwise_valid(fam));
        }
    CHECK_THROWS_AS(fixed_endpoint_family(5, 2), ValidationError);
    CHECK_THROWS_AS(fixed_endpoint_family(5, 4), ValidationError);
    CHECK_THROWS_AS(fixed_endpoint_family(5, 1), ValidationError);
}

TEST_CASE("fixed endpoints are not enough for c = 4")
{
    // Exhibits why 4 is excluded: some pair at n = 6 has only cycle lengths
    // divisible by 4.
    const auto fam = fixed_endpoint_family(6, 3);
    const auto mod4 = DifferencePredicate::cycle_in(DSpec::not_divisible_by(4));
    bool counterexample = false;
    for (std::size_t i = 0; i < fam.size() && !counterexample; ++i)
        for (std::size_t j = i + 1; j < fam.size() && !counterexample; ++j)
            counterexample = !are_different(fam.paths[i], fam.paths[j], mod4);
    CHECK(counterexample);
}

TEST_CASE("k4_family")
{
    const auto f4 = k4_family(4);
    REQUIRE(f4.size() == 2);
    CHECK(f4.paths[0] == HamPath({1, 2, 3, 4}));
    CHECK(f4.paths[1] == HamPath({2, 4, 1, 3}));
    const auto f8 = k4_family(8);
    CHECK(f8.size() == 4);
    CHECK(pairwise_valid(f8));
    CHECK(k4_family(12).size() == 8);
    CHECK(pairwise_valid(k4_family(12)));
    CHECK_THROWS_AS(k4_family(6), ValidationError);
}

TEST_CASE("sH_set")
{
    std::vector<Vertex> id(6);
    std::iota(id.begin(), id.end(), 1);
    const auto s = sH_set(HamPath(id));
    REQUIRE(s.size() == 4);
    CHECK(s[1] == HamPath({2, 1, 3, 4, 5, 6}));
    CHECK(s[2] == HamPath({1, 2, 3, 4, 6, 5}));
    CHECK(s[3] == HamPath({2, 1, 3, 4, 6, 5}));
    CHECK(cycle_lengths(union_of(s[0], s[1])) == std::set<int>{3});
    CHECK(cycle_lengths(union_of(s[0], s[3])) == std::set<int>{3});

    CHECK_THROWS_AS(sH_set(HamPath({1, 2, 3, 4})), ValidationError);
    CHECK_THROWS_AS(sH_set(HamPath({1, 2, 3, 4, 5})), ValidationError);
}

TEST_CASE("sH_set is odd-only and blocked by the obstruction paths, under relabeling")
{
    std::mt19937 rng(99);
    for (int n : {6, 8}) {
        std::vector<Vertex> seq(static_cast<std::size_t>(n));
        std::iota(seq.begin(), seq.end(), 1);
        for (int trial = 0; trial < 5; ++trial) {
            const HamPath h(seq);
            const auto s = sH_set(h);
            CHECK(s[0] == h);
            for (std::size_t i = 0; i < s.size(); ++i)
                for (std::size_t j = i + 1; j < s.size(); ++j) {
                    const auto lengths = cycle_lengths(union_of(s[i], s[j]));
                    CHECK_FALSE(lengths.empty());
                    for (int l : lengths)
                        CHECK(l % 2 == 1);
                }
            const auto obstructions = sH_obstructions(h);
            CHECK(obstructions.size() == static_cast<std::size_t>(2 * (n / 2 - 2)));
            for (const auto& o : obstructions)
                CHECK(std::any_of(s.begin(), s.end(), [&](const HamPath& m) {
                    return are_different(m, o, DifferencePredicate::cycle_in(DSpec::even()));
                }));
            std::shuffle(seq.begin(), seq.end(), rng);
        }
    }
}

TEST_CASE("sH_set at n = 4 fails pairwise oddness")
{
    // H = (1,2,3,4) and H_lr = (2,1,4,3) form a 4-cycle.
    CHECK(cycle_lengths(union_of(HamPath({1, 2, 3, 4}), HamPath({2, 1, 4, 3}))) == std::set<int>{4});
}

TEST_CASE("m53_matching_family")
{
    const auto f = m53_matching_family();
    CHECK(f.size() == 10);
    CHECK(canonical_and_distinct(f));
    CHECK(pairwise_valid(f));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i + 1; j < f.size(); ++j)
            CHECK(cycle_lengths(union_of(f.paths[i], f.paths[j])).contains(3));

    // Each C5 holds 5 paths and each K2,3 holds 6, counted from the shared table.
    const auto inc = m53_incidence();
    std::set<HamPath> all_shared;
    for (const auto& row : inc.shared)
        for (const auto& p : row)
            if (p)
                all_shared.insert(*p);
    CHECK(all_shared.size() == 60);
}
