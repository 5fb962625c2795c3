#include "hamdiff/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace hamdiff {

namespace {

std::string params(std::string name, int n, int c = 0)
{
    name += "(n=" + std::to_string(n);
    if (c)
        name += ",c=" + std::to_string(c);
    return name + ")";
}

/// Canonical, duplicate-free, first-occurrence order.
std::vector<HamPath> dedup(std::vector<HamPath> paths)
{
    std::set<HamPath> seen;
    std::vector<HamPath> out;
    for (auto& p : paths)
        if (seen.insert(p).second)
            out.push_back(std::move(p));
    return out;
}

/// Maps a sequence of labels 1..n through h (label j is h[j-1]).
HamPath relabel(const HamPath& h, const std::vector<Vertex>& labels)
{
    std::vector<Vertex> seq;
    seq.reserve(labels.size());
    for (Vertex l : labels)
        seq.push_back(h[static_cast<std::size_t>(l - 1)]);
    return HamPath(std::move(seq));
}

std::vector<Vertex> identity(int n)
{
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    return seq;
}

/// The Hamiltonian path whose edge set is `edges`, if it is one.
std::optional<HamPath> path_from_edges(int n, const std::vector<std::pair<Vertex, Vertex>>& edges)
{
    if (static_cast<int>(edges.size()) != n - 1)
        return std::nullopt;
    std::vector<std::vector<Vertex>> nb(static_cast<std::size_t>(n) + 1);
    for (auto [u, v] : edges) {
        nb[static_cast<std::size_t>(u)].push_back(v);
        nb[static_cast<std::size_t>(v)].push_back(u);
    }
    Vertex start = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (nb[static_cast<std::size_t>(v)].size() > 2)
            return std::nullopt;
        if (nb[static_cast<std::size_t>(v)].size() == 1 && start == 0)
            start = v;
    }
    if (start == 0)
        return std::nullopt;
    std::vector<Vertex> seq{start};
    Vertex prev = 0;
    Vertex cur = start;
    while (true) {
        Vertex next = 0;
        for (Vertex w : nb[static_cast<std::size_t>(cur)])
            if (w != prev)
                next = w;
        if (next == 0)
            break;
        seq.push_back(next);
        prev = cur;
        cur = next;
        if (static_cast<int>(seq.size()) > n)
            return std::nullopt;
    }
    if (static_cast<int>(seq.size()) != n)
        return std::nullopt;
    return HamPath(std::move(seq));
}

constexpr std::uint64_t kEvenLengths = 0x5555555555555550ULL;

}  // namespace

BlockSystem::BlockSystem(int n, int c) : n_(n), c_(c)
{
    if (c < 2)
        throw ValidationError("block size must be >= 2");
    if (n < c || n % c != 0)
        throw ValidationError("block size " + std::to_string(c) + " does not divide n = " + std::to_string(n));
}

bool BlockSystem::is_block_edge(Vertex u, Vertex v) const
{
    return block_of(u) == block_of(v) && (u - v == 1 || v - u == 1);
}

HamPath BlockSystem::path_for(const std::vector<int>& order) const
{
    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    for (int b : order)
        for (int k = 1; k <= c_; ++k)
            seq.push_back(b * c_ + k);
    return HamPath(std::move(seq));
}

ConstructedFamily greedy_family(int n, const DifferencePredicate& p, std::optional<std::uint64_t> seed)
{
    auto candidates = enumerate_paths(n);
    if (seed) {
        std::mt19937_64 rng(*seed);
        std::shuffle(candidates.begin(), candidates.end(), rng);
    }
    std::vector<HamPath> chosen;
    for (const auto& h : candidates)
        if (std::all_of(chosen.begin(), chosen.end(), [&](const HamPath& f) { return are_different(f, h, p); }))
            chosen.push_back(h);
    std::string name = params("greedy", n) + "[" + p.render() + "]";
    if (seed)
        name += "{seed=" + std::to_string(*seed) + "}";
    return {std::move(chosen), p, std::move(name)};
}

std::size_t count_no_even_neighbors(const HamPath& h)
{
    std::size_t count = 0;
    for (const auto& other : enumerate_paths(h.n()))
        if ((cycle_length_mask(UnionGraph(h, other)) & kEvenLengths) == 0)
            ++count;
    return count;
}

ConstructedFamily bipartite_family(int n)
{
    if (n < 4)
        throw ValidationError("bipartite_family requires n >= 4");
    if (n > kMaxGraphN)
        throw CapacityError("bipartite_family supports n <= " + std::to_string(kMaxGraphN));
    std::vector<Vertex> odds, evens;
    for (Vertex v = 1; v <= n; ++v)
        (v % 2 ? odds : evens).push_back(v);

    // Interleave every ordering of each part; with n even either part may
    // lead, with n odd the larger (odd) part must.
    std::vector<HamPath> paths;
    auto emit = [&](const std::vector<Vertex>& lead, const std::vector<Vertex>& follow) {
        std::vector<Vertex> seq;
        for (std::size_t i = 0; i < lead.size(); ++i) {
            seq.push_back(lead[i]);
            if (i < follow.size())
                seq.push_back(follow[i]);
        }
        paths.emplace_back(std::move(seq));
    };
    std::vector<Vertex> a = odds;
    do {
        std::vector<Vertex> b = evens;
        do {
            emit(a, b);
            if (n % 2 == 0)
                emit(b, a);
        } while (std::next_permutation(b.begin(), b.end()));
    } while (std::next_permutation(a.begin(), a.end()));

    auto unique = dedup(std::move(paths));
    std::sort(unique.begin(), unique.end());
    return {std::move(unique), DifferencePredicate::cycle_in(DSpec::even()), params("bipartite", n)};
}

ConstructedFamily block_family(int n, int c)
{
    const BlockSystem blocks(n, c);
    std::vector<int> order(static_cast<std::size_t>(blocks.block_count()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<HamPath> paths;
    do {
        paths.push_back(blocks.path_for(order));
    } while (std::next_permutation(order.begin(), order.end()));
    return {dedup(std::move(paths)), DifferencePredicate::cycle_in(DSpec::divisible_by(c)), params("block", n, c)};
}

ConstructedFamily shifted_block_family(int n, int c)
{
    if (c < 3)
        throw ValidationError("shifted_block_family requires c >= 3");
    const BlockSystem blocks(n, c);
    std::vector<int> order(static_cast<std::size_t>(blocks.block_count()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<HamPath> paths;
    do {
        paths.push_back(blocks.path_for(order));
    } while (std::next_permutation(order.begin() + 1, order.end()));
    return {dedup(std::move(paths)), DifferencePredicate::cycle_in(DSpec::not_divisible_by(c)),
            params("shifted-block", n, c)};
}

ConstructedFamily fixed_endpoint_family(int n, int c)
{
    if (c < 3 || c == 4)
        throw ValidationError("fixed_endpoint_family requires c > 1 with c not in {2, 4}");
    if (n < 4)
        throw ValidationError("fixed_endpoint_family requires n >= 4");
    if (n > kMaxEnumerateN + 1)
        throw CapacityError("fixed_endpoint_family supports n <= " + std::to_string(kMaxEnumerateN + 1));
    std::vector<Vertex> inner(static_cast<std::size_t>(n - 2));
    std::iota(inner.begin(), inner.end(), 2);
    std::vector<HamPath> paths;
    do {
        std::vector<Vertex> seq{1};
        seq.insert(seq.end(), inner.begin(), inner.end());
        seq.push_back(n);
        paths.emplace_back(std::move(seq));
    } while (std::next_permutation(inner.begin(), inner.end()));
    return {std::move(paths), DifferencePredicate::cycle_in(DSpec::not_divisible_by(c)),
            params("fixed-endpoint", n, c)};
}

ConstructedFamily k4_family(int n)
{
    if (n < 4 || n % 4 != 0)
        throw ValidationError("k4_family requires 4 | n");
    if (n > kMaxGraphN)
        throw CapacityError("k4_family supports n <= " + std::to_string(kMaxGraphN));
    const int tuples = n / 4;
    std::vector<HamPath> paths;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << tuples); ++mask) {
        std::vector<Vertex> seq;
        for (int t = 0; t < tuples; ++t) {
            const Vertex base = 4 * t;
            if (mask >> (tuples - 1 - t) & 1U)
                seq.insert(seq.end(), {base + 2, base + 4, base + 1, base + 3});
            else
                seq.insert(seq.end(), {base + 1, base + 2, base + 3, base + 4});
        }
        paths.emplace_back(std::move(seq));
    }
    return {dedup(std::move(paths)), DifferencePredicate::contains_k4(), params("k4", n)};
}

std::vector<HamPath> sH_set(const HamPath& h)
{
    const int n = h.n();
    if (n % 2 != 0 || n < 6)
        throw ValidationError("sH_set requires even n >= 6");
    auto base = identity(n);
    auto left = base;
    std::swap(left[0], left[1]);
    auto right = base;
    std::swap(right[static_cast<std::size_t>(n - 2)], right[static_cast<std::size_t>(n - 1)]);
    auto both = left;
    std::swap(both[static_cast<std::size_t>(n - 2)], both[static_cast<std::size_t>(n - 1)]);
    return {relabel(h, base), relabel(h, left), relabel(h, right), relabel(h, both)};
}

std::vector<HamPath> sH_obstructions(const HamPath& h)
{
    const int n = h.n();
    std::vector<HamPath> out;
    for (int i = 2; 2 * i < n; ++i) {
        std::vector<Vertex> labels;
        for (Vertex v = 2 * i; v >= 1; --v)
            labels.push_back(v);
        for (Vertex v = 2 * i + 1; v <= n; ++v)
            labels.push_back(v);
        out.push_back(relabel(h, labels));
        // Same shape at the far end: label j -> n + 1 - j.
        for (auto& l : labels)
            l = n + 1 - l;
        out.push_back(relabel(h, labels));
    }
    return out;
}

M53Incidence m53_incidence()
{
    constexpr int n = 5;
    M53Incidence inc{{}, {}, BipartiteGraph(0, 0), {}};

    // Hamiltonian cycles: 1 first, second vertex below the last.
    std::vector<Vertex> rest{2, 3, 4, 5};
    do {
        if (rest.front() > rest.back())
            continue;
        std::vector<Vertex> cyc{1};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            const Vertex u = cyc[i];
            const Vertex v = cyc[(i + 1) % cyc.size()];
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(edges.begin(), edges.end());
        inc.cycles.push_back(std::move(edges));
    } while (std::next_permutation(rest.begin(), rest.end()));

    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b) {
            std::vector<Vertex> large;
            for (Vertex v = 1; v <= n; ++v)
                if (v != a && v != b)
                    large.push_back(v);
            inc.bipartitions.emplace_back(std::vector<Vertex>{a, b}, std::move(large));
        }

    inc.graph = BipartiteGraph(inc.cycles.size(), inc.bipartitions.size());
    inc.shared.assign(inc.cycles.size(), std::vector<std::optional<HamPath>>(inc.bipartitions.size()));
    for (std::size_t l = 0; l < inc.cycles.size(); ++l)
        for (std::size_t r = 0; r < inc.bipartitions.size(); ++r) {
            const auto& small = inc.bipartitions[r].first;
            std::vector<std::pair<Vertex, Vertex>> common;
            for (auto [u, v] : inc.cycles[l]) {
                const bool u_small = std::find(small.begin(), small.end(), u) != small.end();
                const bool v_small = std::find(small.begin(), small.end(), v) != small.end();
                if (u_small != v_small)
                    common.emplace_back(u, v);
            }
            if (auto path = path_from_edges(n, common)) {
                inc.graph.add_edge(l, r);
                inc.shared[l][r] = std::move(path);
            }
        }
    return inc;
}

ConstructedFamily m53_matching_family()
{
    const auto inc = m53_incidence();
    std::vector<HamPath> paths;
    for (auto [l, r] : max_matching(inc.graph))
        paths.push_back(*inc.shared[l][r]);
    return {dedup(std::move(paths)), DifferencePredicate::cycle_in(DSpec::explicit_set({3})), "m53(n=5)"};
}

}  // namespace hamdiff
