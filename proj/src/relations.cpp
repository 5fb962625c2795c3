#include "hamdiff/relations.hpp"

#include <algorithm>
#include <thread>
#include <tuple>

namespace hamdiff {

std::string DifferencePredicate::render() const
{
    return kind_ == Kind::ContainsK4 ? std::string("k4") : dspec_.render();
}

DifferencePredicate parse_predicate(std::string_view text)
{
    if (text == "k4")
        return DifferencePredicate::contains_k4();
    return DifferencePredicate::cycle_in(parse_dspec(text));
}

std::optional<std::array<Vertex, 4>> find_k4(const UnionGraph& g)
{
    const int n = g.n();
    for (Vertex a = 1; a <= n; ++a)
        for (Vertex b = a + 1; b <= n; ++b) {
            if (!g.has_edge(a, b))
                continue;
            for (Vertex c = b + 1; c <= n; ++c) {
                if (!g.has_edge(a, c) || !g.has_edge(b, c))
                    continue;
                for (Vertex d = c + 1; d <= n; ++d)
                    if (g.has_edge(a, d) && g.has_edge(b, d) && g.has_edge(c, d))
                        return std::array<Vertex, 4>{a, b, c, d};
            }
        }
    return std::nullopt;
}

bool contains_k4(const UnionGraph& g) { return find_k4(g).has_value(); }

namespace {

std::uint64_t admissible_mask(const DSpec& d, int n)
{
    std::uint64_t mask = 0;
    for (int l = 3; l <= n; ++l)
        if (d.contains(l))
            mask |= std::uint64_t{1} << l;
    return mask;
}

void require_same_order(const HamPath& a, const HamPath& b)
{
    if (a.n() != b.n())
        throw ValidationError("paths of different order: " + std::to_string(a.n()) + " vs " +
                              std::to_string(b.n()));
}

}  // namespace

bool are_different(const HamPath& a, const HamPath& b, const DifferencePredicate& p)
{
    require_same_order(a, b);
    const UnionGraph g(a, b);
    if (p.kind() == DifferencePredicate::Kind::ContainsK4)
        return contains_k4(g);
    return (cycle_length_mask(g) & admissible_mask(p.dspec(), a.n())) != 0;
}

std::optional<Witness> find_witness(const HamPath& a, const HamPath& b, const DifferencePredicate& p)
{
    require_same_order(a, b);
    const UnionGraph g(a, b);
    std::optional<Witness> out;

    if (p.kind() == DifferencePredicate::Kind::ContainsK4) {
        if (auto k4 = find_k4(g))
            out = Witness{Witness::Kind::Clique4, {k4->begin(), k4->end()}};
    } else {
        std::optional<std::tuple<std::size_t, std::vector<Vertex>, std::vector<Vertex>>> best;
        for_each_cycle(g, [&](const Cycle& c) {
            if (!p.dspec().contains(static_cast<int>(c.length())))
                return true;
            std::vector<Vertex> sorted = c.verts;
            std::sort(sorted.begin(), sorted.end());
            auto key = std::make_tuple(c.length(), std::move(sorted), c.verts);
            if (!best || key < *best)
                best = std::move(key);
            return true;
        });
        if (best)
            out = Witness{Witness::Kind::Cycle, std::get<2>(*best)};
    }

    if (out && !witness_is_valid(a, b, p, *out))
        throw std::logic_error("internal error: witness failed re-validation");
    return out;
}

bool witness_is_valid(const HamPath& a, const HamPath& b, const DifferencePredicate& p, const Witness& w)
{
    if (a.n() != b.n())
        return false;
    const UnionGraph g(a, b);
    if (p.kind() == DifferencePredicate::Kind::ContainsK4) {
        if (w.kind != Witness::Kind::Clique4 || w.vertices.size() != 4)
            return false;
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = i + 1; j < 4; ++j)
                if (w.vertices[i] == w.vertices[j] || !g.has_edge(w.vertices[i], w.vertices[j]))
                    return false;
        return true;
    }
    if (w.kind != Witness::Kind::Cycle)
        return false;
    const Cycle c{w.vertices};
    return is_cycle_of(c, g) && p.dspec().contains(static_cast<int>(c.length()));
}

CompatibilityGraph::CompatibilityGraph(int n, DifferencePredicate predicate, std::vector<HamPath> paths,
                                       std::vector<Bitset> rows)
    : n_(n), predicate_(std::move(predicate)), paths_(std::move(paths)), rows_(std::move(rows))
{
    if (rows_.size() != paths_.size())
        throw ValidationError("compatibility graph rows do not match path count");
}

CompatibilityGraph build_compat_graph(int n, const DifferencePredicate& p, unsigned workers)
{
    if (n < 2 || n > kMaxCompatN)
        throw CapacityError("build_compat_graph supports 2 <= n <= " + std::to_string(kMaxCompatN));
    auto paths = enumerate_paths(n);
    const std::size_t count = paths.size();
    std::vector<Bitset> rows(count, Bitset(count));

    const bool k4 = p.kind() == DifferencePredicate::Kind::ContainsK4;
    const std::uint64_t admissible = k4 ? 0 : admissible_mask(p.dspec(), n);

    // Each worker owns rows i = w, w + W, ... and writes only the upper
    // triangle of those rows; the mirror pass runs after the join.
    auto work = [&](unsigned w, unsigned stride) {
        for (std::size_t i = w; i < count; i += stride)
            for (std::size_t j = i + 1; j < count; ++j) {
                const UnionGraph g(paths[i], paths[j]);
                const bool hit = k4 ? contains_k4(g) : (cycle_length_mask(g) & admissible) != 0;
                if (hit)
                    rows[i].set(j);
            }
    };
    workers = std::max(1U, workers);
    if (workers == 1) {
        work(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(work, w, workers);
    }
    for (std::size_t i = 0; i < count; ++i)
        rows[i].for_each([&](std::size_t j) {
            if (j > i)
                rows[j].set(i);
        });
    return CompatibilityGraph(n, p, std::move(paths), std::move(rows));
}

}  // namespace hamdiff
