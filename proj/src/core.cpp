#include "hamdiff/core.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

namespace hamdiff {

namespace {

void require_permutation(const std::vector<Vertex>& seq)
{
    const int n = static_cast<int>(seq.size());
    if (n < 2)
        throw ValidationError("a Hamiltonian path needs n >= 2 vertices");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (Vertex v : seq) {
        if (v < 1 || v > n)
            throw ValidationError("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (seen[static_cast<std::size_t>(v)])
            throw ValidationError("vertex " + std::to_string(v) + " repeated");
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::size_t factorial(int k)
{
    std::size_t f = 1;
    for (int i = 2; i <= k; ++i)
        f *= static_cast<std::size_t>(i);
    return f;
}

std::uint32_t bit(Vertex v) { return std::uint32_t{1} << (v - 1); }

}  // namespace

HamPath::HamPath(std::vector<Vertex> seq)
{
    require_permutation(seq);
    if (seq.back() < seq.front())
        std::reverse(seq.begin(), seq.end());
    seq_ = std::move(seq);
}

std::vector<std::pair<Vertex, Vertex>> HamPath::edges() const
{
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(seq_.size() - 1);
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i)
        out.emplace_back(std::min(seq_[i], seq_[i + 1]), std::max(seq_[i], seq_[i + 1]));
    return out;
}

std::string HamPath::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(seq_[i]);
    }
    return out;
}

HamPath HamPath::parse(std::string_view text)
{
    std::vector<Vertex> seq;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(',', pos), text.size());
        int value = 0;
        const auto* first = text.data() + pos;
        const auto* last = text.data() + end;
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || first == last)
            throw ValidationError("malformed path '" + std::string(text) + "'");
        seq.push_back(value);
        pos = end + 1;
    }
    return HamPath(std::move(seq));
}

HamPath canonicalize(std::vector<Vertex> seq) { return HamPath(std::move(seq)); }

std::vector<HamPath> enumerate_paths(int n)
{
    if (n < 2 || n > kMaxEnumerateN)
        throw CapacityError("enumerate_paths supports 2 <= n <= " + std::to_string(kMaxEnumerateN));
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    std::vector<HamPath> out;
    out.reserve(factorial(n) / 2);
    // next_permutation walks all sequences lexicographically; the canonical
    // ones are exactly those with first < last.
    do {
        if (seq.front() < seq.back())
            out.emplace_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return out;
}

std::size_t path_index(const HamPath& path)
{
    const auto& seq = path.seq();
    const int n = path.n();
    std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
    std::size_t rank = 0;
    for (int i = 0; i < n; ++i) {
        const int remaining_after = n - i - 1;
        for (Vertex x = 1; x < seq[static_cast<std::size_t>(i)]; ++x) {
            if (used[static_cast<std::size_t>(x)])
                continue;
            // Completions of prefix seq[0..i-1] + x whose last exceeds first.
            const Vertex first = i == 0 ? x : seq[0];
            if (remaining_after == 0) {
                rank += x > first ? 1 : 0;
                continue;
            }
            std::size_t larger = 0;
            for (Vertex r = first + 1; r <= n; ++r)
                if (!used[static_cast<std::size_t>(r)] && r != x)
                    ++larger;
            rank += larger * factorial(remaining_after - 1);
        }
        used[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = true;
    }
    return rank;
}

UnionGraph::UnionGraph(const HamPath& first, const HamPath& second)
{
    if (first.n() != second.n())
        throw ValidationError("union of paths with different n");
    if (first.n() > kMaxGraphN)
        throw CapacityError("UnionGraph supports n <= " + std::to_string(kMaxGraphN));
    n_ = first.n();
    adj_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : first.edges())
        add_edge(u, v, EdgeOrigin::FirstOnly);
    for (auto [u, v] : second.edges())
        add_edge(u, v, EdgeOrigin::SecondOnly);
    std::sort(edges_.begin(), edges_.end(),
              [](const UnionEdge& a, const UnionEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
}

UnionGraph::UnionGraph(int n, std::span<const std::pair<Vertex, Vertex>> edges)
{
    if (n < 1 || n > kMaxGraphN)
        throw CapacityError("UnionGraph supports 1 <= n <= " + std::to_string(kMaxGraphN));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n || u == v)
            throw ValidationError("invalid edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        add_edge(std::min(u, v), std::max(u, v), EdgeOrigin::FirstOnly);
    }
    std::sort(edges_.begin(), edges_.end(),
              [](const UnionEdge& a, const UnionEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
}

void UnionGraph::add_edge(Vertex u, Vertex v, EdgeOrigin origin)
{
    if (adj_[static_cast<std::size_t>(u)] & bit(v)) {
        for (auto& e : edges_)
            if (e.u == u && e.v == v && e.origin != origin)
                e.origin = EdgeOrigin::Both;
        return;
    }
    adj_[static_cast<std::size_t>(u)] |= bit(v);
    adj_[static_cast<std::size_t>(v)] |= bit(u);
    edges_.push_back({u, v, origin});
}

bool UnionGraph::has_edge(Vertex u, Vertex v) const
{
    if (u < 1 || u > n_ || v < 1 || v > n_)
        return false;
    return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int UnionGraph::degree(Vertex v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

UnionGraph union_of(const HamPath& a, const HamPath& b) { return UnionGraph(a, b); }

Cycle canonical_cycle(std::vector<Vertex> verts)
{
    if (verts.size() < 3)
        return Cycle{std::move(verts)};
    auto min_it = std::min_element(verts.begin(), verts.end());
    std::rotate(verts.begin(), min_it, verts.end());
    if (verts.back() < verts[1])
        std::reverse(verts.begin() + 1, verts.end());
    return Cycle{std::move(verts)};
}

bool is_cycle_of(const Cycle& c, const UnionGraph& g)
{
    const auto& v = c.verts;
    if (v.size() < 3)
        return false;
    std::vector<Vertex> sorted = v;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        return false;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!g.has_edge(v[i], v[(i + 1) % v.size()]))
            return false;
    return true;
}

namespace {

// Cycles are rooted at their smallest vertex `start`; the walk only uses
// vertices above start, and the orientation check (second < last) keeps one
// of the two traversal directions.
struct CycleWalker {
    const UnionGraph& g;
    const std::function<bool(const Cycle&)>* visit;
    std::uint64_t* length_mask;
    std::vector<Vertex> stack;
    Vertex start = 0;
    std::uint32_t allowed = 0;

    bool extend(Vertex v, std::uint32_t visited)
    {
        const std::uint32_t nb = g.neighbours(v);
        if (stack.size() >= 3 && (nb & bit(start)) && stack[1] < stack.back()) {
            if (length_mask)
                *length_mask |= std::uint64_t{1} << stack.size();
            if (visit && !(*visit)(Cycle{stack}))
                return false;
        }
        for (std::uint32_t next = nb & allowed & ~visited; next; next &= next - 1) {
            const Vertex w = std::countr_zero(next) + 1;
            stack.push_back(w);
            const bool go_on = extend(w, visited | bit(w));
            stack.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }

    bool run()
    {
        const int n = g.n();
        for (start = 1; start <= n - 2; ++start) {
            allowed = 0;
            for (Vertex w = start + 1; w <= n; ++w)
                allowed |= bit(w);
            stack.assign(1, start);
            if (!extend(start, bit(start)))
                return false;
        }
        return true;
    }
};

}  // namespace

bool for_each_cycle(const UnionGraph& g, const std::function<bool(const Cycle&)>& visit)
{
    CycleWalker walker{g, &visit, nullptr, {}, 0, 0};
    return walker.run();
}

std::uint64_t cycle_length_mask(const UnionGraph& g)
{
    std::uint64_t mask = 0;
    CycleWalker walker{g, nullptr, &mask, {}, 0, 0};
    walker.run();
    return mask;
}

std::set<int> cycle_lengths(const UnionGraph& g)
{
    std::set<int> out;
    for (std::uint64_t m = cycle_length_mask(g); m; m &= m - 1)
        out.insert(std::countr_zero(m));
    return out;
}

DSpec DSpec::divisible_by(int c)
{
    if (c < 2)
        throw ValidationError("divisibility modulus must be >= 2");
    return DSpec(Kind::DivisibleBy, c, {});
}

DSpec DSpec::not_divisible_by(int c)
{
    if (c < 2)
        throw ValidationError("divisibility modulus must be >= 2");
    return DSpec(Kind::NotDivisibleBy, c, {});
}

DSpec DSpec::explicit_set(std::set<int> lengths)
{
    if (lengths.empty())
        throw ValidationError("explicit length set must be nonempty");
    if (*lengths.begin() < 3)
        throw ValidationError("cycle lengths must be >= 3");
    return DSpec(Kind::ExplicitSet, 0, std::move(lengths));
}

bool DSpec::contains(int length) const
{
    if (length < 3)
        return false;
    switch (kind_) {
    case Kind::All: return true;
    case Kind::Odd: return length % 2 != 0;
    case Kind::Even: return length % 2 == 0;
    case Kind::DivisibleBy: return length % c_ == 0;
    case Kind::NotDivisibleBy: return length % c_ != 0;
    case Kind::ExplicitSet: return set_.contains(length);
    }
    return false;
}

std::string DSpec::render() const
{
    switch (kind_) {
    case Kind::All: return "all";
    case Kind::Odd: return "odd";
    case Kind::Even: return "even";
    case Kind::DivisibleBy: return "div=" + std::to_string(c_);
    case Kind::NotDivisibleBy: return "ndiv=" + std::to_string(c_);
    case Kind::ExplicitSet: {
        std::string out = "in=";
        bool first = true;
        for (int l : set_) {
            if (!first)
                out += ',';
            out += std::to_string(l);
            first = false;
        }
        return out;
    }
    }
    return {};
}

namespace {

int parse_int(std::string_view text, std::size_t offset, std::size_t& consumed)
{
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + offset, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == text.data() + offset)
        throw DSpecParseError("expected integer", offset);
    consumed = static_cast<std::size_t>(ptr - text.data()) - offset;
    return value;
}

}  // namespace

DSpec parse_dspec(std::string_view text)
{
    if (text == "all")
        return DSpec::all();
    if (text == "odd")
        return DSpec::odd();
    if (text == "even")
        return DSpec::even();

    auto modulus_after = [&](std::size_t offset) {
        std::size_t used = 0;
        const int c = parse_int(text, offset, used);
        if (offset + used != text.size())
            throw DSpecParseError("trailing characters", offset + used);
        if (c < 2)
            throw DSpecParseError("modulus must be >= 2", offset);
        return c;
    };

    if (text.starts_with("div="))
        return DSpec::divisible_by(modulus_after(4));
    if (text.starts_with("ndiv="))
        return DSpec::not_divisible_by(modulus_after(5));
    if (text.starts_with("in=")) {
        std::set<int> lengths;
        std::size_t pos = 3;
        while (true) {
            std::size_t used = 0;
            const int l = parse_int(text, pos, used);
            if (l < 3)
                throw DSpecParseError("cycle length must be >= 3", pos);
            lengths.insert(l);
            pos += used;
            if (pos == text.size())
                break;
            if (text[pos] != ',')
                throw DSpecParseError("expected ','", pos);
            ++pos;
        }
        return DSpec::explicit_set(std::move(lengths));
    }

    // Report the first character where no keyword can match.
    static constexpr std::string_view keywords[] = {"all", "odd", "even", "div=", "ndiv=", "in="};
    std::size_t best = 0;
    for (auto kw : keywords) {
        std::size_t i = 0;
        while (i < kw.size() && i < text.size() && kw[i] == text[i])
            ++i;
        best = std::max(best, i);
    }
    throw DSpecParseError("unknown length specification '" + std::string(text) + "'", best);
}

}  // namespace hamdiff
