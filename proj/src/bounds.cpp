#include "hamdiff/bounds.hpp"

#include <algorithm>
#include <map>

namespace hamdiff {

namespace mp = boost::multiprecision;

std::string format_rational(const Rational& r)
{
    const Integer num = mp::numerator(r);
    const Integer den = mp::denominator(r);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

Integer factorial_int(int k)
{
    if (k < 0)
        throw ValidationError("factorial of a negative number");
    Integer f = 1;
    for (int i = 2; i <= k; ++i)
        f *= i;
    return f;
}

Integer binomial_int(int n, int k)
{
    if (k < 0 || k > n)
        return 0;
    return factorial_int(n) / (factorial_int(k) * factorial_int(n - k));
}

namespace {

Rational pow_rational(Rational base, int exp)
{
    Rational out = 1;
    for (int i = 0; i < exp; ++i)
        out *= base;
    return out;
}

void require(bool ok, std::string_view name, const std::string& message)
{
    if (!ok)
        throw ValidationError(std::string(name) + ": " + message);
}

Rational half_binomial_class_count(int n)
{
    // Number of almost balanced complete bipartite subgraphs of K_n.
    if (n % 2)
        return Rational(binomial_int(n, n / 2));
    return Rational(binomial_int(n, n / 2)) / 2;
}

}  // namespace

const std::vector<std::string>& formula_names()
{
    static const std::vector<std::string> names{"all", "prop_odd", "gre", "more", "notmore",
                                                "fixed_endpoint", "k4", "k4_bipartite", "k4_tripartite"};
    return names;
}

Rational tripartite_path_lower_bound(int n)
{
    require(n >= 3 && n % 3 == 0, "tripartite bound", "requires 3 | n");
    const Integer k_fact = factorial_int(n / 3);
    return Rational(k_fact * k_fact * k_fact * 3 * mp::pow(Integer(2), static_cast<unsigned>(n - 1))) /
           ((n + 1) * (n + 1));
}

FormulaTable eval_formula(std::string_view name, int n, std::optional<int> c)
{
    require(n >= 2, name, "n must be >= 2");
    FormulaTable t{std::string(name), n, c, std::nullopt, std::nullopt};
    const Rational half_paths = Rational(factorial_int(n)) / 2;

    if (name == "all") {
        t.lower = t.upper = half_paths;
    } else if (name == "prop_odd") {
        t.lower = t.upper = half_binomial_class_count(n);
    } else if (name == "gre") {
        require(n >= 3 && n != 4, name, "requires n >= 3 and n != 4");
        const Rational nf = factorial_int(n);
        if (n % 2) {
            const int ceil_half = (n + 1) / 2;
            t.lower = nf / (2 * Rational(n - 3 + binomial_int(ceil_half + 1, 2)));
            t.upper = nf / (2 * n);
        } else {
            t.lower = nf / (2 * Rational(binomial_int(n / 2 + 1, 2)));
            t.upper = nf / 8;
        }
    } else if (name == "more") {
        require(c.has_value(), name, "requires c");
        require(*c >= 2 && n % *c == 0, name, "requires c >= 2 and c | n");
        t.lower = Rational(factorial_int(n / *c));
    } else if (name == "notmore") {
        require(c.has_value(), name, "requires c");
        require(*c >= 3 && n % *c == 0, name, "requires c >= 3 and c | n");
        t.lower = Rational(factorial_int(n / *c - 1));
    } else if (name == "fixed_endpoint") {
        require(!c || (*c >= 3 && *c != 4), name, "requires c > 1 with c not in {2, 4}");
        t.lower = Rational(factorial_int(n)) / (2 * Rational(binomial_int(n, 2)));
    } else if (name == "k4") {
        if (n % 4 == 0)
            t.lower = Rational(mp::pow(Integer(2), static_cast<unsigned>(n / 4)));
        t.upper = Rational((n + 1) * (n + 1)) * pow_rational(Rational(3, 2), n - 1);
    } else if (name == "k4_bipartite") {
        t.upper = half_binomial_class_count(n);
    } else if (name == "k4_tripartite") {
        require(n % 3 == 0, name, "requires 3 | n");
        t.upper = Rational(factorial_int(n)) / (2 * tripartite_path_lower_bound(n));
    } else {
        throw ValidationError("unknown formula '" + std::string(name) + "'");
    }
    return t;
}

std::vector<FormulaTable> applicable_formulas(int n, std::optional<int> c)
{
    std::vector<FormulaTable> out;
    for (const auto& name : formula_names()) {
        try {
            out.push_back(eval_formula(name, n, c));
        } catch (const ValidationError&) {
        }
    }
    return out;
}

Bipartition bipartition_of_path(const HamPath& h)
{
    Bipartition b;
    for (std::size_t i = 0; i < h.seq().size(); ++i)
        (i % 2 ? b.second : b.first).insert(h[i]);
    if (!b.first.contains(1))
        std::swap(b.first, b.second);
    return b;
}

std::vector<std::pair<Vertex, Vertex>> ham_cycle_closure(const HamPath& h)
{
    auto edges = h.edges();
    edges.emplace_back(std::min(h.front(), h.back()), std::max(h.front(), h.back()));
    std::sort(edges.begin(), edges.end());
    return edges;
}

namespace {

using Edge = std::pair<Vertex, Vertex>;

std::set<Edge> cycle_edges(const Cycle& c)
{
    std::set<Edge> out;
    for (std::size_t i = 0; i < c.verts.size(); ++i) {
        const Vertex u = c.verts[i];
        const Vertex v = c.verts[(i + 1) % c.verts.size()];
        out.emplace(std::min(u, v), std::max(u, v));
    }
    return out;
}

}  // namespace

Cycle third_cycle(const Cycle& c1, const Cycle& c2, const UnionGraph& g)
{
    if (!is_cycle_of(c1, g) || !is_cycle_of(c2, g))
        throw ValidationError("third_cycle: inputs must be cycles of the graph");
    const auto e1 = cycle_edges(c1);
    const auto e2 = cycle_edges(c2);
    std::vector<Edge> shared;
    std::set_intersection(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(shared));
    if (shared.empty())
        throw ValidationError("third_cycle: cycles share no edge");

    std::map<Vertex, int> shared_degree;
    for (auto [u, v] : shared) {
        ++shared_degree[u];
        ++shared_degree[v];
    }
    // A path with s edges spans s + 1 vertices, two of them endpoints.
    const auto endpoints = std::count_if(shared_degree.begin(), shared_degree.end(),
                                         [](const auto& kv) { return kv.second == 1; });
    const bool degrees_ok = std::all_of(shared_degree.begin(), shared_degree.end(),
                                        [](const auto& kv) { return kv.second <= 2; });
    if (!degrees_ok || endpoints != 2 || shared_degree.size() != shared.size() + 1)
        throw ValidationError("third_cycle: shared edges do not form a single path");

    const std::set<Vertex> v1(c1.verts.begin(), c1.verts.end());
    const std::set<Vertex> v2(c2.verts.begin(), c2.verts.end());
    std::vector<Vertex> common;
    std::set_intersection(v1.begin(), v1.end(), v2.begin(), v2.end(), std::back_inserter(common));
    if (common.size() != shared_degree.size())
        throw ValidationError("third_cycle: cycles meet outside the shared path");

    std::set<Edge> rest;
    for (const auto& e : e1)
        if (!e2.contains(e))
            rest.insert(e);
    for (const auto& e : e2)
        if (!e1.contains(e))
            rest.insert(e);

    std::map<Vertex, std::vector<Vertex>> nb;
    for (auto [u, v] : rest) {
        nb[u].push_back(v);
        nb[v].push_back(u);
    }
    std::vector<Vertex> walk{rest.begin()->first};
    Vertex prev = 0;
    while (true) {
        const Vertex cur = walk.back();
        const auto& adj = nb[cur];
        if (adj.size() != 2)
            throw std::logic_error("third_cycle: remaining edges are not a cycle");
        const Vertex next = adj[0] != prev ? adj[0] : adj[1];
        if (next == walk.front())
            break;
        prev = cur;
        walk.push_back(next);
    }
    if (walk.size() != rest.size())
        throw std::logic_error("third_cycle: remaining edges are not a single cycle");
    Cycle out = canonical_cycle(std::move(walk));
    if (!is_cycle_of(out, g))
        throw std::logic_error("third_cycle: result is not a cycle of the graph");
    return out;
}

std::uint64_t count_multipartite_ham_paths(const std::vector<int>& part_sizes)
{
    int total = 0;
    for (int s : part_sizes) {
        if (s < 0)
            throw ValidationError("part sizes must be nonnegative");
        total += s;
    }
    if (total > kMaxMultipartite)
        throw CapacityError("count_multipartite_ham_paths supports at most " +
                            std::to_string(kMaxMultipartite) + " vertices");
    if (total < 2)
        return 0;

    // Strings of part labels, no two equal neighbours, with the given counts.
    std::map<std::pair<std::vector<int>, int>, std::uint64_t> memo;
    auto strings = [&](auto&& self, std::vector<int>& left, int last) -> std::uint64_t {
        if (std::all_of(left.begin(), left.end(), [](int x) { return x == 0; }))
            return 1;
        auto key = std::make_pair(left, last);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        std::uint64_t sum = 0;
        for (std::size_t p = 0; p < left.size(); ++p) {
            if (left[p] == 0 || static_cast<int>(p) == last)
                continue;
            --left[p];
            sum += self(self, left, static_cast<int>(p));
            ++left[p];
        }
        memo.emplace(std::move(key), sum);
        return sum;
    };
    std::vector<int> left = part_sizes;
    std::uint64_t sequences = strings(strings, left, -1);
    for (int s : part_sizes)
        for (int i = 2; i <= s; ++i)
            sequences *= static_cast<std::uint64_t>(i);
    return sequences / 2;
}

std::uint64_t string_type_count(int n)
{
    if (n < 1)
        throw ValidationError("string_type_count requires n >= 1");
    std::uint64_t types = 0;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; a + b <= n; ++b)
            ++types;
    return types;
}

}  // namespace hamdiff
