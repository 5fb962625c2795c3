#include "hamdiff/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace hamdiff {

AdjacencyView::AdjacencyView(const CompatibilityGraph& g) : graph_(&g) {}

namespace {

using Clock = std::chrono::steady_clock;

/// Degeneracy ordering: repeatedly strip a minimum-degree vertex (lowest
/// index on ties); the returned order lists the last-stripped vertex first.
std::vector<std::size_t> degeneracy_order(AdjacencyView g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> degree(n);
    for (std::size_t v = 0; v < n; ++v)
        degree[v] = g.row(v).count();
    std::vector<bool> removed(n, false);
    std::vector<std::size_t> stripped;
    stripped.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t pick = n;
        for (std::size_t v = 0; v < n; ++v)
            if (!removed[v] && (pick == n || degree[v] < degree[pick]))
                pick = v;
        removed[pick] = true;
        stripped.push_back(pick);
        g.row(pick).for_each([&](std::size_t w) {
            if (!removed[w])
                --degree[w];
        });
    }
    std::reverse(stripped.begin(), stripped.end());
    return stripped;
}

struct SharedState {
    std::atomic<std::size_t> best_size{0};
    std::vector<std::size_t> best;  // local indices, guarded by mutex
    std::mutex mutex;
    std::atomic<bool> aborted{false};
    std::atomic<std::uint64_t> nodes{0};
    Clock::time_point deadline;

    void offer(const std::vector<std::size_t>& clique)
    {
        if (clique.size() <= best_size.load())
            return;
        std::lock_guard lock(mutex);
        if (clique.size() > best_size.load()) {
            best = clique;
            best_size.store(clique.size());
        }
    }
};

class Searcher {
public:
    Searcher(const std::vector<Bitset>& rows, SharedState& shared) : rows_(rows), shared_(shared) {}

    /// Greedy colour classes of P; fills vertices/colours in colouring order
    /// so that colours are non-decreasing.
    void colour(const Bitset& p, std::vector<std::size_t>& vertices, std::vector<std::size_t>& colours) const
    {
        vertices.clear();
        colours.clear();
        Bitset uncoloured = p;
        std::size_t k = 0;
        while (!uncoloured.none()) {
            ++k;
            Bitset q = uncoloured;
            while (!q.none()) {
                const std::size_t v = q.first();
                q.reset(v);
                uncoloured.reset(v);
                q.and_not(rows_[v]);
                vertices.push_back(v);
                colours.push_back(k);
            }
        }
    }

    void expand(std::vector<std::size_t>& clique, Bitset p)
    {
        if (shared_.aborted.load(std::memory_order_relaxed))
            return;
        if ((++local_nodes_ & 1023U) == 0) {
            shared_.nodes.fetch_add(1024);
            if (Clock::now() > shared_.deadline) {
                shared_.aborted.store(true);
                return;
            }
        }
        std::vector<std::size_t> vertices;
        std::vector<std::size_t> colours;
        colour(p, vertices, colours);
        for (std::size_t k = vertices.size(); k-- > 0;) {
            if (clique.size() + colours[k] <= shared_.best_size.load(std::memory_order_relaxed))
                return;
            const std::size_t v = vertices[k];
            clique.push_back(v);
            Bitset next = p;
            next &= rows_[v];
            if (next.none())
                shared_.offer(clique);
            else
                expand(clique, std::move(next));
            clique.pop_back();
            p.reset(v);
            if (shared_.aborted.load(std::memory_order_relaxed))
                return;
        }
    }

    void flush_nodes() { shared_.nodes.fetch_add(local_nodes_ & 1023U); }

private:
    const std::vector<Bitset>& rows_;
    SharedState& shared_;
    std::uint64_t local_nodes_ = 0;
};

}  // namespace

bool is_clique(AdjacencyView g, const std::vector<std::size_t>& members)
{
    for (std::size_t m : members)
        if (m >= g.order())
            throw ValidationError("vertex index " + std::to_string(m) + " out of range");
    for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (members[i] == members[j] || !g.adjacent(members[i], members[j]))
                return false;
    return true;
}

bool independent_check(const CompatibilityGraph& g, const std::vector<std::size_t>& members)
{
    return is_clique(AdjacencyView(g), members);
}

CliqueResult max_clique(AdjacencyView g, const CliqueOptions& options)
{
    const auto started = Clock::now();
    const std::size_t n = g.order();
    CliqueResult result;
    if (options.budget.count() <= 0)
        throw ValidationError("clique search budget must be positive");
    if (!options.initial.empty() && !is_clique(g, options.initial))
        throw ValidationError("initial incumbent is not a clique");
    if (n == 0) {
        result.optimal = true;
        return result;
    }

    // Relabel so that local index i is order[i].
    const auto order = degeneracy_order(g);
    std::vector<std::size_t> local(n);
    for (std::size_t i = 0; i < n; ++i)
        local[order[i]] = i;
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
        g.row(order[i]).for_each([&](std::size_t w) { rows[i].set(local[w]); });

    SharedState shared;
    shared.deadline = started + options.budget;

    std::vector<std::size_t> greedy;
    for (std::size_t i = 0; i < n; ++i)
        if (std::all_of(greedy.begin(), greedy.end(), [&](std::size_t u) { return rows[i].test(u); }))
            greedy.push_back(i);
    shared.offer(greedy);
    if (!options.initial.empty()) {
        std::vector<std::size_t> init;
        for (std::size_t m : options.initial)
            init.push_back(local[m]);
        shared.offer(init);
    }

    // Root colouring; branch k starts from {v_k} with candidates among the
    // earlier-coloured vertices, exactly as the sequential loop would.
    Bitset all(n);
    all.set_all();
    std::vector<std::size_t> root_vertices;
    std::vector<std::size_t> root_colours;
    Searcher(rows, shared).colour(all, root_vertices, root_colours);

    std::atomic<std::size_t> next_branch{0};
    auto worker = [&] {
        Searcher searcher(rows, shared);
        std::vector<std::size_t> clique;
        while (true) {
            const std::size_t taken = next_branch.fetch_add(1);
            if (taken >= n || shared.aborted.load())
                break;
            const std::size_t k = n - 1 - taken;
            if (1 + root_colours[k] <= shared.best_size.load())
                break;  // colours are non-increasing from here on
            Bitset p(n);
            for (std::size_t j = 0; j < k; ++j)
                p.set(root_vertices[j]);
            const std::size_t v = root_vertices[k];
            p &= rows[v];
            clique.assign(1, v);
            if (p.none())
                shared.offer(clique);
            else
                searcher.expand(clique, std::move(p));
        }
        searcher.flush_nodes();
    };

    const unsigned workers = std::max(1U, options.workers);
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    for (std::size_t i : shared.best)
        result.members.push_back(order[i]);
    std::sort(result.members.begin(), result.members.end());
    result.size = result.members.size();
    result.nodes_explored = shared.nodes.load();
    result.optimal = !shared.aborted.load();
    result.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - started);
    if (!is_clique(g, result.members))
        throw std::logic_error("internal error: clique search returned a non-clique");
    return result;
}

CliqueResult max_clique(const CompatibilityGraph& g, const CliqueOptions& options)
{
    return max_clique(AdjacencyView(g), options);
}

BipartiteGraph::BipartiteGraph(std::size_t left_count, std::size_t right_count)
    : right_count_(right_count), adj_(left_count)
{
}

void BipartiteGraph::add_edge(std::size_t left, std::size_t right)
{
    if (left >= adj_.size() || right >= right_count_)
        throw ValidationError("bipartite edge index out of range");
    auto& nb = adj_[left];
    auto it = std::lower_bound(nb.begin(), nb.end(), right);
    if (it == nb.end() || *it != right)
        nb.insert(it, right);
}

std::size_t BipartiteGraph::right_degree(std::size_t right) const
{
    std::size_t d = 0;
    for (const auto& nb : adj_)
        d += static_cast<std::size_t>(std::binary_search(nb.begin(), nb.end(), right));
    return d;
}

std::size_t BipartiteGraph::edge_count() const
{
    std::size_t e = 0;
    for (const auto& nb : adj_)
        e += nb.size();
    return e;
}

namespace {

constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

bool augment(const BipartiteGraph& g, std::size_t left, std::vector<std::size_t>& match_right,
             std::vector<bool>& seen)
{
    for (std::size_t r : g.neighbours(left)) {
        if (seen[r])
            continue;
        seen[r] = true;
        if (match_right[r] == kUnmatched || augment(g, match_right[r], match_right, seen)) {
            match_right[r] = left;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> max_matching(const BipartiteGraph& g)
{
    std::vector<std::size_t> match_right(g.right_count(), kUnmatched);
    for (std::size_t l = 0; l < g.left_count(); ++l) {
        std::vector<bool> seen(g.right_count(), false);
        augment(g, l, match_right, seen);
    }
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < g.right_count(); ++r)
        if (match_right[r] != kUnmatched)
            out.emplace_back(match_right[r], r);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace hamdiff
