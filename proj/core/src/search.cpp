#include <effdom/error.hpp>
#include <effdom/search.hpp>

#include <algorithm>
#include <deque>
#include <thread>

namespace effdom {

namespace {

constexpr std::int64_t unassigned = -1;

class Searcher
{
public:
    Searcher(const Graph & g, std::int64_t j, std::int64_t k, std::uint64_t node_limit)
        : _g(g), _j(j), _k(k), _limit(node_limit), _value(g.order(), unassigned), _sum(g.order(), 0), _free(g.order())
    {
        for (Vertex v = 0; v < g.order(); ++v)
            _free[v] = static_cast<std::int64_t>(g.degree(v)) + 1;
    }

    // Propagates from an empty assignment; false if already contradictory.
    auto start() -> bool
    {
        for (Vertex v = 0; v < _g.order(); ++v)
            _queue.push_back(v);
        return propagate();
    }

    // Assigns v = x and propagates; on failure the state is rolled back.
    auto try_assign(Vertex v, std::int64_t x) -> bool
    {
        const auto mark = _trail.size();
        assign(v, x);
        if (propagate())
            return true;
        undo(mark);
        return false;
    }

    auto value(Vertex v) const -> std::int64_t { return _value[v]; }
    auto trail_size() const -> std::size_t { return _trail.size(); }
    auto undo(std::size_t mark) -> void
    {
        _queue.clear();
        while (_trail.size() > mark) {
            const Vertex v = _trail.back();
            _trail.pop_back();
            const auto x = _value[v];
            _value[v] = unassigned;
            _sum[v] -= x;
            ++_free[v];
            for (auto u : _g.neighbors(v)) {
                _sum[u] -= x;
                ++_free[u];
            }
        }
    }

    // Depth-first enumeration from position pos of order; on_solution returns
    // false to stop. Returns false if the search was stopped early.
    template <class Callback>
    auto dfs(std::span<const Vertex> order, std::size_t pos, Callback & on_solution) -> bool
    {
        while (pos < order.size() && _value[order[pos]] != unassigned)
            ++pos;
        if (pos == order.size())
            return on_solution(_value);
        const Vertex v = order[pos];
        for (std::int64_t x = 0; x <= _j; ++x) {
            if (++_nodes > _limit) {
                _hit_limit = true;
                return false;
            }
            const auto mark = _trail.size();
            if (! try_assign(v, x))
                continue;
            const bool go_on = dfs(order, pos + 1, on_solution);
            undo(mark);
            if (! go_on)
                return false;
        }
        return true;
    }

    auto nodes() const -> std::uint64_t { return _nodes; }
    auto hit_limit() const -> bool { return _hit_limit; }

private:
    auto assign(Vertex v, std::int64_t x) -> void
    {
        _value[v] = x;
        _trail.push_back(v);
        _sum[v] += x;
        --_free[v];
        _queue.push_back(v);
        for (auto u : _g.neighbors(v)) {
            _sum[u] += x;
            --_free[u];
            _queue.push_back(u);
        }
    }

    auto force_all(Vertex u, std::int64_t x) -> void
    {
        if (_value[u] == unassigned)
            assign(u, x);
        for (auto w : _g.neighbors(u))
            if (_value[w] == unassigned)
                assign(w, x);
    }

    auto propagate() -> bool
    {
        while (! _queue.empty()) {
            const Vertex u = _queue.front();
            _queue.pop_front();
            const auto slack = _k - _sum[u];
            const auto free = _free[u];
            if (slack < 0 || slack > _j * free)
                return false;
            if (free == 0)
                continue;
            if (slack == 0)
                force_all(u, 0);
            else if (slack == _j * free)
                force_all(u, _j);
            else if (free == 1)
                force_all(u, slack);
        }
        return true;
    }

    const Graph & _g;
    std::int64_t _j, _k;
    std::uint64_t _limit;
    std::uint64_t _nodes = 0;
    bool _hit_limit = false;
    std::vector<std::int64_t> _value, _sum, _free;
    std::vector<Vertex> _trail;
    std::deque<Vertex> _queue;
};

auto resolve_order(const Graph & g, const SearchConfig & config) -> std::vector<Vertex>
{
    if (config.j < 0)
        throw Error(Errc::BadParameter, "j must be nonnegative");
    if (config.order.empty())
        return bfs_order(g);
    std::vector<Vertex> sorted = config.order;
    std::sort(sorted.begin(), sorted.end());
    bool permutation = sorted.size() == g.order();
    for (std::size_t i = 0; permutation && i < sorted.size(); ++i)
        permutation = sorted[i] == i;
    if (! permutation)
        throw Error(Errc::BadParameter, "search order must be a permutation of the vertices");
    return config.order;
}

auto trivially_empty(const Graph & g, const SearchConfig & config) -> bool
{
    const auto top = config.j * (1 + static_cast<std::int64_t>(g.order() == 0 ? 0 : g.max_degree()));
    return config.k < 0 || config.k > top;
}

auto limit_message(std::uint64_t limit) -> std::string
{
    return "NodeLimitExceeded: stopped after " + std::to_string(limit) + " nodes; results are partial";
}

struct Collector
{
    const SearchConfig & config;
    std::vector<DominatingFunction> functions;
    std::uint64_t count = 0;

    auto operator()(const std::vector<std::int64_t> & values) -> bool
    {
        ++count;
        if (! config.count_only)
            functions.push_back(DominatingFunction{values, config.j, config.k});
        return true;
    }
};

}

auto bfs_order(const Graph & g) -> std::vector<Vertex>
{
    std::vector<Vertex> order;
    order.reserve(g.order());
    std::vector<bool> seen(g.order(), false);
    for (Vertex root = 0; root < g.order(); ++root) {
        if (seen[root])
            continue;
        seen[root] = true;
        std::size_t head = order.size();
        order.push_back(root);
        while (head < order.size()) {
            const Vertex v = order[head++];
            for (auto u : g.neighbors(v))
                if (! seen[u]) {
                    seen[u] = true;
                    order.push_back(u);
                }
        }
    }
    return order;
}

auto enumerate_efficient(const Graph & g, const SearchConfig & config) -> SearchOutcome
{
    const auto order = resolve_order(g, config);
    SearchOutcome outcome;
    if (trivially_empty(g, config))
        return outcome;

    Searcher root(g, config.j, config.k, config.node_limit);
    if (! root.start())
        return outcome;

    std::size_t first = 0;
    while (first < order.size() && root.value(order[first]) != unassigned)
        ++first;

    const unsigned threads = std::max(1U, config.threads);
    if (threads == 1 || first == order.size()) {
        Collector collect{config, {}, 0};
        root.dfs(order, 0, collect);
        outcome.functions = std::move(collect.functions);
        outcome.count = collect.count;
        outcome.nodes = root.nodes();
        outcome.exhausted = ! root.hit_limit();
    } else {
        // One task per value of the first free vertex, each with its own budget.
        const auto branches = static_cast<std::size_t>(config.j + 1);
        std::vector<Collector> collected(branches, Collector{config, {}, 0});
        std::vector<std::uint64_t> nodes(branches, 0);
        std::vector<bool> limited(branches, false);
        auto work = [&](unsigned worker) {
            for (std::size_t x = worker; x < branches; x += threads) {
                Searcher s = root;
                if (! s.try_assign(order[first], static_cast<std::int64_t>(x)))
                    continue;
                s.dfs(order, first + 1, collected[x]);
                nodes[x] = s.nodes() + 1;
                limited[x] = s.hit_limit();
            }
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(threads, branches); ++t)
            pool.emplace_back(work, t);
        for (auto & t : pool)
            t.join();
        for (std::size_t x = 0; x < branches; ++x) {
            outcome.count += collected[x].count;
            outcome.nodes += nodes[x];
            outcome.exhausted = outcome.exhausted && ! limited[x];
            std::move(collected[x].functions.begin(), collected[x].functions.end(), std::back_inserter(outcome.functions));
        }
    }

    std::sort(outcome.functions.begin(), outcome.functions.end(),
              [](const DominatingFunction & a, const DominatingFunction & b) { return a.values < b.values; });
    if (! outcome.exhausted)
        outcome.diagnostic = limit_message(config.node_limit);
    return outcome;
}

auto exists_efficient(const Graph & g, const SearchConfig & config) -> ExistsOutcome
{
    const auto order = resolve_order(g, config);
    ExistsOutcome outcome;
    if (trivially_empty(g, config))
        return outcome;

    Searcher s(g, config.j, config.k, config.node_limit);
    if (! s.start())
        return outcome;
    auto take_first = [&](const std::vector<std::int64_t> & values) {
        outcome.witness = DominatingFunction{values, config.j, config.k};
        return false;
    };
    s.dfs(order, 0, take_first);
    outcome.nodes = s.nodes();
    outcome.exhausted = ! s.hit_limit();
    if (! outcome.exhausted)
        outcome.diagnostic = limit_message(config.node_limit);
    return outcome;
}

auto k_spectrum(const Graph & g, std::int64_t j, std::uint64_t node_limit, unsigned threads) -> KSpectrum
{
    const auto r = g.regular_degree();
    if (! r)
        throw Error(Errc::NotRegular, g.name() + " is not regular");
    KSpectrum spectrum;
    for (std::int64_t k = 0; k <= j * static_cast<std::int64_t>(*r + 1); ++k) {
        SearchConfig config;
        config.j = j;
        config.k = k;
        config.node_limit = node_limit;
        config.count_only = true;
        config.threads = threads;
        const auto outcome = enumerate_efficient(g, config);
        spectrum.counts[k] = outcome.count;
        if (! outcome.exhausted)
            spectrum.incomplete.push_back(k);
    }
    return spectrum;
}

}
