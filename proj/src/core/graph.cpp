#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace evosir {

evolving_graph evolving_graph::erdos_renyi(std::uint64_t n, double mu, rng& rnd) {
    evolving_graph g(n);
    if (n < 2)
        return g;
    if (mu < 0.0 || mu > static_cast<double>(n - 1))
        throw domain_error("erdos_renyi: mu must lie in [0, n-1], got " + std::to_string(mu));
    const double p = mu / static_cast<double>(n);
    if (p <= 0.0)
        return g;

    // Batagelj-Brandes skip sampling over the n(n-1)/2 pair sequence.
    const double log_q = std::log1p(-p);
    std::uint64_t v = 1, w = static_cast<std::uint64_t>(-1);
    while (v < n) {
        const double r = rnd.uniform_pos();
        w += 1 + static_cast<std::uint64_t>(std::floor(std::log(r) / log_q));
        while (w >= v && v < n) {
            w -= v;
            ++v;
        }
        if (v < n)
            g.add_edge(static_cast<vertex_id>(v), static_cast<vertex_id>(w));
    }
    return g;
}

edge_id evolving_graph::add_edge(vertex_id u, vertex_id v) {
    if (u == v)
        throw state_error("add_edge: self-loop rejected");
    const edge_id e = static_cast<edge_id>(edges_.size());
    edges_.push_back({u, v, true});
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
    ++live_edges_;
    return e;
}

void evolving_graph::detach(vertex_id v, edge_id e) {
    auto& list = incidence_[v];
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] == e) {
            list[i] = list.back();
            list.pop_back();
            return;
        }
    }
    throw state_error("detach: edge instance missing from incidence list");
}

void evolving_graph::delete_instance(edge_id e) {
    auto& inst = edges_[e];
    if (!inst.alive)
        throw state_error("delete_instance: edge already deleted");
    detach(inst.u, e);
    detach(inst.v, e);
    inst.alive = false;
    --live_edges_;
}

void evolving_graph::rewire_instance(edge_id e, vertex_id keep, vertex_id target) {
    auto& inst = edges_[e];
    if (!inst.alive)
        throw state_error("rewire_instance: edge is deleted");
    if (keep != inst.u && keep != inst.v)
        throw state_error("rewire_instance: keep endpoint not on edge");
    if (target == keep)
        throw state_error("rewire_instance: self-loop rejected");
    const vertex_id old_other = inst.u == keep ? inst.v : inst.u;
    if (target == old_other)
        return; // endpoints unchanged
    detach(old_other, e);
    inst.u = keep;
    inst.v = target;
    incidence_[target].push_back(e);
}

edge_id evolving_graph::find_edge(vertex_id u, vertex_id v) const {
    for (edge_id e : incidence_[u]) {
        const auto& inst = edges_[e];
        if ((inst.u == u && inst.v == v) || (inst.u == v && inst.v == u))
            return e;
    }
    return no_edge;
}

void evolving_graph::delete_edge(vertex_id u, vertex_id v) {
    const edge_id e = find_edge(u, v);
    if (e == no_edge)
        throw state_error("delete_edge: edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") not present");
    delete_instance(e);
}

vertex_id evolving_graph::rewire_endpoint(vertex_id u, vertex_id v, rng& rnd) {
    const edge_id e = find_edge(u, v);
    if (e == no_edge)
        throw state_error("rewire_endpoint: edge (" + std::to_string(u) + "," +
                          std::to_string(v) + ") not present");
    const std::uint64_t n = vertex_count();
    if (n < 2)
        throw state_error("rewire_endpoint: no admissible target");
    // uniform over {0..n-1} \ {u}
    std::uint64_t w = rnd.uniform_below(n - 1);
    if (w >= u)
        ++w;
    rewire_instance(e, u, static_cast<vertex_id>(w));
    return static_cast<vertex_id>(w);
}

namespace {

class union_find {
  public:
    explicit union_find(std::size_t n) : parent_(n), size_(n, 1) {
        std::iota(parent_.begin(), parent_.end(), std::size_t{0});
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (size_[a] < size_[b])
            std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }
    std::uint64_t component_size(std::size_t x) { return size_[find(x)]; }

  private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint64_t> size_;
};

} // namespace

component_summary evolving_graph::components() const {
    const std::uint64_t n = vertex_count();
    component_summary out;
    if (n == 0)
        return out;
    union_find uf(n);
    for (const auto& inst : edges_)
        if (inst.alive)
            uf.unite(inst.u, inst.v);
    std::vector<std::uint64_t> size_of_root(n, 0);
    for (std::uint64_t v = 0; v < n; ++v)
        size_of_root[uf.find(v)] += 1;
    for (std::uint64_t v = 0; v < n; ++v)
        if (size_of_root[v] > 0)
            out.sizes.push_back(size_of_root[v]);
    std::sort(out.sizes.begin(), out.sizes.end(), std::greater<>());
    out.giant_fraction = static_cast<double>(out.sizes.front()) / static_cast<double>(n);
    return out;
}

void evolving_graph::write_edge_list(std::ostream& os) const {
    for (const auto& inst : edges_)
        if (inst.alive)
            os << inst.u << ' ' << inst.v << '\n';
}

void evolving_graph::audit() const {
    std::uint64_t live = 0;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const auto& inst = edges_[e];
        if (!inst.alive)
            continue;
        ++live;
        if (inst.u == inst.v)
            throw state_error("audit: self-loop at edge " + std::to_string(e));
        for (vertex_id side : {inst.u, inst.v}) {
            const auto& list = incidence_[side];
            if (std::count(list.begin(), list.end(), static_cast<edge_id>(e)) != 1)
                throw state_error("audit: asymmetric incidence at edge " + std::to_string(e));
        }
    }
    if (live != live_edges_)
        throw state_error("audit: edge count mismatch");
    std::uint64_t total_degree = 0;
    for (const auto& list : incidence_) {
        total_degree += list.size();
        for (edge_id e : list)
            if (!edges_[e].alive)
                throw state_error("audit: dead edge in incidence list");
    }
    if (total_degree != 2 * live_edges_)
        throw state_error("audit: degree sum != 2 * edge count");
}

} // namespace evosir
