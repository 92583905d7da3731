#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace evosir {

using vertex_id = std::uint32_t;
using edge_id = std::uint32_t;

inline constexpr edge_id no_edge = ~edge_id{0};

struct component_summary {
    std::vector<std::uint64_t> sizes; // descending
    double giant_fraction = 0.0;      // largest / n, 0 for the empty graph
};

// Mutable multigraph used by every dynamic in this project. Edges are stored
// as instances with stable ids so that a simulation can attach independent
// event clocks to parallel edges and address the exact instance whose clock
// fired. Rewiring moves an instance (the id survives); deletion retires it.
//
// Invariants kept at all times: no self-loops, incidence lists symmetric
// (each live instance appears exactly once per endpoint), live_edge_count
// equals half the summed incidence sizes.
class evolving_graph {
  public:
    struct edge_instance {
        vertex_id u, v;
        bool alive;
    };

    evolving_graph() = default;
    explicit evolving_graph(std::uint64_t n) : incidence_(n) {}

    // G(n, mu/n): every unordered pair independently with probability mu/n.
    // Runs in O(n + m) via geometric skips over the pair sequence.
    static evolving_graph erdos_renyi(std::uint64_t n, double mu, rng& rnd);

    std::uint64_t vertex_count() const { return incidence_.size(); }
    std::uint64_t edge_count() const { return live_edges_; }
    std::uint64_t capacity() const { return edges_.size(); } // ids in [0, capacity)

    std::uint64_t degree(vertex_id v) const { return incidence_[v].size(); }
    const edge_instance& instance(edge_id e) const { return edges_[e]; }

    edge_id add_edge(vertex_id u, vertex_id v);

    // Retires one instance. The id is never reused.
    void delete_instance(edge_id e);

    // Moves instance e so it joins `keep` with `target`; the other original
    // endpoint loses the edge. Self-loops are rejected.
    void rewire_instance(edge_id e, vertex_id keep, vertex_id target);

    // Finds a live instance joining u and v, if any.
    edge_id find_edge(vertex_id u, vertex_id v) const;

    // One copy of (u, v) is removed. Throws state_error when absent.
    void delete_edge(vertex_id u, vertex_id v);

    // One copy of (u, v) becomes (u, w) with w uniform over all vertices
    // except u itself; w may equal v or duplicate an existing edge. Returns w.
    vertex_id rewire_endpoint(vertex_id u, vertex_id v, rng& rnd);

    // Connected components of the current multigraph (parallel edges collapse).
    component_summary components() const;

    template <typename F> void for_each_incident(vertex_id v, F&& fn) const {
        for (edge_id e : incidence_[v]) {
            const auto& inst = edges_[e];
            fn(e, inst.u == v ? inst.v : inst.u);
        }
    }

    // "u v" per line, 0-indexed, each live edge listed once.
    void write_edge_list(std::ostream& os) const;

    // Full structural audit; throws state_error on the first violation.
    void audit() const;

  private:
    void detach(vertex_id v, edge_id e);

    std::vector<std::vector<edge_id>> incidence_;
    std::vector<edge_instance> edges_;
    std::uint64_t live_edges_ = 0;
};

} // namespace evosir
