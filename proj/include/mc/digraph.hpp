#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mc/monomial_ideal.hpp"
#include "mc/newton.hpp"
#include "mc/simplicial.hpp"

namespace mc {

using Edge = std::pair<std::size_t, std::size_t>;

/// A simple oriented graph on a vertex set V inside [n] with positive vertex
/// weights, w(j) = 1 on sources. Vertices are 1-based; ideals built from the
/// graph live in k[x_1..x_n] regardless of V.
class WeightedOrientedGraph {
public:
    /// Vertex set [n]. `weights` has one entry per vertex (index j-1); an
    /// empty vector means all weights 1. Throws DomainError on a loop, a
    /// repeated or antiparallel edge, an isolated vertex, a non-positive
    /// weight, or a weighted source (unless `normalize_sources`, which resets
    /// it to 1 and records a warning).
    WeightedOrientedGraph(std::size_t n, std::vector<Edge> edges, std::vector<Degree> weights = {},
                          bool normalize_sources = false);

    /// Same, on an explicit vertex set.
    WeightedOrientedGraph(std::size_t n, VarSet vertices, std::vector<Edge> edges,
                          std::vector<Degree> weights, bool normalize_sources = false);

    std::size_t nvars() const noexcept { return n_; }
    VarSet vertices() const noexcept { return vertices_; }
    std::size_t vertex_count() const noexcept;
    const std::vector<Edge> &edges() const noexcept { return edges_; }
    const std::vector<Degree> &weights() const noexcept { return weights_; }
    Degree weight(std::size_t j) const { return weights_.at(j - 1); }
    const std::vector<std::string> &warnings() const noexcept { return warnings_; }

    VarSet in_neighbors(std::size_t j) const;
    VarSet out_neighbors(std::size_t j) const;
    VarSet out_neighbors_of(VarSet set) const;
    VarSet sources() const;
    VarSet sinks() const;
    bool is_independent(VarSet set) const;
    bool is_complete() const;

    /// |w|, summed over the vertex set.
    std::uint64_t total_weight() const;
    Degree max_weight() const;

    /// Compares structure and weights; warnings are ignored.
    friend bool operator==(const WeightedOrientedGraph &lhs, const WeightedOrientedGraph &rhs)
    {
        return lhs.n_ == rhs.n_ && lhs.vertices_ == rhs.vertices_ && lhs.edges_ == rhs.edges_
               && lhs.weights_ == rhs.weights_;
    }

private:
    void validate(bool normalize_sources);

    std::size_t n_;
    VarSet vertices_;
    std::vector<Edge> edges_;
    std::vector<Degree> weights_;
    std::vector<std::string> warnings_;
};

/// I(D, w) = (x_i x_j^w(j) | (i, j) in E(D)).
MonomialIdeal edge_ideal(const WeightedOrientedGraph &graph);

/// I(G), the squarefree edge ideal of the underlying graph.
MonomialIdeal underlying_edge_ideal(const WeightedOrientedGraph &graph);

struct InducedSubgraph {
    WeightedOrientedGraph graph;
    /// Vertices of U left isolated in D_U and therefore dropped.
    VarSet dropped = 0;
};

/// D_U with the induced weights: w_U(j) = w(j) unless j is a source of D_U.
/// Throws DomainError if U is empty or not inside V(D).
InducedSubgraph induced_subgraph_with_weights(const WeightedOrientedGraph &graph, VarSet subset);

/// I(G \ U) + (x_i | i in U) with U = N^+(supp a). Requires a_j < w(j).
MonomialIdeal radical_colon_formula(const WeightedOrientedGraph &graph, const Exponent &a);

/// c(W) = sum_{j in W} a_j / w(j). Requires supp(a) to be a set of sinks
/// (hence independent) and W inside supp(a).
Rational capacity(const WeightedOrientedGraph &graph, const Exponent &a, VarSet subset);

struct CapacitySet {
    VarSet members = 0;
    Rational capacity;
};

/// Inclusion-minimal W inside supp(a) with c(W) >= 1, ordered by mask.
std::vector<CapacitySet> minimal_capacity_sets(const WeightedOrientedGraph &graph, const Exponent &a);

/// n(W) = intersection over j in W of (x_k | k in N^-(j)); W must be sinks.
MonomialIdeal neighbor_intersection_ideal(const WeightedOrientedGraph &graph, VarSet subset);

/// I(G) + sum over minimal W of n(W). Requires supp(a) to be sinks and a_j < w(j).
MonomialIdeal closure_radical_formula(const WeightedOrientedGraph &graph, const Exponent &a);

/// Is Delta(I(G) + sum_{W in family} n(W)) acyclic? `sinks` must be a set of
/// sinks and the family a nonempty collection of nonempty subsets of it.
bool acyclicity_check(const WeightedOrientedGraph &graph, VarSet sinks,
                      const std::vector<VarSet> &family, Field field = {});

/// Smallest vertex j such that removing j turns no other vertex into a
/// source. Requires a complete graph on at least 4 vertices.
std::size_t find_admissible_vertex(const WeightedOrientedGraph &graph);

/// Complete graph with a source u such that D \ u also has a source.
bool is_type_one(const WeightedOrientedGraph &graph);

/// Predicted reg(I(D,w)) for a complete graph: |w| for two vertices, else
/// |w| - n + 2 for type 1 and |w| - n + 1 otherwise.
std::int64_t complete_graph_reg(const WeightedOrientedGraph &graph);

/// Predicted reg of the integral closure for a complete graph: |w| for two
/// vertices, else max w + 1.
std::int64_t complete_closure_reg(const WeightedOrientedGraph &graph);

struct SufficientMembership {
    bool hypotheses_hold = false; ///< a <= w, |a| >= max w + 1, |supp a| >= 3
    NewtonMembership lp;

    /// Under the hypotheses the LP must accept.
    bool consistent() const { return !hypotheses_hold || lp.member; }
};

SufficientMembership membership_sufficient_condition(const WeightedOrientedGraph &graph,
                                                     const Exponent &a);

/// Erdos-Renyi underlying graph with edge probability p, uniform random
/// orientation, weights uniform in [1, wmax] and forced to 1 on sources.
/// Graphs with isolated vertices are resampled. Requires n >= 2.
WeightedOrientedGraph random_weighted_oriented_graph(std::mt19937_64 &rng, std::size_t n, double p,
                                                     Degree wmax);

/// Complete graph with uniform random orientation and weights in [1, wmax].
WeightedOrientedGraph random_complete_graph(std::mt19937_64 &rng, std::size_t n, Degree wmax);

/// Orientation of K_n given by the bits of `orientation`, one bit per pair
/// i < j in lexicographic order (set bit means j -> i). Weights default to 1.
WeightedOrientedGraph tournament(std::size_t n, std::uint64_t orientation,
                                 std::vector<Degree> weights = {});

} // namespace mc
