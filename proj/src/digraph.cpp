#include "mc/digraph.hpp"

#include <algorithm>
#include <bit>

#include "mc/errors.hpp"

namespace mc {

namespace {

std::string edge_name(const Edge &e)
{
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

} // namespace

WeightedOrientedGraph::WeightedOrientedGraph(std::size_t n, std::vector<Edge> edges,
                                             std::vector<Degree> weights, bool normalize_sources)
    : WeightedOrientedGraph(n, full_set(n), std::move(edges), std::move(weights), normalize_sources)
{
}

WeightedOrientedGraph::WeightedOrientedGraph(std::size_t n, VarSet vertices, std::vector<Edge> edges,
                                             std::vector<Degree> weights, bool normalize_sources)
    : n_(n), vertices_(vertices), edges_(std::move(edges)), weights_(std::move(weights))
{
    validate(normalize_sources);
}

void WeightedOrientedGraph::validate(bool normalize_sources)
{
    if (n_ > kMaxVars) {
        throw DomainError("at most " + std::to_string(kMaxVars) + " vertices are supported");
    }
    if ((vertices_ & ~full_set(n_)) != 0) {
        throw DomainError("vertex set is not contained in [" + std::to_string(n_) + "]");
    }
    if (weights_.empty()) {
        weights_.assign(n_, 1);
    }
    if (weights_.size() != n_) {
        throw DomainError("expected " + std::to_string(n_) + " weights, got "
                          + std::to_string(weights_.size()));
    }
    std::sort(edges_.begin(), edges_.end());
    VarSet touched = 0;
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto &[i, j] = edges_[k];
        if (i < 1 || i > n_ || j < 1 || j > n_ || (vertices_ & var_bit(i)) == 0
            || (vertices_ & var_bit(j)) == 0) {
            throw DomainError("edge " + edge_name(edges_[k]) + " leaves the vertex set");
        }
        if (i == j) {
            throw DomainError("loop at vertex " + std::to_string(i));
        }
        if (k > 0 && edges_[k - 1] == edges_[k]) {
            throw DomainError("edge " + edge_name(edges_[k]) + " is repeated");
        }
        if (std::binary_search(edges_.begin(), edges_.end(), Edge{j, i})) {
            throw DomainError("edges " + edge_name(edges_[k]) + " and " + edge_name({j, i})
                              + " are antiparallel; the underlying graph must be simple");
        }
        touched |= var_bit(i) | var_bit(j);
    }
    if (touched != vertices_) {
        auto isolated = members(vertices_ & ~touched);
        throw DomainError("vertex " + std::to_string(isolated.front()) + " is isolated");
    }
    for (auto v : members(vertices_)) {
        if (weights_[v - 1] == 0) {
            throw DomainError("weight of vertex " + std::to_string(v) + " must be positive");
        }
    }
    for (auto v : members(sources())) {
        if (weights_[v - 1] != 1) {
            if (!normalize_sources) {
                throw DomainError("source vertex " + std::to_string(v) + " has weight "
                                  + std::to_string(weights_[v - 1]) + "; sources must have weight 1");
            }
            warnings_.push_back("source vertex " + std::to_string(v) + " weight "
                                + std::to_string(weights_[v - 1]) + " reset to 1");
            weights_[v - 1] = 1;
        }
    }
}

std::size_t WeightedOrientedGraph::vertex_count() const noexcept
{
    return static_cast<std::size_t>(std::popcount(vertices_));
}

VarSet WeightedOrientedGraph::in_neighbors(std::size_t j) const
{
    VarSet s = 0;
    for (const auto &[from, to] : edges_) {
        if (to == j) {
            s |= var_bit(from);
        }
    }
    return s;
}

VarSet WeightedOrientedGraph::out_neighbors(std::size_t j) const
{
    VarSet s = 0;
    for (const auto &[from, to] : edges_) {
        if (from == j) {
            s |= var_bit(to);
        }
    }
    return s;
}

VarSet WeightedOrientedGraph::out_neighbors_of(VarSet set) const
{
    VarSet s = 0;
    for (const auto &[from, to] : edges_) {
        if ((set & var_bit(from)) != 0) {
            s |= var_bit(to);
        }
    }
    return s;
}

VarSet WeightedOrientedGraph::sources() const
{
    VarSet heads = 0;
    for (const auto &e : edges_) {
        heads |= var_bit(e.second);
    }
    return vertices_ & ~heads;
}

VarSet WeightedOrientedGraph::sinks() const
{
    VarSet tails = 0;
    for (const auto &e : edges_) {
        tails |= var_bit(e.first);
    }
    return vertices_ & ~tails;
}

bool WeightedOrientedGraph::is_independent(VarSet set) const
{
    return std::none_of(edges_.begin(), edges_.end(), [&](const Edge &e) {
        return (set & var_bit(e.first)) != 0 && (set & var_bit(e.second)) != 0;
    });
}

bool WeightedOrientedGraph::is_complete() const
{
    const std::size_t k = vertex_count();
    return edges_.size() == k * (k - 1) / 2;
}

std::uint64_t WeightedOrientedGraph::total_weight() const
{
    std::uint64_t total = 0;
    for (auto v : members(vertices_)) {
        total += weights_[v - 1];
    }
    return total;
}

Degree WeightedOrientedGraph::max_weight() const
{
    Degree best = 0;
    for (auto v : members(vertices_)) {
        best = std::max(best, weights_[v - 1]);
    }
    return best;
}

MonomialIdeal edge_ideal(const WeightedOrientedGraph &graph)
{
    const std::size_t n = graph.nvars();
    std::vector<Exponent> gens;
    gens.reserve(graph.edges().size());
    for (const auto &[i, j] : graph.edges()) {
        Exponent g(n);
        g[i - 1] = 1;
        g[j - 1] = graph.weight(j);
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal underlying_edge_ideal(const WeightedOrientedGraph &graph)
{
    std::vector<VarSet> edges;
    edges.reserve(graph.edges().size());
    for (const auto &[i, j] : graph.edges()) {
        edges.push_back(var_bit(i) | var_bit(j));
    }
    return MonomialIdeal::from_squarefree(graph.nvars(), edges);
}

InducedSubgraph induced_subgraph_with_weights(const WeightedOrientedGraph &graph, VarSet subset)
{
    if (subset == 0) {
        throw DomainError("induced subgraph on the empty set");
    }
    if ((subset & ~graph.vertices()) != 0) {
        throw DomainError("induced subgraph: subset is not inside the vertex set");
    }
    std::vector<Edge> kept;
    VarSet touched = 0;
    VarSet heads = 0;
    for (const auto &e : graph.edges()) {
        if ((subset & var_bit(e.first)) != 0 && (subset & var_bit(e.second)) != 0) {
            kept.push_back(e);
            touched |= var_bit(e.first) | var_bit(e.second);
            heads |= var_bit(e.second);
        }
    }
    std::vector<Degree> weights = graph.weights();
    for (auto v : members(touched & ~heads)) {
        weights[v - 1] = 1;
    }
    return InducedSubgraph{WeightedOrientedGraph(graph.nvars(), touched, std::move(kept), std::move(weights)),
                           subset & ~touched};
}

namespace {

void require_below_weights(const WeightedOrientedGraph &graph, const Exponent &a, const char *where)
{
    require_same_size(graph.nvars(), a.size(), where);
    for (std::size_t j = 1; j <= graph.nvars(); ++j) {
        const Degree bound = (graph.vertices() & var_bit(j)) != 0 ? graph.weight(j) : 1;
        if (a[j - 1] >= bound) {
            throw DomainError(std::string(where) + ": a_" + std::to_string(j) + " = "
                              + std::to_string(a[j - 1]) + " is not below w(" + std::to_string(j)
                              + ") = " + std::to_string(bound));
        }
    }
}

void require_sinks(const WeightedOrientedGraph &graph, VarSet set, const char *where)
{
    if ((set & ~graph.sinks()) != 0) {
        throw DomainError(std::string(where) + ": vertex "
                          + std::to_string(members(set & ~graph.sinks()).front())
                          + " is not a sink");
    }
}

} // namespace

MonomialIdeal radical_colon_formula(const WeightedOrientedGraph &graph, const Exponent &a)
{
    require_below_weights(graph, a, "radical colon formula");
    const VarSet u = graph.out_neighbors_of(a.support());
    std::vector<VarSet> gens;
    for (const auto &[i, j] : graph.edges()) {
        if ((u & (var_bit(i) | var_bit(j))) == 0) {
            gens.push_back(var_bit(i) | var_bit(j));
        }
    }
    for (auto v : members(u)) {
        gens.push_back(var_bit(v));
    }
    return MonomialIdeal::from_squarefree(graph.nvars(), gens);
}

Rational capacity(const WeightedOrientedGraph &graph, const Exponent &a, VarSet subset)
{
    require_same_size(graph.nvars(), a.size(), "capacity");
    require_sinks(graph, a.support(), "capacity");
    if ((subset & ~a.support()) != 0) {
        throw DomainError("capacity: W must lie inside supp(a)");
    }
    Rational c = 0;
    for (auto j : members(subset)) {
        c += Rational(a[j - 1], graph.weight(j));
    }
    c.canonicalize();
    return c;
}

std::vector<CapacitySet> minimal_capacity_sets(const WeightedOrientedGraph &graph, const Exponent &a)
{
    const VarSet support = a.support();
    std::vector<CapacitySet> heavy;
    // Submasks in increasing order; a set is minimal iff no heavy set found so
    // far is strictly inside it (all its subsets precede it numerically).
    for (VarSet w = 0;; w = (w - support) & support) {
        Rational c = capacity(graph, a, w);
        if (c >= 1) {
            bool minimal = std::none_of(heavy.begin(), heavy.end(), [&](const CapacitySet &h) {
                return (h.members & ~w) == 0;
            });
            if (minimal) {
                heavy.push_back({w, c});
            }
        }
        if (w == support) {
            break;
        }
    }
    return heavy;
}

MonomialIdeal neighbor_intersection_ideal(const WeightedOrientedGraph &graph, VarSet subset)
{
    require_sinks(graph, subset, "n(W)");
    const std::size_t n = graph.nvars();
    auto result = MonomialIdeal::unit(n);
    for (auto j : members(subset)) {
        result = intersect(result, MonomialIdeal::variables(n, graph.in_neighbors(j)));
    }
    return result;
}

MonomialIdeal closure_radical_formula(const WeightedOrientedGraph &graph, const Exponent &a)
{
    require_below_weights(graph, a, "closure radical formula");
    require_sinks(graph, a.support(), "closure radical formula");
    auto result = underlying_edge_ideal(graph);
    for (const auto &w : minimal_capacity_sets(graph, a)) {
        result = sum(result, neighbor_intersection_ideal(graph, w.members));
    }
    return result;
}

bool acyclicity_check(const WeightedOrientedGraph &graph, VarSet sinks,
                      const std::vector<VarSet> &family, Field field)
{
    require_sinks(graph, sinks, "acyclicity check");
    if (family.empty()) {
        throw DomainError("acyclicity check: the family must be nonempty");
    }
    auto ideal = underlying_edge_ideal(graph);
    for (auto w : family) {
        if (w == 0 || (w & ~sinks) != 0) {
            throw DomainError("acyclicity check: family members must be nonempty subsets of the sink set");
        }
        ideal = sum(ideal, neighbor_intersection_ideal(graph, w));
    }
    return is_acyclic(stanley_reisner_complex(ideal), field);
}

std::size_t find_admissible_vertex(const WeightedOrientedGraph &graph)
{
    if (!graph.is_complete()) {
        throw DomainError("admissible vertex: the graph is not complete");
    }
    if (graph.vertex_count() < 4) {
        throw DomainError("admissible vertex: needs at least 4 vertices");
    }
    for (auto j : members(graph.vertices())) {
        // Removing j creates a new source exactly when some k has N^-(k) = {j}.
        bool admissible = true;
        for (auto k : members(graph.vertices() & ~var_bit(j))) {
            if (graph.in_neighbors(k) == var_bit(j)) {
                admissible = false;
                break;
            }
        }
        if (admissible) {
            return j;
        }
    }
    throw DomainError("admissible vertex: none exists");
}

namespace {

void require_complete(const WeightedOrientedGraph &graph, const char *where)
{
    if (!graph.is_complete()) {
        throw DomainError(std::string(where) + ": the graph is not complete");
    }
    if (graph.vertex_count() < 2) {
        throw DomainError(std::string(where) + ": needs at least 2 vertices");
    }
}

} // namespace

bool is_type_one(const WeightedOrientedGraph &graph)
{
    require_complete(graph, "type 1 test");
    const VarSet sources = graph.sources();
    if (sources == 0) {
        return false;
    }
    const std::size_t u = members(sources).front();
    const VarSet rest = graph.vertices() & ~var_bit(u);
    for (auto k : members(rest)) {
        if ((graph.in_neighbors(k) & rest) == 0) {
            return true;
        }
    }
    return false;
}

std::int64_t complete_graph_reg(const WeightedOrientedGraph &graph)
{
    require_complete(graph, "complete graph regularity");
    const auto total = static_cast<std::int64_t>(graph.total_weight());
    const auto n = static_cast<std::int64_t>(graph.vertex_count());
    if (n == 2) {
        return total;
    }
    return is_type_one(graph) ? total - n + 2 : total - n + 1;
}

std::int64_t complete_closure_reg(const WeightedOrientedGraph &graph)
{
    require_complete(graph, "complete closure regularity");
    if (graph.vertex_count() == 2) {
        return static_cast<std::int64_t>(graph.total_weight());
    }
    return static_cast<std::int64_t>(graph.max_weight()) + 1;
}

SufficientMembership membership_sufficient_condition(const WeightedOrientedGraph &graph,
                                                     const Exponent &a)
{
    if (!graph.is_complete()) {
        throw DomainError("membership condition: the graph is not complete");
    }
    if (graph.vertex_count() < 3) {
        throw DomainError("membership condition: needs at least 3 vertices");
    }
    require_same_size(graph.nvars(), a.size(), "membership condition");
    SufficientMembership result;
    bool bounded = true;
    for (std::size_t j = 1; j <= graph.nvars(); ++j) {
        const Degree bound = (graph.vertices() & var_bit(j)) != 0 ? graph.weight(j) : 0;
        if (a[j - 1] > bound) {
            bounded = false;
        }
    }
    result.hypotheses_hold = bounded && a.total_degree() >= graph.max_weight() + 1u
                             && cardinality(a.support()) >= 3;
    result.lp = np_membership(edge_ideal(graph), a);
    return result;
}

WeightedOrientedGraph random_weighted_oriented_graph(std::mt19937_64 &rng, std::size_t n, double p,
                                                     Degree wmax)
{
    if (n < 2) {
        throw DomainError("random graph needs at least 2 vertices");
    }
    if (wmax < 1) {
        throw DomainError("random graph needs wmax >= 1");
    }
    std::bernoulli_distribution present(p);
    std::bernoulli_distribution flip(0.5);
    std::uniform_int_distribution<Degree> weight(1, wmax);
    while (true) {
        std::vector<Edge> edges;
        VarSet touched = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            for (std::size_t j = i + 1; j <= n; ++j) {
                if (!present(rng)) {
                    continue;
                }
                edges.push_back(flip(rng) ? Edge{j, i} : Edge{i, j});
                touched |= var_bit(i) | var_bit(j);
            }
        }
        std::vector<Degree> weights(n);
        for (auto &w : weights) {
            w = weight(rng);
        }
        if (touched != full_set(n)) {
            continue;
        }
        return WeightedOrientedGraph(n, std::move(edges), std::move(weights), true);
    }
}

WeightedOrientedGraph random_complete_graph(std::mt19937_64 &rng, std::size_t n, Degree wmax)
{
    return random_weighted_oriented_graph(rng, n, 1.0, wmax);
}

WeightedOrientedGraph tournament(std::size_t n, std::uint64_t orientation, std::vector<Degree> weights)
{
    std::vector<Edge> edges;
    std::size_t bit = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i + 1; j <= n; ++j, ++bit) {
            edges.push_back(((orientation >> bit) & 1U) != 0 ? Edge{j, i} : Edge{i, j});
        }
    }
    return WeightedOrientedGraph(n, std::move(edges), std::move(weights), true);
}

} // namespace mc
