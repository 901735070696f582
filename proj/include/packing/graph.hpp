#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace packing {

using Vertex = int;

struct Edge {
	Vertex u;
	Vertex v;

	friend bool operator==(const Edge &, const Edge &) = default;
	friend auto operator<=>(const Edge &, const Edge &) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
	return a < b ? Edge{a, b} : Edge{b, a};
}

/// Immutable simple undirected graph on the dense vertex set 0..n-1.
/// Neighbor lists and the edge list are sorted ascending.
class Graph {
public:
	Graph() = default;

	/// Throws Error(OutOfRangeVertex | SelfLoop). Duplicate pairs collapse.
	static Graph from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs);
	static Graph from_edge_list(int n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
		return from_edge_list(n, std::span<const std::pair<Vertex, Vertex>>(pairs.begin(), pairs.size()));
	}

	int vertex_count() const { return static_cast<int>(adj_.size()); }
	int edge_count() const { return static_cast<int>(edges_.size()); }
	std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
	int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
	int max_degree() const;
	bool has_edge(Vertex u, Vertex v) const;
	const std::vector<Edge> &edges() const { return edges_; }

	friend bool operator==(const Graph &, const Graph &) = default;

private:
	std::vector<std::vector<Vertex>> adj_;
	std::vector<Edge> edges_;
};

/// Pairwise hop distances. Unreachable pairs hold no value.
class DistanceMatrix {
public:
	DistanceMatrix() = default;
	explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kUnreachable) { }

	int size() const { return n_; }
	std::optional<int> at(Vertex u, Vertex v) const {
		int d = d_[index(u, v)];
		if (d == kUnreachable)
			return std::nullopt;
		return d;
	}
	bool reachable(Vertex u, Vertex v) const { return d_[index(u, v)] != kUnreachable; }
	void set(Vertex u, Vertex v, std::optional<int> d) { d_[index(u, v)] = d ? *d : kUnreachable; }

	/// Largest finite entry (0 for the empty graph).
	int max_finite() const;

	friend bool operator==(const DistanceMatrix &, const DistanceMatrix &) = default;

private:
	static constexpr int kUnreachable = -1;
	std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

	int n_ = 0;
	std::vector<int> d_;
};

/// D(G) together with the correspondences back to G.
struct SubdivisionMap {
	Graph graph;
	std::vector<Vertex> original_to_new;  // indexed by vertex of G
	std::vector<Vertex> edge_to_midpoint; // indexed like G.edges()
};

/// A graph produced by surgery on a parent graph: induced subgraph plus
/// optional extra edges between kept vertices.
struct DerivedGraph {
	Graph graph;
	std::vector<Vertex> to_parent;   // child vertex -> parent vertex
	std::vector<Vertex> from_parent; // parent vertex -> child vertex or -1
};

DistanceMatrix all_pairs_distances(const Graph &g);

/// Breadth-first distances from `source`, -1 where unreached. With
/// `max_radius` set, the search stops after that many layers.
std::vector<int> distances_from(const Graph &g, Vertex source, std::optional<int> max_radius = std::nullopt);

bool is_subcubic(const Graph &g);
SubdivisionMap subdivide(const Graph &g);
std::vector<std::vector<Vertex>> connected_components(const Graph &g);

DerivedGraph induced_subgraph(const Graph &g, std::span<const Vertex> keep,
                              std::span<const Edge> extra_edges = {});

// Text format: "n m" header, then m lines "u v"; '#' lines are comments.
Graph read_graph_text(std::istream &in);
Graph parse_graph_text(const std::string &text);
std::string format_graph_text(const Graph &g);

} // namespace packing
