#include "packing/graph.hpp"

#include "packing/error.hpp"

#include <algorithm>
#include <deque>

namespace packing {

std::string_view to_string(ErrorKind kind) {
	switch (kind) {
	case ErrorKind::OutOfRangeVertex: return "OutOfRangeVertex";
	case ErrorKind::SelfLoop: return "SelfLoop";
	case ErrorKind::Parse: return "Parse";
	case ErrorKind::InvalidSequence: return "InvalidSequence";
	case ErrorKind::ClassOutOfRange: return "ClassOutOfRange";
	case ErrorKind::WrongSequence: return "WrongSequence";
	case ErrorKind::NotOuterplanar: return "NotOuterplanar";
	case ErrorKind::NotTwoConnected: return "NotTwoConnected";
	case ErrorKind::NotSubcubic: return "NotSubcubic";
	case ErrorKind::EdgeAdditionBreaksClass: return "EdgeAdditionBreaksClass";
	case ErrorKind::InternalProofStepFailed: return "InternalProofStepFailed";
	case ErrorKind::InvalidInputColoring: return "InvalidInputColoring";
	case ErrorKind::NoInjection: return "NoInjection";
	case ErrorKind::InfeasibleRequest: return "InfeasibleRequest";
	case ErrorKind::MemoryBudgetExceeded: return "MemoryBudgetExceeded";
	case ErrorKind::InvalidPin: return "InvalidPin";
	}
	return "Unknown";
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
	if (n < 0)
		throw Error(ErrorKind::OutOfRangeVertex, "negative vertex count");
	Graph g;
	g.adj_.resize(n);
	g.edges_.reserve(pairs.size());
	for (auto [a, b] : pairs) {
		if (a < 0 || a >= n || b < 0 || b >= n)
			throw Error(ErrorKind::OutOfRangeVertex,
			            "edge " + std::to_string(a) + " " + std::to_string(b) + " outside [0," + std::to_string(n) + ")");
		if (a == b)
			throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
		g.edges_.push_back(make_edge(a, b));
	}
	std::sort(g.edges_.begin(), g.edges_.end());
	g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
	for (const Edge &e : g.edges_) {
		g.adj_[e.u].push_back(e.v);
		g.adj_[e.v].push_back(e.u);
	}
	for (auto &list : g.adj_)
		std::sort(list.begin(), list.end());
	return g;
}

int Graph::max_degree() const {
	int best = 0;
	for (const auto &list : adj_)
		best = std::max(best, static_cast<int>(list.size()));
	return best;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
	if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
		return false;
	const auto &list = adj_[u];
	return std::binary_search(list.begin(), list.end(), v);
}

int DistanceMatrix::max_finite() const {
	int best = 0;
	for (int d : d_)
		best = std::max(best, d);
	return best;
}

std::vector<int> distances_from(const Graph &g, Vertex source, std::optional<int> max_radius) {
	std::vector<int> dist(g.vertex_count(), -1);
	std::deque<Vertex> queue;
	dist[source] = 0;
	queue.push_back(source);
	while (!queue.empty()) {
		Vertex v = queue.front();
		queue.pop_front();
		if (max_radius && dist[v] >= *max_radius)
			continue;
		for (Vertex w : g.neighbors(v)) {
			if (dist[w] < 0) {
				dist[w] = dist[v] + 1;
				queue.push_back(w);
			}
		}
	}
	return dist;
}

DistanceMatrix all_pairs_distances(const Graph &g) {
	const int n = g.vertex_count();
	DistanceMatrix m(n);
	for (Vertex s = 0; s < n; ++s) {
		auto row = distances_from(g, s);
		for (Vertex t = 0; t < n; ++t)
			if (row[t] >= 0)
				m.set(s, t, row[t]);
	}
	return m;
}

bool is_subcubic(const Graph &g) {
	return g.max_degree() <= 3;
}

SubdivisionMap subdivide(const Graph &g) {
	const int n = g.vertex_count();
	SubdivisionMap out;
	out.original_to_new.resize(n);
	for (Vertex v = 0; v < n; ++v)
		out.original_to_new[v] = v;
	std::vector<std::pair<Vertex, Vertex>> pairs;
	pairs.reserve(2 * g.edges().size());
	Vertex next = n;
	for (const Edge &e : g.edges()) {
		out.edge_to_midpoint.push_back(next);
		pairs.emplace_back(e.u, next);
		pairs.emplace_back(next, e.v);
		++next;
	}
	out.graph = Graph::from_edge_list(next, pairs);
	return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph &g) {
	const int n = g.vertex_count();
	std::vector<int> comp(n, -1);
	std::vector<std::vector<Vertex>> out;
	for (Vertex s = 0; s < n; ++s) {
		if (comp[s] >= 0)
			continue;
		std::vector<Vertex> members{s};
		comp[s] = static_cast<int>(out.size());
		for (std::size_t i = 0; i < members.size(); ++i)
			for (Vertex w : g.neighbors(members[i]))
				if (comp[w] < 0) {
					comp[w] = comp[s];
					members.push_back(w);
				}
		std::sort(members.begin(), members.end());
		out.push_back(std::move(members));
	}
	return out;
}

DerivedGraph induced_subgraph(const Graph &g, std::span<const Vertex> keep, std::span<const Edge> extra_edges) {
	DerivedGraph out;
	out.from_parent.assign(g.vertex_count(), -1);
	std::vector<Vertex> sorted(keep.begin(), keep.end());
	std::sort(sorted.begin(), sorted.end());
	sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
	for (Vertex v : sorted) {
		out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
		out.to_parent.push_back(v);
	}
	std::vector<std::pair<Vertex, Vertex>> pairs;
	for (const Edge &e : g.edges())
		if (out.from_parent[e.u] >= 0 && out.from_parent[e.v] >= 0)
			pairs.emplace_back(out.from_parent[e.u], out.from_parent[e.v]);
	for (const Edge &e : extra_edges) {
		if (out.from_parent[e.u] < 0 || out.from_parent[e.v] < 0)
			throw Error(ErrorKind::OutOfRangeVertex, "extra edge endpoint not kept");
		pairs.emplace_back(out.from_parent[e.u], out.from_parent[e.v]);
	}
	out.graph = Graph::from_edge_list(static_cast<int>(out.to_parent.size()), pairs);
	return out;
}

} // namespace packing
