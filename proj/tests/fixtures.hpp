#pragma once

#include "packing/error.hpp"
#include "packing/graph.hpp"

#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace fixture {

using packing::Graph;
using packing::Vertex;
using Pairs = std::vector<std::pair<Vertex, Vertex>>;

inline Graph cycle(int n) {
	Pairs p;
	for (int i = 0; i < n; ++i)
		p.emplace_back(i, (i + 1) % n);
	return Graph::from_edge_list(n, p);
}

inline Graph path(int n) {
	Pairs p;
	for (int i = 0; i + 1 < n; ++i)
		p.emplace_back(i, i + 1);
	return Graph::from_edge_list(n, p);
}

inline Graph complete(int n) {
	Pairs p;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			p.emplace_back(i, j);
	return Graph::from_edge_list(n, p);
}

inline Graph k4_minus_edge() { return Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }

inline Graph k23() { return Graph::from_edge_list(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

// Erdos-Renyi style sample, any structure.
inline Graph random_graph(int n, double p, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::bernoulli_distribution coin(p);
	Pairs pairs;
	for (int i = 0; i < n; ++i)
		for (int j = i + 1; j < n; ++j)
			if (coin(rng))
				pairs.emplace_back(i, j);
	return Graph::from_edge_list(n, pairs);
}

// The kind of packing::Error thrown by `f`, or nothing if it returns.
inline std::optional<packing::ErrorKind> error_kind(const std::function<void()> &f) {
	try {
		f();
	} catch (const packing::Error &e) {
		return e.kind();
	}
	return std::nullopt;
}

} // namespace fixture
