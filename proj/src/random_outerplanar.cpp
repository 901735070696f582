#include "packing/error.hpp"
#include "packing/gadgets.hpp"

#include <algorithm>
#include <random>

namespace packing {
namespace {

// Bounded draws are done by hand so a seed gives the same graph with every
// standard library.
class Rng {
public:
	explicit Rng(std::uint64_t seed) : engine_(seed) { }
	int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
	bool chance(int num, int den) { return below(den) < num; }

private:
	std::mt19937_64 engine_;
};

struct Piece {
	int n = 0;
	std::vector<std::pair<Vertex, Vertex>> edges;
	std::vector<int> degree;
};

// Outerplane block on up to `target` vertices: a cycle, then paths of new
// vertices hung across outer edges whose ends both have degree 2. The old
// edge becomes a chord, so every vertex stays on the outer cycle and degrees
// never exceed 3.
Piece grow_block(Rng &rng, int target) {
	Piece p;
	const int start = 3 + rng.below(std::min(target - 3, 6) + 1);
	std::vector<Vertex> outer;
	for (int i = 0; i < start; ++i)
		outer.push_back(i);
	p.n = start;
	p.degree.assign(start, 2);
	for (int i = 0; i < start; ++i)
		p.edges.emplace_back(i, (i + 1) % start);

	while (p.n < target) {
		std::vector<int> eligible;
		for (int i = 0; i < static_cast<int>(outer.size()); ++i) {
			const Vertex a = outer[i];
			const Vertex b = outer[(i + 1) % outer.size()];
			if (p.degree[a] == 2 && p.degree[b] == 2)
				eligible.push_back(i);
		}
		if (eligible.empty())
			break;
		const int i = eligible[rng.below(static_cast<int>(eligible.size()))];
		const Vertex a = outer[i];
		const Vertex b = outer[(i + 1) % outer.size()];
		const int len = 1 + rng.below(std::min(target - p.n, 4));
		std::vector<Vertex> path;
		for (int j = 0; j < len; ++j) {
			path.push_back(p.n++);
			p.degree.push_back(2);
		}
		p.edges.emplace_back(a, path.front());
		for (int j = 0; j + 1 < len; ++j)
			p.edges.emplace_back(path[j], path[j + 1]);
		p.edges.emplace_back(path.back(), b);
		++p.degree[a];
		++p.degree[b];
		outer.insert(outer.begin() + i + 1, path.begin(), path.end());
	}
	return p;
}

} // namespace

Graph random_outerplanar_subcubic(int n, std::uint64_t seed, bool two_connected) {
	if (two_connected && n < 3)
		throw Error(ErrorKind::InfeasibleRequest, "a 2-connected sample needs n >= 3");
	if (n < 1)
		throw Error(ErrorKind::InfeasibleRequest, "a sample needs n >= 1");
	Rng rng(seed);
	if (two_connected) {
		Piece p = grow_block(rng, n);
		return Graph::from_edge_list(p.n, p.edges);
	}

	std::vector<std::pair<Vertex, Vertex>> edges;
	std::vector<int> degree;
	int total = 0;
	while (total < n) {
		const int remaining = n - total;
		Piece p;
		if (remaining >= 3 && !rng.chance(1, 3)) {
			p = grow_block(rng, 3 + rng.below(std::min(remaining, 12) - 2));
		} else {
			p.n = 1;
			p.degree = {0};
		}
		const int offset = total;
		std::vector<Vertex> old_free, new_free;
		for (Vertex v = 0; v < offset; ++v)
			if (degree[v] <= 2)
				old_free.push_back(v);
		for (Vertex v = 0; v < p.n; ++v)
			if (p.degree[v] <= 2)
				new_free.push_back(v + offset);
		for (auto [a, b] : p.edges)
			edges.emplace_back(a + offset, b + offset);
		degree.insert(degree.end(), p.degree.begin(), p.degree.end());
		total += p.n;
		if (!old_free.empty() && !new_free.empty() && !rng.chance(1, 12)) {
			const Vertex a = old_free[rng.below(static_cast<int>(old_free.size()))];
			const Vertex b = new_free[rng.below(static_cast<int>(new_free.size()))];
			edges.emplace_back(a, b);
			++degree[a];
			++degree[b];
		}
	}
	return Graph::from_edge_list(total, edges);
}

} // namespace packing
