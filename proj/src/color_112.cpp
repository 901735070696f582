#include "constructive_detail.hpp"

#include "packing/verifier.hpp"

#include <algorithm>
#include <deque>

namespace packing::detail {

std::vector<Vertex> walk_from(const std::vector<Vertex> &cycle, Vertex a, Vertex b) {
	const int k = static_cast<int>(cycle.size());
	const int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
	const bool backward = cycle[(i + 1) % k] == b;
	std::vector<Vertex> out(k);
	for (int j = 0; j < k; ++j)
		out[j] = backward ? cycle[((i - j) % k + k) % k] : cycle[(i + j) % k];
	return out;
}

std::vector<Vertex> walk_toward(const std::vector<Vertex> &cycle, Vertex a, Vertex next) {
	const int k = static_cast<int>(cycle.size());
	const int i = static_cast<int>(std::find(cycle.begin(), cycle.end(), a) - cycle.begin());
	const bool forward = cycle[(i + 1) % k] == next;
	std::vector<Vertex> out(k);
	for (int j = 0; j < k; ++j)
		out[j] = forward ? cycle[(i + j) % k] : cycle[((i - j) % k + k) % k];
	return out;
}

void alternate(Classes &f, const std::vector<Vertex> &path, int first) {
	int c = first;
	for (Vertex v : path) {
		f[v] = c;
		c = other_one(c);
	}
}

void pull_back(Classes &f, const DerivedGraph &sub, const Classes &fs) {
	for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
		f[sub.to_parent[i]] = fs[i];
}

std::vector<std::vector<Vertex>> components_without(const Graph &g, const std::vector<Vertex> &removed) {
	const int n = g.vertex_count();
	std::vector<int> seen(n, 0);
	for (Vertex v : removed)
		seen[v] = 1;
	std::vector<std::vector<Vertex>> out;
	for (Vertex s = 0; s < n; ++s) {
		if (seen[s])
			continue;
		std::vector<Vertex> comp{s};
		seen[s] = 1;
		for (std::size_t i = 0; i < comp.size(); ++i)
			for (Vertex w : g.neighbors(comp[i]))
				if (!seen[w]) {
					seen[w] = 1;
					comp.push_back(w);
				}
		std::sort(comp.begin(), comp.end());
		out.push_back(std::move(comp));
	}
	return out;
}

void step_failed(const std::string &label, const std::string &detail) {
	throw Error(ErrorKind::InternalProofStepFailed, label + ": " + detail);
}

Coloring to_coloring(const ColorSequence &s, const Classes &f) {
	Coloring c(s, static_cast<int>(f.size()));
	for (Vertex v = 0; v < static_cast<Vertex>(f.size()); ++v)
		if (f[v])
			c.assign(v, f[v]);
	return c;
}

void check_112(const Graph &g, const Classes &f, const ConstructiveOptions &options, const char *label) {
	if (!options.check_steps)
		return;
	auto report = verify_packing(g, ColorSequence{1, 1, 2}, to_coloring(ColorSequence{1, 1, 2}, f), Partial::Allowed);
	if (!report.ok())
		step_failed(label, report.violations.front().describe());
}

namespace {

void check_instance(const Graph &g, const ConstructiveOptions &options) {
	if (!options.check_steps || g.vertex_count() <= 3)
		return;
	if (!is_two_connected(g) || !is_subcubic(g) || !is_outerplanar(g))
		step_failed("recursive instance", "auxiliary graph left the 2-connected subcubic outerplanar class");
}

// Recursively colors one component hanging off a face cycle at two adjacent
// cycle vertices, renaming the distance-1 classes so both attachment edges
// are properly colored. A component hanging at a single vertex pair through
// one common neighbour is that neighbour alone and gets class 3.
void attach_component(const Graph &g, Classes &f, const std::vector<Vertex> &comp, const std::vector<char> &on_cycle,
                      const ConstructiveOptions &options, const char *label) {
	std::vector<std::pair<Vertex, Vertex>> legs; // (cycle vertex, component vertex)
	for (Vertex x : comp)
		for (Vertex w : g.neighbors(x))
			if (on_cycle[w])
				legs.emplace_back(w, x);
	if (legs.size() != 2 || legs[0].first == legs[1].first)
		step_failed(label, "component does not hang at exactly two cycle vertices");
	const auto [a, va] = legs[0];
	const auto [b, vb] = legs[1];
	if (va == vb) {
		if (comp.size() != 1)
			step_failed(label, "component attached through one vertex is not a single vertex");
		f[va] = kTwo;
		return;
	}
	std::vector<Edge> extra;
	if (!g.has_edge(va, vb))
		extra.push_back(make_edge(va, vb));
	DerivedGraph sub = induced_subgraph(g, comp, extra);
	Classes fs = run_112(sub.graph, options);
	const Vertex sa = sub.from_parent[va];
	const Vertex sb = sub.from_parent[vb];
	for (bool swap : {false, true}) {
		auto rename = [&](int c) { return swap && is_one(c) ? other_one(c) : c; };
		if (rename(fs[sa]) != f[a] && rename(fs[sb]) != f[b]) {
			for (auto &c : fs)
				c = rename(c);
			pull_back(f, sub, fs);
			return;
		}
	}
	step_failed(label, "no renaming separates the component from its attachment vertices");
}

} // namespace

void extend_pendant_path(Classes &f, const std::vector<Vertex> &seq) {
	// seq = u_1, ..., u_k with u_1 and u_k colored, interior uncolored.
	const int k = static_cast<int>(seq.size());
	const int c1 = f[seq.front()];
	const int ck = f[seq.back()];
	std::vector<Vertex> interior(seq.begin() + 1, seq.end() - 1);
	if (k % 2 == 1 && is_one(c1) && is_one(ck) && c1 != ck) {
		f[seq[1]] = other_one(c1);
		f[seq[2]] = kTwo;
		alternate(f, std::vector<Vertex>(seq.begin() + 3, seq.end() - 1), c1);
		return;
	}
	const int m = static_cast<int>(interior.size());
	for (int start : {kOneA, kOneB}) {
		const int last = m % 2 == 1 ? start : other_one(start);
		if (start != c1 && last != ck) {
			alternate(f, interior, start);
			return;
		}
	}
	step_failed("pendant face", "no alternating extension");
}

namespace {

Classes pendant_reduction(const Graph &g, const BlockFaces &bf, int face, const ConstructiveOptions &options) {
	Edge chord{};
	for (const DualEdge &d : bf.adjacency)
		if (d.a == face || d.b == face)
			chord = d.shared;
	const auto seq = walk_from(bf.faces[face], chord.u, chord.v);
	std::vector<Vertex> keep;
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (std::find(seq.begin() + 1, seq.end() - 1, v) == seq.end() - 1)
			keep.push_back(v);
	DerivedGraph sub = induced_subgraph(g, keep);
	Classes f(g.vertex_count(), 0);
	pull_back(f, sub, run_112(sub.graph, options));
	extend_pendant_path(f, seq);
	check_112(g, f, options, "pendant face of length >= 4");
	return f;
}

Classes even_face(const Graph &g, const std::vector<Vertex> &cycle, const ConstructiveOptions &options) {
	Classes f(g.vertex_count(), 0);
	alternate(f, cycle, kOneA);
	std::vector<char> on_cycle(g.vertex_count(), 0);
	for (Vertex v : cycle)
		on_cycle[v] = 1;
	for (const auto &comp : components_without(g, cycle))
		attach_component(g, f, comp, on_cycle, options, "even face");
	check_112(g, f, options, "even face");
	return f;
}

Classes endgame(const Graph &g, const BlockFaces &bf, const ConstructiveOptions &options) {
	const int faces = static_cast<int>(bf.faces.size());
	// A leaf at the end of a longest dual path: the leaf of largest
	// eccentricity, smallest index first.
	int f0 = -1;
	int best = -1;
	for (int leaf = 0; leaf < faces; ++leaf) {
		if (bf.neighbors[leaf].size() != 1)
			continue;
		std::vector<int> dist(faces, -1);
		std::deque<int> queue{leaf};
		dist[leaf] = 0;
		int far = 0;
		while (!queue.empty()) {
			int x = queue.front();
			queue.pop_front();
			far = std::max(far, dist[x]);
			for (int y : bf.neighbors[x])
				if (dist[y] < 0) {
					dist[y] = dist[x] + 1;
					queue.push_back(y);
				}
		}
		if (far > best) {
			best = far;
			f0 = leaf;
		}
	}
	if (f0 < 0 || bf.faces[f0].size() != 3)
		step_failed("endgame", "pendant face at the end of a longest dual path is not a triangle");
	const int f1 = bf.neighbors[f0].front();
	const auto &cyc = bf.faces[f1];
	const int k = static_cast<int>(cyc.size());
	Classes f(g.vertex_count(), 0);

	if (k == 3) {
		if (g.vertex_count() != 4)
			step_failed("endgame", "two adjacent triangles but the graph is not K4 - e");
		std::vector<Vertex> rest;
		for (Vertex v = 0; v < 4; ++v) {
			if (g.degree(v) == 2)
				f[v] = kOneA;
			else
				rest.push_back(v);
		}
		f[rest[0]] = kOneB;
		f[rest[1]] = kTwo;
		check_112(g, f, options, "K4 - e");
		return f;
	}
	if (k % 2 == 0)
		step_failed("endgame", "even face survived the even-face reduction");

	Vertex w1 = -1;
	for (Vertex v : cyc)
		if (g.degree(v) == 2 && (w1 < 0 || v < w1))
			w1 = v;
	if (w1 < 0)
		step_failed("endgame", "odd face without a degree-2 vertex");
	const int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), w1) - cyc.begin());
	const Vertex p = cyc[(at + 1) % k];
	const Vertex q = cyc[(at + k - 1) % k];

	if (g.degree(p) == 2 || g.degree(q) == 2) {
		Vertex w2 = p;
		if (g.degree(p) != 2 || (g.degree(q) == 2 && q < p))
			w2 = q;
		const auto seq = walk_toward(cyc, w1, w2);
		const Vertex w3 = seq[2];
		const Vertex wk = seq[k - 1];
		std::vector<Vertex> keep;
		for (Vertex v = 0; v < g.vertex_count(); ++v)
			if (v != w1 && v != w2)
				keep.push_back(v);
		const Edge extra[] = {make_edge(w3, wk)};
		DerivedGraph sub = induced_subgraph(g, keep, extra);
		pull_back(f, sub, run_112(sub.graph, options));
		bool done = false;
		for (auto [c1, c2] : {std::pair{kOneA, kOneB}, std::pair{kOneB, kOneA}}) {
			if (c1 != f[wk] && c2 != f[w3]) {
				f[w1] = c1;
				f[w2] = c2;
				done = true;
				break;
			}
		}
		if (!done)
			step_failed("two adjacent degree-2 vertices", "no extension");
		check_112(g, f, options, "two adjacent degree-2 vertices");
		return f;
	}

	// Both cycle neighbours of w1 have degree 3.
	std::vector<char> on_cycle(g.vertex_count(), 0);
	for (Vertex v : cyc)
		on_cycle[v] = 1;
	auto comps = components_without(g, cyc);
	auto comp_at = [&](Vertex w) -> const std::vector<Vertex> * {
		for (Vertex x : g.neighbors(w))
			if (!on_cycle[x])
				for (const auto &comp : comps)
					if (std::binary_search(comp.begin(), comp.end(), x))
						return &comp;
		return nullptr;
	};
	auto seq = walk_toward(cyc, w1, p);
	const auto *first = comp_at(seq[1]);
	if (!first || first->size() != 1) {
		seq = walk_toward(cyc, w1, q);
		first = comp_at(seq[1]);
	}
	if (!first || first->size() != 1)
		step_failed("odd face endgame", "no single-vertex component next to w1");
	f[seq[1]] = kTwo;
	std::vector<Vertex> path(seq.begin() + 2, seq.end());
	path.push_back(w1);
	alternate(f, path, kOneA);
	const Vertex v1 = first->front();
	f[v1] = other_one(f[seq[2]]);
	int large = 0;
	for (const auto &comp : comps) {
		if (&comp == first)
			continue;
		if (comp.size() == 1) {
			f[comp.front()] = kTwo;
			continue;
		}
		if (++large > 1)
			step_failed("odd face endgame", "more than one large component");
		attach_component(g, f, comp, on_cycle, options, "odd face endgame");
	}
	check_112(g, f, options, "odd face endgame");
	return f;
}

} // namespace

Classes run_112(const Graph &g, const ConstructiveOptions &options) {
	const int n = g.vertex_count();
	Classes f(n, 0);
	if (n <= 3) {
		for (Vertex v = 0; v < n; ++v)
			f[v] = v + 1;
		return f;
	}
	check_instance(g, options);
	OuterEmbedding emb = require_outer_embedding(g);
	if (emb.blocks.size() != 1 || emb.tree.blocks.size() != 1)
		step_failed("recursive instance", "not 2-connected");
	WeakDual wd = weak_dual(emb);
	const BlockFaces &bf = wd.blocks[emb.blocks.front().block];

	if (bf.faces.size() == 1) {
		const auto &cyc = bf.faces.front();
		if (cyc.size() % 2 == 0) {
			alternate(f, cyc, kOneA);
		} else {
			alternate(f, std::vector<Vertex>(cyc.begin(), cyc.end() - 1), kOneA);
			f[cyc.back()] = kTwo;
		}
		check_112(g, f, options, "cycle");
		return f;
	}
	for (int face = 0; face < static_cast<int>(bf.faces.size()); ++face)
		if (bf.neighbors[face].size() == 1 && bf.faces[face].size() >= 4)
			return pendant_reduction(g, bf, face, options);
	for (const auto &cyc : bf.faces)
		if (cyc.size() % 2 == 0)
			return even_face(g, cyc, options);
	return endgame(g, bf, options);
}

} // namespace packing::detail

namespace packing {

Coloring color_112_2connected(const Graph &g, ConstructiveOptions options) {
	if (!is_two_connected(g))
		throw Error(ErrorKind::NotTwoConnected, "graph is not 2-connected");
	if (!is_subcubic(g))
		throw Error(ErrorKind::NotSubcubic, "graph has a vertex of degree > 3");
	if (!is_outerplanar(g))
		throw Error(ErrorKind::NotOuterplanar, "graph is not outerplanar");
	const ColorSequence s{1, 1, 2};
	Coloring c = detail::to_coloring(s, detail::run_112(g, options));
	auto report = verify_packing(g, s, c);
	if (!report.ok())
		detail::step_failed("final coloring", report.violations.front().describe());
	return c;
}

Coloring color_112_with_distinct_pair(const Graph &g, Vertex u, Vertex v, ConstructiveOptions options) {
	const int n = g.vertex_count();
	if (u < 0 || v < 0 || u >= n || v >= n)
		throw Error(ErrorKind::OutOfRangeVertex, "pair outside the vertex range");
	if (u == v)
		throw Error(ErrorKind::InfeasibleRequest, "the two vertices must differ");
	if (!is_two_connected(g))
		throw Error(ErrorKind::NotTwoConnected, "graph is not 2-connected");
	if (!is_subcubic(g))
		throw Error(ErrorKind::NotSubcubic, "graph has a vertex of degree > 3");
	if (!is_outerplanar(g))
		throw Error(ErrorKind::NotOuterplanar, "graph is not outerplanar");
	Graph h = g;
	if (!g.has_edge(u, v)) {
		std::vector<std::pair<Vertex, Vertex>> pairs;
		for (const Edge &e : g.edges())
			pairs.emplace_back(e.u, e.v);
		pairs.emplace_back(u, v);
		h = Graph::from_edge_list(n, pairs);
		if (!is_subcubic(h) || !is_outerplanar(h))
			throw Error(ErrorKind::EdgeAdditionBreaksClass, "adding edge " + std::to_string(u) + " " +
			                                                    std::to_string(v) +
			                                                    " leaves the subcubic outerplanar class");
	}
	Coloring c = color_112_2connected(h, options);
	c.classes.resize(n);
	return c;
}

} // namespace packing
