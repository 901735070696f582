#include "constructive_detail.hpp"

#include "packing/verifier.hpp"

#include <algorithm>
#include <deque>
#include <map>

// Feasible (1,1,2,4)-colorings. The recursion detaches a pendant block G_0
// hanging from the rest by a bridge u_1 v_1, colors the rest, and extends
// according to the shape of G_0. Before that it removes degree-1 vertices and
// long pendant faces, which are exactly the situations the case analysis
// assumes away.

namespace packing {
namespace {

using namespace detail;

const ColorSequence kSeq{1, 1, 2, 4};

struct Triangle {
	int q = 0;      // 0-based index of the first base vertex on the host cycle
	Vertex apex = -1;
};

class Feasible {
public:
	explicit Feasible(ConstructiveOptions options) : options_(options) { }

	Classes run(const Graph &g) {
		const int n = g.vertex_count();
		Classes f(n, 0);
		if (n == 0)
			return f;
		auto comps = connected_components(g);
		if (comps.size() > 1) {
			for (const auto &comp : comps) {
				DerivedGraph sub = induced_subgraph(g, comp);
				pull_back(f, sub, run(sub.graph));
			}
			return f;
		}
		if (n == 1) {
			f[0] = kOneA;
			return f;
		}
		for (Vertex v = 0; v < n; ++v)
			if (g.degree(v) == 1)
				return peel_leaf(g, v);

		const OuterEmbedding emb = require_outer_embedding(g);
		const BlockTree &bt = emb.tree;
		if (bt.blocks.size() == 1) {
			f = run_112(g, options_);
			check(g, f, "single block");
			return f;
		}
		const WeakDual wd = weak_dual(emb);

		// Long pendant faces first.
		for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b) {
			const BlockFaces &bf = wd.blocks[b];
			if (bf.faces.size() < 2)
				continue;
			for (int face = 0; face < static_cast<int>(bf.faces.size()); ++face) {
				const auto &cyc = bf.faces[face];
				if (bf.neighbors[face].size() != 1 || cyc.size() < 4)
					continue;
				if (std::any_of(cyc.begin(), cyc.end(), [&](Vertex v) { return bt.is_cut_vertex(v); }))
					continue;
				return long_leaf_face(g, bf, face);
			}
		}
		for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b) {
			const Block &block = bt.blocks[b];
			if (!block.trivial() && wd.blocks[b].faces.size() == 1 && block.vertices.size() >= 4 &&
			    bt.cut_vertex_count(b) == 1)
				return long_pendant_cycle(g, bt, wd.blocks[b]);
		}

		int pendant = -1;
		for (int b = 0; b < static_cast<int>(bt.blocks.size()) && pendant < 0; ++b)
			if (!bt.blocks[b].trivial() && bt.cut_vertex_count(b) == 1)
				pendant = b;
		if (pendant < 0)
			step_failed("pendant block", "no nontrivial pendant block");
		return pendant_block(g, bt, wd.blocks[pendant]);
	}

private:
	void check(const Graph &g, const Classes &f, const char *label) const {
		if (!options_.check_steps)
			return;
		auto report = verify_feasible_1124(g, to_coloring(kSeq, f));
		if (!report.ok())
			step_failed(label, report.violations.front().describe());
	}

	void check_instance(const Graph &g) const {
		if (options_.check_steps && (!is_subcubic(g) || !is_outerplanar(g)))
			step_failed("recursive instance", "auxiliary graph left the subcubic outerplanar class");
	}

	Classes recurse_without(const Graph &g, const std::vector<Vertex> &removed, std::span<const Edge> extra = {}) {
		std::vector<char> gone(g.vertex_count(), 0);
		for (Vertex v : removed)
			gone[v] = 1;
		std::vector<Vertex> keep;
		for (Vertex v = 0; v < g.vertex_count(); ++v)
			if (!gone[v])
				keep.push_back(v);
		DerivedGraph sub = induced_subgraph(g, keep, extra);
		check_instance(sub.graph);
		Classes f(g.vertex_count(), 0);
		pull_back(f, sub, run(sub.graph));
		return f;
	}

	Classes peel_leaf(const Graph &g, Vertex v) {
		const Vertex w = g.neighbors(v).front();
		Classes f = recurse_without(g, {v});
		f[v] = is_one(f[w]) ? other_one(f[w]) : kOneA;
		check(g, f, "degree-1 vertex");
		return f;
	}

	// Leaf face of length >= 4 with no cut vertex: drop its degree-2 path.
	Classes long_leaf_face(const Graph &g, const BlockFaces &bf, int face) {
		Edge chord{};
		for (const DualEdge &d : bf.adjacency)
			if (d.a == face || d.b == face)
				chord = d.shared;
		const auto seq = walk_from(bf.faces[face], chord.u, chord.v);
		Classes f = recurse_without(g, std::vector<Vertex>(seq.begin() + 1, seq.end() - 1));
		extend_pendant_path(f, seq);
		check(g, f, "pendant face of length >= 4");
		return f;
	}

	// Pendant block that is a cycle of length >= 4.
	Classes long_pendant_cycle(const Graph &g, const BlockTree &bt, const BlockFaces &bf) {
		const auto &cyc = bf.faces.front();
		Vertex u1 = -1;
		for (Vertex v : cyc)
			if (bt.is_cut_vertex(v))
				u1 = v;
		Vertex outside = -1;
		for (Vertex w : g.neighbors(u1))
			if (std::find(cyc.begin(), cyc.end(), w) == cyc.end())
				outside = w;
		const auto seq = walk_toward(cyc, u1, cyc[(std::find(cyc.begin(), cyc.end(), u1) - cyc.begin() + 1) %
		                                          cyc.size()]);
		Classes f = recurse_without(g, cyc);
		const int x = is_one(f[outside]) ? other_one(f[outside]) : kOneB;
		f[u1] = x;
		if (seq.size() % 2 == 0) {
			alternate(f, std::vector<Vertex>(seq.begin() + 1, seq.end()), other_one(x));
		} else {
			f[seq[1]] = other_one(x);
			f[seq[2]] = kTwo;
			alternate(f, std::vector<Vertex>(seq.begin() + 3, seq.end()), x);
		}
		check(g, f, "pendant cycle of length >= 4");
		return f;
	}

	// Pendant triangles hanging on the face `host` (walked as `seq`), apart
	// from the face `skip`.
	static std::vector<Triangle> triangles_on(const BlockFaces &bf, int host, int skip, const std::vector<Vertex> &seq,
	                                          const char *label) {
		std::vector<Triangle> out;
		const int k = static_cast<int>(seq.size());
		for (const DualEdge &d : bf.adjacency) {
			if (d.a != host && d.b != host)
				continue;
			const int other = d.a == host ? d.b : d.a;
			if (other == skip)
				continue;
			const auto &tri = bf.faces[other];
			if (tri.size() != 3 || bf.neighbors[other].size() != 1)
				step_failed(label, "face next to the host is not a pendant triangle");
			Triangle t;
			for (Vertex v : tri)
				if (v != d.shared.u && v != d.shared.v)
					t.apex = v;
			const int i = static_cast<int>(std::find(seq.begin(), seq.end(), d.shared.u) - seq.begin());
			const int j = static_cast<int>(std::find(seq.begin(), seq.end(), d.shared.v) - seq.begin());
			if ((i + 1) % k == j)
				t.q = i;
			else if ((j + 1) % k == i)
				t.q = j;
			else
				step_failed(label, "base of a pendant triangle is not a cycle edge");
			if (t.q == k - 1)
				step_failed(label, "pendant triangle on the closing edge of the walk");
			out.push_back(t);
		}
		std::sort(out.begin(), out.end(), [](const Triangle &a, const Triangle &b) { return a.q < b.q; });
		return out;
	}

	// Recolors u_1 with a distance-1 class missing from its other neighbours,
	// if there is one.
	static bool free_one_class(const Graph &g, Classes &f, Vertex u1, Vertex v1) {
		for (int c : {kOneA, kOneB}) {
			bool used = false;
			for (Vertex w : g.neighbors(u1))
				used = used || (w != v1 && f[w] == c);
			if (!used) {
				f[u1] = c;
				return true;
			}
		}
		return false;
	}

	Classes pendant_block(const Graph &g, const BlockTree &bt, const BlockFaces &bf) {
		const Block &block = bt.blocks[bf.block];
		Vertex v1 = -1;
		for (Vertex v : block.vertices)
			if (bt.is_cut_vertex(v))
				v1 = v;
		Vertex u1 = -1;
		for (Vertex w : g.neighbors(v1))
			if (!std::binary_search(block.vertices.begin(), block.vertices.end(), w))
				u1 = w;
		if (u1 < 0 || g.degree(v1) != 3)
			step_failed("pendant block", "attachment is not a single bridge");

		int f0 = -1;
		for (int face = 0; face < static_cast<int>(bf.faces.size()); ++face)
			if (std::find(bf.faces[face].begin(), bf.faces[face].end(), v1) != bf.faces[face].end())
				f0 = face;

		if (bf.faces.size() == 1)
			return case_triangle(g, block, v1, u1);

		bool only_leaves = true;
		for (int nb : bf.neighbors[f0])
			only_leaves = only_leaves && bf.neighbors[nb].size() == 1;
		if (only_leaves)
			return case_leaves_around(g, block, bf, f0, v1, u1);
		return case_deep(g, block, bf, f0, v1, u1);
	}

	// Gap in the argument: with f(u_1) = 3 and u_1 of degree 2 in G, class 4
	// placed at distance 2 from u_1 would break (B). Such a u_1 has a single
	// neighbour in G', so it can move to a distance-1 class instead.
	static void settle_low_degree_u1(const Graph &g, Classes &f, Vertex u1, Vertex v1) {
		if (f[u1] == kTwo && g.degree(u1) == 2)
			free_one_class(g, f, u1, v1);
	}

	Classes case_triangle(const Graph &g, const Block &block, Vertex v1, Vertex u1) {
		if (block.vertices.size() != 3)
			step_failed("case 1", "pendant cycle is not a triangle");
		std::vector<Vertex> rest;
		for (Vertex v : block.vertices)
			if (v != v1)
				rest.push_back(v);
		const Vertex v2 = rest[0];
		const Vertex v3 = rest[1];
		Classes f = recurse_without(g, block.vertices);
		settle_low_degree_u1(g, f, u1, v1);
		const char *label = "case 1.1";
		if (f[u1] == kFour) {
			if (free_one_class(g, f, u1, v1)) {
				label = "case 1.3 (recolored)";
			} else {
				f[v1] = kTwo;
				f[v2] = kOneB;
				f[v3] = kOneA;
				check(g, f, "case 1.3");
				return f;
			}
		}
		if (is_one(f[u1])) {
			f[v1] = other_one(f[u1]);
			f[v2] = f[u1];
			f[v3] = kTwo;
		} else {
			label = "case 1.2";
			f[v1] = kOneA;
			f[v2] = kOneB;
			f[v3] = kFour;
		}
		check(g, f, label);
		return f;
	}

	Classes case_leaves_around(const Graph &g, const Block &block, const BlockFaces &bf, int f0, Vertex v1,
	                           Vertex u1) {
		const auto &cyc = bf.faces[f0];
		const int k = static_cast<int>(cyc.size());
		const int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), v1) - cyc.begin());
		const auto seq = walk_toward(cyc, v1, cyc[(at + 1) % k]);
		const auto tris = triangles_on(bf, f0, -1, seq, "case 2");
		Classes f = recurse_without(g, block.vertices);
		settle_low_degree_u1(g, f, u1, v1);

		if (k % 2 == 0) {
			alternate(f, seq, is_one(f[u1]) ? other_one(f[u1]) : kOneA);
			for (const Triangle &t : tris)
				f[t.apex] = kTwo;
			check(g, f, "case 2 (even face)");
			return f;
		}
		const int p = tris.front().q;
		const bool place_four = f[u1] == kTwo;
		f[seq[p]] = place_four ? kFour : kTwo;
		std::vector<Vertex> path(seq.begin() + p + 1, seq.end());
		path.insert(path.end(), seq.begin(), seq.begin() + p);
		bool done = false;
		for (int start : {kOneA, kOneB}) {
			alternate(f, path, start);
			if (f[v1] != f[u1]) {
				done = true;
				break;
			}
		}
		if (!done)
			step_failed("case 2", "v_1 cannot avoid the class of u_1");
		f[tris.front().apex] = other_one(f[seq[p + 1]]);
		for (std::size_t i = 1; i < tris.size(); ++i)
			f[tris[i].apex] = kTwo;
		check(g, f, place_four ? "case 2.2" : "case 2.1");
		return f;
	}

	Classes case_deep(const Graph &g, const Block &block, const BlockFaces &bf, int f0, Vertex v1, Vertex u1) {
		const int faces = static_cast<int>(bf.faces.size());
		std::vector<int> dist(faces, -1);
		std::deque<int> queue{f0};
		dist[f0] = 0;
		while (!queue.empty()) {
			int x = queue.front();
			queue.pop_front();
			for (int y : bf.neighbors[x])
				if (dist[y] < 0) {
					dist[y] = dist[x] + 1;
					queue.push_back(y);
				}
		}
		int r = -1;
		for (int face = 0; face < faces; ++face)
			if (face != f0 && bf.neighbors[face].size() == 1 && (r < 0 || dist[face] > dist[r]))
				r = face;
		if (r < 0 || dist[r] < 2)
			step_failed("case 3", "no pendant face at dual distance >= 2");
		const int r0 = bf.neighbors[r].front();
		int r0p = -1;
		for (int nb : bf.neighbors[r0])
			if (dist[nb] == dist[r0] - 1)
				r0p = nb;
		Edge shared{};
		for (const DualEdge &d : bf.adjacency)
			if ((d.a == r0 && d.b == r0p) || (d.a == r0p && d.b == r0))
				shared = d.shared;

		const auto &host = bf.faces[r0];
		const auto &prev = bf.faces[r0p];
		if (prev.size() == 3)
			return case_deep_triangle(g, block, bf, r0, r0p, shared, v1, u1);

		// Case 3.2: R'_0 has at least four vertices.
		Vertex x1 = shared.u;
		Vertex x2 = shared.v;
		auto across = [&](Vertex x, Vertex partner) {
			const auto walk = walk_toward(prev, x, partner);
			return walk.back();
		};
		Vertex x1p = across(x1, x2);
		Vertex x2p = across(x2, x1);
		std::vector<Vertex> removed(host.begin(), host.end());
		{
			const auto seq = walk_toward(host, x1, x2);
			for (const Triangle &t : triangles_on(bf, r0, r0p, seq, "case 3.2"))
				removed.push_back(t.apex);
		}
		std::vector<Edge> extra;
		if (!g.has_edge(x1p, x2p))
			extra.push_back(make_edge(x1p, x2p));
		Classes f = recurse_without(g, removed, extra);
		if (f[x2p] == kTwo) {
			std::swap(x1, x2);
			std::swap(x1p, x2p);
		}
		const auto seq = walk_toward(host, x1, x2);
		const auto tris = triangles_on(bf, r0, r0p, seq, "case 3.2");
		const int r_len = static_cast<int>(seq.size());
		const int q1 = tris.front().q;
		f[seq[q1]] = kTwo;
		std::vector<Vertex> path(seq.begin() + q1 + 1, seq.end());
		path.insert(path.end(), seq.begin(), seq.begin() + q1);
		bool done = false;
		for (int start : {kOneA, kOneB}) {
			alternate(f, path, start);
			const bool ok1 = !is_one(f[x1p]) || f[x1] != f[x1p];
			const bool ok2 = !is_one(f[x2p]) || f[x2] != f[x2p];
			if (ok1 && ok2) {
				done = true;
				break;
			}
		}
		if (!done)
			step_failed("case 3.2", "no alternation matches x'_1 and x'_2");
		f[tris.front().apex] = other_one(f[seq[(q1 + 1) % r_len]]);
		for (std::size_t i = 1; i < tris.size(); ++i)
			f[tris[i].apex] = kTwo;
		check(g, f, "case 3.2");
		return f;
	}

	// Case 3.1: R'_0 is the triangle x_0 x_1 x_2 with x_0 = v_1.
	Classes case_deep_triangle(const Graph &g, const Block &block, const BlockFaces &bf, int r0, int r0p,
	                           Edge shared, Vertex v1, Vertex u1) {
		const Vertex x1 = shared.u;
		const Vertex x2 = shared.v;
		Vertex x0 = -1;
		for (Vertex v : bf.faces[r0p])
			if (v != x1 && v != x2)
				x0 = v;
		if (x0 != v1)
			step_failed("case 3.1", "apex of R'_0 is not the attachment vertex");
		const auto seq = walk_toward(bf.faces[r0], x1, x2);
		const auto tris = triangles_on(bf, r0, r0p, seq, "case 3.1");
		Classes f = recurse_without(g, block.vertices);
		settle_low_degree_u1(g, f, u1, v1);
		const char *label = "case 3.1.1";
		if (f[u1] == kFour) {
			if (free_one_class(g, f, u1, v1)) {
				label = "case 3.1.3 (recolored)";
			} else {
				DerivedGraph sub = induced_subgraph(g, block.vertices);
				pull_back(f, sub, run_112(sub.graph, options_));
				check(g, f, "case 3.1.3");
				return f;
			}
		}
		if (is_one(f[u1])) {
			f[x1] = kTwo;
			std::vector<Vertex> path{x0};
			path.insert(path.end(), seq.begin() + 1, seq.end());
			alternate(f, path, other_one(f[u1]));
			f[tris.back().apex] = kFour;
			for (std::size_t i = 0; i + 1 < tris.size(); ++i)
				f[tris[i].apex] = kTwo;
			check(g, f, label);
			return f;
		}
		// f(u_1) = 3
		const int qm = tris.back().q;
		f[x1] = kFour;
		f[seq[qm + 1]] = kTwo;
		std::vector<Vertex> first{x0};
		first.insert(first.end(), seq.begin() + 1, seq.begin() + qm + 1);
		first.push_back(tris.back().apex);
		alternate(f, first, kOneA);
		alternate(f, std::vector<Vertex>(seq.begin() + qm + 2, seq.end()), kOneA);
		for (std::size_t i = 0; i + 1 < tris.size(); ++i)
			f[tris[i].apex] = kTwo;
		check(g, f, "case 3.1.2");
		return f;
	}

	ConstructiveOptions options_;
};

} // namespace

Coloring color_1124(const Graph &g, ConstructiveOptions options) {
	if (!is_subcubic(g))
		throw Error(ErrorKind::NotSubcubic, "graph has a vertex of degree > 3");
	if (!is_outerplanar(g))
		throw Error(ErrorKind::NotOuterplanar, "graph is not outerplanar");
	Feasible feasible(options);
	Coloring c = detail::to_coloring(kSeq, feasible.run(g));
	auto report = verify_feasible_1124(g, c);
	if (!report.ok())
		detail::step_failed("final coloring", report.violations.front().describe());
	return c;
}

} // namespace packing
