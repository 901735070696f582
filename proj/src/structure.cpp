#include "packing/structure.hpp"

#include "packing/error.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace packing {

bool BlockTree::is_cut_vertex(Vertex v) const {
	return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
}

int BlockTree::block_of_edge(Edge e) const {
	e = make_edge(e.u, e.v);
	if (e.u < 0 || e.u >= static_cast<int>(blocks_of.size()))
		return -1;
	for (int b : blocks_of[e.u])
		if (std::binary_search(blocks[b].edges.begin(), blocks[b].edges.end(), e))
			return b;
	return -1;
}

int BlockTree::cut_vertex_count(int b) const {
	int count = 0;
	for (Vertex v : blocks[b].vertices)
		count += is_cut_vertex(v) ? 1 : 0;
	return count;
}

BlockTree block_cut_tree(const Graph &g) {
	const int n = g.vertex_count();
	std::vector<int> disc(n, -1), low(n, 0);
	std::vector<Edge> stack;
	std::vector<Block> blocks;
	int timer = 0;

	std::function<void(Vertex, Vertex)> dfs = [&](Vertex v, Vertex parent) {
		disc[v] = low[v] = timer++;
		for (Vertex w : g.neighbors(v)) {
			if (w == parent)
				continue;
			if (disc[w] < 0) {
				stack.push_back(make_edge(v, w));
				dfs(w, v);
				low[v] = std::min(low[v], low[w]);
				if (low[w] >= disc[v]) {
					Block b;
					Edge top;
					do {
						top = stack.back();
						stack.pop_back();
						b.edges.push_back(top);
						b.vertices.push_back(top.u);
						b.vertices.push_back(top.v);
					} while (!(top == make_edge(v, w)));
					std::sort(b.edges.begin(), b.edges.end());
					std::sort(b.vertices.begin(), b.vertices.end());
					b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
					blocks.push_back(std::move(b));
				}
			} else if (disc[w] < disc[v]) {
				stack.push_back(make_edge(v, w));
				low[v] = std::min(low[v], disc[w]);
			}
		}
	};
	for (Vertex v = 0; v < n; ++v)
		if (disc[v] < 0)
			dfs(v, -1);

	std::sort(blocks.begin(), blocks.end(), [](const Block &a, const Block &b) { return a.vertices < b.vertices; });

	BlockTree bt;
	bt.blocks = std::move(blocks);
	bt.blocks_of.assign(n, {});
	for (int i = 0; i < static_cast<int>(bt.blocks.size()); ++i)
		for (Vertex v : bt.blocks[i].vertices)
			bt.blocks_of[v].push_back(i);
	for (Vertex v = 0; v < n; ++v)
		if (bt.blocks_of[v].size() > 1)
			bt.cut_vertices.push_back(v);
	for (Vertex v : bt.cut_vertices)
		for (int b : bt.blocks_of[v])
			bt.incidences.emplace_back(b, v);
	std::sort(bt.incidences.begin(), bt.incidences.end());
	return bt;
}

namespace {

// Outer cycle of a 2-connected block by degree-2 suppression; see header.
std::optional<std::vector<Vertex>> block_outer_cycle(const Block &block, std::string &reason) {
	const int n = static_cast<int>(block.vertices.size());
	auto local = [&](Vertex v) {
		return static_cast<int>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) - block.vertices.begin());
	};
	std::vector<std::set<int>> adj(n);
	for (const Edge &e : block.edges) {
		adj[local(e.u)].insert(local(e.v));
		adj[local(e.v)].insert(local(e.u));
	}
	if (static_cast<int>(block.edges.size()) > 2 * n - 3) {
		reason = "too many edges for an outerplanar block";
		return std::nullopt;
	}

	struct Suppressed {
		int v, a, b;
	};
	std::vector<Suppressed> record;
	std::vector<char> alive(n, 1);
	std::set<int> degree_two;
	for (int v = 0; v < n; ++v)
		if (adj[v].size() == 2)
			degree_two.insert(v);
	int remaining = n;
	while (remaining > 3) {
		if (degree_two.empty()) {
			reason = "no vertex of degree 2 left while reducing";
			return std::nullopt;
		}
		int v = *degree_two.begin();
		degree_two.erase(degree_two.begin());
		int a = *adj[v].begin();
		int b = *std::next(adj[v].begin());
		adj[a].erase(v);
		adj[b].erase(v);
		adj[v].clear();
		alive[v] = 0;
		--remaining;
		adj[a].insert(b);
		adj[b].insert(a);
		for (int x : {a, b}) {
			if (adj[x].size() == 2)
				degree_two.insert(x);
			else
				degree_two.erase(x);
		}
		record.push_back({v, a, b});
	}

	std::vector<int> rest;
	for (int v = 0; v < n; ++v)
		if (alive[v])
			rest.push_back(v);
	if (rest.size() != 3 || !adj[rest[0]].count(rest[1]) || !adj[rest[1]].count(rest[2]) ||
	    !adj[rest[0]].count(rest[2])) {
		reason = "reduction did not end in a triangle";
		return std::nullopt;
	}
	std::vector<int> next(n, -1), prev(n, -1);
	for (int i = 0; i < 3; ++i) {
		next[rest[i]] = rest[(i + 1) % 3];
		prev[rest[(i + 1) % 3]] = rest[i];
	}
	for (auto it = record.rbegin(); it != record.rend(); ++it) {
		int a = it->a, b = it->b;
		if (next[b] == a)
			std::swap(a, b);
		if (next[a] != b) {
			reason = "a suppressed vertex cannot be re-inserted on the outer cycle";
			return std::nullopt;
		}
		next[a] = it->v;
		prev[it->v] = a;
		next[it->v] = b;
		prev[b] = it->v;
	}

	std::vector<Vertex> cycle;
	std::vector<int> position(n, -1);
	for (int v = 0, steps = 0; steps < n; v = next[v], ++steps) {
		position[v] = steps;
		cycle.push_back(block.vertices[v]);
	}

	std::vector<std::pair<int, int>> chords;
	for (const Edge &e : block.edges) {
		int p = position[local(e.u)], q = position[local(e.v)];
		if (p > q)
			std::swap(p, q);
		if (q - p == 1 || (p == 0 && q == n - 1))
			continue;
		chords.emplace_back(p, q);
	}
	std::sort(chords.begin(), chords.end(), [](auto x, auto y) { return x.first != y.first ? x.first < y.first : x.second > y.second; });
	std::vector<int> open;
	for (auto [p, q] : chords) {
		while (!open.empty() && open.back() <= p)
			open.pop_back();
		if (!open.empty() && open.back() < q) {
			reason = "crossing chords on the outer cycle";
			return std::nullopt;
		}
		open.push_back(q);
	}
	return cycle;
}

} // namespace

EmbeddingResult outer_embedding(const Graph &g) {
	OuterEmbedding emb;
	emb.tree = block_cut_tree(g);
	emb.embedding_of.assign(emb.tree.blocks.size(), -1);
	for (int b = 0; b < static_cast<int>(emb.tree.blocks.size()); ++b) {
		const Block &block = emb.tree.blocks[b];
		if (block.trivial())
			continue;
		std::string reason;
		auto cycle = block_outer_cycle(block, reason);
		if (!cycle)
			return NotOuterplanar{block.vertices, reason};
		BlockEmbedding be;
		be.block = b;
		be.cycle = std::move(*cycle);
		std::set<Edge> cycle_edges;
		for (std::size_t i = 0; i < be.cycle.size(); ++i)
			cycle_edges.insert(make_edge(be.cycle[i], be.cycle[(i + 1) % be.cycle.size()]));
		for (const Edge &e : block.edges)
			if (!cycle_edges.count(e))
				be.chords.push_back(e);
		emb.embedding_of[b] = static_cast<int>(emb.blocks.size());
		emb.blocks.push_back(std::move(be));
	}
	return emb;
}

OuterEmbedding require_outer_embedding(const Graph &g) {
	auto result = outer_embedding(g);
	if (auto *bad = std::get_if<NotOuterplanar>(&result)) {
		std::string vs;
		for (Vertex v : bad->block)
			vs += (vs.empty() ? "" : ",") + std::to_string(v);
		throw Error(ErrorKind::NotOuterplanar, bad->reason + " (block {" + vs + "})");
	}
	return std::get<OuterEmbedding>(std::move(result));
}

bool is_outerplanar(const Graph &g) {
	return std::holds_alternative<OuterEmbedding>(outer_embedding(g));
}

bool is_two_connected(const Graph &g) {
	if (g.vertex_count() < 3)
		return false;
	auto bt = block_cut_tree(g);
	return bt.blocks.size() == 1 && static_cast<int>(bt.blocks[0].vertices.size()) == g.vertex_count();
}

std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle) {
	if (cycle.size() < 3)
		return cycle;
	auto it = std::min_element(cycle.begin(), cycle.end());
	std::rotate(cycle.begin(), it, cycle.end());
	if (cycle.back() < cycle[1])
		std::reverse(cycle.begin() + 1, cycle.end());
	return cycle;
}

WeakDual weak_dual(const OuterEmbedding &emb) {
	WeakDual wd;
	wd.blocks.resize(emb.tree.blocks.size());
	for (int b = 0; b < static_cast<int>(emb.tree.blocks.size()); ++b)
		wd.blocks[b].block = b;

	for (const BlockEmbedding &be : emb.blocks) {
		const int len = static_cast<int>(be.cycle.size());
		std::map<Vertex, int> pos;
		for (int i = 0; i < len; ++i)
			pos[be.cycle[i]] = i;
		// chords_from[p]: chord partners q > p, descending
		std::vector<std::vector<int>> chords_from(len);
		for (const Edge &e : be.chords) {
			int p = pos[e.u], q = pos[e.v];
			if (p > q)
				std::swap(p, q);
			chords_from[p].push_back(q);
		}
		for (auto &list : chords_from)
			std::sort(list.rbegin(), list.rend());

		struct Interval {
			int lo, hi, parent;
		};
		std::vector<std::vector<Vertex>> raw_faces;
		std::vector<DualEdge> raw_adjacency;
		std::vector<Interval> work{{0, len, -1}};
		while (!work.empty()) {
			Interval iv = work.back();
			work.pop_back();
			const int id = static_cast<int>(raw_faces.size());
			if (iv.parent >= 0)
				raw_adjacency.push_back({iv.parent, id, make_edge(be.cycle[iv.lo], be.cycle[iv.hi])});
			std::vector<Vertex> boundary{be.cycle[iv.lo]};
			int p = iv.lo;
			while (p != iv.hi) {
				int jump = -1;
				for (int q : chords_from[p]) {
					if (q > iv.hi || (p == iv.lo && q == iv.hi))
						continue;
					jump = q;
					break;
				}
				if (jump >= 0) {
					work.push_back({p, jump, id});
					p = jump;
				} else {
					++p;
				}
				if (p != len)
					boundary.push_back(be.cycle[p]);
			}
			raw_faces.push_back(std::move(boundary));
		}

		// Canonical order: faces sorted by canonical boundary.
		std::vector<std::vector<Vertex>> canon;
		for (auto &f : raw_faces)
			canon.push_back(canonical_cycle(f));
		std::vector<int> order(canon.size());
		for (int i = 0; i < static_cast<int>(order.size()); ++i)
			order[i] = i;
		std::sort(order.begin(), order.end(), [&](int x, int y) { return canon[x] < canon[y]; });
		std::vector<int> rank(order.size());
		for (int i = 0; i < static_cast<int>(order.size()); ++i)
			rank[order[i]] = i;

		BlockFaces &bf = wd.blocks[be.block];
		for (int i : order)
			bf.faces.push_back(canon[i]);
		bf.neighbors.assign(bf.faces.size(), {});
		for (const DualEdge &de : raw_adjacency) {
			int a = rank[de.a], b = rank[de.b];
			if (a > b)
				std::swap(a, b);
			bf.adjacency.push_back({a, b, de.shared});
			bf.neighbors[a].push_back(b);
			bf.neighbors[b].push_back(a);
		}
		std::sort(bf.adjacency.begin(), bf.adjacency.end(),
		          [](const DualEdge &x, const DualEdge &y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });
		for (auto &list : bf.neighbors)
			std::sort(list.begin(), list.end());
	}
	return wd;
}

std::vector<FaceRef> pendant_faces(const Graph &, const WeakDual &wd, const BlockTree &bt) {
	std::vector<FaceRef> out;
	for (int b = 0; b < static_cast<int>(wd.blocks.size()); ++b) {
		const BlockFaces &bf = wd.blocks[b];
		const bool whole_block_pendant = bf.faces.size() == 1 && bt.cut_vertex_count(b) <= 1;
		for (int f = 0; f < static_cast<int>(bf.faces.size()); ++f) {
			bool leaf = bf.neighbors[f].size() <= 1;
			bool has_cut = std::any_of(bf.faces[f].begin(), bf.faces[f].end(),
			                           [&](Vertex v) { return bt.is_cut_vertex(v); });
			if ((leaf && !has_cut) || whole_block_pendant)
				out.push_back({b, f});
		}
	}
	return out;
}

} // namespace packing
