#include "packing/gadgets.hpp"

#include "packing/error.hpp"
#include "packing/structure.hpp"

#include <algorithm>
#include <map>

namespace packing {

Vertex LabeledGraph::at(const std::string &label) const {
	for (const auto &[name, v] : labels)
		if (name == label)
			return v;
	throw Error(ErrorKind::InfeasibleRequest, "unknown label " + label);
}

bool LabeledGraph::has(const std::string &label) const {
	return std::any_of(labels.begin(), labels.end(), [&](const auto &p) { return p.first == label; });
}

namespace {

class Builder {
public:
	Vertex add(const std::string &name) {
		if (index_.count(name))
			throw Error(ErrorKind::InternalProofStepFailed, "duplicate gadget label " + name);
		const Vertex v = static_cast<Vertex>(labels_.size());
		labels_.emplace_back(name, v);
		index_[name] = v;
		return v;
	}

	void add_all(std::initializer_list<const char *> names) {
		for (const char *name : names)
			add(name);
	}

	void edge(const std::string &a, const std::string &b) { pairs_.emplace_back(id(a), id(b)); }

	void triangle(const std::string &a, const std::string &b, const std::string &c) {
		edge(a, b);
		edge(b, c);
		edge(a, c);
	}

	/// Copies every vertex and edge of `sub`, prefixing its labels.
	void include(const LabeledGraph &sub, const std::string &prefix) {
		std::vector<Vertex> map(sub.graph.vertex_count(), -1);
		for (const auto &[name, v] : sub.labels)
			map[v] = add(prefix + name);
		for (const Edge &e : sub.graph.edges())
			pairs_.emplace_back(map[e.u], map[e.v]);
	}

	Vertex id(const std::string &name) const {
		auto it = index_.find(name);
		if (it == index_.end())
			throw Error(ErrorKind::InternalProofStepFailed, "gadget edge names unknown vertex " + name);
		return it->second;
	}

	LabeledGraph build() const {
		return {Graph::from_edge_list(static_cast<int>(labels_.size()), pairs_), labels_};
	}

private:
	std::vector<std::pair<std::string, Vertex>> labels_;
	std::map<std::string, Vertex> index_;
	std::vector<std::pair<Vertex, Vertex>> pairs_;
};

// Construction-time checks that tie each transcription to the facts stated
// about it in the text.
void require(bool ok, const std::string &what) {
	if (!ok)
		throw Error(ErrorKind::InternalProofStepFailed, "gadget transcription check failed: " + what);
}

int dist(const LabeledGraph &lg, const std::string &a, const std::string &b) {
	return distances_from(lg.graph, lg.at(a))[lg.at(b)];
}

bool has_triangle(const LabeledGraph &lg, const std::string &a, const std::string &b, const std::string &c) {
	const Graph &g = lg.graph;
	const Vertex x = lg.at(a), y = lg.at(b), z = lg.at(c);
	return g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z);
}

void require_class(const LabeledGraph &lg, const char *name) {
	require(is_subcubic(lg.graph), std::string(name) + " is subcubic");
	require(is_outerplanar(lg.graph), std::string(name) + " is outerplanar");
}

// Counts (triangle blocks, bridges).
std::pair<int, int> block_inventory(const Graph &g) {
	auto bt = block_cut_tree(g);
	int triangles = 0, bridges = 0;
	for (const Block &b : bt.blocks) {
		if (b.trivial())
			++bridges;
		else if (b.vertices.size() == 3)
			++triangles;
	}
	return {triangles, bridges};
}

void add_unit(Builder &b, const std::string &p) {
	for (int i = 1; i <= 6; ++i)
		b.add(p + std::to_string(i));
	b.triangle(p + "1", p + "2", p + "3");
	b.triangle(p + "4", p + "5", p + "6");
	b.edge(p + "2", p + "4");
	b.edge(p + "3", p + "5");
}

} // namespace

LabeledGraph example_c4_two_ears() {
	Builder b;
	b.add_all({"u1", "u2", "u3", "u4", "v1", "v2"});
	b.edge("u1", "u2");
	b.edge("u2", "u3");
	b.edge("u3", "u4");
	b.edge("u4", "u1");
	b.edge("u1", "v1");
	b.edge("v1", "u2");
	b.edge("u3", "v2");
	b.edge("v2", "u4");
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == 6 && lg.graph.edge_count() == 8, "example has 6 vertices and 8 edges");
	require(all_pairs_distances(lg.graph).max_finite() == 3, "example has diameter 3");
	require(has_triangle(lg, "u1", "u2", "v1") && has_triangle(lg, "u3", "u4", "v2"), "example ears form triangles");
	return lg;
}

LabeledGraph double_triangle_unit() {
	Builder b;
	add_unit(b, "a");
	LabeledGraph lg = b.build();
	require(lg.graph.edge_count() == 8, "unit has 8 edges");
	require(lg.graph.degree(lg.at("a1")) == 2 && lg.graph.degree(lg.at("a6")) == 2, "unit ends have degree 2");
	require(dist(lg, "a1", "a6") == 3, "unit ends at distance 3");
	return lg;
}

LabeledGraph gadget_g1(bool with_pendant) {
	Builder b;
	b.add("w1");
	add_unit(b, "u");
	add_unit(b, "v");
	b.edge("w1", "u1");
	b.edge("w1", "v1");
	if (with_pendant) {
		b.add("z6");
		b.edge("z6", "w1");
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == (with_pendant ? 14 : 13), "G1 vertex count");
	require(has_triangle(lg, "u1", "u2", "u3") && has_triangle(lg, "u4", "u5", "u6") &&
	            has_triangle(lg, "v1", "v2", "v3") && has_triangle(lg, "v4", "v5", "v6"),
	        "G1 has its four triangles");
	if (with_pendant) {
		auto d = distances_from(lg.graph, lg.at("z6"));
		const int ecc = *std::max_element(d.begin(), d.end());
		std::vector<Vertex> far;
		for (Vertex v = 0; v < lg.graph.vertex_count(); ++v)
			if (d[v] == ecc)
				far.push_back(v);
		std::vector<Vertex> expect{lg.at("u6"), lg.at("v6")};
		std::sort(expect.begin(), expect.end());
		require(ecc == 5 && far == expect, "farthest vertices from z6 are u6 and v6 at distance 5");
	}
	require_class(lg, "G1");
	return lg;
}

LabeledGraph gadget_g2(bool with_pendant) {
	Builder b;
	b.add("x4");
	add_unit(b, "t");
	add_unit(b, "y");
	b.add("b1");
	add_unit(b, "p");
	add_unit(b, "q");
	b.add("b2");
	add_unit(b, "z");
	add_unit(b, "s");
	b.edge("x4", "t1");
	b.edge("x4", "y1");
	b.edge("t6", "b1");
	b.edge("b1", "p1");
	b.edge("b1", "q1");
	b.edge("y6", "b2");
	b.edge("b2", "z1");
	b.edge("b2", "s1");
	const LabeledGraph g1 = gadget_g1(false);
	for (const char *end : {"p", "q", "z", "s"}) {
		b.include(g1, std::string(end) + ".");
		b.edge(std::string(end) + "6", std::string(end) + ".w1");
	}
	if (with_pendant) {
		b.add("x1");
		b.edge("x1", "x4");
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == (with_pendant ? 92 : 91), "G2 vertex count");
	require(has_triangle(lg, "y1", "y2", "y3") && has_triangle(lg, "t1", "t2", "t3"), "G2 has triangles y1y2y3, t1t2t3");
	require(dist(lg, "y1", "t1") == 2, "y1 and t1 at distance 2");
	require(has_triangle(lg, "s1", "s2", "s3") && has_triangle(lg, "z1", "z2", "z3"), "G2 has triangles s1s2s3, z1z2z3");
	// b2 with the z- and s-units is a G1 whose pendant is y6.
	require(dist(lg, "y6", "z6") == 5 && dist(lg, "y6", "s6") == 5, "y6 sees z6 and s6 at distance 5");
	require_class(lg, "G2");
	return lg;
}

LabeledGraph gadget_big_g() {
	Builder b;
	b.add_all({"x1", "x2", "x3"});
	b.triangle("x1", "x2", "x3");
	const LabeledGraph g2 = gadget_g2(false);
	for (int i = 1; i <= 3; ++i) {
		const std::string prefix = std::to_string(i) + ".";
		b.include(g2, prefix);
		b.edge("x" + std::to_string(i), prefix + "x4");
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == 276, "big G vertex count");
	for (const char *x : {"x1", "x2", "x3"})
		require(lg.graph.degree(lg.at(x)) == 3, "triangle corners have degree 3");
	require_class(lg, "big G");
	return lg;
}

LabeledGraph gadget_g3(bool with_pendant) {
	Builder b;
	for (int i = 1; i <= 12; ++i)
		b.add("u" + std::to_string(i));
	for (int i = 4; i <= 12; ++i)
		b.add("l" + std::to_string(i));
	b.triangle("u1", "u2", "u3");
	for (const char *side : {"u", "l"}) {
		const std::string s = side;
		b.triangle(s + "4", s + "5", s + "6");
		b.triangle(s + "7", s + "8", s + "9");
		b.triangle(s + "10", s + "11", s + "12");
		b.edge(s + "5", s + "7");
		b.edge(s + "6", s + "10");
	}
	b.edge("u3", "u4");
	b.edge("u2", "l4");
	if (with_pendant) {
		b.add("v3");
		b.edge("v3", "u1");
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == (with_pendant ? 22 : 21), "G3 vertex count");
	const auto [triangles, bridges] = block_inventory(lg.graph);
	require(triangles == 7 && bridges == (with_pendant ? 7 : 6), "G3 is 7 triangles joined by bridges");
	require(dist(lg, "u1", "u4") == 2 && dist(lg, "u4", "u7") == 2, "G3 distances u1-u4 and u4-u7");
	if (with_pendant)
		require(dist(lg, "v3", "u4") == 3, "v3 and u4 at distance 3");
	require_class(lg, "G3");
	return lg;
}

LabeledGraph gadget_h() {
	Builder b;
	b.add_all({"v1", "v2", "v3"});
	b.triangle("v1", "v2", "v3");
	const LabeledGraph g3 = gadget_g3(false);
	for (int i = 1; i <= 3; ++i) {
		const std::string prefix = std::to_string(i) + ".";
		b.include(g3, prefix);
		b.edge("v" + std::to_string(i), prefix + "u1");
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == 66, "H vertex count");
	const auto [triangles, bridges] = block_inventory(lg.graph);
	require(triangles == 22 && bridges == 21, "H has 22 triangles and 21 bridges");
	require_class(lg, "H");
	return lg;
}

LabeledGraph petersen() {
	Builder b;
	for (int i = 0; i < 5; ++i)
		b.add("o" + std::to_string(i));
	for (int i = 0; i < 5; ++i)
		b.add("i" + std::to_string(i));
	for (int i = 0; i < 5; ++i) {
		b.edge("o" + std::to_string(i), "o" + std::to_string((i + 1) % 5));
		b.edge("i" + std::to_string(i), "i" + std::to_string((i + 2) % 5));
		b.edge("o" + std::to_string(i), "i" + std::to_string(i));
	}
	LabeledGraph lg = b.build();
	require(lg.graph.vertex_count() == 10 && lg.graph.edge_count() == 15, "Petersen has 10 vertices, 15 edges");
	return lg;
}

} // namespace packing
