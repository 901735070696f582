#include "fixtures.hpp"
#include "oracles.hpp"

#include "packing/error.hpp"
#include "packing/gadgets.hpp"
#include "packing/graph.hpp"

#include <doctest.h>

#include <algorithm>
#include <sstream>

using namespace packing;

namespace {

using fixture::error_kind;

std::vector<Graph> distance_corpus() {
	std::vector<Graph> out;
	for (int seed = 0; seed < 60; ++seed) {
		const int n = 1 + seed % 12;
		out.push_back(fixture::random_graph(n, 0.1 + 0.05 * (seed % 7), seed));
	}
	for (int seed = 0; seed < 40; ++seed)
		out.push_back(random_outerplanar_subcubic(3 + seed % 10, seed, seed % 2 == 0));
	out.push_back(petersen().graph);
	return out;
}

} // namespace

TEST_CASE("edge list construction") {
	SUBCASE("triangle") {
		Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {2, 0}});
		CHECK(g.edge_count() == 3);
		for (Vertex v = 0; v < 3; ++v)
			CHECK(g.degree(v) == 2);
	}
	SUBCASE("K4 minus an edge") {
		Graph g = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
		CHECK(g.edge_count() == 5);
		CHECK_FALSE(g.has_edge(1, 3));
		CHECK(g.degree(0) == 3);
		CHECK(g.degree(1) == 2);
	}
	SUBCASE("duplicates collapse") {
		Graph g = Graph::from_edge_list(2, {{0, 1}, {0, 1}, {1, 0}});
		CHECK(g.edge_count() == 1);
	}
	SUBCASE("neighbors ascend") {
		Graph g = Graph::from_edge_list(5, {{4, 0}, {0, 2}, {3, 0}, {1, 0}});
		auto nb = g.neighbors(0);
		CHECK(std::is_sorted(nb.begin(), nb.end()));
		CHECK(nb.size() == 4);
	}
	SUBCASE("errors") {
		CHECK(error_kind([] { Graph::from_edge_list(3, {{0, 3}}); }) == ErrorKind::OutOfRangeVertex);
		CHECK(error_kind([] { Graph::from_edge_list(3, {{-1, 2}}); }) == ErrorKind::OutOfRangeVertex);
		CHECK(error_kind([] { Graph::from_edge_list(3, {{1, 1}}); }) == ErrorKind::SelfLoop);
	}
}

TEST_CASE("adjacency symmetry and handshake on random graphs") {
	for (int seed = 0; seed < 50; ++seed) {
		Graph g = fixture::random_graph(2 + seed % 15, 0.3, seed);
		int degree_sum = 0;
		for (Vertex u = 0; u < g.vertex_count(); ++u) {
			degree_sum += g.degree(u);
			for (Vertex w : g.neighbors(u)) {
				CHECK(w != u);
				CHECK(g.has_edge(w, u));
			}
		}
		CHECK(degree_sum == 2 * g.edge_count());
	}
}

TEST_CASE("distances agree with min-plus products") {
	for (const Graph &g : distance_corpus()) {
		const DistanceMatrix d = all_pairs_distances(g);
		const oracle::Matrix ref = oracle::minplus_distances(g);
		const int n = g.vertex_count();
		for (Vertex u = 0; u < n; ++u)
			for (Vertex v = 0; v < n; ++v) {
				if (ref[u][v] >= oracle::kInf)
					CHECK_FALSE(d.at(u, v).has_value());
				else
					CHECK(d.at(u, v) == ref[u][v]);
			}
	}
}

TEST_CASE("distance matrix invariants") {
	for (const Graph &g : distance_corpus()) {
		const DistanceMatrix d = all_pairs_distances(g);
		const int n = g.vertex_count();
		for (Vertex u = 0; u < n; ++u) {
			CHECK(d.at(u, u) == 0);
			for (Vertex v = 0; v < n; ++v) {
				CHECK(d.at(u, v) == d.at(v, u));
				CHECK((d.at(u, v) == 1) == g.has_edge(u, v));
				for (Vertex w = 0; w < n; ++w)
					if (d.at(u, w) && d.at(w, v))
						CHECK(*d.at(u, v) <= *d.at(u, w) + *d.at(w, v));
			}
		}
	}
}

TEST_CASE("distance anchors") {
	CHECK(all_pairs_distances(fixture::cycle(4)).at(0, 2) == 2);
	CHECK(all_pairs_distances(example_c4_two_ears().graph).max_finite() == 3);

	const LabeledGraph g1 = gadget_g1(true);
	auto d = distances_from(g1.graph, g1.at("z6"));
	CHECK(d[g1.at("u6")] == 5);
	CHECK(d[g1.at("v6")] == 5);
	CHECK(*std::max_element(d.begin(), d.end()) == 5);
	CHECK(std::count(d.begin(), d.end(), 5) == 2);

	SUBCASE("unreachable is explicit") {
		Graph g = Graph::from_edge_list(3, {{0, 1}});
		CHECK_FALSE(all_pairs_distances(g).at(0, 2).has_value());
		CHECK(distances_from(g, 0)[2] == -1);
	}
	SUBCASE("truncated search stops at the radius") {
		auto r = distances_from(fixture::path(6), 0, 2);
		CHECK(r[2] == 2);
		CHECK(r[3] == -1);
	}
}

TEST_CASE("subcubic") {
	CHECK(is_subcubic(fixture::complete(4)));
	CHECK_FALSE(is_subcubic(fixture::complete(5)));
	const Graph h = gadget_h().graph;
	int worst = 0;
	for (Vertex v = 0; v < h.vertex_count(); ++v)
		worst = std::max(worst, h.degree(v));
	CHECK(worst <= 3);
	CHECK(is_subcubic(h));
}

TEST_CASE("subdivision") {
	SUBCASE("C3 becomes C6") {
		SubdivisionMap d = subdivide(fixture::cycle(3));
		CHECK(d.graph.vertex_count() == 6);
		CHECK(d.graph.edge_count() == 6);
		for (Vertex v = 0; v < 6; ++v)
			CHECK(d.graph.degree(v) == 2);
		CHECK(connected_components(d.graph).size() == 1);
	}
	SUBCASE("K2 becomes P3") {
		SubdivisionMap d = subdivide(fixture::path(2));
		CHECK(d.graph.vertex_count() == 3);
		CHECK(d.graph.edge_count() == 2);
		CHECK(d.graph.degree(d.edge_to_midpoint[0]) == 2);
	}
	SUBCASE("Petersen counts") {
		SubdivisionMap d = subdivide(petersen().graph);
		CHECK(d.graph.vertex_count() == 25);
		CHECK(d.graph.edge_count() == 30);
	}
}

TEST_CASE("subdivision doubles distances and is bipartite") {
	for (const Graph &g : distance_corpus()) {
		const SubdivisionMap d = subdivide(g);
		REQUIRE(d.graph.vertex_count() == g.vertex_count() + g.edge_count());
		REQUIRE(d.graph.edge_count() == 2 * g.edge_count());
		for (Vertex m : d.edge_to_midpoint)
			CHECK(d.graph.degree(m) == 2);

		const DistanceMatrix dg = all_pairs_distances(g);
		const DistanceMatrix dd = all_pairs_distances(d.graph);
		for (Vertex u = 0; u < g.vertex_count(); ++u)
			for (Vertex v = 0; v < g.vertex_count(); ++v) {
				auto a = dg.at(u, v);
				auto b = dd.at(d.original_to_new[u], d.original_to_new[v]);
				CHECK(a.has_value() == b.has_value());
				if (a && b)
					CHECK(*b == 2 * *a);
			}

		std::vector<char> original(d.graph.vertex_count(), 0);
		for (Vertex v : d.original_to_new)
			original[v] = 1;
		for (const Edge &e : d.graph.edges())
			CHECK(original[e.u] != original[e.v]);
	}
}

TEST_CASE("connected components") {
	Graph two = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
	auto cc = connected_components(two);
	REQUIRE(cc.size() == 2);
	CHECK(cc[0].size() == 3);
	CHECK(cc[1].size() == 3);
	CHECK(connected_components(gadget_g2(false).graph).size() == 1);
	CHECK(connected_components(Graph::from_edge_list(3, {})).size() == 3);
}

TEST_CASE("induced subgraph keeps correspondence") {
	Graph g = fixture::cycle(6);
	std::vector<Vertex> keep{1, 2, 3, 5};
	DerivedGraph sub = induced_subgraph(g, keep);
	CHECK(sub.graph.vertex_count() == 4);
	CHECK(sub.graph.edge_count() == 2);
	for (Vertex c = 0; c < sub.graph.vertex_count(); ++c)
		CHECK(sub.from_parent[sub.to_parent[c]] == c);
	CHECK(sub.from_parent[0] == -1);
}

TEST_CASE("graph text format") {
	SUBCASE("round trip") {
		for (const Graph &g : distance_corpus())
			CHECK(parse_graph_text(format_graph_text(g)) == g);
	}
	SUBCASE("comments and missing trailing newline") {
		Graph g = parse_graph_text("# a path\n3 2\n0 1\n# middle\n1 2");
		CHECK(g == fixture::path(3));
		std::istringstream in("2 1\n0 1\n");
		CHECK(read_graph_text(in).edge_count() == 1);
	}
	SUBCASE("malformed") {
		CHECK(error_kind([] { parse_graph_text(""); }) == ErrorKind::Parse);
		CHECK(error_kind([] { parse_graph_text("3 2\n0 1\n"); }) == ErrorKind::Parse);
		CHECK(error_kind([] { parse_graph_text("3 1\n0 x\n"); }) == ErrorKind::Parse);
		CHECK(error_kind([] { parse_graph_text("3 1\n0 7\n"); }) == ErrorKind::OutOfRangeVertex);
		CHECK(error_kind([] { parse_graph_text("3 1\n2 2\n"); }) == ErrorKind::SelfLoop);
	}
}
