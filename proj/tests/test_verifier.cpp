#include "fixtures.hpp"
#include "oracles.hpp"

#include "packing/constructive.hpp"
#include "packing/gadgets.hpp"
#include "packing/structure.hpp"
#include "packing/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace packing;

namespace {

Coloring make(const ColorSequence &s, std::vector<int> classes) {
	Coloring c(s, static_cast<int>(classes.size()));
	for (Vertex v = 0; v < static_cast<int>(classes.size()); ++v)
		if (classes[v] > 0)
			c.assign(v, classes[v]);
	return c;
}

Coloring random_coloring(const ColorSequence &s, int n, std::mt19937_64 &rng) {
	std::uniform_int_distribution<int> pick(1, s.size());
	Coloring c(s, n);
	for (Vertex v = 0; v < n; ++v)
		c.assign(v, pick(rng));
	return c;
}

} // namespace

TEST_CASE("packing verification examples") {
	const ColorSequence s112{1, 1, 2};
	CHECK(verify_packing(fixture::cycle(3), s112, make(s112, {1, 2, 3})).ok());
	CHECK(verify_packing(fixture::cycle(5), s112, make(s112, {1, 2, 1, 2, 3})).ok());

	SUBCASE("two ears in the class of 3 are too close") {
		const LabeledGraph ex = example_c4_two_ears();
		const ColorSequence s113{1, 1, 3};
		Coloring c(s113, 6);
		c.assign(ex.at("u1"), 1);
		c.assign(ex.at("u2"), 2);
		c.assign(ex.at("u3"), 2);
		c.assign(ex.at("u4"), 1);
		c.assign(ex.at("v1"), 3);
		c.assign(ex.at("v2"), 3);
		VerifyReport r = verify_packing(ex.graph, s113, c);
		REQUIRE_FALSE(r.ok());
		bool found = false;
		for (const Violation &v : r.violations)
			if (v.cls == 3) {
				found = true;
				CHECK(v.distance == 3);
				CHECK(v.required == 4);
			}
		CHECK(found);
	}
	SUBCASE("partial colorings") {
		Coloring c = make(s112, {1, 0, 0});
		CHECK(fixture::error_kind([&] { verify_packing(fixture::cycle(3), s112, c); }) ==
		      ErrorKind::InvalidInputColoring);
		CHECK(verify_packing(fixture::cycle(3), s112, c, Partial::Allowed).ok());
	}
	SUBCASE("class out of range") {
		Coloring c = make(s112, {1, 2, 4});
		CHECK(fixture::error_kind([&] { verify_packing(fixture::cycle(3), s112, c); }) ==
		      ErrorKind::ClassOutOfRange);
	}
}

TEST_CASE("violations have distance below threshold and come out sorted") {
	std::mt19937_64 rng(7);
	for (int seed = 0; seed < 200; ++seed) {
		const Graph g = random_outerplanar_subcubic(4 + seed % 20, seed, false);
		const ColorSequence s{1, 1, 2, 3};
		VerifyReport r = verify_packing(g, s, random_coloring(s, g.vertex_count(), rng));
		for (std::size_t i = 0; i < r.violations.size(); ++i) {
			const Violation &v = r.violations[i];
			CHECK(v.distance < v.required);
			CHECK(v.required == s.threshold(v.cls) + 1);
			if (i > 0) {
				const Violation &p = r.violations[i - 1];
				CHECK(std::tie(p.u, p.v) < std::tie(v.u, v.v));
			}
		}
	}
}

TEST_CASE("verifier agrees with the quadratic oracle") {
	std::mt19937_64 rng(11);
	const std::vector<ColorSequence> seqs{{1, 1, 2}, {1, 2, 3}, {1, 1, 2, 4}, {2, 2, 3, 5, 7}};
	for (int seed = 0; seed < 300; ++seed) {
		const Graph g = seed % 3 == 0 ? fixture::random_graph(3 + seed % 11, 0.3, seed)
		                              : random_outerplanar_subcubic(3 + seed % 18, seed, seed % 2 == 0);
		const oracle::Matrix d = oracle::minplus_distances(g);
		for (const ColorSequence &s : seqs) {
			Coloring c = random_coloring(s, g.vertex_count(), rng);
			// Bias toward valid colorings so both answers show up.
			if (seed % 2 == 0)
				c = make(s, std::vector<int>(g.vertex_count(), 0));
			for (Vertex v = 0; v < g.vertex_count() && seed % 2 == 0; ++v) {
				for (int cls = s.size(); cls >= 1; --cls) {
					c.assign(v, cls);
					if (oracle::packing_ok(d, s.values(), oracle::plain_classes(c)))
						break;
					c.clear(v);
				}
				if (!c.colored(v))
					c.assign(v, 1);
			}
			const bool expected = oracle::packing_ok(d, s.values(), oracle::plain_classes(c));
			CHECK(verify_packing(g, s, c).ok() == expected);
		}
	}
}

TEST_CASE("relaxing thresholds keeps a valid coloring valid") {
	for (int seed = 0; seed < 150; ++seed) {
		const Graph g = random_outerplanar_subcubic(3 + seed % 30, seed, seed % 3 == 0);
		const Coloring c = color_1124(g);
		REQUIRE(verify_packing(g, c.sequence, c).ok());
		for (const ColorSequence &looser : {ColorSequence{1, 1, 2, 3}, ColorSequence{1, 1, 1, 4},
		                                    ColorSequence{1, 1, 2, 2}, ColorSequence{1, 1, 1, 1}})
			CHECK(verify_packing(g, looser, c).ok());
	}
}

TEST_CASE("restricting a valid coloring stays valid under partial checking") {
	std::mt19937_64 rng(3);
	for (int seed = 0; seed < 150; ++seed) {
		const Graph g = random_outerplanar_subcubic(3 + seed % 30, seed, false);
		Coloring c = color_1124(g);
		std::bernoulli_distribution drop(0.4);
		for (Vertex v = 0; v < g.vertex_count(); ++v)
			if (drop(rng))
				c.clear(v);
		CHECK(verify_packing(g, c.sequence, c, Partial::Allowed).ok());
	}
}

TEST_CASE("feasibility conditions") {
	const ColorSequence s{1, 1, 2, 4};

	SUBCASE("class 4 twice in one block") {
		// On C10 the two class-4 vertices sit at distance 5, a valid packing.
		const Graph g = fixture::cycle(10);
		Coloring c = make(s, {4, 1, 2, 1, 3, 4, 1, 2, 1, 3});
		REQUIRE(verify_packing(g, s, c).ok());
		VerifyReport r = verify_feasible_1124(g, c);
		REQUIRE_FALSE(r.ok());
		bool a = false;
		for (const Violation &v : r.violations)
			a = a || v.kind == ViolationKind::ConditionA;
		CHECK(a);
	}
	SUBCASE("degree-2 vertex of class 3 near class 4") {
		const Graph g = fixture::path(4);
		Coloring c = make(s, {1, 3, 1, 4});
		REQUIRE(verify_packing(g, s, c).ok());
		VerifyReport r = verify_feasible_1124(g, c);
		REQUIRE(r.violations.size() == 1);
		CHECK(r.violations[0].kind == ViolationKind::ConditionB);
		CHECK(r.violations[0].u == 1);
		CHECK(r.violations[0].v == 3);
	}
	SUBCASE("degree-3 vertex of class 3 is exempt") {
		const Graph g = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
		Coloring c = make(s, {1, 3, 2, 1, 4});
		REQUIRE(verify_packing(g, s, c).ok());
		CHECK(verify_feasible_1124(g, c).ok());
	}
	SUBCASE("(1,1,2)-colorings are feasible with class 4 unused") {
		for (int seed = 0; seed < 100; ++seed) {
			const Graph g = random_outerplanar_subcubic(3 + seed % 30, seed, true);
			Coloring c = color_112_2connected(g);
			c.sequence = s;
			CHECK(verify_feasible_1124(g, c).ok());
		}
	}
	SUBCASE("wrong sequence") {
		Coloring c = make(ColorSequence{1, 1, 2}, {1, 2, 3});
		CHECK(fixture::error_kind([&] { verify_feasible_1124(fixture::cycle(3), c); }) ==
		      ErrorKind::WrongSequence);
	}
}

TEST_CASE("color sequences") {
	CHECK(ColorSequence::parse("1,1,2,4") == ColorSequence{1, 1, 2, 4});
	CHECK(ColorSequence{1, 3, 3, 5}.to_string() == "(1,3,3,5)");
	CHECK(ColorSequence::first_k(3) == ColorSequence{1, 2, 3});
	CHECK(fixture::error_kind([] { ColorSequence{2, 1}; }) == ErrorKind::InvalidSequence);
	CHECK(fixture::error_kind([] { ColorSequence{0, 1}; }) == ErrorKind::InvalidSequence);
	CHECK(fixture::error_kind([] { ColorSequence(std::vector<int>{}); }) == ErrorKind::InvalidSequence);
	CHECK(fixture::error_kind([] { ColorSequence::parse("1,,2"); }) == ErrorKind::InvalidSequence);
}

TEST_CASE("coloring JSON round trip") {
	const LabeledGraph ex = example_c4_two_ears();
	const Coloring c = color_112_2connected(ex.graph);
	const Coloring back = coloring_from_json(coloring_to_json(c, ex.labels), ex.graph.vertex_count());
	CHECK(back == c);
	CHECK(fixture::error_kind([] { coloring_from_json("{", 3); }) == ErrorKind::Parse);
	CHECK(fixture::error_kind([] { coloring_from_json(R"({"sequence":[1,1,2],"colors":{"5":1}})", 3); }) ==
	      ErrorKind::OutOfRangeVertex);
}
