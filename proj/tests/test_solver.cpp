#include "fixtures.hpp"
#include "oracles.hpp"

#include "packing/gadgets.hpp"
#include "packing/solver.hpp"
#include "packing/structure.hpp"
#include "packing/verifier.hpp"

#include <doctest.h>

#include <random>

using namespace packing;

namespace {

using namespace std::chrono_literals;

// Every non-decreasing sequence of length <= 3 with entries <= 3.
std::vector<ColorSequence> short_sequences() {
	std::vector<ColorSequence> out;
	for (int a = 1; a <= 3; ++a) {
		out.push_back(ColorSequence{a});
		for (int b = a; b <= 3; ++b) {
			out.push_back(ColorSequence{a, b});
			for (int c = b; c <= 3; ++c)
				out.push_back(ColorSequence{a, b, c});
		}
	}
	return out;
}

void check_witness(const Graph &g, const ColorSequence &s, std::span<const Pin> pins, const SolveResult &r) {
	if (r.status != SolveStatus::Sat) {
		CHECK_FALSE(r.witness.has_value());
		return;
	}
	REQUIRE(r.witness.has_value());
	CHECK(r.witness->total());
	CHECK(verify_packing(g, s, *r.witness).ok());
	for (const Pin &p : pins)
		CHECK(p.permits(r.witness->class_of(p.vertex)));
}

bool sat(const SolveResult &r) { return r.status == SolveStatus::Sat; }

} // namespace

TEST_CASE("two-eared C4 under three sequences") {
	const Graph g = example_c4_two_ears().graph;
	for (auto solve : {+[](const Graph &h, const ColorSequence &s) { return decide_backtracking(h, s); },
	                   +[](const Graph &h, const ColorSequence &s) { return decide_dp_outerplanar(h, s); }}) {
		CHECK(solve(g, {1, 1, 3}).status == SolveStatus::Unsat);
		CHECK(solve(g, {1, 2, 2}).status == SolveStatus::Unsat);
		SolveResult r = solve(g, {1, 1, 2});
		CHECK(sat(r));
		check_witness(g, {1, 1, 2}, {}, r);
	}
}

TEST_CASE("G1 cannot give its pendant the class of 5") {
	const LabeledGraph g1 = gadget_g1(true);
	const ColorSequence s{1, 1, 2, 5};
	const Pin pin[] = {Pin::exactly(g1.at("z6"), 4)};
	CHECK(decide_backtracking(g1.graph, s, pin).status == SolveStatus::Unsat);
	CHECK(decide_dp_outerplanar(g1.graph, s, pin).status == SolveStatus::Unsat);
	SolveResult free = decide_dp_outerplanar(g1.graph, s);
	CHECK(sat(free));
	check_witness(g1.graph, s, {}, free);
}

TEST_CASE("Petersen is not (1,1,2,2)-colorable") {
	const Graph g = petersen().graph;
	CHECK(decide_backtracking(g, {1, 1, 2, 2}).status == SolveStatus::Unsat);
	CHECK(fixture::error_kind([&] { decide_dp_outerplanar(g, {1, 1, 2, 2}); }) == ErrorKind::NotOuterplanar);
}

TEST_CASE("subset DP oracle matches literal enumeration") {
	const auto all = oracle::graphs_up_to(6);
	for (int n = 1; n <= 6; ++n)
		for (const auto &s : all[n]) {
			const Graph g = s.graph();
			for (const ColorSequence &seq : {ColorSequence{1, 1, 2}, ColorSequence{1, 2, 2}, ColorSequence{1, 2, 3}})
				CHECK(oracle::colorable_by_subsets(g, seq.values()) ==
				      oracle::colorable_by_enumeration(g, seq.values()));
		}
}

TEST_CASE("backtracking equals enumeration on every graph up to 6 vertices") {
	const auto all = oracle::graphs_up_to(6);
	const auto seqs = short_sequences();
	REQUIRE(seqs.size() == 19);
	int unsat = 0;
	for (int n = 1; n <= 6; ++n)
		for (const auto &small : all[n]) {
			const Graph g = small.graph();
			for (const ColorSequence &s : seqs) {
				const bool expected = oracle::colorable_by_enumeration(g, s.values());
				SolveResult r = decide_backtracking(g, s);
				CHECK(sat(r) == expected);
				check_witness(g, s, {}, r);
				unsat += !expected;
			}
		}
	CHECK(unsat > 0);
}

TEST_CASE("dynamic programming equals backtracking on random outerplanar graphs") {
	const std::vector<ColorSequence> seqs{{1, 1, 2}, {1, 2, 2}, {1, 1, 2, 4}, {1, 1, 2, 5}, {1, 2, 3}, {1, 1, 3}};
	std::mt19937_64 rng(5);
	int disagreements = 0, unsat = 0;
	for (int seed = 0; seed < 150; ++seed) {
		const Graph g = random_outerplanar_subcubic(1 + seed % 20, 500 + seed, false);
		for (const ColorSequence &s : seqs) {
			std::vector<Pin> pins;
			if (seed % 3 == 0 && g.vertex_count() > 1) {
				std::uniform_int_distribution<int> v(0, g.vertex_count() - 1), c(1, s.size());
				pins.push_back(Pin::exactly(v(rng), c(rng)));
			}
			SolveResult bt = decide_backtracking(g, s, pins);
			SolveResult dp = decide_dp_outerplanar(g, s, pins);
			disagreements += bt.status != dp.status;
			unsat += bt.status == SolveStatus::Unsat;
			check_witness(g, s, pins, bt);
			check_witness(g, s, pins, dp);
		}
	}
	CHECK(disagreements == 0);
	CHECK(unsat > 0);
}

TEST_CASE("pins never turn UNSAT into SAT") {
	for (int seed = 0; seed < 80; ++seed) {
		const Graph g = random_outerplanar_subcubic(3 + seed % 14, 900 + seed, seed % 2 == 0);
		for (const ColorSequence &s : {ColorSequence{1, 2, 2}, ColorSequence{1, 1, 2, 5}}) {
			const bool base = sat(decide_dp_outerplanar(g, s));
			for (Vertex v = 0; v < g.vertex_count(); v += 3) {
				const Pin pin[] = {Pin::exactly(v, s.size())};
				const bool pinned = sat(decide_backtracking(g, s, pin));
				if (!base)
					CHECK_FALSE(pinned);
			}
		}
	}
}

TEST_CASE("pins that separate interchangeable classes") {
	// A path coloured with the two 1-classes; pinning the second of them
	// first must not be blocked by symmetry breaking.
	const Graph g = fixture::path(5);
	const Pin pins[] = {Pin::exactly(2, 2), Pin::excluding(0, {1}, 2)};
	SolveResult r = decide_backtracking(g, {1, 1}, pins);
	REQUIRE(sat(r));
	check_witness(g, {1, 1}, pins, r);
	CHECK(r.witness->class_of(2) == 2);
	CHECK(r.witness->class_of(0) == 2);
	CHECK(sat(decide_dp_outerplanar(g, {1, 1}, pins)));
}

TEST_CASE("pin validation") {
	const Graph g = fixture::path(3);
	const ColorSequence s{1, 1, 2};
	auto kind = [&](std::vector<Pin> pins) {
		return fixture::error_kind([&] { decide_backtracking(g, s, pins); });
	};
	CHECK(kind({Pin::exactly(5, 1)}) == ErrorKind::OutOfRangeVertex);
	CHECK(kind({Pin::exactly(0, 4)}) == ErrorKind::ClassOutOfRange);
	CHECK(kind({Pin::exactly(0, 1), Pin::exactly(0, 2)}) == ErrorKind::InvalidPin);
	CHECK(kind({Pin{1, 0}}) == ErrorKind::InvalidPin);
	CHECK(Pin::excluding(0, {1, 3}, 3).allowed == (1u << 2));
}

TEST_CASE("budgets and memory ceilings") {
	SUBCASE("a tiny time budget times out on big G") {
		const Graph g = gadget_big_g().graph;
		SolveResult r = decide_backtracking(g, {1, 1, 2, 5}, {}, 0.05s);
		CHECK(r.status == SolveStatus::Timeout);
		CHECK(r.seconds < 2.0);
	}
	SUBCASE("a tiny state ceiling aborts the DP") {
		DpOptions opt;
		opt.max_states = 50;
		CHECK(fixture::error_kind([&] { decide_dp_outerplanar(gadget_h().graph, {1, 1, 3, 4}, {}, opt); }) ==
		      ErrorKind::MemoryBudgetExceeded);
	}
	SUBCASE("pruning off gives the same answers") {
		DpOptions opt;
		opt.prune_dominated = false;
		for (int seed = 0; seed < 30; ++seed) {
			const Graph g = random_outerplanar_subcubic(4 + seed % 14, seed, false);
			CHECK(decide_dp_outerplanar(g, {1, 1, 2, 4}, {}, opt).status ==
			      decide_dp_outerplanar(g, {1, 1, 2, 4}).status);
		}
	}
}

TEST_CASE("search is deterministic") {
	const Graph g = random_outerplanar_subcubic(30, 42, false);
	SolveResult a = decide_backtracking(g, {1, 1, 2, 4});
	SolveResult b = decide_backtracking(g, {1, 1, 2, 4});
	REQUIRE(sat(a));
	CHECK(a.witness == b.witness);
	CHECK(a.nodes == b.nodes);
	CHECK(decide_dp_outerplanar(g, {1, 1, 2, 4}).witness == decide_dp_outerplanar(g, {1, 1, 2, 4}).witness);
}

TEST_CASE("degenerate inputs") {
	const Graph empty = Graph::from_edge_list(0, {});
	CHECK(sat(decide_backtracking(empty, {1})));
	CHECK(sat(decide_dp_outerplanar(empty, {1})));
	const Graph isolated = Graph::from_edge_list(4, {});
	CHECK(sat(decide_dp_outerplanar(isolated, {7})));
	CHECK(decide_backtracking(fixture::cycle(3), {1, 1}).status == SolveStatus::Unsat);
	CHECK(decide_dp_outerplanar(fixture::cycle(3), {1, 1}).status == SolveStatus::Unsat);
}

TEST_CASE("packing chromatic number") {
	CHECK(packing_chromatic_number(Graph::from_edge_list(1, {}), 5).value == 1);
	CHECK(packing_chromatic_number(fixture::cycle(3), 5).value == 3);
	CHECK(packing_chromatic_number(fixture::cycle(4), 5).value == 3);
	CHECK(oracle::chromatic_by_subsets(fixture::cycle(4)) == 3);
	CHECK(packing_chromatic_number(Graph::from_edge_list(0, {}), 5).value == 0);

	SUBCASE("k_max too small") {
		ChromaticResult r = packing_chromatic_number(fixture::complete(4), 3);
		CHECK_FALSE(r.value.has_value());
		CHECK_FALSE(r.timed_out);
	}
	SUBCASE("agrees with the subset oracle") {
		for (int seed = 0; seed < 60; ++seed) {
			const Graph g = fixture::random_graph(2 + seed % 9, 0.35, seed);
			CHECK(packing_chromatic_number(g, 12).value == oracle::chromatic_by_subsets(g));
		}
	}
	SUBCASE("deleting an edge never raises it") {
		for (int seed = 0; seed < 40; ++seed) {
			const Graph g = random_outerplanar_subcubic(4 + seed % 12, seed, seed % 2 == 0);
			const auto whole = packing_chromatic_number(g, 12).value;
			REQUIRE(whole.has_value());
			for (std::size_t drop = 0; drop < g.edges().size(); ++drop) {
				std::vector<std::pair<Vertex, Vertex>> rest;
				for (std::size_t i = 0; i < g.edges().size(); ++i)
					if (i != drop)
						rest.emplace_back(g.edges()[i].u, g.edges()[i].v);
				const auto smaller = packing_chromatic_number(Graph::from_edge_list(g.vertex_count(), rest), 12).value;
				REQUIRE(smaller.has_value());
				CHECK(*smaller <= *whole);
			}
		}
	}
}
