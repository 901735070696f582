#pragma once

#include "packing/coloring.hpp"
#include "packing/graph.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace packing {

/// Restricts one vertex to a set of classes.
struct Pin {
	Vertex vertex = -1;
	std::uint32_t allowed = 0; // bit i set <=> class i permitted (bit 0 unused)

	static Pin exactly(Vertex v, int cls) { return {v, std::uint32_t{1} << cls}; }
	static Pin excluding(Vertex v, std::initializer_list<int> classes, int k);
	bool permits(int cls) const { return (allowed >> cls) & 1u; }
};

enum class SolveStatus { Sat, Unsat, Timeout };

struct SolveResult {
	SolveStatus status = SolveStatus::Unsat;
	std::optional<Coloring> witness; // present iff Sat
	std::uint64_t nodes = 0;         // search nodes or DP states created
	double seconds = 0;
};

using Budget = std::optional<std::chrono::duration<double>>;

/// Forward-checking backtracking search.
///
/// Variables are visited by descending degree (ties by identifier) and values
/// in ascending class order. After each assignment the class is struck from
/// the domains of all uncolored vertices within its threshold; an empty domain
/// forces a backtrack. Classes sharing a threshold are interchangeable, so a
/// class may only be opened once every lower class of its group is in use,
/// unless some pin tells the group's classes apart.
///
/// Extension point: a SAT back end would slot in here with the same contract.
SolveResult decide_backtracking(const Graph &g, const ColorSequence &s, std::span<const Pin> pins = {},
                                Budget budget = std::nullopt);

struct DpOptions {
	/// Ceiling on the total number of profile states kept alive.
	std::size_t max_states = 40'000'000;
	/// Drop states whose profile is dominated by another state with the same
	/// port classes. Exact: larger distances never create conflicts.
	bool prune_dominated = true;
};

/// Exact decision for outerplanar graphs by dynamic programming over the
/// block-cut tree and, inside blocks, the weak-dual face tree. Tables are keyed
/// by the classes of their port vertices (at most three) and, per port and
/// class, the distance from the nearest interior vertex of that class, capped
/// at threshold + 1. Throws Error(NotOuterplanar) and
/// Error(MemoryBudgetExceeded).
SolveResult decide_dp_outerplanar(const Graph &g, const ColorSequence &s, std::span<const Pin> pins = {},
                                  DpOptions options = {});

struct ChromaticResult {
	std::optional<int> value; // empty: not found within k_max or out of time
	bool timed_out = false;
};

/// Smallest k <= k_max admitting a packing (1,2,...,k)-coloring.
ChromaticResult packing_chromatic_number(const Graph &g, int k_max, Budget budget = std::nullopt);

void validate_pins(const Graph &g, const ColorSequence &s, std::span<const Pin> pins);
std::string to_string(SolveStatus status);

} // namespace packing
