#pragma once

#include "packing/coloring.hpp"
#include "packing/graph.hpp"

#include <string>
#include <vector>

namespace packing {

enum class ViolationKind {
	Packing,    // two vertices of one class too close
	ConditionA, // class 4 used twice inside one block
	ConditionB, // degree <= 2 vertex of class 3 with a class-4 vertex within distance 2
};

struct Violation {
	ViolationKind kind = ViolationKind::Packing;
	int cls = 0; // class index of u (for ConditionB: the class of u, i.e. 3)
	Vertex u = -1;
	Vertex v = -1;
	int distance = 0;
	int required = 0; // minimum allowed distance (Packing only)
	int block = -1;   // ConditionA only

	std::string describe() const;
	friend bool operator==(const Violation &, const Violation &) = default;
};

struct VerifyReport {
	std::vector<Violation> violations;
	bool ok() const { return violations.empty(); }
};

enum class Partial { Forbidden, Allowed };

/// Checks every same-class pair against its threshold with truncated
/// breadth-first searches. Violations are ordered by (u, v) with u < v.
/// Throws Error(ClassOutOfRange) on a class outside 1..k and
/// Error(InvalidInputColoring) on an uncolored vertex unless partial colorings
/// are allowed.
VerifyReport verify_packing(const Graph &g, const ColorSequence &s, const Coloring &c,
                            Partial partial = Partial::Forbidden);

/// Packing (1,1,2,4) check plus conditions (A) and (B). Classes 1 and 2 are
/// the two distance-1 classes, class 3 is the distance-2 class and class 4 the
/// distance-4 class. Throws Error(WrongSequence) for any other sequence.
VerifyReport verify_feasible_1124(const Graph &g, const Coloring &c);

} // namespace packing
