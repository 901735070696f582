#pragma once

// Helpers shared by the two constructive colorings.

#include "packing/constructive.hpp"
#include "packing/error.hpp"
#include "packing/structure.hpp"

#include <string>
#include <vector>

namespace packing::detail {

inline constexpr int kOneA = 1;
inline constexpr int kOneB = 2;
inline constexpr int kTwo = 3;  // distance-2 class
inline constexpr int kFour = 4; // distance-4 class

inline int other_one(int c) {
	return c == kOneA ? kOneB : kOneA;
}
inline bool is_one(int c) {
	return c == kOneA || c == kOneB;
}

/// Vertex classes, 0 meaning uncolored.
using Classes = std::vector<int>;

/// The face cycle starting at `a` and walking away from `b` so that it ends
/// at `b` (a and b must be adjacent on the cycle).
std::vector<Vertex> walk_from(const std::vector<Vertex> &cycle, Vertex a, Vertex b);

/// The face cycle starting at `a` and continuing with `next`.
std::vector<Vertex> walk_toward(const std::vector<Vertex> &cycle, Vertex a, Vertex next);

/// Colors `path` alternately with the two distance-1 classes, starting with
/// `first`.
void alternate(Classes &f, const std::vector<Vertex> &path, int first);

/// Copies the colors of a derived instance back to its parent.
void pull_back(Classes &f, const DerivedGraph &sub, const Classes &fs);

/// Components of g after deleting `removed`.
std::vector<std::vector<Vertex>> components_without(const Graph &g, const std::vector<Vertex> &removed);

[[noreturn]] void step_failed(const std::string &label, const std::string &detail);

/// Colors the interior of a pendant face u_1 ... u_k whose ends are already
/// colored: alternately, except for the odd face whose ends carry both
/// distance-1 classes, where u_3 takes class 3.
void extend_pendant_path(Classes &f, const std::vector<Vertex> &seq);

/// (1,1,2) recursion on a 2-connected subcubic outerplanar graph (or a graph
/// on at most three vertices).
Classes run_112(const Graph &g, const ConstructiveOptions &options);

/// Verifies the (partial) coloring of g when checks are on.
void check_112(const Graph &g, const Classes &f, const ConstructiveOptions &options, const char *label);

Coloring to_coloring(const ColorSequence &s, const Classes &f);

} // namespace packing::detail
