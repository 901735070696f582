#pragma once

#include "packing/coloring.hpp"
#include "packing/graph.hpp"

namespace packing {

// Class numbering used by the constructive colorings:
//   (1,1,2):   1 = first distance-1 class, 2 = second distance-1 class, 3 = distance-2 class
//   (1,1,2,4): as above plus 4 = distance-4 class

struct ConstructiveOptions {
	/// Re-verify the partial coloring after every reduction step and every
	/// recursive instance; failures raise Error(InternalProofStepFailed)
	/// naming the case that produced them.
#ifdef NDEBUG
	bool check_steps = false;
#else
	bool check_steps = true;
#endif
};

/// Packing (1,1,2)-coloring of a 2-connected subcubic outerplanar graph.
/// Throws NotTwoConnected, NotSubcubic or NotOuterplanar.
Coloring color_112_2connected(const Graph &g, ConstructiveOptions options = {});

/// As above with u and v in different classes, obtained by coloring g + uv.
/// Throws EdgeAdditionBreaksClass when g + uv is not subcubic outerplanar.
Coloring color_112_with_distinct_pair(const Graph &g, Vertex u, Vertex v, ConstructiveOptions options = {});

/// Packing (1,1,2,4)-coloring of any subcubic outerplanar graph that uses the
/// distance-4 class at most once per block and keeps it at distance >= 3 from
/// every class-3 vertex of degree <= 2.
Coloring color_1124(const Graph &g, ConstructiveOptions options = {});

struct LiftedColoring {
	ColorSequence sequence; // (1, 2 s_1 + 1, ..., 2 s_k + 1)
	SubdivisionMap subdivision;
	Coloring coloring; // on subdivision.graph
};

/// Colors every midpoint of D(G) with the new class 1 and shifts every
/// original class up by one. Throws InvalidInputColoring unless `c` is a
/// complete valid packing s-coloring of g.
LiftedColoring lift_to_subdivision(const Graph &g, const ColorSequence &s, const Coloring &c);

/// Relabels the used classes of `c` injectively into `target` so that every
/// class lands on a threshold no larger than its own. Throws NoInjection.
Coloring remap_sequence(const Coloring &c, const ColorSequence &s, const ColorSequence &target);

} // namespace packing
