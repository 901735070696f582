#pragma once

#include "packing/graph.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace packing {

/// A graph with the conventional names of its vertices. Copies of sub-gadgets
/// carry a dotted prefix, e.g. "s.w1" is w1 of the G1 copy hanging at s6.
struct LabeledGraph {
	Graph graph;
	std::vector<std::pair<std::string, Vertex>> labels; // in construction order

	/// Throws Error(InfeasibleRequest) for an unknown label.
	Vertex at(const std::string &label) const;
	bool has(const std::string &label) const;
};

/// Four-cycle u1 u2 u3 u4 with ears u1 v1 u2 and u3 v2 u4.
LabeledGraph example_c4_two_ears();

/// Triangles a1 a2 a3 and a4 a5 a6 joined by a2 a4 and a3 a5.
LabeledGraph double_triangle_unit();

/// Hub w1 adjacent to u1 and v1 of two double-triangle units (u1..u6,
/// v1..v6), plus the pendant z6 on w1 when requested.
LabeledGraph gadget_g1(bool with_pendant);

/// Hub x4 joined to the t-unit and the y-unit. t6 meets branch vertex b1,
/// which leads to units p and q; y6 meets branch vertex b2, leading to units
/// z and s. Each of p6, q6, z6, s6 is adjacent to w1 of a G1 copy with the
/// matching prefix. Pendant x1 on x4 when requested.
LabeledGraph gadget_g2(bool with_pendant);

/// Triangle x1 x2 x3, each corner the pendant x1 of its own G2 copy
/// (prefixes "1.", "2.", "3.").
LabeledGraph gadget_big_g();

/// Triangle u1 u2 u3; u3 bridges to triangle u4 u5 u6, whose far corners u5
/// and u6 bridge to triangles u7 u8 u9 and u10 u11 u12. The mirror branch at
/// u2 uses l4 .. l12. Pendant v3 on u1 when requested.
LabeledGraph gadget_g3(bool with_pendant);

/// Triangle v1 v2 v3, each corner the pendant v3 of its own G3 copy
/// (prefixes "1.", "2.", "3.").
LabeledGraph gadget_h();

/// Outer 5-cycle o0..o4, inner pentagram i0..i4, spokes o_k i_k.
LabeledGraph petersen();

/// Random subcubic outerplanar graph on at most n vertices, deterministic in
/// the seed. Two-connected samples are grown from a cycle by hanging paths
/// of new vertices across outer edges whose ends still have degree 2; general
/// samples join such blocks and single vertices with bridges and
/// occasionally leave pieces disconnected. Throws InfeasibleRequest for
/// n < 3 with two_connected, and for n < 1.
Graph random_outerplanar_subcubic(int n, std::uint64_t seed, bool two_connected);

} // namespace packing
