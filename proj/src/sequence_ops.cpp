#include "packing/constructive.hpp"
#include "packing/error.hpp"
#include "packing/verifier.hpp"

#include <algorithm>
#include <numeric>

namespace packing {

LiftedColoring lift_to_subdivision(const Graph &g, const ColorSequence &s, const Coloring &c) {
	if (c.vertex_count() != g.vertex_count() || !c.total())
		throw Error(ErrorKind::InvalidInputColoring, "coloring must cover every vertex");
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		if (!s.contains_class(c.class_of(v)))
			throw Error(ErrorKind::InvalidInputColoring, "class outside the sequence at vertex " + std::to_string(v));
	if (!verify_packing(g, s, c).ok())
		throw Error(ErrorKind::InvalidInputColoring, "coloring is not a packing " + s.to_string() + "-coloring");

	std::vector<int> lifted{1};
	for (int x : s.values())
		lifted.push_back(2 * x + 1);
	LiftedColoring out{ColorSequence(lifted), subdivide(g), {}};
	out.coloring = Coloring(out.sequence, out.subdivision.graph.vertex_count());
	for (Vertex v = 0; v < g.vertex_count(); ++v)
		out.coloring.assign(out.subdivision.original_to_new[v], c.class_of(v) + 1);
	for (Vertex m : out.subdivision.edge_to_midpoint)
		out.coloring.assign(m, 1);
	return out;
}

Coloring remap_sequence(const Coloring &c, const ColorSequence &s, const ColorSequence &target) {
	std::vector<int> used;
	for (const auto &cls : c.classes)
		if (cls) {
			if (!s.contains_class(*cls))
				throw Error(ErrorKind::InvalidInputColoring, "class " + std::to_string(*cls) + " outside the sequence");
			used.push_back(*cls);
		}
	std::sort(used.begin(), used.end());
	used.erase(std::unique(used.begin(), used.end()), used.end());

	// Both sequences are non-decreasing, so scanning the used classes in
	// order and handing each the next target slot is optimal.
	std::vector<int> slot(s.size() + 1, 0);
	int next = 1;
	for (int cls : used) {
		if (next > target.size() || target.threshold(next) > s.threshold(cls))
			throw Error(ErrorKind::NoInjection, "cannot place class " + std::to_string(cls) + " (threshold " +
			                                        std::to_string(s.threshold(cls)) + ") into " + target.to_string());
		slot[cls] = next++;
	}
	Coloring out(target, c.vertex_count());
	for (Vertex v = 0; v < c.vertex_count(); ++v)
		if (c.colored(v))
			out.assign(v, slot[c.class_of(v)]);
	return out;
}

} // namespace packing
