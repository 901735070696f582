#include "packing/verifier.hpp"

#include "packing/error.hpp"
#include "packing/structure.hpp"

#include <algorithm>
#include <map>

namespace packing {

std::string Violation::describe() const {
	switch (kind) {
	case ViolationKind::Packing:
		return "class " + std::to_string(cls) + ": vertices " + std::to_string(u) + " and " + std::to_string(v) +
		       " at distance " + std::to_string(distance) + " < " + std::to_string(required);
	case ViolationKind::ConditionA:
		return "condition (A): class 4 on " + std::to_string(u) + " and " + std::to_string(v) + " in block " +
		       std::to_string(block);
	case ViolationKind::ConditionB:
		return "condition (B): vertex " + std::to_string(u) + " (degree <= 2, class 3) has class-4 vertex " +
		       std::to_string(v) + " at distance " + std::to_string(distance);
	}
	return "violation";
}

VerifyReport verify_packing(const Graph &g, const ColorSequence &s, const Coloring &c, Partial partial) {
	const int n = g.vertex_count();
	if (c.vertex_count() != n)
		throw Error(ErrorKind::InvalidInputColoring, "coloring has " + std::to_string(c.vertex_count()) +
		                                                 " entries for " + std::to_string(n) + " vertices");
	for (Vertex v = 0; v < n; ++v) {
		if (!c.colored(v)) {
			if (partial == Partial::Forbidden)
				throw Error(ErrorKind::InvalidInputColoring, "vertex " + std::to_string(v) + " is uncolored");
			continue;
		}
		if (!s.contains_class(c.class_of(v)))
			throw Error(ErrorKind::ClassOutOfRange, "vertex " + std::to_string(v) + " has class " +
			                                            std::to_string(c.class_of(v)) + " outside 1.." +
			                                            std::to_string(s.size()));
	}

	VerifyReport report;
	for (Vertex u = 0; u < n; ++u) {
		if (!c.colored(u))
			continue;
		const int cls = c.class_of(u);
		const int radius = s.threshold(cls);
		auto dist = distances_from(g, u, radius);
		for (Vertex v = u + 1; v < n; ++v)
			if (dist[v] > 0 && c.colored(v) && c.class_of(v) == cls)
				report.violations.push_back({ViolationKind::Packing, cls, u, v, dist[v], radius + 1, -1});
	}
	return report;
}

VerifyReport verify_feasible_1124(const Graph &g, const Coloring &c) {
	if (!(c.sequence == ColorSequence{1, 1, 2, 4}))
		throw Error(ErrorKind::WrongSequence, "expected (1,1,2,4), got " + c.sequence.to_string());
	VerifyReport report = verify_packing(g, c.sequence, c);

	auto bt = block_cut_tree(g);
	for (int b = 0; b < static_cast<int>(bt.blocks.size()); ++b) {
		std::vector<Vertex> fours;
		for (Vertex v : bt.blocks[b].vertices)
			if (c.class_of(v) == 4)
				fours.push_back(v);
		for (std::size_t i = 0; i < fours.size(); ++i)
			for (std::size_t j = i + 1; j < fours.size(); ++j)
				report.violations.push_back({ViolationKind::ConditionA, 4, fours[i], fours[j], 0, 0, b});
	}

	for (Vertex v = 0; v < g.vertex_count(); ++v) {
		if (g.degree(v) > 2 || c.class_of(v) != 3)
			continue;
		auto dist = distances_from(g, v, 2);
		for (Vertex w = 0; w < g.vertex_count(); ++w)
			if (dist[w] > 0 && c.class_of(w) == 4)
				report.violations.push_back({ViolationKind::ConditionB, 3, v, w, dist[w], 0, -1});
	}
	return report;
}

} // namespace packing
