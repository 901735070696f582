#include "packing/error.hpp"
#include "packing/solver.hpp"

namespace packing {

ChromaticResult packing_chromatic_number(const Graph &g, int k_max, Budget budget) {
	if (k_max < 1)
		throw Error(ErrorKind::InvalidSequence, "k_max must be at least 1");
	ChromaticResult out;
	if (g.vertex_count() == 0) {
		out.value = 0;
		return out;
	}
	using Clock = std::chrono::steady_clock;
	const auto begin = Clock::now();
	for (int k = 1; k <= std::min(k_max, 30); ++k) {
		Budget left;
		if (budget) {
			left = *budget - (Clock::now() - begin);
			if (left->count() <= 0) {
				out.timed_out = true;
				return out;
			}
		}
		SolveResult r = decide_backtracking(g, ColorSequence::first_k(k), {}, left);
		if (r.status == SolveStatus::Timeout) {
			out.timed_out = true;
			return out;
		}
		if (r.status == SolveStatus::Sat) {
			out.value = k;
			return out;
		}
	}
	return out;
}

} // namespace packing
