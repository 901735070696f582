#include "packing/error.hpp"
#include "packing/solver.hpp"

#include <algorithm>
#include <numeric>

namespace packing {

Pin Pin::excluding(Vertex v, std::initializer_list<int> classes, int k) {
	std::uint32_t mask = 0;
	for (int c = 1; c <= k; ++c)
		mask |= std::uint32_t{1} << c;
	for (int c : classes)
		if (c >= 1 && c <= 31)
			mask &= ~(std::uint32_t{1} << c);
	return {v, mask};
}

std::string to_string(SolveStatus status) {
	switch (status) {
	case SolveStatus::Sat: return "SAT";
	case SolveStatus::Unsat: return "UNSAT";
	case SolveStatus::Timeout: return "TIMEOUT";
	}
	return "?";
}

void validate_pins(const Graph &g, const ColorSequence &s, std::span<const Pin> pins) {
	if (s.size() > 30)
		throw Error(ErrorKind::InvalidSequence, "at most 30 classes are supported");
	std::vector<bool> seen(g.vertex_count(), false);
	const std::uint32_t legal = ((std::uint32_t{1} << (s.size() + 1)) - 1) & ~std::uint32_t{1};
	for (const Pin &p : pins) {
		if (p.vertex < 0 || p.vertex >= g.vertex_count())
			throw Error(ErrorKind::OutOfRangeVertex, "pin on vertex " + std::to_string(p.vertex));
		if (seen[p.vertex])
			throw Error(ErrorKind::InvalidPin, "vertex " + std::to_string(p.vertex) + " pinned twice");
		seen[p.vertex] = true;
		if (p.allowed & ~legal)
			throw Error(ErrorKind::ClassOutOfRange, "pin on vertex " + std::to_string(p.vertex) +
			                                            " names a class outside 1.." + std::to_string(s.size()));
		if (p.allowed == 0)
			throw Error(ErrorKind::InvalidPin, "pin on vertex " + std::to_string(p.vertex) + " allows no class");
	}
}

namespace {

using Clock = std::chrono::steady_clock;

class Search {
public:
	Search(const Graph &g, const ColorSequence &s, std::span<const Pin> pins, Budget budget)
	: g_(g), s_(s), k_(s.size()), start_(Clock::now()) {
		const int n = g.vertex_count();
		if (budget)
			deadline_ = start_ + std::chrono::duration_cast<Clock::duration>(*budget);

		const std::uint32_t full = ((std::uint32_t{1} << (k_ + 1)) - 1) & ~std::uint32_t{1};
		domain_.assign(n, full);
		for (const Pin &p : pins)
			domain_[p.vertex] &= p.allowed;

		order_.resize(n);
		std::iota(order_.begin(), order_.end(), 0);
		std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

		// Balls up to the largest threshold, sorted by distance so the
		// propagation loop can stop early.
		const int reach = s.values().back();
		ball_.resize(n);
		for (Vertex v = 0; v < n; ++v) {
			auto dist = distances_from(g, v, reach);
			for (Vertex w = 0; w < n; ++w)
				if (dist[w] > 0)
					ball_[v].push_back({w, dist[w]});
			std::stable_sort(ball_[v].begin(), ball_[v].end(),
			                 [](const Near &a, const Near &b) { return a.dist < b.dist; });
		}

		// Interchangeable classes: equal thresholds and no pin separating them.
		group_prev_.assign(k_ + 1, 0);
		for (int c = 2; c <= k_; ++c)
			if (s.threshold(c) == s.threshold(c - 1))
				group_prev_[c] = c - 1;
		for (int c = 2; c <= k_; ++c) {
			if (!group_prev_[c])
				continue;
			const std::uint32_t pair = (std::uint32_t{1} << c) | (std::uint32_t{1} << (c - 1));
			for (const Pin &p : pins) {
				const std::uint32_t hit = p.allowed & pair;
				if (hit != 0 && hit != pair) {
					// Break the whole run of equal thresholds containing c.
					int lo = c;
					while (lo > 1 && s.threshold(lo - 1) == s.threshold(c))
						--lo;
					for (int d = lo; d <= k_ && s.threshold(d) == s.threshold(c); ++d)
						group_prev_[d] = 0;
					break;
				}
			}
		}
		used_.assign(k_ + 1, 0);
		color_.assign(n, 0);
	}

	SolveResult run() {
		SolveResult result;
		for (Vertex v = 0; v < g_.vertex_count(); ++v)
			if (domain_[v] == 0) {
				result.status = SolveStatus::Unsat;
				return finish(result);
			}
		bool found = false;
		try {
			found = descend(0);
		} catch (const OutOfTime &) {
			result.status = SolveStatus::Timeout;
			return finish(result);
		}
		if (found) {
			result.status = SolveStatus::Sat;
			Coloring c(s_, g_.vertex_count());
			for (Vertex v = 0; v < g_.vertex_count(); ++v)
				c.assign(v, color_[v]);
			result.witness = std::move(c);
		} else {
			result.status = SolveStatus::Unsat;
		}
		return finish(result);
	}

private:
	struct Near {
		Vertex v;
		int dist;
	};
	struct OutOfTime { };
	struct TrailEntry {
		Vertex v;
		std::uint32_t old;
	};

	SolveResult &finish(SolveResult &r) {
		r.nodes = nodes_;
		r.seconds = std::chrono::duration<double>(Clock::now() - start_).count();
		return r;
	}

	bool descend(std::size_t depth) {
		if (depth == order_.size())
			return true;
		if ((++nodes_ & 0xfff) == 0 && deadline_ && Clock::now() > *deadline_)
			throw OutOfTime{};
		const Vertex v = order_[depth];
		const std::uint32_t dom = domain_[v];
		for (int c = 1; c <= k_; ++c) {
			if (!((dom >> c) & 1u))
				continue;
			if (group_prev_[c] && !used_[group_prev_[c]])
				continue;
			const std::size_t mark = trail_.size();
			if (assign(v, c) && descend(depth + 1))
				return true;
			unassign(v, c, mark);
		}
		return false;
	}

	bool assign(Vertex v, int c) {
		color_[v] = c;
		++used_[c];
		const int radius = s_.threshold(c);
		const std::uint32_t bit = std::uint32_t{1} << c;
		for (const Near &near : ball_[v]) {
			if (near.dist > radius)
				break;
			const Vertex w = near.v;
			if (color_[w] || !(domain_[w] & bit))
				continue;
			trail_.push_back({w, domain_[w]});
			domain_[w] &= ~bit;
			if (domain_[w] == 0)
				return false;
		}
		return true;
	}

	void unassign(Vertex v, int c, std::size_t mark) {
		while (trail_.size() > mark) {
			domain_[trail_.back().v] = trail_.back().old;
			trail_.pop_back();
		}
		color_[v] = 0;
		--used_[c];
	}

	const Graph &g_;
	const ColorSequence &s_;
	int k_;
	Clock::time_point start_;
	std::optional<Clock::time_point> deadline_;
	std::vector<std::uint32_t> domain_;
	std::vector<Vertex> order_;
	std::vector<std::vector<Near>> ball_;
	std::vector<int> group_prev_; // previous class of the same interchangeable run, 0 if none
	std::vector<int> used_;
	std::vector<int> color_;
	std::vector<TrailEntry> trail_;
	std::uint64_t nodes_ = 0;
};

} // namespace

SolveResult decide_backtracking(const Graph &g, const ColorSequence &s, std::span<const Pin> pins, Budget budget) {
	validate_pins(g, s, pins);
	Search search(g, s, pins, budget);
	return search.run();
}

} // namespace packing
