#include "packing/error.hpp"
#include "packing/solver.hpp"
#include "packing/structure.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <unordered_map>

// Exact decision procedure for outerplanar graphs.
//
// Every intermediate table describes a connected region of the graph that
// meets the rest only in its ports (at most three vertices). A state records
// the class of each port and, for every port p and class i, the distance from
// p to the nearest already-colored non-port vertex of class i, capped at
// threshold(i) + 1. All distances involved are distances in the whole graph:
// separators are single vertices or chord edges, and port-to-port distances
// are read off the face cycle, so no shortcut can exist outside the region.

namespace packing {
namespace {

using Key = unsigned __int128;
using Clock = std::chrono::steady_clock;

constexpr int kMaxPorts = 3;
constexpr int kMaxClasses = 30;
constexpr int kColorBits = 5;

struct Unpacked {
	int ports = 0;
	std::array<int, kMaxPorts> color{};
	std::array<std::array<int, kMaxClasses + 1>, kMaxPorts> prof{}; // prof[p][cls]
};

class Layout {
public:
	explicit Layout(const ColorSequence &s) : k_(s.size()) {
		int width = kColorBits;
		cap_.assign(k_ + 1, 0);
		bits_.assign(k_ + 1, 0);
		offset_.assign(k_ + 1, 0);
		for (int c = 1; c <= k_; ++c) {
			cap_[c] = s.threshold(c) + 1;
			bits_[c] = std::bit_width(static_cast<unsigned>(cap_[c]));
			offset_[c] = width;
			width += bits_[c];
		}
		width_ = width;
		if (kMaxPorts * width_ > 128)
			throw Error(ErrorKind::InvalidSequence,
			            "sequence " + s.to_string() + " is too wide for the outerplanar dynamic program");
	}

	int classes() const { return k_; }
	int cap(int c) const { return cap_[c]; }

	Key encode(const Unpacked &u) const {
		Key key = 0;
		for (int p = 0; p < u.ports; ++p) {
			Key part = static_cast<Key>(u.color[p]);
			for (int c = 1; c <= k_; ++c)
				part |= static_cast<Key>(u.prof[p][c]) << offset_[c];
			key |= part << (p * width_);
		}
		return key;
	}

	Unpacked decode(Key key, int ports) const {
		Unpacked u;
		u.ports = ports;
		for (int p = 0; p < ports; ++p) {
			Key part = key >> (p * width_);
			u.color[p] = static_cast<int>(part & ((1u << kColorBits) - 1));
			for (int c = 1; c <= k_; ++c)
				u.prof[p][c] = static_cast<int>((part >> offset_[c]) & ((Key{1} << bits_[c]) - 1));
		}
		return u;
	}

	/// Colors of all ports packed into one integer (5 bits each).
	static int color_tuple(const Unpacked &u) {
		int t = 0;
		for (int p = 0; p < u.ports; ++p)
			t |= u.color[p] << (kColorBits * p);
		return t;
	}

private:
	int k_;
	int width_ = 0;
	std::vector<int> cap_, bits_, offset_;
};

struct KeyHash {
	std::size_t operator()(Key k) const noexcept {
		auto lo = static_cast<std::uint64_t>(k);
		auto hi = static_cast<std::uint64_t>(k >> 64);
		std::uint64_t h = lo * 0x9E3779B97F4A7C15ull ^ (hi + 0x632BE59BD9B4E019ull + (lo << 6) + (lo >> 2));
		h ^= h >> 31;
		h *= 0xBF58476D1CE4E5B9ull;
		h ^= h >> 29;
		return static_cast<std::size_t>(h);
	}
};

enum class Op { Start, AddPort, Merge, Forget };

struct Table {
	Op op = Op::Start;
	std::vector<Vertex> ports;
	std::vector<std::vector<int>> dist; // port-to-port distances
	int parent = -1;
	int piece = -1;
	std::vector<Key> keys;
	std::vector<std::pair<int, int>> prov; // (parent state, piece state)
};

struct Infeasible { };

class Dp {
public:
	Dp(const Graph &g, const ColorSequence &s, std::span<const Pin> pins, DpOptions options)
	: g_(g), s_(s), layout_(s), options_(options), emb_(require_outer_embedding(g)), wd_(weak_dual(emb_)) {
		const std::uint32_t full = ((std::uint32_t{1} << (s.size() + 1)) - 1) & ~std::uint32_t{1};
		allowed_.assign(g.vertex_count(), full);
		for (const Pin &p : pins)
			allowed_[p.vertex] &= p.allowed;
		const BlockTree &bt = emb_.tree;
		chord_faces_.resize(bt.blocks.size());
		for (std::size_t b = 0; b < wd_.blocks.size(); ++b)
			for (const DualEdge &d : wd_.blocks[b].adjacency) {
				chord_faces_[b][d.shared].push_back(d.a);
				chord_faces_[b][d.shared].push_back(d.b);
			}
	}

	SolveResult run() {
		const auto begin = Clock::now();
		SolveResult result;
		const int n = g_.vertex_count();
		Coloring coloring(s_, n);
		bool feasible = true;
		try {
			for (const auto &component : connected_components(g_)) {
				const Vertex root = component.front();
				int t = start(root);
				for (int b : emb_.tree.blocks_of[root])
					t = merge(t, block_table(b, root));
				// Any surviving state is a witness for this component.
				reconstruct(t, 0, coloring);
			}
		} catch (const Infeasible &) {
			feasible = false;
		}
		result.nodes = created_;
		result.seconds = std::chrono::duration<double>(Clock::now() - begin).count();
		if (feasible) {
			result.status = SolveStatus::Sat;
			result.witness = std::move(coloring);
		} else {
			result.status = SolveStatus::Unsat;
		}
		return result;
	}

private:
	// Table construction ------------------------------------------------

	int push(Table t) {
		if (t.keys.empty())
			throw Infeasible{};
		if (options_.prune_dominated && t.keys.size() > 1)
			prune(t);
		live_ += t.keys.size();
		created_ += t.keys.size();
		if (live_ > options_.max_states)
			throw Error(ErrorKind::MemoryBudgetExceeded,
			            "more than " + std::to_string(options_.max_states) + " profile states");
		tables_.push_back(std::move(t));
		return static_cast<int>(tables_.size()) - 1;
	}

	int start(Vertex v) {
		Table t;
		t.op = Op::Start;
		t.ports = {v};
		t.dist = {{0}};
		Unpacked u;
		u.ports = 1;
		for (int c = 1; c <= layout_.classes(); ++c)
			u.prof[0][c] = layout_.cap(c);
		for (int c = 1; c <= layout_.classes(); ++c) {
			if (!((allowed_[v] >> c) & 1u))
				continue;
			u.color[0] = c;
			t.keys.push_back(layout_.encode(u));
			t.prov.push_back({-1, -1});
		}
		return push(std::move(t));
	}

	int add_port(int parent, Vertex w, const std::vector<int> &dw) {
		const Table &src = tables_[parent];
		const int m = static_cast<int>(src.ports.size());
		if (m >= kMaxPorts)
			throw Error(ErrorKind::InternalProofStepFailed, "port limit exceeded");
		Table t;
		t.op = Op::AddPort;
		t.parent = parent;
		t.ports = src.ports;
		t.ports.push_back(w);
		t.dist = src.dist;
		for (int p = 0; p < m; ++p)
			t.dist[p].push_back(dw[p]);
		t.dist.push_back(dw);
		t.dist.back().push_back(0);

		const int k = layout_.classes();
		std::unordered_map<Key, int, KeyHash> seen;
		for (int i = 0; i < static_cast<int>(src.keys.size()); ++i) {
			Unpacked u = layout_.decode(src.keys[i], m);
			u.ports = m + 1;
			for (int c = 1; c <= k; ++c) {
				int best = layout_.cap(c);
				for (int p = 0; p < m; ++p)
					best = std::min(best, u.prof[p][c] + dw[p]);
				u.prof[m][c] = best;
			}
			for (int c = 1; c <= k; ++c) {
				if (!((allowed_[w] >> c) & 1u))
					continue;
				const int limit = s_.threshold(c);
				if (u.prof[m][c] <= limit)
					continue;
				bool clash = false;
				for (int p = 0; p < m && !clash; ++p)
					clash = u.color[p] == c && dw[p] <= limit;
				if (clash)
					continue;
				u.color[m] = c;
				Key key = layout_.encode(u);
				if (seen.emplace(key, i).second) {
					t.keys.push_back(key);
					t.prov.push_back({i, -1});
				}
			}
		}
		return push(std::move(t));
	}

	int merge(int parent, int piece) {
		const Table &a = tables_[parent];
		const Table &b = tables_[piece];
		const int m = static_cast<int>(a.ports.size());
		const int q = static_cast<int>(b.ports.size());
		std::vector<int> where(q);
		for (int j = 0; j < q; ++j) {
			auto it = std::find(a.ports.begin(), a.ports.end(), b.ports[j]);
			if (it == a.ports.end())
				throw Error(ErrorKind::InternalProofStepFailed, "merged piece has a foreign port");
			where[j] = static_cast<int>(it - a.ports.begin());
		}

		std::unordered_map<int, std::vector<int>> bucket;
		std::vector<Unpacked> pieces(b.keys.size());
		for (int j = 0; j < static_cast<int>(b.keys.size()); ++j) {
			pieces[j] = layout_.decode(b.keys[j], q);
			bucket[Layout::color_tuple(pieces[j])].push_back(j);
		}

		Table t;
		t.op = Op::Merge;
		t.parent = parent;
		t.piece = piece;
		t.ports = a.ports;
		t.dist = a.dist;
		const int k = layout_.classes();
		std::unordered_map<Key, int, KeyHash> seen;
		for (int i = 0; i < static_cast<int>(a.keys.size()); ++i) {
			const Unpacked ua = layout_.decode(a.keys[i], m);
			Unpacked restricted;
			restricted.ports = q;
			for (int j = 0; j < q; ++j)
				restricted.color[j] = ua.color[where[j]];
			auto it = bucket.find(Layout::color_tuple(restricted));
			if (it == bucket.end())
				continue;
			for (int j : it->second) {
				const Unpacked &ub = pieces[j];
				Unpacked out = ua;
				bool ok = true;
				for (int c = 1; c <= k && ok; ++c) {
					const int limit = s_.threshold(c);
					for (int x = 0; x < q && ok; ++x)
						ok = ua.prof[where[x]][c] + ub.prof[x][c] > limit;
					for (int p = 0; p < m && ok; ++p) {
						int via = layout_.cap(c);
						for (int x = 0; x < q; ++x)
							via = std::min(via, a.dist[p][where[x]] + ub.prof[x][c]);
						if (ua.color[p] == c && via <= limit)
							ok = false;
						out.prof[p][c] = std::min(out.prof[p][c], via);
					}
				}
				if (!ok)
					continue;
				Key key = layout_.encode(out);
				if (seen.emplace(key, i).second) {
					t.keys.push_back(key);
					t.prov.push_back({i, j});
				}
			}
		}
		return push(std::move(t));
	}

	int forget(int parent, Vertex v) {
		const Table &src = tables_[parent];
		const int m = static_cast<int>(src.ports.size());
		const int drop = static_cast<int>(std::find(src.ports.begin(), src.ports.end(), v) - src.ports.begin());
		Table t;
		t.op = Op::Forget;
		t.parent = parent;
		std::vector<int> keep;
		for (int p = 0; p < m; ++p)
			if (p != drop) {
				keep.push_back(p);
				t.ports.push_back(src.ports[p]);
			}
		for (int x : keep) {
			t.dist.emplace_back();
			for (int y : keep)
				t.dist.back().push_back(src.dist[x][y]);
		}
		std::unordered_map<Key, int, KeyHash> seen;
		for (int i = 0; i < static_cast<int>(src.keys.size()); ++i) {
			const Unpacked u = layout_.decode(src.keys[i], m);
			Unpacked out;
			out.ports = m - 1;
			const int c = u.color[drop];
			for (int x = 0; x < m - 1; ++x) {
				const int p = keep[x];
				out.color[x] = u.color[p];
				out.prof[x] = u.prof[p];
				out.prof[x][c] = std::min(out.prof[x][c], std::min(layout_.cap(c), src.dist[p][drop]));
			}
			Key key = layout_.encode(out);
			if (seen.emplace(key, i).second) {
				t.keys.push_back(key);
				t.prov.push_back({i, -1});
			}
		}
		return push(std::move(t));
	}

	// Drops states dominated by a state with the same port classes.
	void prune(Table &t) {
		const int m = static_cast<int>(t.ports.size());
		const int k = layout_.classes();
		struct Item {
			int index;
			int total;
			Unpacked u;
		};
		std::unordered_map<int, std::vector<Item>> groups;
		for (int i = 0; i < static_cast<int>(t.keys.size()); ++i) {
			Item item{i, 0, layout_.decode(t.keys[i], m)};
			for (int p = 0; p < m; ++p)
				for (int c = 1; c <= k; ++c)
					item.total += item.u.prof[p][c];
			groups[Layout::color_tuple(item.u)].push_back(std::move(item));
		}
		std::vector<char> keep(t.keys.size(), 1);
		bool any = false;
		for (auto &[tuple, items] : groups) {
			if (items.size() < 2)
				continue;
			std::sort(items.begin(), items.end(), [](const Item &x, const Item &y) {
				return x.total != y.total ? x.total > y.total : x.index < y.index;
			});
			std::vector<const Item *> front;
			for (const Item &item : items) {
				bool dominated = false;
				for (const Item *f : front) {
					bool ge = true;
					for (int p = 0; p < m && ge; ++p)
						for (int c = 1; c <= k && ge; ++c)
							ge = f->u.prof[p][c] >= item.u.prof[p][c];
					if (ge) {
						dominated = true;
						break;
					}
				}
				if (dominated) {
					keep[item.index] = 0;
					any = true;
				} else if (front.size() < 4096) {
					front.push_back(&item);
				}
			}
		}
		if (!any)
			return;
		std::size_t w = 0;
		for (std::size_t i = 0; i < t.keys.size(); ++i)
			if (keep[i]) {
				t.keys[w] = t.keys[i];
				t.prov[w] = t.prov[i];
				++w;
			}
		t.keys.resize(w);
		t.prov.resize(w);
	}

	// Structure traversal -----------------------------------------------

	// Table on port {v} covering every block hanging below v, apart from
	// `parent_block`. Returns -1 when nothing hangs there.
	int hang(Vertex v, int parent_block) {
		int t = -1;
		for (int b : emb_.tree.blocks_of[v]) {
			if (b == parent_block)
				continue;
			if (t < 0)
				t = start(v);
			t = merge(t, block_table(b, v));
		}
		return t;
	}

	// Table on port {c} for block `b` entered at c, including everything
	// hanging below it.
	int block_table(int b, Vertex c) {
		const Block &block = emb_.tree.blocks[b];
		if (block.trivial()) {
			const Edge e = block.edges.front();
			const Vertex w = e.u == c ? e.v : e.u;
			int t = start(w);
			if (int h = hang(w, b); h >= 0)
				t = merge(t, h);
			t = add_port(t, c, {1});
			return forget(t, w);
		}
		const BlockFaces &faces = wd_.blocks[b];
		int root = -1;
		for (int f = 0; f < static_cast<int>(faces.faces.size()) && root < 0; ++f)
			if (std::find(faces.faces[f].begin(), faces.faces[f].end(), c) != faces.faces[f].end())
				root = f;
		const auto &cyc = faces.faces[root];
		const int k = static_cast<int>(cyc.size());
		const int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), c) - cyc.begin());
		std::vector<Vertex> seq(k);
		for (int i = 0; i < k; ++i)
			seq[i] = cyc[(at + i) % k];
		return sweep(b, root, seq, true);
	}

	// Face `f` of block `b`, reached through chord (seq.front(), seq.back()).
	int face_table(int b, int f, Vertex first, Vertex last) {
		const auto &cyc = wd_.blocks[b].faces[f];
		const int k = static_cast<int>(cyc.size());
		const int at = static_cast<int>(std::find(cyc.begin(), cyc.end(), first) - cyc.begin());
		std::vector<Vertex> seq(k);
		const bool backward = cyc[(at + 1) % k] == last;
		for (int i = 0; i < k; ++i)
			seq[i] = backward ? cyc[((at - i) % k + k) % k] : cyc[(at + i) % k];
		return sweep(b, f, seq, false);
	}

	int child_face(int b, int f, Vertex x, Vertex y) {
		auto it = chord_faces_[b].find(make_edge(x, y));
		if (it == chord_faces_[b].end())
			return -1;
		for (int other : it->second)
			if (other != f)
				return other;
		return -1;
	}

	int sweep(int b, int f, const std::vector<Vertex> &seq, bool root) {
		const int k = static_cast<int>(seq.size());
		int t = start(seq[0]);
		for (int j = 1; j < k; ++j) { // adds seq[j]; edge (seq[j-1], seq[j])
			const Vertex w = seq[j];
			if (j == 1)
				t = add_port(t, w, {1});
			else
				t = add_port(t, w, {std::min(j, k - j), 1});
			const bool hangs_here = root || j < k - 1;
			if (hangs_here)
				if (int h = hang(w, b); h >= 0)
					t = merge(t, h);
			if (int child = child_face(b, f, seq[j - 1], w); child >= 0)
				t = merge(t, face_table(b, child, seq[j - 1], w));
			if (j >= 2)
				t = forget(t, seq[j - 1]);
		}
		if (root) {
			if (int child = child_face(b, f, seq[k - 1], seq[0]); child >= 0)
				t = merge(t, face_table(b, child, seq[k - 1], seq[0]));
			t = forget(t, seq[k - 1]);
		}
		return t;
	}

	// Witness -------------------------------------------------------------

	void reconstruct(int table, int state, Coloring &out) {
		std::vector<std::pair<int, int>> stack{{table, state}};
		while (!stack.empty()) {
			auto [ti, si] = stack.back();
			stack.pop_back();
			const Table &t = tables_[ti];
			const auto [ps, qs] = t.prov[si];
			switch (t.op) {
			case Op::Start:
				settle(t.ports[0], layout_.decode(t.keys[si], 1).color[0], out);
				break;
			case Op::AddPort: {
				const int m = static_cast<int>(t.ports.size());
				settle(t.ports.back(), layout_.decode(t.keys[si], m).color[m - 1], out);
				stack.push_back({t.parent, ps});
				break;
			}
			case Op::Merge:
				stack.push_back({t.parent, ps});
				stack.push_back({t.piece, qs});
				break;
			case Op::Forget:
				stack.push_back({t.parent, ps});
				break;
			}
		}
	}

	static void settle(Vertex v, int c, Coloring &out) {
		if (out.colored(v) && out.class_of(v) != c)
			throw Error(ErrorKind::InternalProofStepFailed,
			            "inconsistent witness at vertex " + std::to_string(v));
		out.assign(v, c);
	}

	const Graph &g_;
	const ColorSequence &s_;
	Layout layout_;
	DpOptions options_;
	OuterEmbedding emb_;
	WeakDual wd_;
	std::vector<std::uint32_t> allowed_;
	std::vector<std::map<Edge, std::vector<int>>> chord_faces_;
	std::vector<Table> tables_;
	std::size_t live_ = 0;
	std::uint64_t created_ = 0;
};

} // namespace

SolveResult decide_dp_outerplanar(const Graph &g, const ColorSequence &s, std::span<const Pin> pins,
                                  DpOptions options) {
	validate_pins(g, s, pins);
	if (s.size() > kMaxClasses)
		throw Error(ErrorKind::InvalidSequence, "too many classes");
	Dp dp(g, s, pins, options);
	return dp.run();
}

} // namespace packing
