#pragma once

#include "packing/graph.hpp"

#include <string>
#include <variant>
#include <vector>

namespace packing {

/// A block is either a bridge (trivial, one edge) or a 2-connected subgraph.
/// Isolated vertices belong to no block.
struct Block {
	std::vector<Vertex> vertices; // sorted
	std::vector<Edge> edges;      // sorted

	bool trivial() const { return edges.size() == 1; }
};

struct BlockTree {
	std::vector<Block> blocks;                    // sorted by vertex list
	std::vector<Vertex> cut_vertices;             // sorted
	std::vector<std::vector<int>> blocks_of;      // vertex -> indices of blocks containing it
	std::vector<std::pair<int, Vertex>> incidences; // block-cut tree edges (block, cut vertex)

	bool is_cut_vertex(Vertex v) const;
	int block_of_edge(Edge e) const;
	/// Number of cut vertices of the whole graph lying in block `b`.
	int cut_vertex_count(int b) const;
};

BlockTree block_cut_tree(const Graph &g);

struct BlockEmbedding {
	int block = -1;            // index into BlockTree::blocks
	std::vector<Vertex> cycle; // outer cycle in drawing order
	std::vector<Edge> chords;  // sorted
};

struct OuterEmbedding {
	BlockTree tree;
	std::vector<BlockEmbedding> blocks; // one per nontrivial block
	std::vector<int> embedding_of;      // block index -> index into `blocks`, -1 for bridges
};

struct NotOuterplanar {
	std::vector<Vertex> block; // vertices of the offending block
	std::string reason;
};

using EmbeddingResult = std::variant<OuterEmbedding, NotOuterplanar>;

/// Outer-cycle embedding of every nontrivial block, or the first block that
/// has none.
///
/// Each block is reduced by repeatedly suppressing a degree-2 vertex (its two
/// neighbours become adjacent if they were not) until a triangle remains; the
/// vertices are then re-inserted in reverse order, which must always land on
/// an edge of the current cycle. The final cycle is accepted only if every
/// remaining edge is a non-crossing chord. For outerplanar blocks this never
/// gets stuck, whatever degree-2 vertex is picked.
EmbeddingResult outer_embedding(const Graph &g);

/// Throws Error(NotOuterplanar) instead of returning the witness.
OuterEmbedding require_outer_embedding(const Graph &g);

bool is_outerplanar(const Graph &g);
bool is_two_connected(const Graph &g);

struct DualEdge {
	int a = -1;
	int b = -1;
	Edge shared;
};

/// Internal faces of one block. Boundaries are canonical: they start at the
/// smallest vertex and continue toward its smaller face neighbour.
struct BlockFaces {
	int block = -1;
	std::vector<std::vector<Vertex>> faces;
	std::vector<DualEdge> adjacency;
	std::vector<std::vector<int>> neighbors; // face -> adjacent faces, ascending
};

struct WeakDual {
	std::vector<BlockFaces> blocks; // indexed like BlockTree::blocks; bridges have no faces
};

struct FaceRef {
	int block = -1;
	int face = -1;

	friend bool operator==(const FaceRef &, const FaceRef &) = default;
	friend auto operator<=>(const FaceRef &, const FaceRef &) = default;
};

WeakDual weak_dual(const OuterEmbedding &emb);

/// Faces that are dual leaves without cut vertices of G on their boundary, or
/// whose boundary is a whole pendant block.
std::vector<FaceRef> pendant_faces(const Graph &g, const WeakDual &wd, const BlockTree &bt);

/// Rotates/reflects a cycle into canonical form (see BlockFaces).
std::vector<Vertex> canonical_cycle(std::vector<Vertex> cycle);

} // namespace packing
