#pragma once

#include "packing/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace packing {

/// Non-decreasing sequence of positive distance thresholds. Class indices are
/// 1-based: class i requires pairwise distance at least threshold(i) + 1.
class ColorSequence {
public:
	ColorSequence() = default;
	/// Throws Error(InvalidSequence) unless non-empty, non-decreasing, all >= 1.
	explicit ColorSequence(std::vector<int> s);
	ColorSequence(std::initializer_list<int> s) : ColorSequence(std::vector<int>(s)) { }

	/// Parses "1,1,2,4".
	static ColorSequence parse(const std::string &text);

	int size() const { return static_cast<int>(s_.size()); }
	int threshold(int cls) const { return s_[cls - 1]; }
	const std::vector<int> &values() const { return s_; }
	bool contains_class(int cls) const { return cls >= 1 && cls <= size(); }
	std::string to_string() const;

	/// The packing k-coloring sequence (1, 2, ..., k).
	static ColorSequence first_k(int k);

	friend bool operator==(const ColorSequence &, const ColorSequence &) = default;

private:
	std::vector<int> s_;
};

/// Assignment of vertices to class indices; absent entries are uncolored.
struct Coloring {
	ColorSequence sequence;
	std::vector<std::optional<int>> classes;

	Coloring() = default;
	Coloring(ColorSequence s, int n) : sequence(std::move(s)), classes(n) { }
	Coloring(ColorSequence s, std::vector<std::optional<int>> c) : sequence(std::move(s)), classes(std::move(c)) { }

	int vertex_count() const { return static_cast<int>(classes.size()); }
	bool colored(Vertex v) const { return classes[v].has_value(); }
	int class_of(Vertex v) const { return *classes[v]; }
	void assign(Vertex v, int cls) { classes[v] = cls; }
	void clear(Vertex v) { classes[v].reset(); }
	bool total() const;
	/// Number of distinct classes in use.
	int classes_used() const;
	std::vector<Vertex> members(int cls) const;

	friend bool operator==(const Coloring &, const Coloring &) = default;
};

// Coloring interchange format (JSON):
//   {"sequence": [1,1,2], "colors": {"0": 1, "1": 2, ...}, "labels": {...}}
// Uncolored vertices are omitted from "colors". `vertex_count` bounds keys.
std::string coloring_to_json(const Coloring &c, const std::vector<std::pair<std::string, Vertex>> &labels = {});
Coloring coloring_from_json(const std::string &text, int vertex_count);

} // namespace packing
