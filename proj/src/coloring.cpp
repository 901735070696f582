#include "packing/coloring.hpp"

#include "packing/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace packing {

ColorSequence::ColorSequence(std::vector<int> s) : s_(std::move(s)) {
	if (s_.empty())
		throw Error(ErrorKind::InvalidSequence, "empty sequence");
	for (std::size_t i = 0; i < s_.size(); ++i) {
		if (s_[i] < 1)
			throw Error(ErrorKind::InvalidSequence, "thresholds must be positive");
		if (i > 0 && s_[i] < s_[i - 1])
			throw Error(ErrorKind::InvalidSequence, "sequence must be non-decreasing");
	}
}

ColorSequence ColorSequence::parse(const std::string &text) {
	std::vector<int> values;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		try {
			std::size_t used = 0;
			int v = std::stoi(item, &used);
			if (item.find_first_not_of(" \t", used) != std::string::npos)
				throw std::invalid_argument(item);
			values.push_back(v);
		} catch (const std::logic_error &) {
			throw Error(ErrorKind::InvalidSequence, "cannot parse '" + text + "'");
		}
	}
	return ColorSequence(std::move(values));
}

std::string ColorSequence::to_string() const {
	std::string out = "(";
	for (std::size_t i = 0; i < s_.size(); ++i)
		out += (i ? "," : "") + std::to_string(s_[i]);
	return out + ")";
}

ColorSequence ColorSequence::first_k(int k) {
	std::vector<int> s(k);
	for (int i = 0; i < k; ++i)
		s[i] = i + 1;
	return ColorSequence(std::move(s));
}

bool Coloring::total() const {
	return std::all_of(classes.begin(), classes.end(), [](const auto &c) { return c.has_value(); });
}

int Coloring::classes_used() const {
	std::set<int> used;
	for (const auto &c : classes)
		if (c)
			used.insert(*c);
	return static_cast<int>(used.size());
}

std::vector<Vertex> Coloring::members(int cls) const {
	std::vector<Vertex> out;
	for (Vertex v = 0; v < vertex_count(); ++v)
		if (classes[v] && *classes[v] == cls)
			out.push_back(v);
	return out;
}

std::string coloring_to_json(const Coloring &c, const std::vector<std::pair<std::string, Vertex>> &labels) {
	nlohmann::ordered_json j;
	j["sequence"] = c.sequence.values();
	nlohmann::ordered_json colors = nlohmann::ordered_json::object();
	for (Vertex v = 0; v < c.vertex_count(); ++v)
		if (c.colored(v))
			colors[std::to_string(v)] = c.class_of(v);
	j["colors"] = colors;
	if (!labels.empty()) {
		nlohmann::ordered_json l = nlohmann::ordered_json::object();
		for (const auto &[name, v] : labels)
			l[name] = v;
		j["labels"] = l;
	}
	return j.dump(1);
}

Coloring coloring_from_json(const std::string &text, int vertex_count) {
	nlohmann::json j;
	try {
		j = nlohmann::json::parse(text);
	} catch (const nlohmann::json::exception &e) {
		throw Error(ErrorKind::Parse, std::string("coloring: ") + e.what());
	}
	if (!j.is_object() || !j.contains("sequence") || !j.contains("colors") || !j["sequence"].is_array() ||
	    !j["colors"].is_object())
		throw Error(ErrorKind::Parse, "coloring needs 'sequence' array and 'colors' object");
	std::vector<int> seq;
	for (const auto &x : j["sequence"]) {
		if (!x.is_number_integer())
			throw Error(ErrorKind::Parse, "sequence entries must be integers");
		seq.push_back(x.get<int>());
	}
	Coloring c(ColorSequence(std::move(seq)), vertex_count);
	for (const auto &[key, value] : j["colors"].items()) {
		std::size_t used = 0;
		int v = -1;
		try {
			v = std::stoi(key, &used);
		} catch (const std::logic_error &) {
			used = 0;
		}
		if (used != key.size() || v < 0 || v >= vertex_count)
			throw Error(ErrorKind::OutOfRangeVertex, "coloring key '" + key + "'");
		if (!value.is_number_integer())
			throw Error(ErrorKind::Parse, "class for vertex " + key + " is not an integer");
		c.assign(v, value.get<int>());
	}
	return c;
}

} // namespace packing
