#include "packing/error.hpp"
#include "packing/graph.hpp"

#include <istream>
#include <sstream>

namespace packing {

namespace {

bool blank(const std::string &line) {
	return line.find_first_not_of(" \t\r") == std::string::npos;
}

bool comment(const std::string &line) {
	auto first = line.find_first_not_of(" \t\r");
	return first != std::string::npos && line[first] == '#';
}

// Reads exactly `count` integers from a data line; anything else is an error.
std::vector<long long> parse_ints(const std::string &line, std::size_t count, int line_no) {
	std::istringstream ss(line);
	std::vector<long long> out;
	long long x;
	while (ss >> x)
		out.push_back(x);
	ss.clear();
	std::string rest;
	if ((ss >> rest) || out.size() != count)
		throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected " + std::to_string(count) +
		                                  " integers, got '" + line + "'");
	return out;
}

} // namespace

Graph read_graph_text(std::istream &in) {
	std::string line;
	int line_no = 0;
	std::optional<std::pair<long long, long long>> header;
	std::vector<std::pair<Vertex, Vertex>> pairs;
	while (std::getline(in, line)) {
		++line_no;
		if (blank(line) || comment(line))
			continue;
		auto ints = parse_ints(line, 2, line_no);
		if (!header) {
			if (ints[0] < 0 || ints[1] < 0 || ints[0] > (1 << 24))
				throw Error(ErrorKind::Parse, "bad header '" + line + "'");
			header = {ints[0], ints[1]};
			continue;
		}
		if (static_cast<long long>(pairs.size()) == header->second)
			throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": more edges than announced");
		if (ints[0] < 0 || ints[1] < 0 || ints[0] >= header->first || ints[1] >= header->first)
			throw Error(ErrorKind::OutOfRangeVertex, "line " + std::to_string(line_no) + ": vertex out of range");
		pairs.emplace_back(static_cast<Vertex>(ints[0]), static_cast<Vertex>(ints[1]));
	}
	if (!header)
		throw Error(ErrorKind::Parse, "missing 'n m' header");
	if (static_cast<long long>(pairs.size()) != header->second)
		throw Error(ErrorKind::Parse, "expected " + std::to_string(header->second) + " edges, found " +
		                                  std::to_string(pairs.size()));
	return Graph::from_edge_list(static_cast<int>(header->first), pairs);
}

Graph parse_graph_text(const std::string &text) {
	std::istringstream in(text);
	return read_graph_text(in);
}

std::string format_graph_text(const Graph &g) {
	std::ostringstream out;
	out << g.vertex_count() << ' ' << g.edge_count() << '\n';
	for (const Edge &e : g.edges())
		out << e.u << ' ' << e.v << '\n';
	return out.str();
}

} // namespace packing
