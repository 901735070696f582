#include "packing/cli.hpp"

#include "packing/constructive.hpp"
#include "packing/error.hpp"
#include "packing/gadgets.hpp"
#include "packing/solver.hpp"
#include "packing/structure.hpp"
#include "packing/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace packing::cli {
namespace {

using Json = nlohmann::ordered_json;
using Labels = std::vector<std::pair<std::string, Vertex>>;

struct Loaded {
	Graph graph;
	Labels labels;
};

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

std::string slurp(const std::string &path, std::istream &in) {
	if (path.empty() || path == "-") {
		std::ostringstream buf;
		buf << in.rdbuf();
		return buf.str();
	}
	std::ifstream file(path);
	if (!file)
		throw UsageError("cannot open " + path);
	std::ostringstream buf;
	buf << file.rdbuf();
	return buf.str();
}

// Graph text plus the optional "# label <name> <id>" comment lines written by
// the gadget command.
Loaded load_graph(const std::string &path, std::istream &in) {
	const std::string text = slurp(path, in);
	Loaded out{parse_graph_text(text), {}};
	std::istringstream lines(text);
	std::string line;
	while (std::getline(lines, line)) {
		std::istringstream fields(line);
		std::string hash, word, name;
		Vertex v = -1;
		if (fields >> hash >> word >> name >> v && hash == "#" && word == "label" && v >= 0 &&
		    v < out.graph.vertex_count())
			out.labels.emplace_back(name, v);
	}
	return out;
}

std::string labeled_text(const LabeledGraph &lg) {
	std::string text = format_graph_text(lg.graph);
	for (const auto &[name, v] : lg.labels)
		text += "# label " + name + " " + std::to_string(v) + "\n";
	return text;
}

Vertex resolve_vertex(const std::string &token, const Loaded &g) {
	for (const auto &[name, v] : g.labels)
		if (name == token)
			return v;
	std::size_t used = 0;
	int v = -1;
	try {
		v = std::stoi(token, &used);
	} catch (const std::logic_error &) {
		used = 0;
	}
	if (used != token.size() || token.empty())
		throw UsageError("unknown vertex '" + token + "'");
	return v;
}

// "v=c" or "v=c1,c2,..." (allowed classes).
Pin parse_pin(const std::string &text, const Loaded &g) {
	const auto eq = text.find('=');
	if (eq == std::string::npos)
		throw UsageError("pin '" + text + "' must look like vertex=class[,class...]");
	Pin pin{resolve_vertex(text.substr(0, eq), g), 0};
	std::istringstream classes(text.substr(eq + 1));
	std::string item;
	while (std::getline(classes, item, ',')) {
		std::size_t used = 0;
		int c = -1;
		try {
			c = std::stoi(item, &used);
		} catch (const std::logic_error &) {
			used = 0;
		}
		if (used != item.size() || c < 1 || c > 30)
			throw UsageError("bad class '" + item + "' in pin '" + text + "'");
		pin.allowed |= std::uint32_t{1} << c;
	}
	if (pin.allowed == 0)
		throw UsageError("pin '" + text + "' lists no class");
	return pin;
}

Budget default_budget() {
	if (const char *env = std::getenv("PACKING_BUDGET")) {
		char *end = nullptr;
		const double seconds = std::strtod(env, &end);
		if (end != env && seconds > 0)
			return std::chrono::duration<double>(seconds);
	}
	return std::nullopt;
}

Json violations_json(const VerifyReport &report) {
	Json list = Json::array();
	for (const Violation &v : report.violations) {
		Json item;
		item["kind"] = v.kind == ViolationKind::Packing      ? "packing"
		               : v.kind == ViolationKind::ConditionA ? "condition_a"
		                                                     : "condition_b";
		item["class"] = v.cls;
		item["u"] = v.u;
		item["v"] = v.v;
		item["distance"] = v.distance;
		item["description"] = v.describe();
		list.push_back(item);
	}
	return list;
}

int exit_for(ErrorKind kind) {
	switch (kind) {
	case ErrorKind::NotOuterplanar:
	case ErrorKind::NotTwoConnected:
	case ErrorKind::NotSubcubic:
	case ErrorKind::EdgeAdditionBreaksClass:
	case ErrorKind::NoInjection:
		return kNegative;
	case ErrorKind::MemoryBudgetExceeded:
		return kTimeout;
	default:
		return kUsage;
	}
}

struct Options {
	std::string graph = "-";
	std::string sequence;
	std::vector<std::string> pins;
	std::string engine = "auto";
	double budget = -1;
	std::size_t max_states = DpOptions{}.max_states;
	int k_max = 12;
	std::string coloring;
	bool feasible = false;
	bool check_steps = false;
	std::string gadget;
	bool no_pendant = false;
	int n = 0;
	std::uint64_t seed = 0;
	bool two_connected = false;
};

CommandOutcome cmd_recognize(const Options &o, std::istream &in) {
	const Loaded g = load_graph(o.graph, in);
	auto result = outer_embedding(g.graph);
	Json j;
	j["vertices"] = g.graph.vertex_count();
	j["edges"] = g.graph.edge_count();
	j["subcubic"] = is_subcubic(g.graph);
	if (auto *bad = std::get_if<NotOuterplanar>(&result)) {
		j["outerplanar"] = false;
		j["block"] = bad->block;
		j["reason"] = bad->reason;
		return {kNegative, j.dump(1) + "\n", ""};
	}
	const auto &emb = std::get<OuterEmbedding>(result);
	j["outerplanar"] = true;
	j["two_connected"] = is_two_connected(g.graph);
	j["blocks"] = emb.tree.blocks.size();
	j["cut_vertices"] = emb.tree.cut_vertices;
	Json cycles = Json::array();
	for (const auto &b : emb.blocks)
		cycles.push_back(b.cycle);
	j["outer_cycles"] = cycles;
	return {kOk, j.dump(1) + "\n", ""};
}

CommandOutcome cmd_color(const Options &o, std::istream &in) {
	const ColorSequence s = ColorSequence::parse(o.sequence);
	const Loaded g = load_graph(o.graph, in);
	ConstructiveOptions options;
	options.check_steps = o.check_steps;
	Coloring c;
	if (s == ColorSequence{1, 1, 2})
		c = color_112_2connected(g.graph, options);
	else if (s == ColorSequence{1, 1, 2, 4})
		c = color_1124(g.graph, options);
	else
		throw UsageError("color supports --sequence 1,1,2 and 1,1,2,4 only");
	return {kOk, coloring_to_json(c, g.labels) + "\n", ""};
}

CommandOutcome cmd_solve(const Options &o, std::istream &in) {
	const ColorSequence s = ColorSequence::parse(o.sequence);
	const Loaded g = load_graph(o.graph, in);
	std::vector<Pin> pins;
	for (const auto &text : o.pins)
		pins.push_back(parse_pin(text, g));
	std::string engine = o.engine;
	if (engine == "auto")
		engine = is_outerplanar(g.graph) ? "dp" : "backtrack";
	SolveResult r;
	if (engine == "dp") {
		DpOptions options;
		options.max_states = o.max_states;
		r = decide_dp_outerplanar(g.graph, s, pins, options);
	} else if (engine == "backtrack") {
		Budget budget = o.budget > 0 ? Budget(std::chrono::duration<double>(o.budget)) : default_budget();
		r = decide_backtracking(g.graph, s, pins, budget);
	} else {
		throw UsageError("unknown engine '" + o.engine + "'");
	}
	Json j;
	j["status"] = to_string(r.status);
	j["sequence"] = s.values();
	j["engine"] = engine;
	if (r.witness)
		j["coloring"] = Json::parse(coloring_to_json(*r.witness, g.labels));
	std::ostringstream err;
	err << to_string(r.status) << " in " << r.seconds << " s (" << r.nodes << " nodes)\n";
	const int code = r.status == SolveStatus::Sat     ? kOk
	                 : r.status == SolveStatus::Unsat ? kNegative
	                                                  : kTimeout;
	return {code, j.dump(1) + "\n", err.str()};
}

CommandOutcome cmd_pcn(const Options &o, std::istream &in) {
	const Loaded g = load_graph(o.graph, in);
	Budget budget = o.budget > 0 ? Budget(std::chrono::duration<double>(o.budget)) : default_budget();
	ChromaticResult r = packing_chromatic_number(g.graph, o.k_max, budget);
	Json j;
	if (r.value) {
		j["pcn"] = *r.value;
		return {kOk, j.dump(1) + "\n", ""};
	}
	j["pcn"] = nullptr;
	j["max"] = o.k_max;
	j["timeout"] = r.timed_out;
	return {r.timed_out ? kTimeout : kNegative, j.dump(1) + "\n", ""};
}

CommandOutcome cmd_verify(const Options &o, std::istream &in) {
	if ((o.graph.empty() || o.graph == "-") && (o.coloring.empty() || o.coloring == "-"))
		throw UsageError("graph and coloring cannot both come from standard input");
	const Loaded g = load_graph(o.graph, in);
	Coloring c = coloring_from_json(slurp(o.coloring, in), g.graph.vertex_count());
	const ColorSequence s = o.sequence.empty() ? c.sequence : ColorSequence::parse(o.sequence);
	c.sequence = s;
	VerifyReport report = o.feasible ? verify_feasible_1124(g.graph, c) : verify_packing(g.graph, s, c);
	Json j;
	j["ok"] = report.ok();
	j["sequence"] = s.values();
	j["violations"] = violations_json(report);
	return {report.ok() ? kOk : kNegative, j.dump(1) + "\n", ""};
}

CommandOutcome cmd_subdivide(const Options &o, std::istream &in) {
	const Loaded g = load_graph(o.graph, in);
	const SubdivisionMap d = subdivide(g.graph);
	std::string text = format_graph_text(d.graph);
	for (std::size_t i = 0; i < d.edge_to_midpoint.size(); ++i) {
		const Edge e = g.graph.edges()[i];
		text += "# midpoint " + std::to_string(d.edge_to_midpoint[i]) + " " + std::to_string(e.u) + " " +
		        std::to_string(e.v) + "\n";
	}
	return {kOk, text, ""};
}

CommandOutcome cmd_gadget(const Options &o) {
	const bool pendant = !o.no_pendant;
	LabeledGraph lg;
	if (o.gadget == "g1")
		lg = gadget_g1(pendant);
	else if (o.gadget == "g2")
		lg = gadget_g2(pendant);
	else if (o.gadget == "bigg")
		lg = gadget_big_g();
	else if (o.gadget == "g3")
		lg = gadget_g3(pendant);
	else if (o.gadget == "h")
		lg = gadget_h();
	else if (o.gadget == "ex13")
		lg = example_c4_two_ears();
	else if (o.gadget == "unit")
		lg = double_triangle_unit();
	else if (o.gadget == "petersen")
		lg = petersen();
	else
		throw UsageError("unknown gadget '" + o.gadget + "'");
	return {kOk, labeled_text(lg), ""};
}

CommandOutcome cmd_gen(const Options &o) {
	return {kOk, format_graph_text(random_outerplanar_subcubic(o.n, o.seed, o.two_connected)), ""};
}

} // namespace

CommandOutcome run(const std::vector<std::string> &args, std::istream &in) {
	CLI::App app{"Packing colorings of subcubic outerplanar graphs", "packing-cli"};
	app.require_subcommand(1);
	Options o;

	auto *recognize = app.add_subcommand("recognize", "Outerplanarity, blocks and outer cycles");
	recognize->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *color = app.add_subcommand("color", "Constructive (1,1,2) or (1,1,2,4) coloring");
	color->add_option("--sequence", o.sequence, "1,1,2 or 1,1,2,4")->required();
	color->add_flag("--check-steps", o.check_steps, "Verify after every reduction step");
	color->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *solve = app.add_subcommand("solve", "Decide packing S-colorability");
	solve->add_option("--sequence", o.sequence, "Distance sequence, e.g. 1,1,2,5")->required();
	solve->add_option("--pin", o.pins, "vertex=class[,class...] (vertex id or label)")->allow_extra_args(false);
	solve->add_option("--engine", o.engine, "auto, backtrack or dp")
	    ->check(CLI::IsMember({"auto", "backtrack", "dp"}));
	solve->add_option("--budget", o.budget, "Time budget in seconds (backtracking)");
	solve->add_option("--max-states", o.max_states, "State ceiling for the dp engine")->check(CLI::PositiveNumber);
	solve->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *pcn = app.add_subcommand("pcn", "Packing chromatic number");
	pcn->add_option("--max", o.k_max, "Largest k to try")->check(CLI::Range(1, 30));
	pcn->add_option("--budget", o.budget, "Time budget in seconds");
	pcn->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *verify = app.add_subcommand("verify", "Check a coloring");
	verify->add_option("--sequence", o.sequence, "Distance sequence (defaults to the coloring's)");
	verify->add_option("--coloring", o.coloring, "Coloring JSON file")->required();
	verify->add_flag("--feasible", o.feasible, "Also check conditions (A) and (B) for (1,1,2,4)");
	verify->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *subdivide_cmd = app.add_subcommand("subdivide", "Replace every edge by a path of length two");
	subdivide_cmd->add_option("graph", o.graph, "Graph file ('-' for stdin)");

	auto *gadget = app.add_subcommand("gadget", "Emit a named construction");
	gadget->add_option("name", o.gadget, "g1, g2, bigg, g3, h, ex13, unit or petersen")->required();
	gadget->add_flag("--no-pendant", o.no_pendant, "Omit the pendant vertex of g1, g2 and g3");

	auto *gen = app.add_subcommand("gen", "Random subcubic outerplanar graph");
	gen->add_option("--n", o.n, "Vertex bound")->required();
	gen->add_option("--seed", o.seed, "Seed")->required();
	gen->add_flag("--two-connected", o.two_connected, "Single 2-connected block");

	std::vector<std::string> storage{"packing-cli"};
	storage.insert(storage.end(), args.begin(), args.end());
	std::vector<char *> argv;
	for (auto &s : storage)
		argv.push_back(s.data());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::ParseError &e) {
		std::ostringstream out, err;
		const int code = app.exit(e, out, err);
		return {code == 0 ? kOk : kUsage, out.str(), err.str()};
	}

	try {
		if (recognize->parsed())
			return cmd_recognize(o, in);
		if (color->parsed())
			return cmd_color(o, in);
		if (solve->parsed())
			return cmd_solve(o, in);
		if (pcn->parsed())
			return cmd_pcn(o, in);
		if (verify->parsed())
			return cmd_verify(o, in);
		if (subdivide_cmd->parsed())
			return cmd_subdivide(o, in);
		if (gadget->parsed())
			return cmd_gadget(o);
		return cmd_gen(o);
	} catch (const Error &e) {
		return {exit_for(e.kind()), "", std::string(e.what()) + "\n"};
	} catch (const UsageError &e) {
		return {kUsage, "", std::string(e.what()) + "\n"};
	} catch (const std::exception &e) {
		return {kUsage, "", std::string("error: ") + e.what() + "\n"};
	}
}

} // namespace packing::cli
