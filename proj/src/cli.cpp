#include "dagger/cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <sstream>

#include "dagger/epsilon.hpp"
#include "dagger/io.hpp"
#include "dagger/laws.hpp"
#include "dagger/mazurkiewicz.hpp"

namespace dagger::cli {

namespace {

/// Raised for input that parses as flags but cannot be used.
struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

StateId state_id(const AnyAutomaton &a, const std::string &name)
{
	const NameSet &states = states_of(a);
	if (!states.contains(name))
		throw UsageError("unknown state '" + name + "'");
	return states.id(name);
}

void print_words(std::ostream &out, const std::set<Word> &words)
{
	for (const auto &w : words)
		out << w << "\n";
}

int cmd_eliminate(const std::string &path, std::ostream &out)
{
	AnyAutomaton a = load_automaton(path);
	if (auto *n = std::get_if<Nda>(&a)) {
		out << print_automaton(eliminate(EpsNda::from_nda(*n)));
		return kOk;
	}
	auto *e = std::get_if<EpsNda>(&a);
	if (!e)
		throw UsageError("eliminate expects an 'eps-nda' or 'nda' file");
	out << print_automaton(eliminate(*e));
	return kOk;
}

int cmd_semantics(const std::string &path, const std::string &state, std::size_t bound,
		  std::ostream &out)
{
	AnyAutomaton a = load_automaton(path);
	StateId s = state_id(a, state);
	print_words(out, semantics_of(a, bound).at(s).words());
	return kOk;
}

std::vector<std::pair<std::string, std::string>> parse_pairs(const std::string &text)
{
	std::vector<std::pair<std::string, std::string>> pairs;
	std::istringstream is(text);
	for (std::string item; std::getline(is, item, ',');) {
		auto eq = item.find('=');
		if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
			throw UsageError("--pairs expects p=q[,p=q...], got '" + item + "'");
		pairs.emplace_back(item.substr(0, eq), item.substr(eq + 1));
	}
	if (pairs.empty())
		throw UsageError("--pairs is empty");
	return pairs;
}

int cmd_equiv(const std::string &path_a, const std::string &path_b, std::size_t bound,
	      const std::optional<std::string> &pairs_arg, std::ostream &out)
{
	AnyAutomaton a = load_automaton(path_a);
	AnyAutomaton b = load_automaton(path_b);

	std::vector<std::pair<std::string, std::string>> pairs;
	if (pairs_arg) {
		pairs = parse_pairs(*pairs_arg);
	} else {
		for (const auto &name : states_of(a).names())
			if (states_of(b).contains(name))
				pairs.emplace_back(name, name);
		if (pairs.empty())
			throw UsageError("no equally named states to compare; use --pairs");
	}

	auto sem_a = semantics_of(a, bound);
	auto sem_b = semantics_of(b, bound);
	for (const auto &[p, q] : pairs) {
		const auto &la = sem_a.at(state_id(a, p));
		const auto &lb = sem_b.at(state_id(b, q));
		if (la == lb)
			continue;
		std::optional<Word> witness;
		const char *side = "";
		for (const auto &w : la)
			if (!lb.contains(w)) {
				witness = w;
				side = "left";
				break;
			}
		for (const auto &w : lb)
			if (!la.contains(w) && (!witness || w < *witness)) {
				witness = w;
				side = "right";
				break;
			}
		out << "inequivalent (bound " << bound << "): " << p << "=" << q << " differ on "
		    << *witness << " (accepted by " << side << " only)\n";
		return kNegative;
	}
	out << "equivalent (bound " << bound << ")\n";
	return kOk;
}

int cmd_solve(const std::string &path, std::size_t bound, std::ostream &out)
{
	EquationFile file = load_equations(path);
	if (file.two_copy)
		throw UsageError("'var2' items describe a two-copy system; check it with "
				 "'laws --law double-dagger' instead");
	EquationMorphism e = file.single();
	out << print_solution(e, solve(e, bound));
	return kOk;
}

int cmd_traces(const std::string &path, const std::string &independence, const std::string &state,
	       std::size_t bound, std::ostream &out)
{
	AnyAutomaton a = load_automaton(path);
	Independence i = Independence::make(alphabet_of(a), load_independence(independence));
	StateId s = state_id(a, state);
	print_words(out, quotient(semantics_of(a, bound).at(s), i).normal_forms);
	return kOk;
}

void print_report(const LawReport &report, std::ostream &out)
{
	std::size_t passed = report.trials - report.failures.size();
	if (report.passed()) {
		out << "PASS " << passed << "/" << report.trials << "\n";
		return;
	}
	out << "FAIL " << passed << "/" << report.trials << "\n";
	for (const auto &f : report.failures) {
		out << "--- " << report.law << " trial " << f.trial << " at " << f.mismatch.where << "\n";
		out << "expected: " << f.mismatch.expected << "\n";
		out << "actual:   " << f.mismatch.actual << "\n";
		out << f.instance;
	}
}

int cmd_laws(const std::string &law, const GenConfig &cfg,
	     const std::optional<std::string> &independence, bool mutant, std::ostream &out)
{
	try {
		validate(cfg);
	} catch (const std::invalid_argument &e) {
		throw UsageError(e.what());
	}
	LawReport report;
	if (law == "eps-sound") {
		report = check_eps_soundness(cfg, mutant);
	} else if (law == "double-dagger") {
		report = check_double_dagger(cfg, mutant);
	} else {
		Alphabet alphabet = generated_alphabet(cfg);
		std::vector<std::pair<char, char>> pairs{{'a', 'b'}};
		if (independence)
			pairs = load_independence(*independence);
		report = check_quotient_factorisation(cfg, Independence::make(alphabet, pairs), mutant);
	}
	print_report(report, out);
	return report.passed() ? kOk : kNegative;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
	CLI::App app{"Fixpoint semantics, epsilon elimination and trace quotients for automata "
		     "with word labels",
		     "dagger"};
	app.require_subcommand(1);

	std::string input, input_b, state, independence_path;
	std::size_t bound = 0;

	auto *eliminate_cmd = app.add_subcommand("eliminate", "Remove epsilon edges from an eps-nda");
	eliminate_cmd->add_option("input", input, "eps-nda file")->required();

	auto *semantics_cmd = app.add_subcommand("semantics", "Print the bounded language of a state");
	semantics_cmd->add_option("input", input, "automaton file")->required();
	semantics_cmd->add_option("state", state, "state name")->required();
	semantics_cmd->add_option("--max-len", bound, "maximum word length")->required();

	std::optional<std::string> pairs;
	auto *equiv_cmd = app.add_subcommand("equiv", "Compare two automata up to a length bound");
	equiv_cmd->add_option("left", input, "first automaton file")->required();
	equiv_cmd->add_option("right", input_b, "second automaton file")->required();
	equiv_cmd->add_option("--max-len", bound, "maximum word length")->required();
	equiv_cmd->add_option("--pairs", pairs, "state pairs p=q[,p=q...] (default: equal names)");

	auto *solve_cmd = app.add_subcommand("solve", "Least solution of an equation system");
	solve_cmd->add_option("input", input, "equation file")->required();
	solve_cmd->add_option("--max-len", bound, "maximum word length")->required();

	auto *traces_cmd = app.add_subcommand("traces", "Trace normal forms of a state's language");
	traces_cmd->add_option("input", input, "automaton file")->required();
	traces_cmd->add_option("state", state, "state name")->required();
	traces_cmd->add_option("--independence", independence_path, "independence file")->required();
	traces_cmd->add_option("--max-len", bound, "maximum word length")->required();

	std::string law;
	GenConfig cfg;
	std::optional<std::string> law_independence;
	bool mutant = false;
	auto *laws_cmd = app.add_subcommand("laws", "Fuzz one of the semantic laws");
	laws_cmd->add_option("--law", law, "eps-sound | double-dagger | quotient-fact")
		->required()
		->check(CLI::IsMember({"eps-sound", "double-dagger", "quotient-fact"}));
	laws_cmd->add_option("--trials", cfg.trials, "number of trials")->capture_default_str();
	laws_cmd->add_option("--seed", cfg.seed, "generator seed")->capture_default_str();
	laws_cmd->add_option("--max-len", cfg.bound, "maximum word length (<= 6)")->capture_default_str();
	laws_cmd->add_option("--max-states", cfg.max_states, "states per instance")->capture_default_str();
	laws_cmd->add_option("--max-edges", cfg.max_edges, "edges per instance")->capture_default_str();
	laws_cmd->add_option("--alphabet-size", cfg.alphabet_size, "symbols (<= 3)")->capture_default_str();
	laws_cmd->add_option("--max-label-len", cfg.max_label_len, "word label length (<= 2)")
		->capture_default_str();
	laws_cmd->add_option("--independence", law_independence,
			     "independence file for quotient-fact (default: a b)");
	laws_cmd->add_flag("--mutant", mutant, "check a deliberately broken construction")
		->group("");

	std::vector<const char *> argv;
	for (const auto &a : args)
		argv.push_back(a.c_str());
	try {
		app.parse(static_cast<int>(argv.size()), argv.data());
	} catch (const CLI::CallForHelp &) {
		out << app.help();
		return kOk;
	} catch (const CLI::ParseError &e) {
		err << "dagger: " << e.what() << "\n";
		return kUsage;
	}

	try {
		if (*eliminate_cmd)
			return cmd_eliminate(input, out);
		if (*semantics_cmd)
			return cmd_semantics(input, state, bound, out);
		if (*equiv_cmd)
			return cmd_equiv(input, input_b, bound, pairs, out);
		if (*solve_cmd)
			return cmd_solve(input, bound, out);
		if (*traces_cmd)
			return cmd_traces(input, independence_path, state, bound, out);
		if (*laws_cmd)
			return cmd_laws(law, cfg, law_independence, mutant, out);
	} catch (const std::exception &e) {
		err << "dagger: " << e.what() << "\n";
		return kUsage;
	}
	return kUsage;
}

} // namespace dagger::cli
