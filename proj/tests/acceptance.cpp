// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "dagger/cli.hpp"
#include "dagger/epsilon.hpp"
#include "dagger/io.hpp"
#include "dagger/laws.hpp"
#include "oracles.hpp"

using namespace dagger;

namespace {

const std::string kData = DAGGER_DATA_DIR;

// Wall-clock limits, seconds.
constexpr double kEndsInACLimit = 5.0;
constexpr double kSolveLimit = 1.0;
constexpr double kLawsLimit = 30.0;

// Exhaustive oracle family: every automaton with this many states, labels
// in {eps, a, b}, ε outputs on any subset of states, and up to the given
// number of edges.
constexpr std::size_t kExhaustiveTwoStateEdges = 6;
constexpr std::size_t kExhaustiveThreeStateEdges = 4;
// Four-state members are sampled.
constexpr std::size_t kFourStateSamples = 20000;
constexpr std::size_t kOracleBound = 4;

struct Outcome {
	bool ok;
	std::string detail;
};

struct CliResult {
	int code;
	std::string out;
};

CliResult cli(std::vector<std::string> args)
{
	args.insert(args.begin(), "dagger");
	std::ostringstream out, err;
	int code = cli::run(args, out, err);
	return {code, out.str() + err.str()};
}

std::string data(const char *name)
{
	return kData + "/" + name;
}

std::string lines(const std::set<Word> &words)
{
	std::string out;
	for (const auto &w : words)
		out += w.to_string() + "\n";
	return out;
}

double seconds_since(std::chrono::steady_clock::time_point start)
{
	return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome ends_in_a_or_c()
{
	auto start = std::chrono::steady_clock::now();
	CliResult eq = cli({"equiv", data("ends_ac_eps.aut"), data("ends_ac_lang.aut"), "--max-len", "8"});
	if (eq.code != 0)
		return {false, "equiv exited " + std::to_string(eq.code) + ": " + eq.out};

	std::set<Word> expected;
	for (const auto &w : oracle::all_words(Alphabet("abc"), 8))
		if (!w.empty() && (w.letters().back() == 'a' || w.letters().back() == 'c'))
			expected.insert(w);
	for (const char *file : {"ends_ac_eps.aut", "ends_ac_lang.aut"}) {
		CliResult sem = cli({"semantics", data(file), "q0", "--max-len", "8"});
		if (sem.out != lines(expected))
			return {false, std::string(file) + " q0 language differs"};
	}
	double t = seconds_since(start);
	if (t >= kEndsInACLimit)
		return {false, "took " + std::to_string(t) + " s"};
	return {true, std::to_string(expected.size()) + " words"};
}

Outcome equation_system()
{
	auto start = std::chrono::steady_clock::now();
	CliResult r = cli({"solve", data("system.eq"), "--max-len", "7"});
	double t = seconds_since(start);
	if (r.code != 0)
		return {false, r.out};

	Alphabet abcd("abcd");
	auto words = [&](std::initializer_list<const char *> regexes) {
		std::set<Word> out;
		for (const char *re : regexes) {
			auto l = enum_regex(parse_regex(re, abcd), 7);
			out.insert(l.begin(), l.end());
		}
		return out;
	};
	std::string expected;
	auto emit = [&](const char *var, const std::set<Word> &outs, const std::set<Word> &params) {
		for (const auto &w : outs)
			expected += std::string(var) + " out " + w.to_string() + "\n";
		for (const auto &w : params)
			expected += std::string(var) + " param " + w.to_string() + " y\n";
	};
	emit("x0", words({"(aba)*c", "(aba)*abd"}), words({"(aba)*ab"}));
	emit("x1", words({"(aab)*d", "(aab)*ac"}), words({"(aab)*"}));
	if (r.out != expected)
		return {false, "solution differs from the regex solution"};
	if (t >= kSolveLimit)
		return {false, "took " + std::to_string(t) + " s"};
	return {true, "x0, x1 exact"};
}

Outcome word_automaton()
{
	const char *states[] = {"x", "y", "z", "u", "v"};
	const char *expected[] = {"abc\n", "bc\n", "c\n", "abc\n", "abc\n"};
	for (int i = 0; i < 5; ++i) {
		CliResult r = cli({"semantics", data("word_abc.aut"), states[i], "--max-len", "5"});
		if (r.code != 0 || r.out != expected[i])
			return {false, std::string("state ") + states[i] + " gave " + r.out};
	}
	if (cli({"equiv", data("word_abc.aut"), data("word_abc.aut"), "--max-len", "5", "--pairs", "u=v"})
		    .code != 0)
		return {false, "u and v differ"};
	return {true, "x y z u v"};
}

Outcome eps_elimination()
{
	for (const char *s : {"x", "y", "z"})
		if (cli({"semantics", data("eps_chain.aut"), s, "--max-len", "3"}).out != "eps\na\naa\naaa\n")
			return {false, std::string("semantics of ") + s};
	CliResult elim = cli({"eliminate", data("eps_chain.aut")});
	const char *expected = "type: nda\nalphabet: a\nstates: x y z\naccept: x y z\n"
			       "trans: x a z\ntrans: y a z\ntrans: z a z\n";
	if (elim.code != 0 || elim.out != expected)
		return {false, "eliminate output:\n" + elim.out};
	auto e = std::get<EpsNda>(load_automaton(data("eps_chain.aut")));
	StateId z = e.states.id("z");
	if (eps_items_with_depth(e, "x", 8) !=
	    std::set<DepthItem>{DepthItem::step(2, 'a', z), DepthItem::accept(2)})
		return {false, "depth items of x"};
	return {true, "semantics, eliminate, depth items"};
}

Outcome least_vs_greatest()
{
	auto e = std::get<EpsNda>(load_automaton(data("eps_loop.aut")));
	WordAutomaton w = embed_eps_nda(e);
	for (std::size_t n = 0; n <= 6; ++n)
		if (!semantics_word(w, n)[0].empty())
			return {false, "nonempty least semantics at n=" + std::to_string(n)};
	EquationMorphism sys = to_equations(w);
	Solution down = iterate_to_fixpoint(sys, top(sys, 3), 3);
	if (down.values[0].empty() || phi_step(sys, down, 3) != down)
		return {false, "downward iterate is empty or not a fixpoint"};
	return {true, "least empty, downward iterate has " + std::to_string(down.values[0].size()) +
			      " items at n=3"};
}

Outcome law_suites()
{
	auto start = std::chrono::steady_clock::now();
	std::string detail;
	for (std::size_t k : {2, 3}) {
		GenConfig cfg;
		cfg.seed = 7;
		cfg.trials = 500;
		cfg.bound = 4;
		cfg.max_states = 5;
		cfg.alphabet_size = k;
		Independence ind = Independence::make(
			generated_alphabet(cfg),
			k == 2 ? std::vector<std::pair<char, char>>{{'a', 'b'}}
			       : std::vector<std::pair<char, char>>{{'a', 'b'}, {'a', 'c'}});
		std::vector<LawReport> reports{check_eps_soundness(cfg), check_double_dagger(cfg),
					       check_quotient_factorisation(cfg, ind)};
		for (const auto &r : reports)
			if (!r.passed())
				return {false, r.law + " failed " + std::to_string(r.failures.size()) +
						       " trials at alphabet size " + std::to_string(k)};
		std::vector<LawReport> mutants{check_eps_soundness(cfg, true), check_double_dagger(cfg, true),
					       check_quotient_factorisation(cfg, ind, true)};
		for (const auto &r : mutants) {
			if (r.passed())
				return {false, "mutant of " + r.law + " survived at alphabet size " + std::to_string(k)};
			detail += r.law + "/" + std::to_string(k) + " mutant: " +
				  std::to_string(r.failures.size()) + " failures; ";
		}
	}
	double t = seconds_since(start);
	if (t >= kLawsLimit)
		return {false, "took " + std::to_string(t) + " s"};
	char buf[64];
	std::snprintf(buf, sizeof buf, "%.2f s", t);
	return {true, detail + buf};
}

// Checks every state of `w` at every bound up to kOracleBound.
bool agrees(const WordAutomaton &w)
{
	for (std::size_t n = 0; n <= kOracleBound; ++n) {
		auto sem = semantics_word(w, n);
		for (StateId s = 0; s < w.states.size(); ++s)
			if (sem[s].words() != oracle::path_semantics(w, s, n))
				return false;
	}
	return true;
}

// Calls `visit` on every edge subset of size <= max_edges, every output choice.
std::size_t for_each_automaton(std::size_t states, std::size_t max_edges,
			       const std::function<bool(const WordAutomaton &)> &visit)
{
	std::vector<WordTransition> edges;
	for (StateId s = 0; s < states; ++s)
		for (const char *label : {"", "a", "b"})
			for (StateId t = 0; t < states; ++t)
				edges.push_back({s, Word(label), t});
	std::size_t count = 0;
	std::vector<std::size_t> chosen;
	std::function<bool(std::size_t)> rec = [&](std::size_t next) {
		for (unsigned outs = 0; outs < (1u << states); ++outs) {
			WordAutomaton w;
			w.alphabet = Alphabet("ab");
			for (StateId s = 0; s < states; ++s)
				w.add_state("s" + std::to_string(s));
			for (std::size_t i : chosen)
				w.transitions.insert(edges[i]);
			for (StateId s = 0; s < states; ++s)
				if (outs & (1u << s))
					w.outputs[s].insert(Word());
			++count;
			if (!visit(w))
				return false;
		}
		if (chosen.size() == max_edges)
			return true;
		for (std::size_t i = next; i < edges.size(); ++i) {
			chosen.push_back(i);
			bool ok = rec(i + 1);
			chosen.pop_back();
			if (!ok)
				return false;
		}
		return true;
	};
	rec(0);
	return count;
}

Outcome oracle_equivalence()
{
	std::optional<WordAutomaton> bad;
	auto check = [&](const WordAutomaton &w) {
		if (agrees(w))
			return true;
		bad = w;
		return false;
	};
	std::size_t n2 = for_each_automaton(2, kExhaustiveTwoStateEdges, check);
	if (bad)
		return {false, "semantics_word differs on\n" + print_automaton(*bad)};
	std::size_t n3 = for_each_automaton(3, kExhaustiveThreeStateEdges, check);
	if (bad)
		return {false, "semantics_word differs on\n" + print_automaton(*bad)};

	std::mt19937_64 rng(4);
	for (std::size_t i = 0; i < kFourStateSamples; ++i) {
		WordAutomaton w;
		w.alphabet = Alphabet("ab");
		for (StateId s = 0; s < 4; ++s)
			w.add_state("s" + std::to_string(s));
		const char *labels[] = {"", "a", "b"};
		for (std::size_t k = rng() % 7; k > 0; --k)
			w.transitions.insert({rng() % 4, Word(labels[rng() % 3]), rng() % 4});
		for (StateId s = 0; s < 4; ++s)
			if (rng() % 2)
				w.outputs[s].insert(Word());
		if (!agrees(w))
			return {false, "semantics_word differs on\n" + print_automaton(w)};
	}

	Alphabet abc("abc");
	const std::pair<char, char> candidates[] = {{'a', 'b'}, {'a', 'c'}, {'b', 'c'}};
	std::size_t words = 0;
	for (unsigned mask = 0; mask < 8; ++mask) {
		std::vector<std::pair<char, char>> rel;
		for (unsigned i = 0; i < 3; ++i)
			if (mask & (1u << i))
				rel.push_back(candidates[i]);
		Independence ind = Independence::make(abc, rel);
		std::set<std::pair<char, char>> pairs(rel.begin(), rel.end());
		for (const auto &w : oracle::all_words(abc, 6)) {
			if (normal_form(w, ind).letters() != oracle::swap_closure_min(w.letters(), pairs))
				return {false, "normal_form differs on " + w.to_string()};
			++words;
		}
	}
	return {true, std::to_string(n2) + " two-state + " + std::to_string(n3) + " three-state automata, " +
			      std::to_string(kFourStateSamples) + " four-state samples, " +
			      std::to_string(words) + " words x relations"};
}

Outcome determinism()
{
	std::vector<std::vector<std::string>> commands{
		{"eliminate", data("ends_ac_eps.aut")},
		{"eliminate", data("eps_chain.aut")},
		{"semantics", data("ends_ac_lang.aut"), "q2", "--max-len", "5"},
		{"equiv", data("ends_ac_eps.aut"), data("ends_ac_lang.aut"), "--max-len", "6"},
		{"equiv", data("word_abc.aut"), data("word_abc.aut"), "--max-len", "5", "--pairs", "x=y"},
		{"solve", data("system.eq"), "--max-len", "7"},
		{"traces", data("ends_ac_eps.aut"), "q0", "--independence", data("ab.indep"), "--max-len", "5"},
		{"laws", "--law", "eps-sound", "--trials", "200", "--seed", "7"},
		{"laws", "--law", "double-dagger", "--trials", "200", "--seed", "7"},
		{"laws", "--law", "quotient-fact", "--trials", "200", "--alphabet-size", "3"},
		{"laws", "--law", "double-dagger", "--trials", "100", "--mutant"},
		{"semantics", data("missing.aut"), "x", "--max-len", "2"},
	};
	for (const auto &c : commands) {
		CliResult a = cli(c);
		CliResult b = cli(c);
		if (a.code != b.code || a.out != b.out)
			return {false, "output differs for " + c[0]};
	}
	return {true, std::to_string(commands.size()) + " commands"};
}

} // namespace

int main()
{
	struct Criterion {
		const char *name;
		Outcome (*run)();
	};
	const Criterion criteria[] = {
		{"1 eps-nda and regex-labelled automaton agree, words ending in a or c (n=8)", ends_in_a_or_c},
		{"2 two-variable equation system (n=7)", equation_system},
		{"3 word automaton x,y,z,u,v (n=5)", word_automaton},
		{"4 eps chain semantics and elimination", eps_elimination},
		{"5 eps self-loop: least solution empty, others exist", least_vs_greatest},
		{"6 law suites and mutation self-tests", law_suites},
		{"7 oracle equivalence", oracle_equivalence},
		{"8 determinism", determinism},
	};
	int failed = 0;
	for (const auto &c : criteria) {
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception &e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		std::cout << (o.ok ? "[PASS] " : "[FAIL] ") << c.name << " -- " << o.detail << "\n";
		failed += !o.ok;
	}
	std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria failed") << "\n";
	return failed;
}
