#include "dagger/laws.hpp"

#include <sstream>
#include <stdexcept>

#include "dagger/epsilon.hpp"
#include "dagger/io.hpp"

namespace dagger {

namespace {

constexpr std::uint64_t splitmix64(std::uint64_t x)
{
	x += 0x9e3779b97f4a7c15ULL;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
	return x ^ (x >> 31);
}

// Field tags for the keyed streams.
enum class Field : std::uint64_t {
	StateCount = 1,
	EdgeCount,
	Edges,
	Accepting,
	ParamCount,
	Items,
};

/// Counter-based stream: the n-th draw is a hash of (seed, trial, field, n).
class Stream {
public:
	Stream(std::uint64_t seed, std::size_t trial, Field field)
		: key_(splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ static_cast<std::uint64_t>(field)))
	{
	}

	std::uint64_t next() { return splitmix64(key_ ^ splitmix64(counter_++)); }

	/// Uniform-ish in [0, n).
	std::size_t below(std::size_t n) { return n == 0 ? 0 : static_cast<std::size_t>(next() % n); }

private:
	std::uint64_t key_;
	std::uint64_t counter_ = 0;
};

Word random_word(Stream &s, const Alphabet &alphabet, std::size_t max_len)
{
	std::string letters;
	std::size_t len = s.below(max_len + 1);
	for (std::size_t i = 0; i < len; ++i)
		letters.push_back(alphabet.symbols()[s.below(alphabet.size())]);
	return Word(std::move(letters));
}

template <typename Set>
std::string show(const Set &set)
{
	std::ostringstream os;
	os << '{';
	bool first = true;
	for (const auto &w : set) {
		os << (first ? "" : ", ") << w;
		first = false;
	}
	os << '}';
	return os.str();
}

std::string show(const std::set<SolutionItem> &items, const NameSet &params)
{
	std::ostringstream os;
	os << '{';
	bool first = true;
	for (const auto &item : items) {
		os << (first ? "" : ", ");
		if (item.is_param)
			os << '(' << item.word << ',' << params.name(item.param) << ')';
		else
			os << item.word;
		first = false;
	}
	os << '}';
	return os.str();
}

// Broken elimination: ignores ε-reachability entirely.
Nda eliminate_without_closure(const EpsNda &e)
{
	return e.forget_eps();
}

// Broken codiagonal route: loses the right copy.
Solution double_dagger_dropping_right(const Eq2Morphism &e2, std::size_t bound)
{
	Eq2Morphism pruned = e2;
	for (auto &items : pruned.rhs)
		std::erase_if(items, [](const Eq2Item &i) { return i.kind == Eq2Item::Kind::ToVarRight; });
	return double_dagger(pruned, bound);
}

std::optional<Mismatch> compare_languages(const NameSet &states,
					  const std::vector<BoundedLanguage> &expected,
					  const std::vector<BoundedLanguage> &actual)
{
	for (StateId s = 0; s < expected.size(); ++s)
		if (expected[s] != actual.at(s))
			return Mismatch{states.name(s), show(expected[s]), show(actual[s])};
	return std::nullopt;
}

std::optional<Mismatch> compare_traces(const NameSet &states, const std::vector<TraceSet> &expected,
				       const std::vector<TraceSet> &actual, const std::string &tag)
{
	for (StateId s = 0; s < expected.size(); ++s)
		if (expected[s] != actual.at(s))
			return Mismatch{tag + " " + states.name(s), show(expected[s]), show(actual[s])};
	return std::nullopt;
}

std::string serialise(const EpsNda &e) { return print_automaton(e); }
std::string serialise(const Eq2Morphism &e) { return print_equations(e); }

template <typename Instance, typename Gen, typename Check>
LawReport run_law(const std::string &law, const GenConfig &cfg, Gen gen, Check check)
{
	validate(cfg);
	LawReport report{law, cfg.trials, {}};
	for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
		Instance instance = gen(cfg, trial);
		if (auto m = check(instance))
			report.failures.push_back({trial, serialise(instance), *m});
	}
	return report;
}

} // namespace

void validate(const GenConfig &cfg)
{
	if (cfg.max_states == 0 || cfg.max_edges == 0 || cfg.alphabet_size == 0 ||
	    cfg.max_label_len == 0 || cfg.bound == 0)
		throw std::invalid_argument("generator parameters must be positive");
	if (cfg.alphabet_size > 3)
		throw std::invalid_argument("alphabet_size must be at most 3");
	if (cfg.max_label_len > 2)
		throw std::invalid_argument("max_label_len must be at most 2");
	if (cfg.bound > 6)
		throw std::invalid_argument("bound must be at most 6");
}

Alphabet generated_alphabet(const GenConfig &cfg)
{
	return Alphabet(std::string_view("abc").substr(0, cfg.alphabet_size));
}

EpsNda gen_eps_nda(const GenConfig &cfg, std::size_t trial)
{
	validate(cfg);
	EpsNda e;
	e.alphabet = generated_alphabet(cfg);

	Stream count(cfg.seed, trial, Field::StateCount);
	std::size_t nstates = 1 + count.below(cfg.max_states);
	for (std::size_t i = 0; i < nstates; ++i)
		e.states.add("s" + std::to_string(i));

	Stream accept(cfg.seed, trial, Field::Accepting);
	for (StateId s = 0; s < nstates; ++s)
		if (accept.below(2) == 0)
			e.accepting.insert(s);

	Stream edge_count(cfg.seed, trial, Field::EdgeCount);
	Stream edges(cfg.seed, trial, Field::Edges);
	std::size_t nedges = edge_count.below(cfg.max_edges + 1);
	for (std::size_t i = 0; i < nedges; ++i) {
		StateId src = edges.below(nstates);
		StateId dst = edges.below(nstates);
		// One slot in (alphabet_size + 1) is an ε-edge.
		std::size_t label = edges.below(e.alphabet.size() + 1);
		if (label == e.alphabet.size())
			e.eps_edges.insert({src, dst});
		else
			e.transitions.insert({src, e.alphabet.symbols()[label], dst});
	}
	return e;
}

Eq2Morphism gen_eq2(const GenConfig &cfg, std::size_t trial)
{
	validate(cfg);
	Eq2Morphism e;
	e.alphabet = generated_alphabet(cfg);

	Stream count(cfg.seed, trial, Field::StateCount);
	std::size_t nvars = 1 + count.below(cfg.max_states);
	for (std::size_t i = 0; i < nvars; ++i)
		e.add_variable("x" + std::to_string(i));

	Stream params(cfg.seed, trial, Field::ParamCount);
	std::size_t nparams = params.below(3);
	for (std::size_t i = 0; i < nparams; ++i)
		e.parameters.add("y" + std::to_string(i));

	Stream item_count(cfg.seed, trial, Field::EdgeCount);
	Stream items(cfg.seed, trial, Field::Items);
	std::size_t nitems = item_count.below(cfg.max_edges + 1);
	for (std::size_t i = 0; i < nitems; ++i) {
		std::size_t x = items.below(nvars);
		auto kind = static_cast<Eq2Item::Kind>(items.below(4));
		if (kind == Eq2Item::Kind::ToParam && nparams == 0)
			kind = Eq2Item::Kind::Output;
		Word w = random_word(items, e.alphabet, cfg.max_label_len);
		std::size_t target = 0;
		if (kind == Eq2Item::Kind::ToVarLeft || kind == Eq2Item::Kind::ToVarRight)
			target = items.below(nvars);
		else if (kind == Eq2Item::Kind::ToParam)
			target = items.below(nparams);
		e.rhs[x].insert({kind, std::move(w), target});
	}
	return e;
}

std::optional<Mismatch> check_eps_soundness(const EpsNda &e, std::size_t bound, bool mutant)
{
	auto expected = semantics_word(embed_eps_nda(e), bound);
	Nda eliminated = mutant ? eliminate_without_closure(e) : eliminate(e);
	auto actual = semantics_word(embed_nda(eliminated), bound);
	return compare_languages(e.states, expected, actual);
}

std::optional<Mismatch> check_double_dagger(const Eq2Morphism &e2, std::size_t bound, bool mutant)
{
	Solution expected = solve(codiagonal(e2), bound);
	Solution actual = mutant ? double_dagger_dropping_right(e2, bound) : double_dagger(e2, bound);
	for (std::size_t x = 0; x < expected.values.size(); ++x)
		if (expected.values[x] != actual.values.at(x))
			return Mismatch{e2.variables.name(x), show(expected.values[x], e2.parameters),
					show(actual.values[x], e2.parameters)};
	return std::nullopt;
}

std::optional<Mismatch> check_quotient_factorisation(const EpsNda &e, std::size_t bound,
						     const Independence &i, bool mutant)
{
	if (!(i.alphabet == e.alphabet))
		throw ValidationError(ValidationError::Kind::Mismatch, "alphabet",
				      "independence relation is over a different alphabet");
	WordAutomaton embedded = embed_eps_nda(e);
	auto after = quotient_semantics(embedded, bound, i);

	// Quotient first: normal-form the labels, solve, normal-form again.
	auto solved = semantics_word(quotient_labels(embedded, i), bound);
	std::vector<TraceSet> first;
	for (const auto &lang : solved) {
		if (mutant) {
			first.push_back(TraceSet{lang.bound(), lang.words()});
		} else {
			first.push_back(quotient(lang, i));
		}
	}
	if (auto m = compare_traces(e.states, after, first, "quotient-first"))
		return m;

	auto eliminated = quotient_semantics(embed_nda(eliminate(e)), bound, i);
	return compare_traces(e.states, after, eliminated, "eliminated");
}

LawReport check_eps_soundness(const GenConfig &cfg, bool mutant)
{
	return run_law<EpsNda>("eps-sound", cfg, gen_eps_nda,
			       [&](const EpsNda &e) { return check_eps_soundness(e, cfg.bound, mutant); });
}

LawReport check_double_dagger(const GenConfig &cfg, bool mutant)
{
	return run_law<Eq2Morphism>("double-dagger", cfg, gen_eq2, [&](const Eq2Morphism &e) {
		return check_double_dagger(e, cfg.bound, mutant);
	});
}

LawReport check_quotient_factorisation(const GenConfig &cfg, const Independence &i, bool mutant)
{
	validate(cfg);
	if (!(i.alphabet == generated_alphabet(cfg)))
		throw ValidationError(ValidationError::Kind::Mismatch, "alphabet",
				      "independence relation is over a different alphabet");
	validate_independence(i);
	return run_law<EpsNda>("quotient-fact", cfg, gen_eps_nda, [&](const EpsNda &e) {
		return check_quotient_factorisation(e, cfg.bound, i, mutant);
	});
}

} // namespace dagger
