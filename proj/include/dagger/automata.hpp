#ifndef DAGGER_AUTOMATA_HPP
#define DAGGER_AUTOMATA_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dagger/core.hpp"

namespace dagger {

using StateId = std::size_t;

/// Invariant violation in an automaton, equation system or independence
/// relation. `subject` names the offending state, symbol or pair.
class ValidationError : public std::runtime_error {
public:
	enum class Kind { UnknownState, UnknownSymbol, DuplicateState, ReflexivePair, Mismatch };

	ValidationError(Kind kind, std::string subject, const std::string &what)
		: std::runtime_error(what), kind_(kind), subject_(std::move(subject)) {}

	Kind kind() const noexcept { return kind_; }
	const std::string &subject() const noexcept { return subject_; }

private:
	Kind kind_;
	std::string subject_;
};

/// Ordered set of names. Declaration order is the iteration order and the
/// order used for printing; ids are positions in that order.
class NameSet {
public:
	NameSet() = default;
	/// Throws ValidationError(DuplicateState) on a repeated name.
	explicit NameSet(std::vector<std::string> names);

	StateId add(std::string name);
	/// Throws ValidationError(UnknownState).
	StateId id(std::string_view name) const;
	bool contains(std::string_view name) const { return index_.count(std::string(name)) != 0; }
	const std::string &name(StateId id) const { return names_.at(id); }
	const std::vector<std::string> &names() const noexcept { return names_; }
	std::size_t size() const noexcept { return names_.size(); }
	bool empty() const noexcept { return names_.empty(); }

	friend bool operator==(const NameSet &a, const NameSet &b) { return a.names_ == b.names_; }

private:
	std::vector<std::string> names_;
	std::map<std::string, StateId, std::less<>> index_;
};

struct Transition {
	StateId source;
	char symbol;
	StateId target;
	friend auto operator<=>(const Transition &, const Transition &) = default;
};

struct EpsEdge {
	StateId source;
	StateId target;
	friend auto operator<=>(const EpsEdge &, const EpsEdge &) = default;
};

struct WordTransition {
	StateId source;
	Word label;
	StateId target;
	friend bool operator==(const WordTransition &, const WordTransition &) = default;
	friend std::strong_ordering operator<=>(const WordTransition &a, const WordTransition &b)
	{
		if (auto c = a.source <=> b.source; c != 0)
			return c;
		if (auto c = a.label <=> b.label; c != 0)
			return c;
		return a.target <=> b.target;
	}
};

struct LangTransition {
	StateId source;
	Regex label;
	StateId target;
	friend bool operator==(const LangTransition &, const LangTransition &) = default;
};

/// Nondeterministic automaton with symbol transitions and accepting states.
struct Nda {
	Alphabet alphabet;
	NameSet states;
	std::set<Transition> transitions;
	std::set<StateId> accepting;

	void add_transition(std::string_view source, char symbol, std::string_view target);
	void set_accepting(std::string_view state);

	friend bool operator==(const Nda &, const Nda &) = default;
};

/// Nda with additional internal (ε) edges. Self ε-edges are allowed.
struct EpsNda {
	Alphabet alphabet;
	NameSet states;
	std::set<Transition> transitions;
	std::set<StateId> accepting;
	std::set<EpsEdge> eps_edges;

	void add_transition(std::string_view source, char symbol, std::string_view target);
	void add_eps(std::string_view source, std::string_view target);
	void set_accepting(std::string_view state);

	/// The symbol part, dropping ε-edges.
	Nda forget_eps() const;
	static EpsNda from_nda(const Nda &n);

	friend bool operator==(const EpsNda &, const EpsNda &) = default;
};

/// Automaton whose transitions carry words and whose states carry finite
/// output-word sets: a map X -> P(A*×X + A*).
struct WordAutomaton {
	Alphabet alphabet;
	NameSet states;
	std::set<WordTransition> transitions;
	/// Indexed by StateId; always states.size() entries.
	std::vector<std::set<Word>> outputs;

	/// Adds a state with no outputs.
	StateId add_state(std::string name);
	void add_transition(std::string_view source, const Word &label, std::string_view target);
	void add_output(std::string_view state, const Word &w);

	friend bool operator==(const WordAutomaton &, const WordAutomaton &) = default;
};

/// Automaton whose transitions and outputs are regular expressions.
struct LangAutomaton {
	Alphabet alphabet;
	NameSet states;
	std::vector<LangTransition> transitions;
	std::vector<std::vector<Regex>> outputs;

	StateId add_state(std::string name);
	/// Structurally equal duplicates are dropped.
	void add_transition(std::string_view source, Regex label, std::string_view target);
	void add_output(std::string_view state, Regex r);

	friend bool operator==(const LangAutomaton &, const LangAutomaton &) = default;
};

/// Each throws ValidationError naming the first violated invariant.
void validate(const Nda &n);
void validate(const EpsNda &e);
void validate(const WordAutomaton &w);
void validate(const LangAutomaton &l);

/// Symbol edges become one-letter word edges; accepting states output {ε}.
WordAutomaton embed_nda(const Nda &n);

/// As embed_nda, plus every ε-edge becomes an ε-labelled word edge.
WordAutomaton embed_eps_nda(const EpsNda &e);

/// Views every word label as the singleton language it denotes.
LangAutomaton word_to_lang(const WordAutomaton &w);

} // namespace dagger

#endif // DAGGER_AUTOMATA_HPP
