#ifndef DAGGER_SOLVER_HPP
#define DAGGER_SOLVER_HPP

#include <compare>
#include <cstddef>
#include <set>
#include <vector>

#include "dagger/automata.hpp"
#include "dagger/core.hpp"

namespace dagger {

/// Right-hand-side item of an equation x ≈ {...}: an output word, a move
/// (w, x') to a recursion variable, or a move (w, y) to a parameter.
struct Item {
	enum class Kind { Output, ToVar, ToParam };

	Kind kind;
	Word word;
	/// Variable or parameter id; unused for Output.
	std::size_t target = 0;

	static Item output(Word w) { return {Kind::Output, std::move(w), 0}; }
	static Item to_var(Word w, std::size_t x) { return {Kind::ToVar, std::move(w), x}; }
	static Item to_param(Word w, std::size_t y) { return {Kind::ToParam, std::move(w), y}; }

	friend bool operator==(const Item &, const Item &) = default;
	friend std::strong_ordering operator<=>(const Item &a, const Item &b)
	{
		if (auto c = a.kind <=> b.kind; c != 0)
			return c;
		if (auto c = a.word <=> b.word; c != 0)
			return c;
		return a.target <=> b.target;
	}
};

/// A system of mutually recursive equations e: X -> T(X+Y) for the monad
/// TZ = P(A*×Z + A*).
struct EquationMorphism {
	Alphabet alphabet;
	NameSet variables;
	NameSet parameters;
	/// Indexed by variable id.
	std::vector<std::set<Item>> rhs;

	StateId add_variable(std::string name);
	void add(std::string_view variable, Item item);

	friend bool operator==(const EquationMorphism &, const EquationMorphism &) = default;
};

/// Element of the solution X -> TY: an output word or a pair (w, y).
struct SolutionItem {
	bool is_param;
	Word word;
	std::size_t param = 0;

	static SolutionItem output(Word w) { return {false, std::move(w), 0}; }
	static SolutionItem to_param(Word w, std::size_t y) { return {true, std::move(w), y}; }

	friend bool operator==(const SolutionItem &, const SolutionItem &) = default;
	friend std::strong_ordering operator<=>(const SolutionItem &a, const SolutionItem &b)
	{
		if (auto c = a.is_param <=> b.is_param; c != 0)
			return c;
		if (auto c = a.word <=> b.word; c != 0)
			return c;
		return a.param <=> b.param;
	}
};

/// Bounded solution: for each variable, the items of word length <= bound.
struct Solution {
	std::size_t bound = 0;
	std::vector<std::set<SolutionItem>> values;

	/// The all-empty solution.
	static Solution bottom(std::size_t variables, std::size_t bound);

	friend bool operator==(const Solution &, const Solution &) = default;
};

/// Two-copy system e: X -> T(X+X+Y) as used by the double dagger law.
struct Eq2Item {
	enum class Kind { Output, ToVarLeft, ToVarRight, ToParam };

	Kind kind;
	Word word;
	std::size_t target = 0;

	friend bool operator==(const Eq2Item &, const Eq2Item &) = default;
	friend std::strong_ordering operator<=>(const Eq2Item &a, const Eq2Item &b)
	{
		if (auto c = a.kind <=> b.kind; c != 0)
			return c;
		if (auto c = a.word <=> b.word; c != 0)
			return c;
		return a.target <=> b.target;
	}
};

struct Eq2Morphism {
	Alphabet alphabet;
	NameSet variables;
	NameSet parameters;
	std::vector<std::set<Eq2Item>> rhs;

	StateId add_variable(std::string name);
	void add(std::string_view variable, Eq2Item item);

	friend bool operator==(const Eq2Morphism &, const Eq2Morphism &) = default;
};

/// Throws ValidationError on foreign symbols or undeclared targets.
void validate(const EquationMorphism &e);
void validate(const Eq2Morphism &e);

/// One application of s ↦ μ ∘ T[s, η] ∘ e, dropping items longer than n.
/// Throws ValidationError(Mismatch) when `s` does not fit `e` or `bound`.
Solution phi_step(const EquationMorphism &e, const Solution &s, std::size_t bound);

/// Least solution of `e`, exact for all items of word length <= bound.
Solution solve(const EquationMorphism &e, std::size_t bound);

/// Iterates phi_step from `start` until the iterate stops changing. From
/// bottom this is the least fixpoint; from top() the greatest.
Solution iterate_to_fixpoint(const EquationMorphism &e, Solution start, std::size_t bound);

/// Every item of word length <= bound for every variable.
Solution top(const EquationMorphism &e, std::size_t bound);

/// Bounded language semantics of every state, by solving the automaton as
/// an equation system without parameters.
std::vector<BoundedLanguage> semantics_word(const WordAutomaton &w, std::size_t bound);

/// Expands every regex label to its words of length <= bound, then solves.
std::vector<BoundedLanguage> semantics_lang(const LangAutomaton &l, std::size_t bound);

/// Word automaton as an equation system with no parameters.
EquationMorphism to_equations(const WordAutomaton &w);

/// Merges the two variable copies.
EquationMorphism codiagonal(const Eq2Morphism &e2);

/// Solves the right copy as parameters first, then solves the result.
Solution double_dagger(const Eq2Morphism &e2, std::size_t bound);

} // namespace dagger

#endif // DAGGER_SOLVER_HPP
