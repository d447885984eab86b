#ifndef DAGGER_MAZURKIEWICZ_HPP
#define DAGGER_MAZURKIEWICZ_HPP

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "dagger/automata.hpp"
#include "dagger/core.hpp"

namespace dagger {

/// Symmetric, irreflexive independence relation on an alphabet. Pairs are
/// stored with the smaller symbol first.
struct Independence {
	Alphabet alphabet;
	std::set<std::pair<char, char>> pairs;

	/// Normalises and validates; throws ValidationError.
	static Independence make(Alphabet alphabet, const std::vector<std::pair<char, char>> &pairs);

	bool independent(char a, char b) const;

	friend bool operator==(const Independence &, const Independence &) = default;
};

/// Throws ValidationError(ReflexivePair) or ValidationError(UnknownSymbol).
void validate_independence(const Independence &i);

/// Lexicographically least word of the trace class of `w`.
Word normal_form(const Word &w, const Independence &i);

bool trace_equiv(const Word &w, const Word &v, const Independence &i);

/// Normal forms of the words of a bounded language.
struct TraceSet {
	std::size_t bound = 0;
	std::set<Word> normal_forms;

	auto begin() const { return normal_forms.begin(); }
	auto end() const { return normal_forms.end(); }
	bool empty() const noexcept { return normal_forms.empty(); }
	std::size_t size() const noexcept { return normal_forms.size(); }

	friend bool operator==(const TraceSet &, const TraceSet &) = default;
};

TraceSet quotient(const BoundedLanguage &lang, const Independence &i);

/// Trace classes of the bounded semantics of every state.
std::vector<TraceSet> quotient_semantics(const WordAutomaton &w, std::size_t bound,
					 const Independence &i);

/// Copy of `w` with every transition label and output word normal-formed.
WordAutomaton quotient_labels(const WordAutomaton &w, const Independence &i);

} // namespace dagger

#endif // DAGGER_MAZURKIEWICZ_HPP
