#include "dagger/mazurkiewicz.hpp"

#include <algorithm>
#include <string>

#include "dagger/solver.hpp"

namespace dagger {

Independence Independence::make(Alphabet alphabet, const std::vector<std::pair<char, char>> &pairs)
{
	Independence i{std::move(alphabet), {}};
	for (auto [a, b] : pairs)
		i.pairs.insert(std::minmax(a, b));
	validate_independence(i);
	return i;
}

bool Independence::independent(char a, char b) const
{
	return pairs.count(std::minmax(a, b)) != 0;
}

void validate_independence(const Independence &i)
{
	for (auto [a, b] : i.pairs) {
		for (char c : {a, b})
			if (!i.alphabet.contains(c))
				throw ValidationError(ValidationError::Kind::UnknownSymbol, std::string(1, c),
						      std::string("independence mentions unknown symbol '") +
							      c + "'");
		if (a == b)
			throw ValidationError(ValidationError::Kind::ReflexivePair, std::string(1, a),
					      std::string("independence must be irreflexive: (") + a +
						      "," + a + ")");
	}
}

Word normal_form(const Word &w, const Independence &i)
{
	if (i.pairs.empty())
		return w;
	std::string rest = w.letters();
	std::string out;
	out.reserve(rest.size());
	while (!rest.empty()) {
		// Candidates: letters whose first occurrence commutes with
		// everything before it. rest[0] always qualifies.
		std::size_t best = 0;
		for (std::size_t k = 1; k < rest.size(); ++k) {
			char a = rest[k];
			if (a >= rest[best] || rest.find(a) != k)
				continue;
			bool movable = true;
			for (std::size_t j = 0; j < k && movable; ++j)
				movable = i.independent(rest[j], a);
			if (movable)
				best = k;
		}
		out.push_back(rest[best]);
		rest.erase(best, 1);
	}
	return Word(std::move(out));
}

bool trace_equiv(const Word &w, const Word &v, const Independence &i)
{
	return normal_form(w, i) == normal_form(v, i);
}

TraceSet quotient(const BoundedLanguage &lang, const Independence &i)
{
	TraceSet t{lang.bound(), {}};
	for (const auto &w : lang)
		t.normal_forms.insert(normal_form(w, i));
	return t;
}

std::vector<TraceSet> quotient_semantics(const WordAutomaton &w, std::size_t bound,
					 const Independence &i)
{
	std::vector<TraceSet> out;
	for (const auto &lang : semantics_word(w, bound))
		out.push_back(quotient(lang, i));
	return out;
}

WordAutomaton quotient_labels(const WordAutomaton &w, const Independence &i)
{
	WordAutomaton q{w.alphabet, w.states, {}, std::vector<std::set<Word>>(w.outputs.size())};
	for (const auto &t : w.transitions)
		q.transitions.insert({t.source, normal_form(t.label, i), t.target});
	for (StateId s = 0; s < w.outputs.size(); ++s)
		for (const auto &o : w.outputs[s])
			q.outputs[s].insert(normal_form(o, i));
	return q;
}

} // namespace dagger
