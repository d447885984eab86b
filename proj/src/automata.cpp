#include "dagger/automata.hpp"

#include <algorithm>

namespace dagger {

NameSet::NameSet(std::vector<std::string> names)
{
	for (auto &n : names)
		add(std::move(n));
}

StateId NameSet::add(std::string name)
{
	if (index_.count(name))
		throw ValidationError(ValidationError::Kind::DuplicateState, name,
				      "duplicate state name '" + name + "'");
	StateId id = names_.size();
	index_.emplace(name, id);
	names_.push_back(std::move(name));
	return id;
}

StateId NameSet::id(std::string_view name) const
{
	auto it = index_.find(name);
	if (it == index_.end())
		throw ValidationError(ValidationError::Kind::UnknownState, std::string(name),
				      "unknown state '" + std::string(name) + "'");
	return it->second;
}

namespace {

void check_symbol(const Alphabet &alphabet, char c)
{
	if (!alphabet.contains(c))
		throw ValidationError(ValidationError::Kind::UnknownSymbol, std::string(1, c),
				      std::string("unknown symbol '") + c + "'");
}

void check_state(const NameSet &states, StateId id)
{
	if (id >= states.size())
		throw ValidationError(ValidationError::Kind::UnknownState, "#" + std::to_string(id),
				      "unknown state id " + std::to_string(id));
}

void check_word(const Alphabet &alphabet, const Word &w)
{
	for (char c : w.letters())
		check_symbol(alphabet, c);
}

void check_regex(const Alphabet &alphabet, const Regex &r)
{
	switch (r.kind()) {
	case Regex::Kind::Literal:
		check_symbol(alphabet, r.symbol());
		break;
	case Regex::Kind::Union:
	case Regex::Kind::Concat:
		check_regex(alphabet, r.left());
		check_regex(alphabet, r.right());
		break;
	case Regex::Kind::Star:
		check_regex(alphabet, r.inner());
		break;
	default:
		break;
	}
}

void check_symbol_part(const Alphabet &alphabet, const NameSet &states,
		       const std::set<Transition> &transitions, const std::set<StateId> &accepting)
{
	for (const auto &t : transitions) {
		check_state(states, t.source);
		check_symbol(alphabet, t.symbol);
		check_state(states, t.target);
	}
	for (StateId s : accepting)
		check_state(states, s);
}

} // namespace

// Nda / EpsNda -----------------------------------------------------------

void Nda::add_transition(std::string_view source, char symbol, std::string_view target)
{
	check_symbol(alphabet, symbol);
	transitions.insert({states.id(source), symbol, states.id(target)});
}

void Nda::set_accepting(std::string_view state)
{
	accepting.insert(states.id(state));
}

void EpsNda::add_transition(std::string_view source, char symbol, std::string_view target)
{
	check_symbol(alphabet, symbol);
	transitions.insert({states.id(source), symbol, states.id(target)});
}

void EpsNda::add_eps(std::string_view source, std::string_view target)
{
	eps_edges.insert({states.id(source), states.id(target)});
}

void EpsNda::set_accepting(std::string_view state)
{
	accepting.insert(states.id(state));
}

Nda EpsNda::forget_eps() const
{
	return Nda{alphabet, states, transitions, accepting};
}

EpsNda EpsNda::from_nda(const Nda &n)
{
	return EpsNda{n.alphabet, n.states, n.transitions, n.accepting, {}};
}

// WordAutomaton / LangAutomaton -----------------------------------------

StateId WordAutomaton::add_state(std::string name)
{
	StateId id = states.add(std::move(name));
	outputs.resize(states.size());
	return id;
}

void WordAutomaton::add_transition(std::string_view source, const Word &label,
				   std::string_view target)
{
	check_word(alphabet, label);
	transitions.insert({states.id(source), label, states.id(target)});
}

void WordAutomaton::add_output(std::string_view state, const Word &w)
{
	check_word(alphabet, w);
	outputs.resize(states.size());
	outputs[states.id(state)].insert(w);
}

StateId LangAutomaton::add_state(std::string name)
{
	StateId id = states.add(std::move(name));
	outputs.resize(states.size());
	return id;
}

void LangAutomaton::add_transition(std::string_view source, Regex label, std::string_view target)
{
	check_regex(alphabet, label);
	LangTransition t{states.id(source), std::move(label), states.id(target)};
	if (std::find(transitions.begin(), transitions.end(), t) == transitions.end())
		transitions.push_back(std::move(t));
}

void LangAutomaton::add_output(std::string_view state, Regex r)
{
	check_regex(alphabet, r);
	outputs.resize(states.size());
	auto &outs = outputs[states.id(state)];
	if (std::find(outs.begin(), outs.end(), r) == outs.end())
		outs.push_back(std::move(r));
}

// validate ---------------------------------------------------------------

void validate(const Nda &n)
{
	check_symbol_part(n.alphabet, n.states, n.transitions, n.accepting);
}

void validate(const EpsNda &e)
{
	check_symbol_part(e.alphabet, e.states, e.transitions, e.accepting);
	for (const auto &edge : e.eps_edges) {
		check_state(e.states, edge.source);
		check_state(e.states, edge.target);
	}
}

void validate(const WordAutomaton &w)
{
	for (const auto &t : w.transitions) {
		check_state(w.states, t.source);
		check_word(w.alphabet, t.label);
		check_state(w.states, t.target);
	}
	if (w.outputs.size() != w.states.size())
		throw ValidationError(ValidationError::Kind::Mismatch, "outputs",
				      "output map does not cover every state");
	for (const auto &outs : w.outputs)
		for (const auto &o : outs)
			check_word(w.alphabet, o);
}

void validate(const LangAutomaton &l)
{
	for (const auto &t : l.transitions) {
		check_state(l.states, t.source);
		check_regex(l.alphabet, t.label);
		check_state(l.states, t.target);
	}
	if (l.outputs.size() != l.states.size())
		throw ValidationError(ValidationError::Kind::Mismatch, "outputs",
				      "output map does not cover every state");
	for (const auto &outs : l.outputs)
		for (const auto &o : outs)
			check_regex(l.alphabet, o);
}

// embeddings -------------------------------------------------------------

WordAutomaton embed_nda(const Nda &n)
{
	WordAutomaton w{n.alphabet, n.states, {}, std::vector<std::set<Word>>(n.states.size())};
	for (const auto &t : n.transitions)
		w.transitions.insert({t.source, Word(std::string(1, t.symbol)), t.target});
	for (StateId s : n.accepting)
		w.outputs[s].insert(Word());
	return w;
}

WordAutomaton embed_eps_nda(const EpsNda &e)
{
	WordAutomaton w = embed_nda(e.forget_eps());
	for (const auto &edge : e.eps_edges)
		w.transitions.insert({edge.source, Word(), edge.target});
	return w;
}

LangAutomaton word_to_lang(const WordAutomaton &w)
{
	LangAutomaton l{w.alphabet, w.states, {}, std::vector<std::vector<Regex>>(w.states.size())};
	for (const auto &t : w.transitions)
		l.transitions.push_back({t.source, Regex::from_word(t.label), t.target});
	for (StateId s = 0; s < w.outputs.size(); ++s)
		for (const auto &o : w.outputs[s])
			l.outputs[s].push_back(Regex::from_word(o));
	return l;
}

} // namespace dagger
