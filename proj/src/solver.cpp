#include "dagger/solver.hpp"

#include <string>

namespace dagger {

namespace {

[[noreturn]] void mismatch(const std::string &what)
{
	throw ValidationError(ValidationError::Kind::Mismatch, what, "equation/solution mismatch: " + what);
}

template <typename ItemT>
void check_items(const Alphabet &alphabet, const NameSet &vars, const NameSet &params,
		 const std::vector<std::set<ItemT>> &rhs, bool var_target(typename ItemT::Kind),
		 bool param_target(typename ItemT::Kind))
{
	if (rhs.size() != vars.size())
		mismatch("right-hand sides do not cover every variable");
	for (const auto &items : rhs)
		for (const auto &item : items) {
			for (char c : item.word.letters())
				if (!alphabet.contains(c))
					throw ValidationError(ValidationError::Kind::UnknownSymbol,
							      std::string(1, c),
							      std::string("unknown symbol '") + c + "'");
			if (var_target(item.kind) && item.target >= vars.size())
				throw ValidationError(ValidationError::Kind::UnknownState,
						      "#" + std::to_string(item.target),
						      "undeclared variable id " + std::to_string(item.target));
			if (param_target(item.kind) && item.target >= params.size())
				throw ValidationError(ValidationError::Kind::UnknownState,
						      "#" + std::to_string(item.target),
						      "undeclared parameter id " + std::to_string(item.target));
		}
}

// Every word over `alphabet` of length <= bound, shortlex.
std::vector<Word> all_words(const Alphabet &alphabet, std::size_t bound)
{
	std::vector<Word> out{Word()};
	std::size_t layer_begin = 0;
	for (std::size_t len = 1; len <= bound; ++len) {
		std::size_t layer_end = out.size();
		for (std::size_t i = layer_begin; i < layer_end; ++i)
			for (char c : alphabet.symbols())
				out.emplace_back(out[i].letters() + c);
		layer_begin = layer_end;
	}
	return out;
}

} // namespace

StateId EquationMorphism::add_variable(std::string name)
{
	StateId id = variables.add(std::move(name));
	rhs.resize(variables.size());
	return id;
}

void EquationMorphism::add(std::string_view variable, Item item)
{
	rhs.resize(variables.size());
	rhs[variables.id(variable)].insert(std::move(item));
}

StateId Eq2Morphism::add_variable(std::string name)
{
	StateId id = variables.add(std::move(name));
	rhs.resize(variables.size());
	return id;
}

void Eq2Morphism::add(std::string_view variable, Eq2Item item)
{
	rhs.resize(variables.size());
	rhs[variables.id(variable)].insert(std::move(item));
}

Solution Solution::bottom(std::size_t variables, std::size_t bound)
{
	return Solution{bound, std::vector<std::set<SolutionItem>>(variables)};
}

void validate(const EquationMorphism &e)
{
	check_items(e.alphabet, e.variables, e.parameters, e.rhs,
		    +[](Item::Kind k) { return k == Item::Kind::ToVar; },
		    +[](Item::Kind k) { return k == Item::Kind::ToParam; });
}

void validate(const Eq2Morphism &e)
{
	check_items(e.alphabet, e.variables, e.parameters, e.rhs,
		    +[](Eq2Item::Kind k) {
			    return k == Eq2Item::Kind::ToVarLeft || k == Eq2Item::Kind::ToVarRight;
		    },
		    +[](Eq2Item::Kind k) { return k == Eq2Item::Kind::ToParam; });
}

Solution phi_step(const EquationMorphism &e, const Solution &s, std::size_t bound)
{
	if (s.bound != bound)
		mismatch("solution bound differs from requested bound");
	if (s.values.size() != e.variables.size() || e.rhs.size() != e.variables.size())
		mismatch("solution does not cover the variables");

	Solution next = Solution::bottom(e.variables.size(), bound);
	for (std::size_t x = 0; x < e.rhs.size(); ++x) {
		auto &out = next.values[x];
		for (const auto &item : e.rhs[x]) {
			switch (item.kind) {
			case Item::Kind::Output:
				if (item.word.size() <= bound)
					out.insert(SolutionItem::output(item.word));
				break;
			case Item::Kind::ToParam:
				if (item.target >= e.parameters.size())
					mismatch("parameter id out of range");
				if (item.word.size() <= bound)
					out.insert(SolutionItem::to_param(item.word, item.target));
				break;
			case Item::Kind::ToVar:
				if (item.target >= e.variables.size())
					mismatch("variable id out of range");
				for (const auto &sub : s.values[item.target]) {
					auto w = concat_bounded(item.word, sub.word, bound);
					if (!w)
						continue;
					out.insert(SolutionItem{sub.is_param, std::move(*w), sub.param});
				}
				break;
			}
		}
	}
	return next;
}

Solution iterate_to_fixpoint(const EquationMorphism &e, Solution start, std::size_t bound)
{
	Solution current = std::move(start);
	for (;;) {
		Solution next = phi_step(e, current, bound);
		if (next == current)
			return current;
		current = std::move(next);
	}
}

Solution solve(const EquationMorphism &e, std::size_t bound)
{
	return iterate_to_fixpoint(e, Solution::bottom(e.variables.size(), bound), bound);
}

Solution top(const EquationMorphism &e, std::size_t bound)
{
	std::set<SolutionItem> everything;
	for (const auto &w : all_words(e.alphabet, bound)) {
		everything.insert(SolutionItem::output(w));
		for (std::size_t y = 0; y < e.parameters.size(); ++y)
			everything.insert(SolutionItem::to_param(w, y));
	}
	return Solution{bound, std::vector<std::set<SolutionItem>>(e.variables.size(), everything)};
}

EquationMorphism to_equations(const WordAutomaton &w)
{
	EquationMorphism e{w.alphabet, w.states, {}, std::vector<std::set<Item>>(w.states.size())};
	for (const auto &t : w.transitions)
		e.rhs[t.source].insert(Item::to_var(t.label, t.target));
	for (StateId s = 0; s < w.outputs.size() && s < e.rhs.size(); ++s)
		for (const auto &o : w.outputs[s])
			e.rhs[s].insert(Item::output(o));
	return e;
}

std::vector<BoundedLanguage> semantics_word(const WordAutomaton &w, std::size_t bound)
{
	validate(w);
	Solution sol = solve(to_equations(w), bound);
	std::vector<BoundedLanguage> out;
	out.reserve(sol.values.size());
	for (const auto &items : sol.values) {
		BoundedLanguage lang(bound);
		for (const auto &item : items)
			lang.insert(item.word);
		out.push_back(std::move(lang));
	}
	return out;
}

std::vector<BoundedLanguage> semantics_lang(const LangAutomaton &l, std::size_t bound)
{
	validate(l);
	WordAutomaton w{l.alphabet, l.states, {}, std::vector<std::set<Word>>(l.states.size())};
	for (const auto &t : l.transitions)
		for (const auto &word : enum_regex(t.label, bound))
			w.transitions.insert({t.source, word, t.target});
	for (StateId s = 0; s < l.outputs.size(); ++s)
		for (const auto &r : l.outputs[s])
			for (const auto &word : enum_regex(r, bound))
				w.outputs[s].insert(word);
	return semantics_word(w, bound);
}

EquationMorphism codiagonal(const Eq2Morphism &e2)
{
	EquationMorphism e{e2.alphabet, e2.variables, e2.parameters,
			   std::vector<std::set<Item>>(e2.rhs.size())};
	for (std::size_t x = 0; x < e2.rhs.size(); ++x)
		for (const auto &item : e2.rhs[x]) {
			switch (item.kind) {
			case Eq2Item::Kind::Output:
				e.rhs[x].insert(Item::output(item.word));
				break;
			case Eq2Item::Kind::ToVarLeft:
			case Eq2Item::Kind::ToVarRight:
				e.rhs[x].insert(Item::to_var(item.word, item.target));
				break;
			case Eq2Item::Kind::ToParam:
				e.rhs[x].insert(Item::to_param(item.word, item.target));
				break;
			}
		}
	return e;
}

Solution double_dagger(const Eq2Morphism &e2, std::size_t bound)
{
	validate(e2);
	const std::size_t nvars = e2.variables.size();

	// Inner system: left copy stays recursive; the right copy and Y become
	// parameters, right copy first.
	EquationMorphism inner{e2.alphabet, e2.variables, {}, std::vector<std::set<Item>>(nvars)};
	for (const auto &name : e2.variables.names())
		inner.parameters.add("\x1f" + name);
	for (const auto &name : e2.parameters.names())
		inner.parameters.add(name);
	for (std::size_t x = 0; x < nvars; ++x)
		for (const auto &item : e2.rhs[x]) {
			switch (item.kind) {
			case Eq2Item::Kind::Output:
				inner.rhs[x].insert(Item::output(item.word));
				break;
			case Eq2Item::Kind::ToVarLeft:
				inner.rhs[x].insert(Item::to_var(item.word, item.target));
				break;
			case Eq2Item::Kind::ToVarRight:
				inner.rhs[x].insert(Item::to_param(item.word, item.target));
				break;
			case Eq2Item::Kind::ToParam:
				inner.rhs[x].insert(Item::to_param(item.word, nvars + item.target));
				break;
			}
		}
	Solution first = solve(inner, bound);

	EquationMorphism outer{e2.alphabet, e2.variables, e2.parameters,
			       std::vector<std::set<Item>>(nvars)};
	for (std::size_t x = 0; x < nvars; ++x)
		for (const auto &item : first.values[x]) {
			if (!item.is_param)
				outer.rhs[x].insert(Item::output(item.word));
			else if (item.param < nvars)
				outer.rhs[x].insert(Item::to_var(item.word, item.param));
			else
				outer.rhs[x].insert(Item::to_param(item.word, item.param - nvars));
		}
	return solve(outer, bound);
}

} // namespace dagger
