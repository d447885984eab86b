#include "dagger/epsilon.hpp"

#include <string>
#include <vector>

namespace dagger {

namespace {

std::vector<std::vector<StateId>> eps_successors(const EpsNda &e)
{
	std::vector<std::vector<StateId>> succ(e.states.size());
	for (const auto &edge : e.eps_edges)
		succ.at(edge.source).push_back(edge.target);
	return succ;
}

void check_id(const EpsNda &e, StateId state)
{
	if (state >= e.states.size())
		throw ValidationError(ValidationError::Kind::UnknownState, "#" + std::to_string(state),
				      "unknown state id " + std::to_string(state));
}

} // namespace

std::set<StateId> eps_closure(const EpsNda &e, StateId state)
{
	check_id(e, state);
	auto succ = eps_successors(e);
	std::set<StateId> seen{state};
	std::vector<StateId> stack{state};
	while (!stack.empty()) {
		StateId s = stack.back();
		stack.pop_back();
		for (StateId t : succ[s])
			if (seen.insert(t).second)
				stack.push_back(t);
	}
	return seen;
}

std::set<StateId> eps_closure(const EpsNda &e, std::string_view state)
{
	return eps_closure(e, e.states.id(state));
}

std::set<DepthItem> eps_items_with_depth(const EpsNda &e, StateId state, std::size_t cap)
{
	check_id(e, state);
	auto succ = eps_successors(e);
	std::set<DepthItem> items;
	// layer = states at the end of some ε-path of exactly `depth` edges
	std::set<StateId> layer{state};
	for (std::size_t depth = 0; depth <= cap && !layer.empty(); ++depth) {
		for (StateId s : layer) {
			if (e.accepting.count(s))
				items.insert(DepthItem::accept(depth));
			for (auto it = e.transitions.lower_bound({s, '\0', 0});
			     it != e.transitions.end() && it->source == s; ++it)
				items.insert(DepthItem::step(depth, it->symbol, it->target));
		}
		std::set<StateId> next;
		for (StateId s : layer)
			next.insert(succ[s].begin(), succ[s].end());
		layer = std::move(next);
	}
	return items;
}

std::set<DepthItem> eps_items_with_depth(const EpsNda &e, std::string_view state,
					 std::size_t cap)
{
	return eps_items_with_depth(e, e.states.id(state), cap);
}

Nda eliminate(const EpsNda &e)
{
	validate(e);
	Nda out{e.alphabet, e.states, {}, {}};
	for (StateId x = 0; x < e.states.size(); ++x) {
		for (StateId y : eps_closure(e, x)) {
			if (e.accepting.count(y))
				out.accepting.insert(x);
			for (auto it = e.transitions.lower_bound({y, '\0', 0});
			     it != e.transitions.end() && it->source == y; ++it)
				out.transitions.insert({x, it->symbol, it->target});
		}
	}
	return out;
}

} // namespace dagger
