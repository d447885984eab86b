#ifndef DAGGER_EPSILON_HPP
#define DAGGER_EPSILON_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <string_view>

#include "dagger/automata.hpp"

namespace dagger {

/// An observable step of some state reached after exactly `depth` ε-edges:
/// either a symbol move or acceptance (`move` empty).
struct DepthItem {
	struct Move {
		char symbol;
		StateId target;
		friend auto operator<=>(const Move &, const Move &) = default;
	};

	std::size_t depth;
	std::optional<Move> move;

	static DepthItem accept(std::size_t depth) { return {depth, std::nullopt}; }
	static DepthItem step(std::size_t depth, char symbol, StateId target)
	{
		return {depth, Move{symbol, target}};
	}

	bool is_accept() const noexcept { return !move.has_value(); }

	friend auto operator<=>(const DepthItem &, const DepthItem &) = default;
};

/// Least set containing `state` and closed under ε-edges.
std::set<StateId> eps_closure(const EpsNda &e, StateId state);
std::set<StateId> eps_closure(const EpsNda &e, std::string_view state);

/// All (n, item) with n <= cap such that an ε-path of exactly n edges
/// leads from `state` to a state offering `item`.
std::set<DepthItem> eps_items_with_depth(const EpsNda &e, StateId state, std::size_t cap);
std::set<DepthItem> eps_items_with_depth(const EpsNda &e, std::string_view state,
					 std::size_t cap);

/// ε-free automaton on the same states: x gets every symbol edge and the
/// acceptance of every state in its ε-closure.
Nda eliminate(const EpsNda &e);

} // namespace dagger

#endif // DAGGER_EPSILON_HPP
