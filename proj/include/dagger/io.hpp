#ifndef DAGGER_IO_HPP
#define DAGGER_IO_HPP

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "dagger/automata.hpp"
#include "dagger/solver.hpp"

// Line-based text formats. `#` starts a comment, blank lines are ignored,
// and `eps` is the empty word everywhere. Parse failures throw ParseError
// whose position() is the 1-based line number.

namespace dagger {

using AnyAutomaton = std::variant<Nda, EpsNda, WordAutomaton, LangAutomaton>;

/// `type: nda|eps-nda|word|lang` first, then `alphabet:` and `states:`
/// before any edge lines.
AnyAutomaton parse_automaton(std::string_view text);
AnyAutomaton load_automaton(const std::string &path);

std::string print_automaton(const Nda &n);
std::string print_automaton(const EpsNda &e);
std::string print_automaton(const WordAutomaton &w);
std::string print_automaton(const LangAutomaton &l);
std::string print_automaton(const AnyAutomaton &a);

/// Word-automaton view used for semantics: nda and eps-nda are embedded,
/// lang is expanded at `bound`.
std::vector<BoundedLanguage> semantics_of(const AnyAutomaton &a, std::size_t bound);
const NameSet &states_of(const AnyAutomaton &a);
const Alphabet &alphabet_of(const AnyAutomaton &a);

/// Equation file. Plain `var` items are the left copy; `two_copy` records
/// whether any `var2` item appeared.
struct EquationFile {
	Eq2Morphism system;
	bool two_copy = false;

	/// The single-copy system; only meaningful when !two_copy.
	EquationMorphism single() const { return codiagonal(system); }
};

EquationFile parse_equations(std::string_view text);
EquationFile load_equations(const std::string &path);

std::string print_equations(const EquationMorphism &e);
std::string print_equations(const Eq2Morphism &e);

/// `<var> out <word>` and `<var> param <word> <param>` lines.
std::string print_solution(const EquationMorphism &e, const Solution &s);

/// One `<symbol> <symbol>` pair per line.
std::vector<std::pair<char, char>> parse_independence(std::string_view text);
std::vector<std::pair<char, char>> load_independence(const std::string &path);

std::string read_file(const std::string &path);

} // namespace dagger

#endif // DAGGER_IO_HPP
