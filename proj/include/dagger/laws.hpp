#ifndef DAGGER_LAWS_HPP
#define DAGGER_LAWS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dagger/automata.hpp"
#include "dagger/mazurkiewicz.hpp"
#include "dagger/solver.hpp"

namespace dagger {

/// Parameters of the random instance generator and law checkers.
struct GenConfig {
	std::uint64_t seed = 1;
	std::size_t trials = 500;
	std::size_t max_states = 5;
	std::size_t max_edges = 8;
	/// Instances use the first `alphabet_size` letters of "abc".
	std::size_t alphabet_size = 2;
	std::size_t max_label_len = 1;
	std::size_t bound = 4;
};

/// Throws std::invalid_argument unless every field is positive (trials may
/// be zero), alphabet_size <= 3, max_label_len <= 2 and bound <= 6.
void validate(const GenConfig &cfg);

Alphabet generated_alphabet(const GenConfig &cfg);

/// Deterministic in (cfg.seed, trial); each field draws from its own keyed
/// stream, so adding fields leaves earlier draws unchanged.
EpsNda gen_eps_nda(const GenConfig &cfg, std::size_t trial);
Eq2Morphism gen_eq2(const GenConfig &cfg, std::size_t trial);

/// A disagreement between the two sides of a law at one state/variable.
struct Mismatch {
	std::string where;
	std::string expected;
	std::string actual;
};

struct LawFailure {
	std::size_t trial;
	/// The instance in its file format, re-checkable on its own.
	std::string instance;
	Mismatch mismatch;
};

struct LawReport {
	std::string law;
	std::size_t trials = 0;
	/// Sorted by trial.
	std::vector<LawFailure> failures;

	bool passed() const noexcept { return failures.empty(); }
};

// Single-instance checks. `mutant` swaps in a deliberately broken variant
// of the construction under test; it exists so the tests can show that the
// checks are able to fail.

std::optional<Mismatch> check_eps_soundness(const EpsNda &e, std::size_t bound,
					    bool mutant = false);
std::optional<Mismatch> check_double_dagger(const Eq2Morphism &e2, std::size_t bound,
					    bool mutant = false);
/// Quotient-first equals quotient-after, and elimination preserves the
/// quotient semantics. `i` must be over the automaton's alphabet.
std::optional<Mismatch> check_quotient_factorisation(const EpsNda &e, std::size_t bound,
						     const Independence &i, bool mutant = false);

LawReport check_eps_soundness(const GenConfig &cfg, bool mutant = false);
LawReport check_double_dagger(const GenConfig &cfg, bool mutant = false);
/// Throws ValidationError if `i` is not a valid relation over
/// generated_alphabet(cfg).
LawReport check_quotient_factorisation(const GenConfig &cfg, const Independence &i,
				       bool mutant = false);

} // namespace dagger

#endif // DAGGER_LAWS_HPP
