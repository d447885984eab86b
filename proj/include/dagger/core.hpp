#ifndef DAGGER_CORE_HPP
#define DAGGER_CORE_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dagger {

/// Surface token for the empty word in every text format.
inline constexpr std::string_view kEpsToken = "eps";

/// Thrown for malformed regex, word or file input. `position` is a 0-based
/// character offset for regexes and a 1-based line number for files.
class ParseError : public std::runtime_error {
public:
	ParseError(const std::string &what, std::size_t position)
		: std::runtime_error(what), position_(position) {}

	std::size_t position() const noexcept { return position_; }

private:
	std::size_t position_;
};

/// Finite set of single-character symbols, kept in ASCII order.
///
/// Symbols are ASCII letters or digits other than '0', which is reserved for
/// the empty language in regex text.
class Alphabet {
public:
	Alphabet() = default;

	/// Throws std::invalid_argument on an empty list, duplicates or a
	/// character that cannot be a symbol.
	explicit Alphabet(std::string_view symbols);

	bool contains(char symbol) const noexcept;
	std::size_t size() const noexcept { return symbols_.size(); }
	bool empty() const noexcept { return symbols_.empty(); }
	const std::string &symbols() const noexcept { return symbols_; }

	friend bool operator==(const Alphabet &, const Alphabet &) = default;

private:
	std::string symbols_;
};

/// Element of A*. The empty sequence is ε.
class Word {
public:
	Word() = default;
	explicit Word(std::string letters) : letters_(std::move(letters)) {}

	static Word epsilon() { return Word(); }

	const std::string &letters() const noexcept { return letters_; }
	std::size_t size() const noexcept { return letters_.size(); }
	bool empty() const noexcept { return letters_.empty(); }
	char operator[](std::size_t i) const { return letters_[i]; }

	bool over(const Alphabet &alphabet) const noexcept;

	/// `eps` for ε, the letters otherwise.
	std::string to_string() const;

	friend bool operator==(const Word &, const Word &) = default;
	friend std::strong_ordering operator<=>(const Word &a, const Word &b);

private:
	std::string letters_;
};

std::ostream &operator<<(std::ostream &os, const Word &w);

/// Shortlex: shorter first, then lexicographic in alphabet order.
std::strong_ordering shortlex_compare(const Word &lhs, const Word &rhs);

/// w1·w2 if it has length at most `bound`, nothing otherwise.
std::optional<Word> concat_bounded(const Word &lhs, const Word &rhs, std::size_t bound);

/// Parses `eps` or a string of symbols from `alphabet`.
Word parse_word(std::string_view text, const Alphabet &alphabet);

/// Exact restriction of a language to words of length <= bound.
/// Iteration is in shortlex order.
class BoundedLanguage {
public:
	explicit BoundedLanguage(std::size_t bound = 0) : bound_(bound) {}

	/// Throws std::invalid_argument if any word is longer than `bound`.
	BoundedLanguage(std::size_t bound, std::set<Word> words);

	std::size_t bound() const noexcept { return bound_; }
	const std::set<Word> &words() const noexcept { return words_; }
	std::size_t size() const noexcept { return words_.size(); }
	bool empty() const noexcept { return words_.empty(); }
	bool contains(const Word &w) const { return words_.count(w) != 0; }

	/// Returns false (and ignores the word) when it exceeds the bound.
	bool insert(Word w);

	/// The words of length <= `bound`; `bound` must not exceed this bound.
	BoundedLanguage restrict(std::size_t bound) const;

	auto begin() const { return words_.begin(); }
	auto end() const { return words_.end(); }

	friend bool operator==(const BoundedLanguage &, const BoundedLanguage &) = default;

private:
	std::size_t bound_;
	std::set<Word> words_;
};

std::ostream &operator<<(std::ostream &os, const BoundedLanguage &lang);

/// Regular expression over a single-character alphabet. Immutable; copies
/// share structure.
class Regex {
public:
	enum class Kind { EmptyLang, EpsilonWord, Literal, Union, Concat, Star };

	static Regex empty_lang();
	static Regex epsilon();
	static Regex literal(char symbol);
	static Regex alt(Regex left, Regex right);
	static Regex concat(Regex left, Regex right);
	static Regex star(Regex inner);

	/// Concatenation of the letters of `w`; ε for the empty word.
	static Regex from_word(const Word &w);

	Kind kind() const noexcept;
	/// Only for Literal.
	char symbol() const;
	/// Only for Union and Concat.
	const Regex &left() const;
	const Regex &right() const;
	/// Only for Star.
	const Regex &inner() const;

	/// Number of nodes in the tree.
	std::size_t size() const;
	bool over(const Alphabet &alphabet) const;

	/// Text in the parse_regex grammar, with only the parentheses needed.
	std::string to_string() const;

	friend bool operator==(const Regex &a, const Regex &b);

private:
	struct Node;
	explicit Regex(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

	std::shared_ptr<const Node> node_;
};

std::ostream &operator<<(std::ostream &os, const Regex &r);

/// Grammar: `+` is union (lowest), juxtaposition is concatenation, postfix
/// `*` binds tightest; `eps` is ε and `0` the empty language. Whitespace is
/// ignored between tokens. Throws ParseError with the offending offset.
Regex parse_regex(std::string_view text, const Alphabet &alphabet);

/// L(r) restricted to words of length <= bound.
BoundedLanguage enum_regex(const Regex &r, std::size_t bound);

} // namespace dagger

#endif // DAGGER_CORE_HPP
