#include "dagger/core.hpp"

#include <algorithm>
#include <cctype>

namespace dagger {

// Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::string_view symbols)
{
	if (symbols.empty())
		throw std::invalid_argument("alphabet must not be empty");
	for (char c : symbols) {
		if (!std::isalnum(static_cast<unsigned char>(c)) || c == '0')
			throw std::invalid_argument(std::string("invalid alphabet symbol '") + c + "'");
		if (symbols_.find(c) != std::string::npos)
			throw std::invalid_argument(std::string("duplicate alphabet symbol '") + c + "'");
		symbols_.push_back(c);
	}
	std::sort(symbols_.begin(), symbols_.end());
}

bool Alphabet::contains(char symbol) const noexcept
{
	return std::binary_search(symbols_.begin(), symbols_.end(), symbol);
}

// Word -------------------------------------------------------------------

bool Word::over(const Alphabet &alphabet) const noexcept
{
	return std::all_of(letters_.begin(), letters_.end(),
			   [&](char c) { return alphabet.contains(c); });
}

std::string Word::to_string() const
{
	return letters_.empty() ? std::string(kEpsToken) : letters_;
}

std::strong_ordering operator<=>(const Word &a, const Word &b)
{
	return shortlex_compare(a, b);
}

std::ostream &operator<<(std::ostream &os, const Word &w)
{
	return os << w.to_string();
}

std::strong_ordering shortlex_compare(const Word &lhs, const Word &rhs)
{
	if (auto c = lhs.size() <=> rhs.size(); c != 0)
		return c;
	// Alphabets are stored in ASCII order, so byte order is alphabet order.
	int c = lhs.letters().compare(rhs.letters());
	return c < 0 ? std::strong_ordering::less
		     : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::optional<Word> concat_bounded(const Word &lhs, const Word &rhs, std::size_t bound)
{
	if (lhs.size() + rhs.size() > bound)
		return std::nullopt;
	return Word(lhs.letters() + rhs.letters());
}

Word parse_word(std::string_view text, const Alphabet &alphabet)
{
	if (text == kEpsToken)
		return Word();
	if (text.empty())
		throw ParseError("empty word (use 'eps')", 0);
	for (std::size_t i = 0; i < text.size(); ++i)
		if (!alphabet.contains(text[i]))
			throw ParseError(std::string("unknown symbol '") + text[i] + "' in word", i);
	return Word(std::string(text));
}

// BoundedLanguage --------------------------------------------------------

BoundedLanguage::BoundedLanguage(std::size_t bound, std::set<Word> words)
	: bound_(bound), words_(std::move(words))
{
	if (!words_.empty() && words_.rbegin()->size() > bound_)
		throw std::invalid_argument("word " + words_.rbegin()->to_string() +
					    " exceeds language bound");
}

bool BoundedLanguage::insert(Word w)
{
	if (w.size() > bound_)
		return false;
	words_.insert(std::move(w));
	return true;
}

BoundedLanguage BoundedLanguage::restrict(std::size_t bound) const
{
	if (bound > bound_)
		throw std::invalid_argument("cannot restrict to a larger bound");
	BoundedLanguage out(bound);
	for (const auto &w : words_) {
		if (w.size() > bound)
			break;
		out.words_.insert(out.words_.end(), w);
	}
	return out;
}

std::ostream &operator<<(std::ostream &os, const BoundedLanguage &lang)
{
	os << '{';
	bool first = true;
	for (const auto &w : lang) {
		os << (first ? "" : ", ") << w;
		first = false;
	}
	return os << '}';
}

// Regex ------------------------------------------------------------------

struct Regex::Node {
	Kind kind;
	char symbol = 0;
	std::optional<Regex> left;
	std::optional<Regex> right;
};

Regex Regex::empty_lang()
{
	static const Regex r(std::make_shared<const Node>(Node{Kind::EmptyLang, 0, {}, {}}));
	return r;
}

Regex Regex::epsilon()
{
	static const Regex r(std::make_shared<const Node>(Node{Kind::EpsilonWord, 0, {}, {}}));
	return r;
}

Regex Regex::literal(char symbol)
{
	return Regex(std::make_shared<const Node>(Node{Kind::Literal, symbol, {}, {}}));
}

Regex Regex::alt(Regex left, Regex right)
{
	return Regex(std::make_shared<const Node>(
		Node{Kind::Union, 0, std::move(left), std::move(right)}));
}

Regex Regex::concat(Regex left, Regex right)
{
	return Regex(std::make_shared<const Node>(
		Node{Kind::Concat, 0, std::move(left), std::move(right)}));
}

Regex Regex::star(Regex inner)
{
	return Regex(std::make_shared<const Node>(Node{Kind::Star, 0, std::move(inner), {}}));
}

Regex Regex::from_word(const Word &w)
{
	if (w.empty())
		return epsilon();
	Regex r = literal(w[0]);
	for (std::size_t i = 1; i < w.size(); ++i)
		r = concat(std::move(r), literal(w[i]));
	return r;
}

Regex::Kind Regex::kind() const noexcept { return node_->kind; }

char Regex::symbol() const
{
	if (kind() != Kind::Literal)
		throw std::logic_error("Regex::symbol on a non-literal");
	return node_->symbol;
}

const Regex &Regex::left() const
{
	if (kind() != Kind::Union && kind() != Kind::Concat)
		throw std::logic_error("Regex::left on a node without children");
	return *node_->left;
}

const Regex &Regex::right() const
{
	if (kind() != Kind::Union && kind() != Kind::Concat)
		throw std::logic_error("Regex::right on a node without children");
	return *node_->right;
}

const Regex &Regex::inner() const
{
	if (kind() != Kind::Star)
		throw std::logic_error("Regex::inner on a non-star");
	return *node_->left;
}

std::size_t Regex::size() const
{
	switch (kind()) {
	case Kind::Union:
	case Kind::Concat:
		return 1 + left().size() + right().size();
	case Kind::Star:
		return 1 + inner().size();
	default:
		return 1;
	}
}

bool Regex::over(const Alphabet &alphabet) const
{
	switch (kind()) {
	case Kind::Literal:
		return alphabet.contains(symbol());
	case Kind::Union:
	case Kind::Concat:
		return left().over(alphabet) && right().over(alphabet);
	case Kind::Star:
		return inner().over(alphabet);
	default:
		return true;
	}
}

namespace {

// Precedence levels: 0 union, 1 concat, 2 star/atom.
int precedence(const Regex &r)
{
	switch (r.kind()) {
	case Regex::Kind::Union:
		return 0;
	case Regex::Kind::Concat:
		return 1;
	default:
		return 2;
	}
}

std::string render(const Regex &r, int context)
{
	std::string out;
	switch (r.kind()) {
	case Regex::Kind::EmptyLang:
		out = "0";
		break;
	case Regex::Kind::EpsilonWord:
		out = kEpsToken;
		break;
	case Regex::Kind::Literal:
		out = std::string(1, r.symbol());
		break;
	case Regex::Kind::Union:
		// Union and concat are parsed left-associatively.
		out = render(r.left(), 0) + "+" + render(r.right(), 1);
		break;
	case Regex::Kind::Concat: {
		std::string lhs = render(r.left(), 1);
		std::string rhs = render(r.right(), 2);
		// A space keeps letters from fusing into an `eps` token.
		std::string joined = lhs + rhs;
		std::size_t from = lhs.size() >= 2 ? lhs.size() - 2 : 0;
		auto hit = joined.find(kEpsToken, from);
		if (hit != std::string::npos && hit < lhs.size() && hit + kEpsToken.size() > lhs.size())
			joined = lhs + " " + rhs;
		out = std::move(joined);
		break;
	}
	case Regex::Kind::Star:
		out = render(r.inner(), 2) + "*";
		break;
	}
	if (precedence(r) < context)
		return "(" + out + ")";
	return out;
}

} // namespace

std::string Regex::to_string() const
{
	return render(*this, 0);
}

bool operator==(const Regex &a, const Regex &b)
{
	if (a.node_ == b.node_)
		return true;
	if (a.kind() != b.kind())
		return false;
	switch (a.kind()) {
	case Regex::Kind::Literal:
		return a.symbol() == b.symbol();
	case Regex::Kind::Union:
	case Regex::Kind::Concat:
		return a.left() == b.left() && a.right() == b.right();
	case Regex::Kind::Star:
		return a.inner() == b.inner();
	default:
		return true;
	}
}

std::ostream &operator<<(std::ostream &os, const Regex &r)
{
	return os << r.to_string();
}

// parse_regex ------------------------------------------------------------

namespace {

class RegexParser {
public:
	RegexParser(std::string_view text, const Alphabet &alphabet)
		: text_(text), alphabet_(alphabet) {}

	Regex parse()
	{
		skip_space();
		if (at_end())
			fail("empty regex");
		Regex r = parse_union();
		if (!at_end())
			fail(std::string("unexpected '") + text_[pos_] + "'");
		return r;
	}

private:
	Regex parse_union()
	{
		Regex r = parse_concat();
		while (peek() == '+') {
			advance();
			r = Regex::alt(std::move(r), parse_concat());
		}
		return r;
	}

	Regex parse_concat()
	{
		if (!starts_atom())
			fail(at_end() ? "unexpected end of regex" : std::string("unexpected '") + text_[pos_] + "'");
		Regex r = parse_star();
		while (starts_atom())
			r = Regex::concat(std::move(r), parse_star());
		return r;
	}

	Regex parse_star()
	{
		Regex r = parse_atom();
		while (peek() == '*') {
			advance();
			r = Regex::star(std::move(r));
		}
		return r;
	}

	Regex parse_atom()
	{
		if (text_.substr(pos_, kEpsToken.size()) == kEpsToken) {
			advance(kEpsToken.size());
			return Regex::epsilon();
		}
		char c = text_[pos_];
		if (c == '(') {
			advance();
			Regex r = parse_union();
			if (peek() != ')')
				fail("expected ')'");
			advance();
			return r;
		}
		if (c == '0') {
			advance();
			return Regex::empty_lang();
		}
		if (!alphabet_.contains(c))
			fail(std::string("unknown symbol '") + c + "'");
		advance();
		return Regex::literal(c);
	}

	bool starts_atom() const
	{
		if (at_end())
			return false;
		char c = text_[pos_];
		return c != '+' && c != '*' && c != ')';
	}

	char peek() const { return at_end() ? '\0' : text_[pos_]; }
	bool at_end() const { return pos_ >= text_.size(); }

	void advance(std::size_t n = 1)
	{
		pos_ += n;
		skip_space();
	}

	void skip_space()
	{
		while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}

	[[noreturn]] void fail(const std::string &msg) const
	{
		throw ParseError("regex parse error at position " + std::to_string(pos_) + ": " + msg,
				 pos_);
	}

	std::string_view text_;
	const Alphabet &alphabet_;
	std::size_t pos_ = 0;
};

std::set<Word> concat_sets(const std::set<Word> &lhs, const std::set<Word> &rhs,
			   std::size_t bound)
{
	std::set<Word> out;
	for (const auto &u : lhs)
		for (const auto &v : rhs) {
			// rhs is shortlex-ordered, so lengths only grow from here.
			auto uv = concat_bounded(u, v, bound);
			if (!uv)
				break;
			out.insert(std::move(*uv));
		}
	return out;
}

std::set<Word> enumerate(const Regex &r, std::size_t bound)
{
	switch (r.kind()) {
	case Regex::Kind::EmptyLang:
		return {};
	case Regex::Kind::EpsilonWord:
		return {Word()};
	case Regex::Kind::Literal:
		if (bound == 0)
			return {};
		return {Word(std::string(1, r.symbol()))};
	case Regex::Kind::Union: {
		auto out = enumerate(r.left(), bound);
		out.merge(enumerate(r.right(), bound));
		return out;
	}
	case Regex::Kind::Concat:
		return concat_sets(enumerate(r.left(), bound), enumerate(r.right(), bound), bound);
	case Regex::Kind::Star: {
		auto inner = enumerate(r.inner(), bound);
		std::set<Word> acc{Word()};
		for (;;) {
			auto next = concat_sets(acc, inner, bound);
			std::size_t before = acc.size();
			acc.merge(next);
			if (acc.size() == before)
				return acc;
		}
	}
	}
	return {};
}

} // namespace

Regex parse_regex(std::string_view text, const Alphabet &alphabet)
{
	return RegexParser(text, alphabet).parse();
}

BoundedLanguage enum_regex(const Regex &r, std::size_t bound)
{
	return BoundedLanguage(bound, enumerate(r, bound));
}

} // namespace dagger
