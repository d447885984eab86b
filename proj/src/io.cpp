#include "dagger/io.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <type_traits>

namespace dagger {

namespace {

struct Line {
	std::size_t number;
	std::string key;
	std::string value;
	std::vector<std::string> tokens;
};

std::string trim(std::string_view s)
{
	std::size_t b = 0, e = s.size();
	while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
		++b;
	while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
		--e;
	return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s)
{
	std::istringstream is{std::string(s)};
	std::vector<std::string> out;
	for (std::string tok; is >> tok;)
		out.push_back(tok);
	return out;
}

[[noreturn]] void fail(std::size_t line, const std::string &msg)
{
	throw ParseError("line " + std::to_string(line) + ": " + msg, line);
}

// Content lines with comments stripped; `keyed` splits on the first ':'.
std::vector<Line> content_lines(std::string_view text, bool keyed)
{
	std::vector<Line> out;
	std::istringstream is{std::string(text)};
	std::size_t number = 0;
	for (std::string raw; std::getline(is, raw);) {
		++number;
		if (auto hash = raw.find('#'); hash != std::string::npos)
			raw.erase(hash);
		std::string body = trim(raw);
		if (body.empty())
			continue;
		Line line{number, {}, {}, {}};
		if (keyed) {
			auto colon = body.find(':');
			if (colon == std::string::npos)
				fail(number, "expected '<key>: <value>'");
			line.key = trim(std::string_view(body).substr(0, colon));
			line.value = trim(std::string_view(body).substr(colon + 1));
		} else {
			line.value = body;
		}
		line.tokens = split(line.value);
		out.push_back(std::move(line));
	}
	return out;
}

// Runs `f`, turning validation and word errors into line-numbered parse errors.
template <typename F>
void at_line(std::size_t line, F &&f)
{
	try {
		f();
	} catch (const ParseError &e) {
		if (std::string_view(e.what()).rfind("line ", 0) == 0)
			throw;
		fail(line, e.what());
	} catch (const ValidationError &e) {
		fail(line, e.what());
	} catch (const std::invalid_argument &e) {
		fail(line, e.what());
	}
}

void expect_tokens(const Line &l, std::size_t n, const char *shape)
{
	if (l.tokens.size() != n)
		fail(l.number, std::string("expected '") + l.key + ": " + shape + "'");
}

char symbol_token(const Line &l, const std::string &tok)
{
	if (tok.size() != 1)
		fail(l.number, "symbol must be a single character, got '" + tok + "'");
	return tok[0];
}

std::string join(const std::vector<std::string> &names)
{
	std::string out;
	for (const auto &n : names) {
		out += ' ';
		out += n;
	}
	return out;
}

std::string alphabet_line(const Alphabet &a)
{
	std::string out = "alphabet:";
	for (char c : a.symbols()) {
		out += ' ';
		out += c;
	}
	return out + "\n";
}

struct Header {
	std::optional<Alphabet> alphabet;
	std::optional<NameSet> states;
};

void require_header(const Line &l, const Header &h)
{
	if (!h.alphabet)
		fail(l.number, "'" + l.key + "' before 'alphabet:'");
	if (!h.states)
		fail(l.number, "'" + l.key + "' before 'states:'");
}

// Handles `alphabet:` and `states:`; returns false for other keys.
bool header_line(const Line &l, Header &h)
{
	if (l.key == "alphabet") {
		if (h.alphabet)
			fail(l.number, "duplicate 'alphabet:'");
		std::string symbols;
		for (const auto &tok : l.tokens)
			symbols += std::string(1, symbol_token(l, tok));
		at_line(l.number, [&] { h.alphabet = Alphabet(symbols); });
		return true;
	}
	if (l.key == "states") {
		if (h.states)
			fail(l.number, "duplicate 'states:'");
		at_line(l.number, [&] { h.states = NameSet(l.tokens); });
		return true;
	}
	return false;
}

template <typename Aut>
Aut build_symbolic(const std::vector<Line> &lines)
{
	Header h;
	Aut a;
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const Line &l = lines[i];
		if (header_line(l, h)) {
			if (h.alphabet)
				a.alphabet = *h.alphabet;
			if (h.states)
				a.states = *h.states;
			continue;
		}
		if (l.key == "accept") {
			require_header(l, h);
			at_line(l.number, [&] {
				for (const auto &s : l.tokens)
					a.set_accepting(s);
			});
		} else if (l.key == "trans") {
			require_header(l, h);
			expect_tokens(l, 3, "<src> <symbol> <dst>");
			char c = symbol_token(l, l.tokens[1]);
			at_line(l.number, [&] { a.add_transition(l.tokens[0], c, l.tokens[2]); });
		} else if constexpr (std::is_same_v<Aut, EpsNda>) {
			if (l.key != "eps")
				fail(l.number, "unknown key '" + l.key + "'");
			require_header(l, h);
			expect_tokens(l, 2, "<src> <dst>");
			at_line(l.number, [&] { a.add_eps(l.tokens[0], l.tokens[1]); });
		} else {
			fail(l.number, "unknown key '" + l.key + "'");
		}
	}
	if (!h.alphabet)
		fail(lines.front().number, "missing 'alphabet:'");
	if (!h.states)
		fail(lines.front().number, "missing 'states:'");
	return a;
}

WordAutomaton build_word(const std::vector<Line> &lines)
{
	Header h;
	WordAutomaton w;
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const Line &l = lines[i];
		if (header_line(l, h)) {
			if (h.alphabet)
				w.alphabet = *h.alphabet;
			if (h.states) {
				w.states = *h.states;
				w.outputs.resize(w.states.size());
			}
			continue;
		}
		if (l.key == "wtrans") {
			require_header(l, h);
			expect_tokens(l, 3, "<src> <word|eps> <dst>");
			at_line(l.number, [&] {
				w.add_transition(l.tokens[0], parse_word(l.tokens[1], w.alphabet), l.tokens[2]);
			});
		} else if (l.key == "out") {
			require_header(l, h);
			expect_tokens(l, 2, "<state> <word|eps>");
			at_line(l.number,
				[&] { w.add_output(l.tokens[0], parse_word(l.tokens[1], w.alphabet)); });
		} else {
			fail(l.number, "unknown key '" + l.key + "'");
		}
	}
	if (!h.alphabet)
		fail(lines.front().number, "missing 'alphabet:'");
	if (!h.states)
		fail(lines.front().number, "missing 'states:'");
	return w;
}

LangAutomaton build_lang(const std::vector<Line> &lines)
{
	Header h;
	LangAutomaton la;
	for (std::size_t i = 1; i < lines.size(); ++i) {
		const Line &l = lines[i];
		if (header_line(l, h)) {
			if (h.alphabet)
				la.alphabet = *h.alphabet;
			if (h.states) {
				la.states = *h.states;
				la.outputs.resize(la.states.size());
			}
			continue;
		}
		if (l.key == "ltrans") {
			require_header(l, h);
			if (l.tokens.size() < 3)
				fail(l.number, "expected 'ltrans: <src> <regex> <dst>'");
			// The regex is everything between the first and last token.
			std::string_view v = l.value;
			auto first_end = v.find_first_of(" \t");
			auto last_begin = v.find_last_of(" \t");
			std::string regex = trim(v.substr(first_end, last_begin - first_end));
			at_line(l.number, [&] {
				la.add_transition(l.tokens.front(), parse_regex(regex, la.alphabet),
						  l.tokens.back());
			});
		} else if (l.key == "lout") {
			require_header(l, h);
			if (l.tokens.size() < 2)
				fail(l.number, "expected 'lout: <state> <regex>'");
			std::string_view v = l.value;
			std::string regex = trim(v.substr(v.find_first_of(" \t")));
			at_line(l.number,
				[&] { la.add_output(l.tokens.front(), parse_regex(regex, la.alphabet)); });
		} else {
			fail(l.number, "unknown key '" + l.key + "'");
		}
	}
	if (!h.alphabet)
		fail(lines.front().number, "missing 'alphabet:'");
	if (!h.states)
		fail(lines.front().number, "missing 'states:'");
	return la;
}

template <typename Aut>
std::string print_symbolic(const Aut &a, const char *type)
{
	std::ostringstream os;
	os << "type: " << type << "\n" << alphabet_line(a.alphabet);
	os << "states:" << join(a.states.names()) << "\n";
	os << "accept:";
	for (StateId s : a.accepting)
		os << ' ' << a.states.name(s);
	os << "\n";
	for (const auto &t : a.transitions)
		os << "trans: " << a.states.name(t.source) << ' ' << t.symbol << ' '
		   << a.states.name(t.target) << "\n";
	return os.str();
}

} // namespace

AnyAutomaton parse_automaton(std::string_view text)
{
	auto lines = content_lines(text, true);
	if (lines.empty())
		throw ParseError("line 1: empty automaton file", 1);
	const Line &head = lines.front();
	if (head.key != "type")
		fail(head.number, "first line must be 'type: nda|eps-nda|word|lang'");
	AnyAutomaton out;
	if (head.value == "nda")
		out = build_symbolic<Nda>(lines);
	else if (head.value == "eps-nda")
		out = build_symbolic<EpsNda>(lines);
	else if (head.value == "word")
		out = build_word(lines);
	else if (head.value == "lang")
		out = build_lang(lines);
	else
		fail(head.number, "unknown automaton type '" + head.value + "'");
	std::visit([](const auto &a) { validate(a); }, out);
	return out;
}

namespace {

template <typename F>
auto with_path(const std::string &path, F &&f)
{
	try {
		return f();
	} catch (const ParseError &e) {
		throw ParseError(path + ": " + e.what(), e.position());
	}
}

} // namespace

AnyAutomaton load_automaton(const std::string &path)
{
	return with_path(path, [&] { return parse_automaton(read_file(path)); });
}

std::string print_automaton(const Nda &n)
{
	return print_symbolic(n, "nda");
}

std::string print_automaton(const EpsNda &e)
{
	std::string out = print_symbolic(e, "eps-nda");
	for (const auto &edge : e.eps_edges)
		out += "eps: " + e.states.name(edge.source) + " " + e.states.name(edge.target) + "\n";
	return out;
}

std::string print_automaton(const WordAutomaton &w)
{
	std::ostringstream os;
	os << "type: word\n" << alphabet_line(w.alphabet);
	os << "states:" << join(w.states.names()) << "\n";
	for (const auto &t : w.transitions)
		os << "wtrans: " << w.states.name(t.source) << ' ' << t.label << ' '
		   << w.states.name(t.target) << "\n";
	for (StateId s = 0; s < w.outputs.size(); ++s)
		for (const auto &o : w.outputs[s])
			os << "out: " << w.states.name(s) << ' ' << o << "\n";
	return os.str();
}

std::string print_automaton(const LangAutomaton &l)
{
	std::ostringstream os;
	os << "type: lang\n" << alphabet_line(l.alphabet);
	os << "states:" << join(l.states.names()) << "\n";
	for (const auto &t : l.transitions)
		os << "ltrans: " << l.states.name(t.source) << ' ' << t.label << ' '
		   << l.states.name(t.target) << "\n";
	for (StateId s = 0; s < l.outputs.size(); ++s)
		for (const auto &o : l.outputs[s])
			os << "lout: " << l.states.name(s) << ' ' << o << "\n";
	return os.str();
}

std::string print_automaton(const AnyAutomaton &a)
{
	return std::visit([](const auto &x) { return print_automaton(x); }, a);
}

std::vector<BoundedLanguage> semantics_of(const AnyAutomaton &a, std::size_t bound)
{
	struct Visitor {
		std::size_t bound;
		auto operator()(const Nda &n) const { return semantics_word(embed_nda(n), bound); }
		auto operator()(const EpsNda &e) const { return semantics_word(embed_eps_nda(e), bound); }
		auto operator()(const WordAutomaton &w) const { return semantics_word(w, bound); }
		auto operator()(const LangAutomaton &l) const { return semantics_lang(l, bound); }
	};
	return std::visit(Visitor{bound}, a);
}

const NameSet &states_of(const AnyAutomaton &a)
{
	return std::visit([](const auto &x) -> const NameSet & { return x.states; }, a);
}

const Alphabet &alphabet_of(const AnyAutomaton &a)
{
	return std::visit([](const auto &x) -> const Alphabet & { return x.alphabet; }, a);
}

// equations --------------------------------------------------------------

EquationFile parse_equations(std::string_view text)
{
	auto lines = content_lines(text, true);
	EquationFile file;
	Eq2Morphism &e = file.system;
	bool have_alphabet = false, have_vars = false, have_params = false;

	for (const Line &l : lines) {
		if (l.key == "alphabet") {
			if (have_alphabet)
				fail(l.number, "duplicate 'alphabet:'");
			std::string symbols;
			for (const auto &tok : l.tokens)
				symbols += std::string(1, symbol_token(l, tok));
			at_line(l.number, [&] { e.alphabet = Alphabet(symbols); });
			have_alphabet = true;
		} else if (l.key == "vars") {
			if (have_vars)
				fail(l.number, "duplicate 'vars:'");
			at_line(l.number, [&] {
				for (const auto &v : l.tokens)
					e.add_variable(v);
			});
			have_vars = true;
		} else if (l.key == "params") {
			if (have_params)
				fail(l.number, "duplicate 'params:'");
			at_line(l.number, [&] { e.parameters = NameSet(l.tokens); });
			have_params = true;
		} else if (l.key == "eq") {
			if (!have_alphabet || !have_vars)
				fail(l.number, "'eq:' before 'alphabet:' and 'vars:'");
			const auto &t = l.tokens;
			if (t.size() < 3)
				fail(l.number, "expected 'eq: <var> <out|var|var2|param> ...'");
			const std::string &kind = t[1];
			at_line(l.number, [&] {
				if (kind == "out") {
					expect_tokens(l, 3, "<var> out <word|eps>");
					e.add(t[0], {Eq2Item::Kind::Output, parse_word(t[2], e.alphabet), 0});
				} else if (kind == "var") {
					expect_tokens(l, 4, "<var> var <word|eps> <var>");
					e.add(t[0], {Eq2Item::Kind::ToVarLeft, parse_word(t[2], e.alphabet),
						     e.variables.id(t[3])});
				} else if (kind == "var2") {
					expect_tokens(l, 5, "<var> var2 <left|right> <word|eps> <var>");
					Eq2Item::Kind k;
					if (t[2] == "left")
						k = Eq2Item::Kind::ToVarLeft;
					else if (t[2] == "right")
						k = Eq2Item::Kind::ToVarRight;
					else
						fail(l.number, "var2 copy must be 'left' or 'right'");
					e.add(t[0], {k, parse_word(t[3], e.alphabet), e.variables.id(t[4])});
					file.two_copy = true;
				} else if (kind == "param") {
					expect_tokens(l, 4, "<var> param <word|eps> <param>");
					e.add(t[0], {Eq2Item::Kind::ToParam, parse_word(t[2], e.alphabet),
						     e.parameters.id(t[3])});
				} else {
					fail(l.number, "unknown item kind '" + kind + "'");
				}
			});
		} else {
			fail(l.number, "unknown key '" + l.key + "'");
		}
	}
	if (!have_alphabet)
		throw ParseError("line 1: missing 'alphabet:'", 1);
	if (!have_vars)
		throw ParseError("line 1: missing 'vars:'", 1);
	e.rhs.resize(e.variables.size());
	validate(e);
	return file;
}

EquationFile load_equations(const std::string &path)
{
	return with_path(path, [&] { return parse_equations(read_file(path)); });
}

std::string print_equations(const EquationMorphism &e)
{
	std::ostringstream os;
	os << alphabet_line(e.alphabet);
	os << "vars:" << join(e.variables.names()) << "\n";
	os << "params:" << join(e.parameters.names()) << "\n";
	for (std::size_t x = 0; x < e.rhs.size(); ++x) {
		const auto &name = e.variables.name(x);
		for (const auto &item : e.rhs[x]) {
			switch (item.kind) {
			case Item::Kind::Output:
				os << "eq: " << name << " out " << item.word << "\n";
				break;
			case Item::Kind::ToVar:
				os << "eq: " << name << " var " << item.word << ' '
				   << e.variables.name(item.target) << "\n";
				break;
			case Item::Kind::ToParam:
				os << "eq: " << name << " param " << item.word << ' '
				   << e.parameters.name(item.target) << "\n";
				break;
			}
		}
	}
	return os.str();
}

std::string print_equations(const Eq2Morphism &e)
{
	std::ostringstream os;
	os << alphabet_line(e.alphabet);
	os << "vars:" << join(e.variables.names()) << "\n";
	os << "params:" << join(e.parameters.names()) << "\n";
	for (std::size_t x = 0; x < e.rhs.size(); ++x) {
		const auto &name = e.variables.name(x);
		for (const auto &item : e.rhs[x]) {
			switch (item.kind) {
			case Eq2Item::Kind::Output:
				os << "eq: " << name << " out " << item.word << "\n";
				break;
			case Eq2Item::Kind::ToVarLeft:
			case Eq2Item::Kind::ToVarRight:
				os << "eq: " << name << " var2 "
				   << (item.kind == Eq2Item::Kind::ToVarLeft ? "left " : "right ")
				   << item.word << ' ' << e.variables.name(item.target) << "\n";
				break;
			case Eq2Item::Kind::ToParam:
				os << "eq: " << name << " param " << item.word << ' '
				   << e.parameters.name(item.target) << "\n";
				break;
			}
		}
	}
	return os.str();
}

std::string print_solution(const EquationMorphism &e, const Solution &s)
{
	std::ostringstream os;
	for (std::size_t x = 0; x < s.values.size(); ++x)
		for (const auto &item : s.values[x]) {
			os << e.variables.name(x);
			if (item.is_param)
				os << " param " << item.word << ' ' << e.parameters.name(item.param) << "\n";
			else
				os << " out " << item.word << "\n";
		}
	return os.str();
}

// independence -----------------------------------------------------------

std::vector<std::pair<char, char>> parse_independence(std::string_view text)
{
	std::vector<std::pair<char, char>> out;
	for (const Line &l : content_lines(text, false)) {
		if (l.tokens.size() != 2)
			fail(l.number, "expected '<symbol> <symbol>'");
		out.emplace_back(symbol_token(l, l.tokens[0]), symbol_token(l, l.tokens[1]));
	}
	return out;
}

std::vector<std::pair<char, char>> load_independence(const std::string &path)
{
	return with_path(path, [&] { return parse_independence(read_file(path)); });
}

std::string read_file(const std::string &path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw std::runtime_error("cannot open '" + path + "'");
	std::ostringstream os;
	os << in.rdbuf();
	return os.str();
}

} // namespace dagger
