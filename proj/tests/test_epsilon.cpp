#include <doctest.h>

#include <algorithm>

#include "dagger/epsilon.hpp"
#include "dagger/io.hpp"
#include "dagger/laws.hpp"
#include "dagger/solver.hpp"
#include "oracles.hpp"

using namespace dagger;

namespace {

const std::string kData = DAGGER_DATA_DIR;

EpsNda load_eps(const char *name)
{
	return std::get<EpsNda>(load_automaton(kData + "/" + name));
}

} // namespace

TEST_CASE("eps chain semantics")
{
	EpsNda e = load_eps("eps_chain.aut");
	std::set<Word> expected{Word(), Word("a"), Word("aa"), Word("aaa")};
	for (const auto &lang : semantics_word(embed_eps_nda(e), 3))
		CHECK(lang.words() == expected);
}

TEST_CASE("eps closure")
{
	EpsNda e = load_eps("eps_chain.aut");
	CHECK(eps_closure(e, "x") == std::set<StateId>{0, 1, 2});
	CHECK(eps_closure(e, "y") == std::set<StateId>{1, 2});
	CHECK(eps_closure(e, "z") == std::set<StateId>{2});
	CHECK(eps_closure(load_eps("eps_loop.aut"), "x") == std::set<StateId>{0});
	CHECK_THROWS_AS(eps_closure(e, "w"), ValidationError);
}

TEST_CASE("depth items")
{
	EpsNda e = load_eps("eps_chain.aut");
	const StateId z = 2;
	CHECK(eps_items_with_depth(e, "x", 5) ==
	      std::set<DepthItem>{DepthItem::step(2, 'a', z), DepthItem::accept(2)});
	CHECK(eps_items_with_depth(e, "y", 5) ==
	      std::set<DepthItem>{DepthItem::step(1, 'a', z), DepthItem::accept(1)});
	CHECK(eps_items_with_depth(e, "z", 5) ==
	      std::set<DepthItem>{DepthItem::step(0, 'a', z), DepthItem::accept(0)});
	CHECK(eps_items_with_depth(e, "x", 1).empty());
}

TEST_CASE("depth items match path enumeration")
{
	GenConfig cfg;
	cfg.max_edges = 10;
	for (std::size_t t = 0; t < 300; ++t) {
		EpsNda e = gen_eps_nda(cfg, t);
		for (StateId s = 0; s < e.states.size(); ++s) {
			std::set<DepthItem> expected;
			for (std::size_t d = 0; d <= 4; ++d)
				for (StateId r : oracle::eps_path_ends(e, s, d)) {
					if (e.accepting.count(r))
						expected.insert(DepthItem::accept(d));
					for (const auto &tr : e.transitions)
						if (tr.source == r)
							expected.insert(DepthItem::step(d, tr.symbol, tr.target));
				}
			REQUIRE(eps_items_with_depth(e, s, 4) == expected);
		}
	}
}

TEST_CASE("elimination of the eps chain")
{
	Nda n = eliminate(load_eps("eps_chain.aut"));
	CHECK(n.accepting == std::set<StateId>{0, 1, 2});
	CHECK(n.transitions == std::set<Transition>{{0, 'a', 2}, {1, 'a', 2}, {2, 'a', 2}});
	CHECK(n.states.names() == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("eps self-loop has empty least semantics")
{
	EpsNda e = load_eps("eps_loop.aut");
	WordAutomaton w = embed_eps_nda(e);
	for (std::size_t n = 0; n <= 6; ++n)
		CHECK(semantics_word(w, n)[0].empty());

	// Iterating downward from the top element gets stuck at a larger fixpoint.
	EquationMorphism sys = to_equations(w);
	Solution greatest = iterate_to_fixpoint(sys, top(sys, 3), 3);
	CHECK(greatest.values[0].size() == 15);
	CHECK(phi_step(sys, greatest, 3) == greatest);

	Nda eliminated = eliminate(e);
	CHECK(eliminated.transitions.empty());
	CHECK(eliminated.accepting.empty());
}

TEST_CASE("elimination leaves an eps-free automaton unchanged")
{
	GenConfig cfg;
	for (std::size_t t = 0; t < 200; ++t) {
		Nda n = gen_eps_nda(cfg, t).forget_eps();
		CHECK(eliminate(EpsNda::from_nda(n)) == n);
	}
}

TEST_CASE("elimination is sound and matches the classical closure construction")
{
	GenConfig cfg;
	cfg.alphabet_size = 3;
	for (std::size_t t = 0; t < 500; ++t) {
		EpsNda e = gen_eps_nda(cfg, t);
		Nda n = eliminate(e);
		CHECK(n.states == e.states);
		auto before = semantics_word(embed_eps_nda(e), 4);
		auto after = semantics_word(embed_nda(n), 4);
		REQUIRE(before == after);
		for (StateId s = 0; s < e.states.size(); ++s)
			REQUIRE(after[s].words() == oracle::nfa_language(n, s, 4));
	}
}

TEST_CASE("eps-nda semantics is the classical language with eps moves")
{
	GenConfig cfg;
	cfg.alphabet_size = 3;
	cfg.max_edges = 10;
	for (std::size_t t = 0; t < 300; ++t) {
		EpsNda e = gen_eps_nda(cfg, t);
		auto sem = semantics_word(embed_eps_nda(e), 4);
		for (StateId s = 0; s < e.states.size(); ++s)
			REQUIRE(sem[s].words() == oracle::eps_nfa_language(e, s, 4));
	}
}

TEST_CASE("soundness at every bound up to 5")
{
	GenConfig cfg;
	cfg.trials = 500;
	for (std::size_t n = 1; n <= 5; ++n) {
		cfg.bound = n;
		CHECK(check_eps_soundness(cfg).passed());
	}
	for (std::size_t t = 0; t < 100; ++t)
		CHECK_FALSE(check_eps_soundness(gen_eps_nda(cfg, t), 0).has_value());
}

TEST_CASE("closure agrees with eps paths and grows with the edge set")
{
	GenConfig cfg;
	cfg.max_edges = 10;
	for (std::size_t t = 0; t < 300; ++t) {
		EpsNda e = gen_eps_nda(cfg, t);
		for (StateId s = 0; s < e.states.size(); ++s) {
			std::set<StateId> reach{s};
			for (std::size_t d = 1; d <= e.states.size(); ++d) {
				auto ends = oracle::eps_path_ends(e, s, d);
				reach.insert(ends.begin(), ends.end());
			}
			REQUIRE(eps_closure(e, s) == reach);

			EpsNda more = e;
			more.eps_edges.insert({t % e.states.size(), (t / 7) % e.states.size()});
			auto bigger = eps_closure(more, s);
			CHECK(std::includes(bigger.begin(), bigger.end(), reach.begin(), reach.end()));
		}
	}
}

TEST_CASE("elimination is idempotent and keeps depth-0 items")
{
	GenConfig cfg;
	cfg.alphabet_size = 3;
	for (std::size_t t = 0; t < 300; ++t) {
		EpsNda e = gen_eps_nda(cfg, t);
		Nda once = eliminate(e);
		CHECK(eliminate(EpsNda::from_nda(once)) == once);
		for (StateId s = 0; s < e.states.size(); ++s) {
			std::set<DepthItem> direct;
			if (e.accepting.count(s))
				direct.insert(DepthItem::accept(0));
			for (const auto &tr : e.transitions)
				if (tr.source == s)
					direct.insert(DepthItem::step(0, tr.symbol, tr.target));
			std::set<DepthItem> depth0;
			for (const auto &item : eps_items_with_depth(e, s, 3))
				if (item.depth == 0)
					depth0.insert(item);
			CHECK(depth0 == direct);
		}
	}
}
