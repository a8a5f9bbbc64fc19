#pragma once

#include "rtcalc/cli.hpp"

#include <doctest.h>

#include <ostream>

namespace rtcalc {

// doctest prints these on failure
inline std::ostream& operator<<(std::ostream& o, const Tree& t) { return o << t.str(); }
inline std::ostream& operator<<(std::ostream& o, const PlantedTree& t) { return o << t.str(); }
inline std::ostream& operator<<(std::ostream& o, const Forest& t) { return o << t.str(); }
inline std::ostream& operator<<(std::ostream& o, const Label& l) { return o << l.str(); }
inline std::ostream& operator<<(std::ostream& o, const TreeComb& x) { return o << render(x); }
inline std::ostream& operator<<(std::ostream& o, const PlantedComb& x) { return o << render(x); }
inline std::ostream& operator<<(std::ostream& o, const ForestComb& x) { return o << render(x); }
inline std::ostream& operator<<(std::ostream& o, const ForestTensor& x) { return o << render(x); }
inline std::ostream& operator<<(std::ostream& o, const PairComb& x) { return o << render(x, render_pair); }

} // namespace rtcalc

namespace testing {

using namespace rtcalc;

inline TreeComb trees(const std::string& s) { return parse_expr(s).trees; }
inline PlantedComb planted(const std::string& s) { return parse_expr(s).planted; }
inline ForestComb forests(const std::string& s) { return parse_expr(s).as_forests(); }

inline Tree tree(const std::string& s)
{
	auto x = trees(s);
	REQUIRE(x.size() == 1);
	return x.begin()->first;
}

inline PlantedTree plant(const std::string& s)
{
	auto x = planted(s);
	REQUIRE(x.size() == 1);
	return x.begin()->first;
}

inline Forest forest(const std::string& s)
{
	auto x = forests(s);
	REQUIRE(x.size() == 1);
	return x.begin()->first;
}

inline Label mi(std::vector<int> e) { return Label::mi(MultiIndex(std::move(e))); }
inline Label E(const std::string& n) { return Label::sym(n, 0); }
inline Label V(const std::string& n) { return Label::sym(n, 1); }

// Every forest of planted trees over the labels with at most n vertices.
inline std::vector<Forest> forests_upto(const std::vector<Label>& vs, const std::vector<Label>& es, int n)
{
	std::vector<PlantedTree> ps;
	for (int k = 1; k <= n; ++k)
		for (auto& t : trees_of_size(k, vs, es))
			for (auto& e : es)
				ps.push_back({e, t});
	std::vector<Forest> out{Forest::one()}, frontier{Forest::one()};
	while (!frontier.empty())
	{
		std::vector<Forest> next;
		for (auto& f : frontier)
			for (auto& p : ps)
				if ((f.trees.empty() || !(p < f.trees.back())) && f.vertex_count() + p.vertex_count() <= n)
				{
					next.push_back(f * Forest::of(p));
					out.push_back(next.back());
				}
		frontier = std::move(next);
	}
	return out;
}

} // namespace testing
