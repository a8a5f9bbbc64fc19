#include "support.hpp"

#include <algorithm>
#include <set>

using namespace testing;

TEST_CASE("canonical form sorts children as a multiset")
{
	Tree t1 = tree("(x)"), t2 = tree("(y)");
	Tree raw{V("r"), {Branch{E("b"), t2}, Branch{E("a"), t1}}};
	Tree c = canonicalize(raw);
	CHECK(is_canonical(c));
	CHECK(c.children[0].edge == E("a"));
	CHECK(c == tree("(r [b](y) [a](x))"));
	CHECK(canonicalize(Tree::vertex(V("v"))) == Tree::vertex(V("v")));
	CHECK(tree("(r [a](x) [a](x))").children.size() == 2);
	CHECK(tree("(b1 [a1](b2))").vertex_count() == 2);
}

TEST_CASE("graft_at")
{
	// vertex b2 grafted on vertex b1 through a
	CHECK(graft_at(tree("(b2)"), 0, tree("(b1)"), E("a")) == tree("(b1 [a](b2))"));

	Tree x = tree("(b1 [a1](b2))"), y = tree("(b3 [a2](b4) [a3](b5))");
	for (int v = 0; v < y.vertex_count(); ++v)
		CHECK(graft_at(x, v, y, E("a")).vertex_count() == 5);
	// at the root: the third summand of the free product
	CHECK(graft_at(x, 0, y, E("a")) == tree("(b3 [a2](b4) [a3](b5) [a](b1 [a1](b2)))"));
}

TEST_CASE("explode and implode are inverse")
{
	for (auto& t : trees_of_size(4, {V("u"), V("w")}, {E("a")}))
	{
		Flat f = explode(t);
		CHECK(f.size() == 4);
		CHECK(f.parent[0] == -1);
		for (int v = 1; v < f.size(); ++v)
			CHECK(f.parent[v] < v);
		CHECK(implode_tree(f) == t);
	}
	Forest F = forest("[a](u [a](w)) [b](u)");
	CHECK(implode_forest(explode(F)) == F);
	CHECK(explode(F).roots().size() == 2);
}

TEST_CASE("trees_of_size counts")
{
	// unlabelled rooted trees: 1, 1, 2, 4, 9
	std::vector<Label> one{V("v")}, e{E("a")};
	CHECK(trees_of_size(1, one, e).size() == 1);
	CHECK(trees_of_size(2, one, e).size() == 1);
	CHECK(trees_of_size(3, one, e).size() == 2);
	CHECK(trees_of_size(4, one, e).size() == 4);
	CHECK(trees_of_size(5, one, e).size() == 9);
	// two vertex labels, one edge label: 2, 4 (= 2*2), 2*2*2 ladders + 2*3 cherries = 14
	std::vector<Label> two{V("u"), V("w")};
	CHECK(trees_of_size(2, two, e).size() == 4);
	CHECK(trees_of_size(3, two, e).size() == 14);
}

TEST_CASE("split_root_edge")
{
	auto ladder = plant("[a](b1 [a1](b2 [a2](b3)))");
	auto [up, rest] = split_root_edge(ladder, 0);
	CHECK(up == plant("[a1](b2 [a2](b3))"));
	CHECK(rest == plant("[a](b1)"));

	auto cherry = plant("[a](b1 [a1](b2) [a2](b3))");
	auto s0 = split_root_edge(cherry, 0), s1 = split_root_edge(cherry, 1);
	CHECK_FALSE(s0 == s1);
	CHECK(plant("[a](b)").body.children.empty());
}

TEST_CASE("upper parts")
{
	CHECK(upper_parts(forest("[a](b)")).size() == 2);
	CHECK(upper_parts(forest("[a](b1 [a](b2))")).size() == 3);
	CHECK(upper_parts(forest("[a](b1 [a](b2) [a](b3))")).size() == 5);

	// brute force: subsets closed under going up
	for (auto& t : trees_of_size(4, {V("v")}, {E("a")}))
	{
		Flat f = explode(PlantedTree{E("a"), t});
		int n = f.size(), count = 0;
		for (int s = 0; s < (1 << n); ++s)
		{
			bool ok = true;
			for (int v = 0; v < n; ++v)
				if (f.parent[v] >= 0 && (s >> f.parent[v] & 1) && !(s >> v & 1))
					ok = false;
			count += ok;
		}
		CHECK(static_cast<int>(upper_parts(f).size()) == count);
	}
}

TEST_CASE("restriction to an upper part and its complement")
{
	Forest T = forest("[a6](b6 [a3](b3 [a1](b1) [a2](b2)) [a4](b4) [a5](b5))");
	Flat f = explode(T);
	VertexSet I(f.size()), J(f.size());
	std::set<Label> up{V("b1"), V("b2"), V("b3"), V("b4")};
	for (int v = 0; v < f.size(); ++v)
	{
		I[v] = up.count(f.vl[v]) > 0;
		J[v] = !I[v];
	}
	auto ups = upper_parts(f);
	CHECK(std::find(ups.begin(), ups.end(), I) != ups.end());
	CHECK(restrict_forest(f, I) == forest("[a3](b3 [a1](b1) [a2](b2)) [a4](b4)"));
	CHECK(restrict_forest(f, J) == forest("[a6](b6 [a5](b5))"));
	CHECK(restrict_forest(f, VertexSet(f.size(), true)) == T);
	CHECK(restrict_forest(f, VertexSet(f.size(), false)) == Forest::one());
}

TEST_CASE("grafting maps")
{
	Forest f = forest("[a1](b1) [a2](b2)"), g = forest("[a3](b3 [a4](b4))");
	CHECK(grafting_maps(f, g).size() == 9);
	CHECK(grafting_maps(Forest::one(), g).size() == 1);
	auto to_empty = grafting_maps(f, Forest::one());
	REQUIRE(to_empty.size() == 1);
	CHECK(graft_forest(f, to_empty[0], Forest::one()) == f);
	CHECK(graft_forest(f, GraftingMap{-1, -1}, g) == f * g);

	Forest edge = forest("[a](x)"), vtx = forest("[c](y)");
	CHECK(graft_forest(edge, GraftingMap{0}, vtx) == forest("[c](y [a](x))"));

	// both trees on the root of g
	int root = explode(g).roots()[0];
	Forest both = graft_forest(f, GraftingMap{root, root}, g);
	CHECK(both == forest("[a3](b3 [a4](b4) [a1](b1) [a2](b2))"));
}

TEST_CASE("isomorphisms of undecorated shapes")
{
	CHECK(isomorphisms(forest("[a](b [a](b [a](b)))"), forest("[c](d [c](d [c](d)))")).size() == 1);
	CHECK(isomorphisms(forest("[a](b [a](b) [a](b))"), forest("[a](b [a](b) [a](b))")).size() == 2);
	CHECK(isomorphisms(forest("[a](b [a](b [a](b)))"), forest("[a](b [a](b) [a](b))")).empty());
	// two identical trees in a forest can be swapped
	CHECK(isomorphisms(forest("[a](b) [a](b)"), forest("[c](d) [c](d)")).size() == 2);
}
