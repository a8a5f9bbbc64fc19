#pragma once

#include "rtcalc/decorations.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace rtcalc {

struct Branch;

// Unordered rooted tree with one label per vertex and per edge. Stored in
// canonical form: children sorted, recursively.
struct Tree
{
	Label root;
	std::vector<Branch> children;

	static Tree vertex(Label l) { return Tree{std::move(l), {}}; }
	int vertex_count() const;
	std::string str() const;
};

struct Branch
{
	Label edge;
	Tree sub;
};

std::strong_ordering operator<=>(const Tree& x, const Tree& y);
std::strong_ordering operator<=>(const Branch& x, const Branch& y);
inline bool operator==(const Tree& x, const Tree& y) { return (x <=> y) == 0; }
inline bool operator==(const Branch& x, const Branch& y) { return (x <=> y) == 0; }

// The plant edge sits below the body root; it is not a vertex of the tree.
struct PlantedTree
{
	Label edge;
	Tree body;

	int vertex_count() const { return body.vertex_count(); }
	std::string str() const;
	auto operator<=>(const PlantedTree&) const = default;
	bool operator==(const PlantedTree&) const = default;
};

// Commutative monomial of planted trees; the empty forest is the unit.
struct Forest
{
	std::vector<PlantedTree> trees; // sorted

	Forest() = default;
	explicit Forest(std::vector<PlantedTree> ts);
	static Forest one() { return Forest(); }
	static Forest of(PlantedTree p) { return Forest({std::move(p)}); }

	bool empty() const { return trees.empty(); }
	int vertex_count() const;
	Forest operator*(const Forest& o) const;
	std::string str() const;
	auto operator<=>(const Forest&) const = default;
	bool operator==(const Forest&) const = default;
};

Tree canonicalize(Tree t);
bool is_canonical(const Tree& t);

// ---- exploded form with stable vertex ids
//
// Vertex v has label vl[v] and parent parent[v] (-1 for a root). The edge
// whose target is v carries el[v]; for a root of a planted forest that is the
// plant edge, for the root of a bare tree it is unused. Ids follow preorder of
// the canonical form, children in canonical order.
struct Flat
{
	std::vector<Label> vl;
	std::vector<Label> el;
	std::vector<int> parent;

	int size() const { return static_cast<int>(vl.size()); }
	std::vector<int> roots() const;
	std::vector<std::vector<int>> child_lists() const;
	auto operator<=>(const Flat&) const = default;
	bool operator==(const Flat&) const = default;
};

Flat explode(const Tree& t);
Flat explode(const PlantedTree& p);
Flat explode(const Forest& f);
// Requires exactly one root.
Tree implode_tree(const Flat& f);
PlantedTree implode_planted(const Flat& f);
Forest implode_forest(const Flat& f);
// Appends b after a, shifting b's ids by a.size().
Flat concat(const Flat& a, const Flat& b);

// Vertex ids of a tree are the preorder positions in its canonical form.
using VertexId = int;

// x hung under vertex v of y through a new edge labelled a.
Tree graft_at(const Tree& x, VertexId v, const Tree& y, const Label& a);

// Every tree with exactly n vertices over the given labels, sorted.
std::vector<Tree> trees_of_size(int n, const std::vector<Label>& vertexLabels, const std::vector<Label>& edgeLabels);

// child is an index into p.body.children; returns (upper branch replanted on
// its edge, p with that branch removed).
std::pair<PlantedTree, PlantedTree> split_root_edge(const PlantedTree& p, int child);

// Vertex sets as membership masks over explode(f) ids.
using VertexSet = std::vector<bool>;
std::vector<VertexSet> upper_parts(const Forest& f);
std::vector<VertexSet> upper_parts(const Flat& f);
Forest restrict_forest(const Flat& f, const VertexSet& keep);
Forest restrict_forest(const Forest& f, const VertexSet& keep);

// map[i] is the vertex of explode(g) receiving tree i of f, or -1 for "stays apart".
using GraftingMap = std::vector<int>;
std::vector<GraftingMap> grafting_maps(const Forest& f, const Forest& g);
// Flat form of f grafted over g: ids of f's vertices come first, then g's.
Flat graft_forest_flat(const Forest& f, const GraftingMap& m, const Forest& g);
Forest graft_forest(const Forest& f, const GraftingMap& m, const Forest& g);

// Isomorphisms of the undecorated planted forests: iso[v] is the vertex of f2
// matched with vertex v of f1 (ids from explode). Edges follow their targets.
std::vector<std::vector<int>> isomorphisms(const Forest& f1, const Forest& f2);
std::vector<std::vector<int>> isomorphisms(const Flat& f1, const Flat& f2);

} // namespace rtcalc
