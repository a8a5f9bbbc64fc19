#include "rtcalc/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace rtcalc {

std::strong_ordering operator<=>(const Tree& x, const Tree& y)
{
	if (auto c = x.root <=> y.root; c != 0)
		return c;
	return std::lexicographical_compare_three_way(x.children.begin(), x.children.end(), y.children.begin(),
	                                              y.children.end());
}

std::strong_ordering operator<=>(const Branch& x, const Branch& y)
{
	if (auto c = x.edge <=> y.edge; c != 0)
		return c;
	return x.sub <=> y.sub;
}

int Tree::vertex_count() const
{
	int n = 1;
	for (auto& b : children)
		n += b.sub.vertex_count();
	return n;
}

std::string Tree::str() const
{
	std::string s = "(" + root.str();
	for (auto& b : children)
		s += " [" + b.edge.str() + "]" + b.sub.str();
	return s + ")";
}

std::string PlantedTree::str() const { return "[" + edge.str() + "]" + body.str(); }

Forest::Forest(std::vector<PlantedTree> ts) : trees(std::move(ts)) { std::sort(trees.begin(), trees.end()); }

int Forest::vertex_count() const
{
	int n = 0;
	for (auto& p : trees)
		n += p.vertex_count();
	return n;
}

Forest Forest::operator*(const Forest& o) const
{
	std::vector<PlantedTree> all(trees);
	all.insert(all.end(), o.trees.begin(), o.trees.end());
	return Forest(std::move(all));
}

std::string Forest::str() const
{
	if (trees.empty())
		return "1";
	std::string s;
	for (std::size_t i = 0; i < trees.size(); ++i)
		s += (i ? " " : "") + trees[i].str();
	return s;
}

Tree canonicalize(Tree t)
{
	for (auto& b : t.children)
		b.sub = canonicalize(std::move(b.sub));
	std::sort(t.children.begin(), t.children.end());
	return t;
}

bool is_canonical(const Tree& t)
{
	if (!std::is_sorted(t.children.begin(), t.children.end()))
		return false;
	return std::all_of(t.children.begin(), t.children.end(), [](auto& b) { return is_canonical(b.sub); });
}

// ---- flat form

std::vector<int> Flat::roots() const
{
	std::vector<int> r;
	for (int v = 0; v < size(); ++v)
		if (parent[v] < 0)
			r.push_back(v);
	return r;
}

std::vector<std::vector<int>> Flat::child_lists() const
{
	std::vector<std::vector<int>> ch(size());
	for (int v = 0; v < size(); ++v)
		if (parent[v] >= 0)
			ch[parent[v]].push_back(v);
	return ch;
}

static void explode_into(const Tree& t, const Label& edge, int par, Flat& out)
{
	int id = out.size();
	out.vl.push_back(t.root);
	out.el.push_back(edge);
	out.parent.push_back(par);
	for (auto& b : t.children)
		explode_into(b.sub, b.edge, id, out);
}

Flat explode(const Tree& t)
{
	Flat f;
	explode_into(t, Label::star(), -1, f);
	return f;
}

Flat explode(const PlantedTree& p)
{
	Flat f;
	explode_into(p.body, p.edge, -1, f);
	return f;
}

Flat explode(const Forest& fo)
{
	Flat f;
	for (auto& p : fo.trees)
		explode_into(p.body, p.edge, -1, f);
	return f;
}

static Tree build(const Flat& f, const std::vector<std::vector<int>>& ch, int v)
{
	Tree t{f.vl[v], {}};
	for (int c : ch[v])
		t.children.push_back(Branch{f.el[c], build(f, ch, c)});
	std::sort(t.children.begin(), t.children.end());
	return t;
}

Tree implode_tree(const Flat& f)
{
	auto r = f.roots();
	if (r.size() != 1)
		throw std::logic_error("implode_tree: expected one root, got " + std::to_string(r.size()));
	return build(f, f.child_lists(), r[0]);
}

PlantedTree implode_planted(const Flat& f)
{
	auto r = f.roots();
	if (r.size() != 1)
		throw std::logic_error("implode_planted: expected one root, got " + std::to_string(r.size()));
	return PlantedTree{f.el[r[0]], build(f, f.child_lists(), r[0])};
}

Forest implode_forest(const Flat& f)
{
	auto ch = f.child_lists();
	std::vector<PlantedTree> ts;
	for (int r : f.roots())
		ts.push_back(PlantedTree{f.el[r], build(f, ch, r)});
	return Forest(std::move(ts));
}

Flat concat(const Flat& a, const Flat& b)
{
	Flat out = a;
	int off = a.size();
	for (int v = 0; v < b.size(); ++v)
	{
		out.vl.push_back(b.vl[v]);
		out.el.push_back(b.el[v]);
		out.parent.push_back(b.parent[v] < 0 ? -1 : b.parent[v] + off);
	}
	return out;
}

// ---- structural operations

Tree graft_at(const Tree& x, VertexId v, const Tree& y, const Label& a)
{
	Flat fy = explode(canonicalize(y));
	if (v < 0 || v >= fy.size())
		throw std::out_of_range("graft_at: vertex " + std::to_string(v) + " not in a tree with " +
		                        std::to_string(fy.size()) + " vertices");
	Flat fx = explode(canonicalize(x));
	Flat all = concat(fy, fx);
	all.parent[fy.size()] = v;
	all.el[fy.size()] = a;
	return implode_tree(all);
}

std::pair<PlantedTree, PlantedTree> split_root_edge(const PlantedTree& p, int child)
{
	if (child < 0 || child >= static_cast<int>(p.body.children.size()))
		throw std::out_of_range("split_root_edge: the body root has no branch " + std::to_string(child));
	const Branch& b = p.body.children[child];
	PlantedTree upper{b.edge, b.sub};
	PlantedTree lower = p;
	lower.body.children.erase(lower.body.children.begin() + child);
	return {upper, lower};
}

std::vector<VertexSet> upper_parts(const Flat& f)
{
	auto ch = f.child_lists();
	// For a subtree rooted at v: either all of it is in, or v is out and each
	// child subtree independently picks an upper part.
	std::function<std::vector<std::vector<int>>(int)> rec = [&](int v) {
		std::vector<std::vector<int>> out;
		std::vector<int> whole;
		std::function<void(int)> collect = [&](int u) {
			whole.push_back(u);
			for (int c : ch[u])
				collect(c);
		};
		collect(v);
		out.push_back(whole);
		std::vector<std::vector<int>> acc{{}};
		for (int c : ch[v])
		{
			auto sub = rec(c);
			std::vector<std::vector<int>> next;
			for (auto& a : acc)
				for (auto& s : sub)
				{
					auto m = a;
					m.insert(m.end(), s.begin(), s.end());
					next.push_back(std::move(m));
				}
			acc = std::move(next);
		}
		out.insert(out.end(), acc.begin(), acc.end());
		return out;
	};
	std::vector<std::vector<int>> acc{{}};
	for (int r : f.roots())
	{
		auto sub = rec(r);
		std::vector<std::vector<int>> next;
		for (auto& a : acc)
			for (auto& s : sub)
			{
				auto m = a;
				m.insert(m.end(), s.begin(), s.end());
				next.push_back(std::move(m));
			}
		acc = std::move(next);
	}
	std::vector<VertexSet> out;
	for (auto& members : acc)
	{
		VertexSet s(f.size(), false);
		for (int v : members)
			s[v] = true;
		out.push_back(std::move(s));
	}
	return out;
}

std::vector<VertexSet> upper_parts(const Forest& f) { return upper_parts(explode(f)); }

Forest restrict_forest(const Flat& f, const VertexSet& keep)
{
	if (static_cast<int>(keep.size()) != f.size())
		throw std::invalid_argument("restrict: vertex set has the wrong size");
	std::vector<int> newId(f.size(), -1);
	Flat out;
	for (int v = 0; v < f.size(); ++v)
		if (keep[v])
		{
			newId[v] = out.size();
			out.vl.push_back(f.vl[v]);
			out.el.push_back(f.el[v]);
			out.parent.push_back(-1);
		}
	for (int v = 0; v < f.size(); ++v)
		if (keep[v] && f.parent[v] >= 0 && keep[f.parent[v]])
			out.parent[newId[v]] = newId[f.parent[v]];
	return implode_forest(out);
}

Forest restrict_forest(const Forest& f, const VertexSet& keep) { return restrict_forest(explode(f), keep); }

std::vector<GraftingMap> grafting_maps(const Forest& f, const Forest& g)
{
	int k = static_cast<int>(f.trees.size());
	int n = g.vertex_count();
	std::vector<GraftingMap> out;
	GraftingMap cur(k, -1);
	for (;;)
	{
		out.push_back(cur);
		int i = k - 1;
		while (i >= 0 && cur[i] == n - 1)
			cur[i--] = -1;
		if (i < 0)
			return out;
		++cur[i];
	}
}

Flat graft_forest_flat(const Forest& f, const GraftingMap& m, const Forest& g)
{
	if (m.size() != f.trees.size())
		throw std::invalid_argument("grafting map has the wrong number of entries");
	Flat ff = explode(f);
	Flat fg = explode(g);
	auto roots = ff.roots();
	Flat all = concat(ff, fg);
	for (std::size_t i = 0; i < m.size(); ++i)
	{
		if (m[i] < -1 || m[i] >= fg.size())
			throw std::out_of_range("grafting map points outside the target forest");
		if (m[i] >= 0)
			all.parent[roots[i]] = ff.size() + m[i];
	}
	return all;
}

Forest graft_forest(const Forest& f, const GraftingMap& m, const Forest& g)
{
	return implode_forest(graft_forest_flat(f, m, g));
}

std::vector<std::vector<int>> isomorphisms(const Flat& f1, const Flat& f2)
{
	std::vector<std::vector<int>> out;
	if (f1.size() != f2.size())
		return out;
	int n = f1.size();
	auto ch1 = f1.child_lists();
	auto ch2 = f2.child_lists();
	// parents before children
	std::vector<int> order;
	for (int r : f1.roots())
	{
		std::vector<int> stack{r};
		while (!stack.empty())
		{
			int v = stack.back();
			stack.pop_back();
			order.push_back(v);
			for (int c : ch1[v])
				stack.push_back(c);
		}
	}
	auto roots2 = f2.roots();
	std::vector<int> sigma(n, -1);
	std::vector<bool> used(n, false);
	std::function<void(int)> go = [&](int k) {
		if (k == n)
		{
			out.push_back(sigma);
			return;
		}
		int v = order[k];
		const std::vector<int>& cands = f1.parent[v] < 0 ? roots2 : ch2[sigma[f1.parent[v]]];
		for (int w : cands)
		{
			if (used[w] || ch1[v].size() != ch2[w].size())
				continue;
			used[w] = true;
			sigma[v] = w;
			go(k + 1);
			used[w] = false;
			sigma[v] = -1;
		}
	};
	go(0);
	return out;
}

std::vector<std::vector<int>> isomorphisms(const Forest& f1, const Forest& f2)
{
	return isomorphisms(explode(f1), explode(f2));
}

} // namespace rtcalc

namespace rtcalc {

std::vector<Tree> trees_of_size(int n, const std::vector<Label>& vertexLabels, const std::vector<Label>& edgeLabels)
{
	std::set<Tree> cur;
	if (n <= 0)
		return {};
	for (auto& b : vertexLabels)
		cur.insert(Tree::vertex(b));
	for (int k = 2; k <= n; ++k)
	{
		std::set<Tree> next;
		for (auto& t : cur)
			for (int v = 0; v < t.vertex_count(); ++v)
				for (auto& e : edgeLabels)
					for (auto& b : vertexLabels)
						next.insert(graft_at(Tree::vertex(b), v, t, e));
		cur = std::move(next);
	}
	return {cur.begin(), cur.end()};
}

} // namespace rtcalc
