#include "rtcalc/prelie.hpp"

#include <algorithm>

namespace rtcalc {

std::string render(const TreeComb& x)
{
	return render(x, [](const Tree& t) { return t.str(); });
}

std::string render(const PlantedComb& x)
{
	return render(x, [](const PlantedTree& t) { return t.str(); });
}

// Flat of y with x hung below vertex v; the new edge is the one targeting id y.size().
static Flat hang(const Flat& fx, const Label& a, int v, const Flat& fy)
{
	Flat all = concat(fy, fx);
	all.parent[fy.size()] = v;
	all.el[fy.size()] = a;
	return all;
}

static TreeComb implode_all(const FlatComb& c)
{
	TreeComb out;
	for (auto& [f, k] : c)
		out.add(implode_tree(f), k);
	return out;
}

TreeComb graft_free(const TreeComb& x, const Label& a, const TreeComb& y)
{
	TreeComb out;
	for (auto& [tx, cx] : x)
	{
		Flat fx = explode(tx);
		for (auto& [ty, cy] : y)
		{
			Flat fy = explode(ty);
			for (int v = 0; v < fy.size(); ++v)
				out.add(implode_tree(hang(fx, a, v, fy)), cx * cy);
		}
	}
	return out;
}

TreeComb graft_phi(const PhiMap& phi, const TreeComb& x, const Label& a, const TreeComb& y)
{
	FlatComb acc;
	for (auto& [tx, cx] : x)
	{
		Flat fx = explode(tx);
		for (auto& [ty, cy] : y)
		{
			Flat fy = explode(ty);
			for (int v = 0; v < fy.size(); ++v)
				acc += apply_at(phi, FlatComb(hang(fx, a, v, fy), cx * cy), fy.size(), v);
		}
	}
	return implode_all(acc);
}

static PlantedComb planted_graft(const GraftProduct& prod, const PlantedComb& u, const PlantedComb& w)
{
	PlantedComb out;
	for (auto& [pu, cu] : u)
		for (auto& [pw, cw] : w)
			for (auto& [t, c] : prod(TreeComb(pu.body), pu.edge, TreeComb(pw.body)))
				out.add(PlantedTree{pw.edge, t}, cu * cw * c);
	return out;
}

PlantedComb planted_graft_phi(const PhiMap& phi, const PlantedComb& u, const PlantedComb& w)
{
	return planted_graft(phi_product(phi), u, w);
}

PlantedComb planted_graft_free(const PlantedComb& u, const PlantedComb& w)
{
	return planted_graft(free_product(), u, w);
}

FlatComb theta_flat(const PhiMap& phi, const Flat& f, EdgeOrder order)
{
	if (order == EdgeOrder::Checked)
	{
		FlatComb fwd = theta_flat(phi, f, EdgeOrder::Canonical);
		FlatComb bwd = theta_flat(phi, f, EdgeOrder::Reversed);
		if (!(fwd == bwd))
			throw std::logic_error("theta depends on the edge order for " + phi.description());
		return fwd;
	}
	std::vector<int> edges;
	for (int v = 0; v < f.size(); ++v)
		if (f.parent[v] >= 0)
			edges.push_back(v);
	if (order == EdgeOrder::Reversed)
		std::reverse(edges.begin(), edges.end());
	FlatComb c(f);
	for (int e : edges)
		c = apply_at(phi, c, e, f.parent[e]);
	return c;
}

TreeComb theta(const PhiMap& phi, const TreeComb& x, EdgeOrder order)
{
	require_not_refuted(phi);
	FlatComb acc;
	for (auto& [t, c] : x)
		acc += c * theta_flat(phi, explode(t), order);
	return implode_all(acc);
}

GraftProduct free_product()
{
	return [](const TreeComb& x, const Label& a, const TreeComb& y) { return graft_free(x, a, y); };
}

GraftProduct phi_product(const PhiMap& phi)
{
	return [phi](const TreeComb& x, const Label& a, const TreeComb& y) { return graft_phi(phi, x, a, y); };
}

TreeComb multiple_prelie_defect(const GraftProduct& prod, const Label& a, const Label& a2, const TreeComb& x,
                                const TreeComb& y, const TreeComb& z)
{
	TreeComb lhs = prod(x, a, prod(y, a2, z)) - prod(prod(x, a, y), a2, z);
	TreeComb rhs = prod(y, a2, prod(x, a, z)) - prod(prod(y, a2, x), a, z);
	return lhs - rhs;
}

TreeComb theta_morphism_defect(const PhiMap& phi, const PhiMap& psi, const TreeComb& x, const Label& a,
                               const TreeComb& y)
{
	PhiMap phipsi = compose(phi, psi);
	TreeComb lhs = theta(phi, graft_phi(psi, x, a, y));
	TreeComb rhs = graft_phi(phipsi, theta(phi, x), a, theta(phi, y));
	return lhs - rhs;
}

LinComb<PlantedPair> nap_coproduct(const PlantedComb& x)
{
	LinComb<PlantedPair> out;
	for (auto& [p, c] : x)
		for (int i = 0; i < static_cast<int>(p.body.children.size()); ++i)
			out.add(split_root_edge(p, i), c);
	return out;
}

PlantedComb nap_regraft(const LinComb<PlantedPair>& x)
{
	PlantedComb out;
	for (auto& [pr, c] : x)
	{
		auto& [up, low] = pr;
		Tree body = low.body;
		body.children.push_back(Branch{up.edge, up.body});
		out.add(PlantedTree{low.edge, canonicalize(std::move(body))}, c);
	}
	return out;
}

bool nap_eigen_check(const PlantedTree& x)
{
	PlantedComb lhs = nap_regraft(nap_coproduct(PlantedComb(x)));
	Scalar alpha = static_cast<long>(x.body.children.size());
	return lhs == PlantedComb(x, alpha);
}

std::vector<PlantedComb> nap_kernel(const std::vector<PlantedTree>& basis)
{
	std::map<PlantedPair, int> rows;
	std::vector<LinComb<PlantedPair>> images;
	for (auto& p : basis)
	{
		images.push_back(nap_coproduct(PlantedComb(p)));
		for (auto& [pr, c] : images.back())
			rows.emplace(pr, 0);
	}
	int r = 0;
	for (auto& kv : rows)
		kv.second = r++;
	QMatrix M(r, static_cast<int>(basis.size()));
	for (std::size_t j = 0; j < basis.size(); ++j)
		for (auto& [pr, c] : images[j])
			M(rows[pr], static_cast<int>(j)) = c;
	std::vector<PlantedComb> out;
	for (auto& v : M.nullspace())
	{
		PlantedComb k;
		for (std::size_t j = 0; j < basis.size(); ++j)
			k.add(basis[j], v[j]);
		out.push_back(std::move(k));
	}
	return out;
}

} // namespace rtcalc
