#include "rtcalc/hopf.hpp"

#include <set>

namespace rtcalc {

std::string render(const ForestComb& x)
{
	return render(x, [](const Forest& f) { return f.str(); });
}

std::string render(const ForestTensor& x)
{
	return render(x, [](const ForestPair& p) { return "(" + p.first.str() + " | " + p.second.str() + ")"; });
}

ForestComb forest_product(const ForestComb& x, const ForestComb& y)
{
	ForestComb out;
	for (auto& [f, c] : x)
		for (auto& [g, d] : y)
			out.add(f * g, c * d);
	return out;
}

ForestTensor tensor_product(const ForestTensor& x, const ForestTensor& y)
{
	ForestTensor out;
	for (auto& [p, c] : x)
		for (auto& [q, d] : y)
			out.add({p.first * q.first, p.second * q.second}, c * d);
	return out;
}

ForestTensor tensor(const ForestComb& x, const ForestComb& y)
{
	ForestTensor out;
	for (auto& [f, c] : x)
		for (auto& [g, d] : y)
			out.add({f, g}, c * d);
	return out;
}

Scalar counit(const ForestComb& x) { return x.coeff(Forest::one()); }

// All maps from k items into {lo, .., hi-1}.
static void each_assignment(int k, int lo, int hi, const std::function<void(const std::vector<int>&)>& fn)
{
	std::vector<int> m(k, lo);
	if (hi <= lo && k > 0)
		return;
	for (;;)
	{
		fn(m);
		int i = 0;
		while (i < k && ++m[i] == hi)
			m[i++] = lo;
		if (i == k)
			return;
	}
}

static FlatComb grafted(const PhiMap& phi, const Forest& f, const GraftingMap& m, const Forest& g)
{
	Flat all = graft_forest_flat(f, m, g);
	auto roots = explode(f).roots();
	int shift = f.vertex_count();
	FlatComb c(all);
	for (std::size_t i = 0; i < m.size(); ++i)
		if (m[i] >= 0)
			c = apply_at(phi, c, roots[i], shift + m[i]);
	return c;
}

PlantedComb go_triangle(const PhiMap& phi, const ForestComb& f, const PlantedComb& p)
{
	require_not_refuted(phi);
	PlantedComb out;
	for (auto& [F, c] : f)
		for (auto& [P, d] : p)
		{
			Forest G = Forest::of(P);
			each_assignment(static_cast<int>(F.trees.size()), 0, P.vertex_count(), [&](const std::vector<int>& m) {
				for (auto& [fl, e] : grafted(phi, F, m, G))
					out.add(implode_planted(fl), c * d * e);
			});
		}
	return out;
}

ForestComb star_product(const PhiMap& phi, const ForestComb& f, const ForestComb& g)
{
	require_not_refuted(phi);
	ForestComb out;
	for (auto& [F, c] : f)
		for (auto& [G, d] : g)
			for (auto& m : grafting_maps(F, G))
				for (auto& [fl, e] : grafted(phi, F, m, G))
					out.add(implode_forest(fl), c * d * e);
	return out;
}

ForestTensor deshuffle(const ForestComb& f)
{
	ForestTensor out;
	for (auto& [F, c] : f)
	{
		std::size_t k = F.trees.size();
		for (unsigned long mask = 0; mask < (1ul << k); ++mask)
		{
			std::vector<PlantedTree> l, r;
			for (std::size_t i = 0; i < k; ++i)
				((mask >> i) & 1 ? l : r).push_back(F.trees[i]);
			out.add({Forest(std::move(l)), Forest(std::move(r))}, c);
		}
	}
	return out;
}

ForestTensor bck_coproduct(const PhiMap& phi, const ForestComb& f)
{
	require_not_refuted(phi);
	ForestTensor out;
	for (auto& [F, c] : f)
	{
		Flat fl = explode(F);
		for (auto& up : upper_parts(fl))
		{
			FlatComb acc(fl, c);
			for (int v = 0; v < fl.size(); ++v)
			{
				int s = fl.parent[v];
				if (s >= 0 && up[v] && !up[s])
					acc = apply_at(phi, acc, v, s);
			}
			VertexSet low(up.size());
			for (std::size_t v = 0; v < up.size(); ++v)
				low[v] = !up[v];
			for (auto& [g, d] : acc)
				out.add({restrict_forest(g, up), restrict_forest(g, low)}, d);
		}
	}
	return out;
}

ForestComb theta_bar(const PhiMap& phi, const ForestComb& f)
{
	require_not_refuted(phi);
	ForestComb out;
	for (auto& [F, c] : f)
		for (auto& [g, d] : theta_flat(phi, explode(F)))
			out.add(implode_forest(g), c * d);
	return out;
}

Pairing Pairing::delta()
{
	return {[](const LabelPair& p, const LabelPair& q) { return Scalar(p == q ? 1 : 0); }, "delta"};
}

Scalar Pairing::operator()(const PairComb& primed, const PairComb& x) const
{
	Scalar s = 0;
	for (auto& [p, c] : primed)
		for (auto& [q, d] : x)
			s += c * d * base(p, q);
	return s;
}

Scalar pair_forests(const Pairing& pr, const ForestComb& primed, const ForestComb& x)
{
	Scalar total = 0;
	for (auto& [F2, c] : primed)
	{
		Flat f2 = explode(F2);
		for (auto& [F, d] : x)
		{
			Flat f = explode(F);
			for (auto& sigma : isomorphisms(f2, f))
			{
				Scalar prod = c * d;
				for (int v = 0; v < f2.size() && prod != 0; ++v)
					prod *= pr.base({f2.el[v], f2.vl[v]}, {f.el[sigma[v]], f.vl[sigma[v]]});
				total += prod;
			}
		}
	}
	return total;
}

Scalar pair_tensors(const Pairing& pr, const ForestTensor& primed, const ForestTensor& x)
{
	Scalar total = 0;
	for (auto& [p, c] : primed)
		for (auto& [q, d] : x)
		{
			Scalar l = pair_forests(pr, ForestComb(p.first), ForestComb(q.first));
			if (l != 0)
				total += c * d * l * pair_forests(pr, ForestComb(p.second), ForestComb(q.second));
		}
	return total;
}

void require_adjoint(const PhiMap& phi, const PhiMap& phi2, const Pairing& pr, const std::vector<LabelPair>& primed,
                     const std::vector<LabelPair>& plain)
{
	for (auto& p : primed)
	{
		PairComb lhs = phi2(p.first, p.second);
		for (auto& q : plain)
			if (pr(lhs, PairComb(q)) != pr(PairComb(p), phi(q.first, q.second)))
				throw AdjointnessViolated("phi2 is not adjoint to phi at " + render_pair(p) + " vs " + render_pair(q),
				                          p, q);
	}
}

static std::vector<LabelPair> label_pairs(const PhiMap& phi, const std::vector<Forest>& samples)
{
	std::set<LabelPair> out;
	if (phi.is_finite())
	{
		for (auto& a : phi.edge_basis().elements())
			for (auto& b : phi.vertex_basis().elements())
				out.insert({a, b});
		return {out.begin(), out.end()};
	}
	std::set<Label> es, vs;
	for (auto& F : samples)
	{
		Flat f = explode(F);
		es.insert(f.el.begin(), f.el.end());
		vs.insert(f.vl.begin(), f.vl.end());
	}
	for (auto& a : es)
		for (auto& b : vs)
			out.insert({a, b});
	return {out.begin(), out.end()};
}

static void note(Residual& r, const Scalar& lhs, const Scalar& rhs, const std::string& where)
{
	++r.checked;
	if (lhs != rhs && !r.failures++)
		r.witness = where + ": " + to_string(lhs) + " vs " + to_string(rhs);
}

ResidualReport hopf_pairing_defects(const PhiMap& phi, const PhiMap& phi2, const Pairing& pr,
                                    const std::vector<Forest>& primedSamples, const std::vector<Forest>& samples)
{
	require_adjoint(phi, phi2, pr, label_pairs(phi2, primedSamples), label_pairs(phi, samples));
	Residual star{"star/coproduct", 0, 0, {}}, prod{"coproduct/product", 0, 0, {}};
	Residual unit{"unit/counit", 0, 0, {}}, counitR{"counit/unit", 0, 0, {}};
	ForestComb one(Forest::one());
	for (auto& x : samples)
	{
		ForestComb X(x);
		note(unit, pair_forests(pr, one, X), counit(X), "<1," + x.str() + ">");
		ForestTensor dx = bck_coproduct(phi, X);
		for (auto& x2 : primedSamples)
			for (auto& y2 : primedSamples)
			{
				if (x2.vertex_count() + y2.vertex_count() != x.vertex_count())
					continue;
				Scalar l = pair_forests(pr, star_product(phi2, ForestComb(x2), ForestComb(y2)), X);
				Scalar r = pair_tensors(pr, ForestTensor({x2, y2}), dx);
				note(star, l, r, x2.str() + " * " + y2.str() + " against " + x.str());
			}
	}
	for (auto& x2 : primedSamples)
	{
		ForestComb X2(x2);
		note(counitR, pair_forests(pr, X2, one), counit(X2), "<" + x2.str() + ",1>");
		ForestTensor d = deshuffle(X2);
		for (auto& x : samples)
			for (auto& y : samples)
			{
				if (x.vertex_count() + y.vertex_count() != x2.vertex_count())
					continue;
				Scalar l = pair_tensors(pr, d, ForestTensor({x, y}));
				Scalar r = pair_forests(pr, X2, ForestComb(x * y));
				note(prod, l, r, x2.str() + " against " + x.str() + " . " + y.str());
			}
	}
	return {star, prod, unit, counitR};
}

} // namespace rtcalc
