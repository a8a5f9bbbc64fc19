#include "rtcalc/spde.hpp"

#include <map>
#include <set>

namespace rtcalc {

SpdeConfig SpdeConfig::ones(int d, bool noise) { return {d, std::vector<Scalar>(d + 1, Scalar(1)), noise}; }

void SpdeConfig::validate() const
{
	if (d < 0)
		throw std::invalid_argument("d must be >= 0");
	if (static_cast<int>(lambda.size()) != d + 1)
		throw std::invalid_argument("lambda needs d+1 = " + std::to_string(d + 1) + " entries, got " +
		                            std::to_string(lambda.size()));
}

SpdeConfig SpdeConfig::negated() const
{
	SpdeConfig c = *this;
	for (auto& x : c.lambda)
		x = -x;
	return c;
}

static std::string lambda_str(const SpdeConfig& cfg)
{
	std::string s;
	for (std::size_t i = 0; i < cfg.lambda.size(); ++i)
		s += (i ? "," : "") + to_string(cfg.lambda[i]);
	return "d=" + std::to_string(cfg.d) + ",lambda=(" + s + ")";
}

static const MultiIndex& need_mi(const Label& l, int d)
{
	if (!l.is_mi() || l.multi().dim() != d)
		throw std::invalid_argument("expected a multi-index of length " + std::to_string(d + 1) + ", got " + l.str());
	return l.multi();
}

PairComb partial_j(int j, const MultiIndex& a, const MultiIndex& b)
{
	if (j < 0 || j >= a.size() || a.size() != b.size())
		throw std::out_of_range("partial_j: index " + std::to_string(j) + " out of range");
	if (a[j] == 0 || b[j] == 0)
		return {};
	MultiIndex e = MultiIndex::unit(a.dim(), j);
	auto a2 = std::get<MultiIndex>(mi_sub(a, e));
	auto b2 = std::get<MultiIndex>(mi_sub(b, e));
	return PairComb({Label::mi(a2), Label::mi(b2)}, b[j]);
}

PhiMap partial_lambda(const SpdeConfig& cfg)
{
	cfg.validate();
	auto B = DecorationBasis::multi_indices(cfg.d);
	auto act = [cfg](const Label& a, const Label& b) {
		PairComb out;
		for (int j = 0; j <= cfg.d; ++j)
			if (cfg.lambda[j] != 0)
				out += cfg.lambda[j] * partial_j(j, need_mi(a, cfg.d), need_mi(b, cfg.d));
		return out;
	};
	return PhiMap(B, B, act, "partial_lambda(" + lambda_str(cfg) + ")", true);
}

PhiMap phi_lambda(const SpdeConfig& cfg)
{
	cfg.validate();
	auto B = DecorationBasis::multi_indices(cfg.d);
	auto act = [cfg](const Label& a, const Label& b) {
		const MultiIndex& ma = need_mi(a, cfg.d);
		const MultiIndex& mb = need_mi(b, cfg.d);
		PairComb out;
		for (auto& l : mi_below(mi_min(ma, mb)))
		{
			Scalar c = lambda_pow(cfg.lambda, l) * mi_binom(mb, l);
			if (c != 0)
				out.add({Label::mi(std::get<MultiIndex>(mi_sub(ma, l))), Label::mi(std::get<MultiIndex>(mi_sub(mb, l)))},
				        c);
		}
		return out;
	};
	return PhiMap(B, B, act, "phi_lambda(" + lambda_str(cfg) + ")", true);
}

PhiMap phi_lambda_via_exp(const SpdeConfig& cfg, int maxIter)
{
	return exp_series(partial_lambda(cfg), maxIter).with_description("phi_lambda_exp(" + lambda_str(cfg) + ")");
}

PhiMap noise_extend(const SpdeConfig& cfg)
{
	PhiMap z = zero_map(DecorationBasis::noise(Label::xi()), DecorationBasis::noise(Label::star()));
	return direct_sum(phi_lambda(cfg), z, 0, 1).with_description("noise_extend(" + lambda_str(cfg) + ")");
}

PhiMap spde_phi(const SpdeConfig& cfg) { return cfg.noise ? noise_extend(cfg) : phi_lambda(cfg); }

std::pair<PostLieBase, PsiPair> spde_psi(const SpdeConfig& cfg)
{
	cfg.validate();
	std::vector<std::string> gens;
	for (int i = 0; i <= cfg.d; ++i)
		gens.push_back("X" + std::to_string(i));
	int d = cfg.d;
	bool noise = cfg.noise;
	PsiPair psi;
	psi.psiV = [d, noise](int i, const Label& b) {
		if (noise && b.kind() == Label::Kind::Star)
			return LinComb<Label>();
		return LinComb<Label>(Label::mi(need_mi(b, d) + MultiIndex::unit(d, i)));
	};
	psi.psiE = [d, noise](int i, const Label& a) {
		if (noise && a.kind() == Label::Kind::Xi)
			return LinComb<Label>();
		auto r = mi_sub(need_mi(a, d), MultiIndex::unit(d, i));
		if (std::holds_alternative<Vanish>(r))
			return LinComb<Label>();
		return LinComb<Label>(Label::mi(std::get<MultiIndex>(r)));
	};
	psi.description = "spde_psi(" + lambda_str(cfg) + (noise ? ",noise" : "") + ")";
	return {PostLieBase::trivial(gens), psi};
}

Extension spde_extension(const SpdeConfig& cfg)
{
	auto [P, psi] = spde_psi(cfg);
	return Extension{spde_phi(cfg), P, psi};
}

bool xi_admissible(const PlantedTree& p)
{
	Flat f = explode(p);
	auto kids = f.child_lists();
	if (p.edge.kind() == Label::Kind::Star)
		return false;
	if (p.edge.kind() == Label::Kind::Xi && !(p.body.children.empty() && p.body.root.kind() == Label::Kind::Star))
		return false;
	for (int v = 0; v < f.size(); ++v)
	{
		if (f.vl[v].kind() == Label::Kind::Xi || (f.parent[v] >= 0 && f.el[v].kind() == Label::Kind::Star))
			return false;
		if (f.parent[v] >= 0 && f.el[v].kind() == Label::Kind::Xi && f.vl[v].kind() != Label::Kind::Star)
			return false;
		if (f.vl[v].kind() == Label::Kind::Star && !kids[v].empty())
			return false;
	}
	return true;
}

namespace {

// Proof-style induction: on the vertex count, then on the number of root edges.
struct Prober
{
	PhiMap phi, phiInv;
	std::map<PlantedTree, PlantedComb> memo;

	const PlantedComb& value(const PlantedTree& p)
	{
		auto it = memo.find(p);
		if (it != memo.end())
			return it->second;
		PlantedComb v = build(p);
		return memo.emplace(p, std::move(v)).first->second;
	}

	PlantedComb build(const PlantedTree& p)
	{
		if (p.body.children.empty())
			return PlantedComb(p); // a generator
		const Branch& first = p.body.children.front();
		Tree rest = p.body;
		rest.children.erase(rest.children.begin());
		PlantedComb S;
		for (auto& [bc, mu] : phiInv(first.edge, p.body.root))
		{
			Tree low = rest;
			low.root = bc.second;
			PlantedComb upper = value(PlantedTree{bc.first, first.sub});
			PlantedComb lower = value(PlantedTree{p.edge, low});
			S += mu * planted_graft_phi(phi, upper, lower);
		}
		PlantedComb out = S;
		int n = p.vertex_count();
		std::size_t k = p.body.children.size();
		for (auto& [q, c] : S - PlantedComb(p))
		{
			if (q.vertex_count() != n || q.body.children.size() >= k || !xi_admissible(q))
				throw NotReached("correction term " + q.str() + " is not smaller than " + p.str(),
				                 S - PlantedComb(p));
			out -= c * value(q);
		}
		return out;
	}
};

} // namespace

bool xi_generation_probe(const SpdeConfig& cfg, const std::vector<PlantedTree>& targets, int maxVertices)
{
	SpdeConfig c = cfg;
	c.noise = true;
	for (auto& t : targets)
	{
		if (!xi_admissible(t))
			throw std::invalid_argument("xi_generation_probe: " + t.str() + " is not Xi-admissible");
		if (t.vertex_count() > maxVertices)
			throw std::invalid_argument("xi_generation_probe: " + t.str() + " exceeds the vertex bound");
	}
	Prober pr{noise_extend(c), noise_extend(c.negated()), {}};
	for (auto& t : targets)
	{
		PlantedComb diff = pr.value(t) - PlantedComb(t);
		if (!diff.empty())
			throw NotReached("rebuilt value of " + t.str() + " is off", diff);
	}
	return true;
}

std::vector<PlantedTree> admissible_trees(int d, int n, int maxEntry)
{
	std::vector<Label> E{Label::xi()}, V{Label::star()};
	for (auto& m : mi_box(d, maxEntry))
	{
		E.push_back(Label::mi(m));
		V.push_back(Label::mi(m));
	}
	std::vector<PlantedTree> out;
	for (int k = 1; k <= n; ++k)
		for (auto& t : trees_of_size(k, V, E))
			for (auto& e : E)
			{
				PlantedTree p{e, t};
				if (xi_admissible(p))
					out.push_back(std::move(p));
			}
	return out;
}

} // namespace rtcalc
