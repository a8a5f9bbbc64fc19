#include "rtcalc/phimaps.hpp"

#include <mutex>

namespace rtcalc {

std::string render_pair(const LabelPair& p) { return "[" + p.first.str() + "](" + p.second.str() + ")"; }

std::string render_triple(const LabelTriple& t)
{
	return std::get<0>(t).str() + "|" + std::get<1>(t).str() + "|" + std::get<2>(t).str();
}

struct PhiMap::Cache
{
	std::mutex mu;
	std::map<LabelPair, PairComb> memo;
	std::optional<bool> refuted; // filled lazily by require_not_refuted
};

PhiMap::PhiMap(DecorationBasis edges, DecorationBasis vertices, Action act, std::string description,
               bool compatibleByConstruction)
    : edges_(std::move(edges)), vertices_(std::move(vertices)), act_(std::move(act)), desc_(std::move(description)),
      cbc_(compatibleByConstruction), cache_(std::make_shared<Cache>())
{
}

PhiMap PhiMap::from_table(DecorationBasis edges, DecorationBasis vertices, Table table, std::string description)
{
	for (auto& [in, out] : table)
	{
		if (!edges.contains(in.first) || !vertices.contains(in.second))
			throw std::invalid_argument("table input " + render_pair(in) + " outside the bases");
		for (auto& [p, c] : out)
			if (!edges.contains(p.first) || !vertices.contains(p.second))
				throw std::invalid_argument("table output " + render_pair(p) + " outside the bases");
	}
	if (edges.is_finite() && vertices.is_finite())
		for (auto& a : edges.elements())
			for (auto& b : vertices.elements())
				if (!table.count({a, b}))
					throw std::invalid_argument("table misses the input " + render_pair({a, b}));
	auto shared = std::make_shared<const Table>(table);
	PhiMap phi(
	    std::move(edges), std::move(vertices),
	    [shared](const Label& a, const Label& b) {
		    auto it = shared->find({a, b});
		    return it == shared->end() ? PairComb() : it->second;
	    },
	    std::move(description));
	phi.table_ = std::move(table);
	return phi;
}

PairComb PhiMap::operator()(const Label& a, const Label& b) const
{
	if (!edges_.contains(a))
		throw std::invalid_argument("edge label " + a.str() + " is not in " + edges_.str());
	if (!vertices_.contains(b))
		throw std::invalid_argument("vertex label " + b.str() + " is not in " + vertices_.str());
	LabelPair key{a, b};
	{
		std::lock_guard lock(cache_->mu);
		auto it = cache_->memo.find(key);
		if (it != cache_->memo.end())
			return it->second;
	}
	PairComb out = act_(a, b);
	for (auto& [p, c] : out)
		if (!edges_.contains(p.first) || !vertices_.contains(p.second))
			throw std::logic_error(desc_ + " maps " + render_pair(key) + " outside its bases: " + render_pair(p));
	std::lock_guard lock(cache_->mu);
	cache_->memo.emplace(std::move(key), out);
	return out;
}

PairComb PhiMap::apply(const PairComb& x) const
{
	return lc_map([this](const LabelPair& p) { return (*this)(p.first, p.second); }, x);
}

PhiMap::Table PhiMap::tabulate() const
{
	Table t;
	for (auto& a : edges_.elements())
		for (auto& b : vertices_.elements())
			t[{a, b}] = (*this)(a, b);
	return t;
}

PhiMap PhiMap::with_description(std::string d) const
{
	PhiMap p = *this;
	p.desc_ = std::move(d);
	return p;
}

PairComb phi_apply(const PhiMap& phi, const Label& a, const Label& b) { return phi(a, b); }

NonNilpotent::NonNilpotent(LabelPair in, int iters)
    : std::runtime_error("not nilpotent on " + render_pair(in) + " after " + std::to_string(iters) + " iterations"),
      input(std::move(in))
{
}

// ---- compatibility

// phi acting on slots (1,3) of a triple combination
static TripleComb act13(const PhiMap& phi, const TripleComb& x)
{
	TripleComb out;
	for (auto& [t, c] : x)
		for (auto& [p, d] : phi(std::get<0>(t), std::get<2>(t)))
			out.add(LabelTriple{p.first, std::get<1>(t), p.second}, c * d);
	return out;
}

static TripleComb act23(const PhiMap& phi, const TripleComb& x)
{
	TripleComb out;
	for (auto& [t, c] : x)
		for (auto& [p, d] : phi(std::get<1>(t), std::get<2>(t)))
			out.add(LabelTriple{std::get<0>(t), p.first, p.second}, c * d);
	return out;
}

TripleComb phi13_phi23_defect(const PhiMap& phi, const Label& a, const Label& a2, const Label& b)
{
	TripleComb x(LabelTriple{a, a2, b});
	return act13(phi, act23(phi, x)) - act23(phi, act13(phi, x));
}

TripleComb cross_defect(const PhiMap& psi, const PhiMap& phi, const Label& a, const Label& a2, const Label& b)
{
	TripleComb x(LabelTriple{a, a2, b});
	return act13(psi, act23(phi, x)) - act23(phi, act13(psi, x));
}

std::string CompatVerdict::str() const
{
	switch (status)
	{
	case Status::Compatible:
		return "Compatible";
	case Status::VerifiedUpToBound:
		return "VerifiedUpToBound(" + std::to_string(bound) + ")";
	case Status::Refuted:
		return "Refuted(" + render_triple(*witness) + ")";
	}
	return "?";
}

CompatVerdict check_compat(const PhiMap& phi, const std::vector<LabelTriple>& triples)
{
	CompatVerdict v;
	for (auto& t : triples)
	{
		TripleComb x(t);
		TripleComb lhs = act13(phi, act23(phi, x));
		TripleComb rhs = act23(phi, act13(phi, x));
		if (!(lhs == rhs))
		{
			v.status = CompatVerdict::Status::Refuted;
			v.witness = t;
			v.lhs = std::move(lhs);
			v.rhs = std::move(rhs);
			return v;
		}
	}
	return v;
}

CompatVerdict check_compat(const PhiMap& phi, std::optional<int> bound)
{
	bool finite = phi.is_finite();
	if (!finite && !bound)
		throw std::invalid_argument("an infinite decoration basis needs an explicit bound");
	int bd = finite ? 0 : *bound;
	auto E = phi.edge_basis().elements_up_to(bd);
	auto V = phi.vertex_basis().elements_up_to(bd);
	std::vector<LabelTriple> triples;
	for (auto& a : E)
		for (auto& a2 : E)
			for (auto& b : V)
				triples.emplace_back(a, a2, b);
	CompatVerdict v = check_compat(phi, triples);
	if (!v.refuted() && !finite)
	{
		v.status = CompatVerdict::Status::VerifiedUpToBound;
		v.bound = bd;
	}
	return v;
}

void require_not_refuted(const PhiMap& phi)
{
	if (phi.compatible_by_construction())
		return;
	{
		std::lock_guard lock(phi.cache_->mu);
		if (phi.cache_->refuted && !*phi.cache_->refuted)
			return;
	}
	// copies of a map share the cache, so the full check runs once
	CompatVerdict v = check_compat(phi, phi.is_finite() ? std::nullopt : std::optional<int>(2));
	{
		std::lock_guard lock(phi.cache_->mu);
		phi.cache_->refuted = v.refuted();
	}
	if (v.refuted())
		throw IncompatiblePhi(phi.description() + " is not tree-compatible: witness " + render_triple(*v.witness),
		                      *v.witness);
}

// ---- combinators

PhiMap identity_map(DecorationBasis edges, DecorationBasis vertices)
{
	return PhiMap(
	    std::move(edges), std::move(vertices), [](const Label& a, const Label& b) { return PairComb({a, b}); },
	    "identity", true);
}

PhiMap zero_map(DecorationBasis edges, DecorationBasis vertices)
{
	return PhiMap(
	    std::move(edges), std::move(vertices), [](const Label&, const Label&) { return PairComb(); }, "zero", true);
}

PhiMap direct_sum(const PhiMap& phi1, const PhiMap& phi2, const Scalar& lambda, const Scalar& mu)
{
	auto E = DecorationBasis::sum({phi1.edge_basis(), phi2.edge_basis()});
	auto V = DecorationBasis::sum({phi1.vertex_basis(), phi2.vertex_basis()});
	auto act = [phi1, phi2, lambda, mu](const Label& a, const Label& b) {
		bool e1 = phi1.edge_basis().contains(a);
		bool v1 = phi1.vertex_basis().contains(b);
		if (e1 && v1)
			return phi1(a, b);
		if (!e1 && !v1)
			return phi2(a, b);
		return PairComb({a, b}, e1 ? lambda : mu);
	};
	bool cbc = phi1.compatible_by_construction() && phi2.compatible_by_construction();
	return PhiMap(E, V, act,
	              "(" + phi1.description() + " (+)_{" + lambda.get_str() + "," + mu.get_str() + "} " +
	                  phi2.description() + ")",
	              cbc);
}

static void same_bases(const PhiMap& x, const PhiMap& y, const char* what)
{
	if (!(x.edge_basis() == y.edge_basis()) || !(x.vertex_basis() == y.vertex_basis()))
		throw std::invalid_argument(std::string(what) + ": basis mismatch between " + x.description() + " and " +
		                            y.description());
}

PhiMap compose(const PhiMap& phi, const PhiMap& psi)
{
	same_bases(phi, psi, "compose");
	return PhiMap(
	    phi.edge_basis(), phi.vertex_basis(),
	    [phi, psi](const Label& a, const Label& b) { return phi.apply(psi(a, b)); },
	    "(" + phi.description() + " o " + psi.description() + ")");
}

PhiMap lin_comb(const Scalar& alpha, const PhiMap& phi, const Scalar& beta, const PhiMap& psi)
{
	same_bases(phi, psi, "lin_comb");
	return PhiMap(
	    phi.edge_basis(), phi.vertex_basis(),
	    [=](const Label& a, const Label& b) { return alpha * phi(a, b) + beta * psi(a, b); },
	    "(" + alpha.get_str() + "*" + phi.description() + " + " + beta.get_str() + "*" + psi.description() + ")");
}

PhiMap polynomial(const PhiMap& phi, std::vector<Scalar> coeffs)
{
	std::string desc = "P(" + phi.description() + ")";
	return PhiMap(
	    phi.edge_basis(), phi.vertex_basis(),
	    [phi, coeffs](const Label& a, const Label& b) {
		    PairComb power({a, b});
		    PairComb out;
		    for (std::size_t k = 0; k < coeffs.size(); ++k)
		    {
			    if (k)
				    power = phi.apply(power);
			    out += coeffs[k] * power;
		    }
		    return out;
	    },
	    desc, phi.compatible_by_construction());
}

PhiMap exp_series(const PhiMap& phi, int maxIter)
{
	return PhiMap(
	    phi.edge_basis(), phi.vertex_basis(),
	    [phi, maxIter](const Label& a, const Label& b) {
		    PairComb term({a, b});
		    PairComb out = term;
		    for (int k = 1;; ++k)
		    {
			    term = phi.apply(term);
			    if (term.empty())
				    return out;
			    if (k >= maxIter)
				    throw NonNilpotent({a, b}, maxIter);
			    term *= Scalar(1) / k;
			    out += term;
		    }
	    },
	    "exp(" + phi.description() + ")", phi.compatible_by_construction());
}

PhiMap tensor_product(const PhiMap& phi, const PhiMap& phi2)
{
	auto E = DecorationBasis::product(phi.edge_basis(), phi2.edge_basis());
	auto V = DecorationBasis::product(phi.vertex_basis(), phi2.vertex_basis());
	return PhiMap(
	    E, V,
	    [phi, phi2](const Label& a, const Label& b) {
		    PairComb out;
		    for (auto& [p, c] : phi(a.left(), b.left()))
			    for (auto& [q, d] : phi2(a.right(), b.right()))
				    out.add({Label::pair(p.first, q.first), Label::pair(p.second, q.second)}, c * d);
		    return out;
	    },
	    "(" + phi.description() + " (x) " + phi2.description() + ")",
	    phi.compatible_by_construction() && phi2.compatible_by_construction());
}

PhiMap transpose(const PhiMap& phi)
{
	if (!phi.is_finite())
		throw std::invalid_argument("transpose needs finite bases");
	PhiMap::Table t;
	for (auto& a : phi.edge_basis().elements())
		for (auto& b : phi.vertex_basis().elements())
			t[{a, b}];
	for (auto& [in, out] : phi.tabulate())
		for (auto& [p, c] : out)
			t[p].add(in, c);
	PhiMap r = PhiMap::from_table(phi.edge_basis(), phi.vertex_basis(), std::move(t), phi.description() + "^T");
	return r;
}

PhiMap simple_tensor(DecorationBasis edges, DecorationBasis vertices, std::function<LinComb<Label>(const Label&)> f,
                     std::function<LinComb<Label>(const Label&)> g, std::string description)
{
	return PhiMap(
	    std::move(edges), std::move(vertices),
	    [f, g](const Label& a, const Label& b) {
		    PairComb out;
		    for (auto& [x, c] : f(a))
			    for (auto& [y, d] : g(b))
				    out.add({x, y}, c * d);
		    return out;
	    },
	    std::move(description), true);
}

// ---- sites

FlatComb apply_at(const PhiMap& phi, const FlatComb& x, int edgeVertex, int site)
{
	FlatComb out;
	for (auto& [f, c] : x)
		for (auto& [p, d] : phi(f.el[edgeVertex], f.vl[site]))
		{
			Flat g = f;
			g.el[edgeVertex] = p.first;
			g.vl[site] = p.second;
			out.add(std::move(g), c * d);
		}
	return out;
}

} // namespace rtcalc
