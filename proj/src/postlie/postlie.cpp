#include "rtcalc/postlie.hpp"

#include <stdexcept>

namespace rtcalc {

static std::vector<std::vector<GenComb>> table(int n, const std::vector<PostLieBase::Entry>& es, const char* what)
{
	std::vector<std::vector<GenComb>> t(n, std::vector<GenComb>(n));
	for (auto& e : es)
	{
		if (e.i < 0 || e.j < 0 || e.k < 0 || e.i >= n || e.j >= n || e.k >= n)
			throw std::invalid_argument(std::string(what) + " entry refers to a missing generator");
		t[e.i][e.j].add(e.k, e.c);
	}
	return t;
}

PostLieBase::PostLieBase(std::vector<std::string> gens, const std::vector<Entry>& bracket,
                         const std::vector<Entry>& triangle)
    : gens_(std::move(gens))
{
	int n = size();
	br_ = table(n, bracket, "bracket");
	tr_ = table(n, triangle, "triangle");
	auto name = [&](int i) { return gens_[i]; };
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			if (!(br_[i][j] == -br_[j][i]))
				throw std::invalid_argument("bracket not antisymmetric on " + name(i) + "," + name(j));
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			for (int k = 0; k < n; ++k)
			{
				GenComb x(i), y(j), z(k);
				std::string at = " fails on (" + name(i) + "," + name(j) + "," + name(k) + ")";
				GenComb jac = this->bracket(this->bracket(x, y), z) + this->bracket(this->bracket(y, z), x) +
				              this->bracket(this->bracket(z, x), y);
				if (!jac.empty())
					throw std::invalid_argument("Jacobi identity" + at);
				GenComb der = this->triangle(x, this->bracket(y, z)) - this->bracket(this->triangle(x, y), z) -
				              this->bracket(y, this->triangle(x, z));
				if (!der.empty())
					throw std::invalid_argument("derivation rule for |>" + at);
				GenComb pl = this->triangle(this->bracket(x, y), z) -
				             (this->triangle(x, this->triangle(y, z)) - this->triangle(this->triangle(x, y), z) -
				              this->triangle(y, this->triangle(x, z)) + this->triangle(this->triangle(y, x), z));
				if (!pl.empty())
					throw std::invalid_argument("post-Lie relation" + at);
			}
}

PostLieBase PostLieBase::trivial(std::vector<std::string> gens) { return PostLieBase(std::move(gens), {}, {}); }

int PostLieBase::index_of(const std::string& name) const
{
	for (int i = 0; i < size(); ++i)
		if (gens_[i] == name)
			return i;
	throw std::invalid_argument("unknown generator '" + name + "'");
}

bool PostLieBase::is_trivial() const
{
	for (int i = 0; i < size(); ++i)
		for (int j = 0; j < size(); ++j)
			if (!br_[i][j].empty() || !tr_[i][j].empty())
				return false;
	return true;
}

static GenComb bilinear(const std::vector<std::vector<GenComb>>& t, const GenComb& x, const GenComb& y)
{
	GenComb out;
	for (auto& [i, c] : x)
		for (auto& [j, d] : y)
			out += (c * d) * t[i][j];
	return out;
}

GenComb PostLieBase::bracket(const GenComb& x, const GenComb& y) const { return bilinear(br_, x, y); }
GenComb PostLieBase::triangle(const GenComb& x, const GenComb& y) const { return bilinear(tr_, x, y); }

std::string PostLieBase::render(const GenComb& x) const
{
	return rtcalc::render(x, [this](int i) { return gens_[i]; });
}

LinComb<Label> PsiPair::E(const GenComb& p, const LinComb<Label>& a) const
{
	LinComb<Label> out;
	for (auto& [i, c] : p)
		out += c * lc_map([&](const Label& l) { return psiE(i, l); }, a);
	return out;
}

LinComb<Label> PsiPair::V(const GenComb& p, const LinComb<Label>& b) const
{
	LinComb<Label> out;
	for (auto& [i, c] : p)
		out += c * lc_map([&](const Label& l) { return psiV(i, l); }, b);
	return out;
}

ExtElem& ExtElem::operator+=(const ExtElem& o)
{
	planted += o.planted;
	gens += o.gens;
	return *this;
}

ExtElem operator-(ExtElem a, const ExtElem& b)
{
	a.planted -= b.planted;
	a.gens -= b.gens;
	return a;
}

ExtElem operator*(const Scalar& s, ExtElem a)
{
	a.planted *= s;
	a.gens *= s;
	return a;
}

std::string Extension::render(const ExtElem& x) const
{
	if (x.is_zero())
		return "0";
	if (x.gens.empty())
		return rtcalc::render(x.planted);
	if (x.planted.empty())
		return P.render(x.gens);
	return rtcalc::render(x.planted) + " + " + P.render(x.gens);
}

// p |> (a' (x) x'): psi_V(p) applied at one vertex at a time, summed over vertices.
static PlantedComb act_on_vertices(const PsiPair& psi, const GenComb& p, const PlantedComb& w)
{
	PlantedComb out;
	for (auto& [pw, cw] : w)
	{
		Flat f = explode(pw);
		for (int v = 0; v < f.size(); ++v)
			for (auto& [l, c] : psi.V(p, LinComb<Label>(f.vl[v])))
			{
				Flat g = f;
				g.vl[v] = l;
				out.add(implode_planted(g), cw * c);
			}
	}
	return out;
}

// {a (x) x, p} = psi_E(p)(a) (x) x
static PlantedComb act_on_plant_edge(const PsiPair& psi, const PlantedComb& u, const GenComb& p)
{
	PlantedComb out;
	for (auto& [pu, cu] : u)
		for (auto& [l, c] : psi.E(p, LinComb<Label>(pu.edge)))
			out.add(PlantedTree{l, pu.body}, cu * c);
	return out;
}

ExtElem ext_triangle(const Extension& X, const ExtElem& u, const ExtElem& w)
{
	ExtElem r;
	r.planted = planted_graft_phi(X.phi, u.planted, w.planted) + act_on_vertices(X.psi, u.gens, w.planted);
	// planted |> generator vanishes
	r.gens = X.P.triangle(u.gens, w.gens);
	return r;
}

ExtElem ext_bracket(const Extension& X, const ExtElem& u, const ExtElem& w)
{
	ExtElem r;
	r.planted = act_on_plant_edge(X.psi, u.planted, w.gens) - act_on_plant_edge(X.psi, w.planted, u.gens);
	r.gens = X.P.bracket(u.gens, w.gens);
	return r;
}

bool all_zero(const ResidualReport& r)
{
	for (auto& x : r)
		if (x.failures)
			return false;
	return true;
}

std::string render(const ResidualReport& r)
{
	std::string s;
	for (auto& x : r)
	{
		s += x.name + ": " + std::to_string(x.failures) + "/" + std::to_string(x.checked) + " nonzero";
		if (!x.witness.empty())
			s += "  first: " + x.witness;
		s += "\n";
	}
	return s;
}

static void record(Residual& r, bool nonzero, const std::string& witness)
{
	++r.checked;
	if (nonzero && !r.failures++)
		r.witness = witness;
}

ResidualReport psi_compat_defects(const Extension& X, const std::vector<Label>& edgeLabels,
                                  const std::vector<Label>& vertexLabels)
{
	const PostLieBase& P = X.P;
	const PsiPair& psi = X.psi;
	Residual eq5{"EQ5", 0, 0, {}}, eq6{"EQ6", 0, 0, {}}, eq7{"EQ7", 0, 0, {}}, eq8{"EQ8", 0, 0, {}};
	for (int i = 0; i < P.size(); ++i)
		for (int j = 0; j < P.size(); ++j)
		{
			GenComb p(i), q(j);
			std::string pq = P.generators()[i] + "," + P.generators()[j];
			for (auto& a : edgeLabels)
			{
				LinComb<Label> A(a);
				LinComb<Label> r5 = psi.E(P.bracket(p, q), A) - (psi.E(q, psi.E(p, A)) - psi.E(p, psi.E(q, A)));
				record(eq5, !r5.empty(), "(" + pq + ") on " + a.str());
				LinComb<Label> r6 = psi.E(P.triangle(p, q), A);
				record(eq6, !r6.empty(), "(" + pq + ") on " + a.str());
			}
			for (auto& b : vertexLabels)
			{
				LinComb<Label> B(b);
				LinComb<Label> r7 = psi.V(P.bracket(p, q), B) -
				                    (psi.V(p, psi.V(q, B)) - psi.V(q, psi.V(p, B)) - psi.V(P.triangle(p, q), B) +
				                     psi.V(P.triangle(q, p), B));
				record(eq7, !r7.empty(), "(" + pq + ") on " + b.str());
			}
		}
	// phi o (psi_E(p) (x) Id) = phi o (Id (x) psi_V(p)) - (Id (x) psi_V(p)) o phi
	auto edgeSide = [&](const GenComb& p, const Label& a, const Label& b) {
		PairComb in;
		for (auto& [l, c] : psi.E(p, LinComb<Label>(a)))
			in.add({l, b}, c);
		return X.phi.apply(in);
	};
	auto vertexSide = [&](const GenComb& p, const PairComb& x) {
		PairComb out;
		for (auto& [pr, c] : x)
			for (auto& [l, d] : psi.V(p, LinComb<Label>(pr.second)))
				out.add({pr.first, l}, c * d);
		return out;
	};
	for (int i = 0; i < P.size(); ++i)
	{
		GenComb p(i);
		for (auto& a : edgeLabels)
			for (auto& b : vertexLabels)
			{
				PairComb lhs = edgeSide(p, a, b);
				PairComb rhs = X.phi.apply(vertexSide(p, PairComb({a, b}))) - vertexSide(p, X.phi(a, b));
				record(eq8, !(lhs == rhs), "(" + P.generators()[i] + ") on " + render_pair({a, b}));
			}
	}
	return {eq5, eq6, eq7, eq8};
}

AxiomResiduals postlie_axiom_defects(const Extension& X, const ExtElem& u, const ExtElem& v, const ExtElem& w)
{
	auto br = [&](const ExtElem& x, const ExtElem& y) { return ext_bracket(X, x, y); };
	auto tri = [&](const ExtElem& x, const ExtElem& y) { return ext_triangle(X, x, y); };
	AxiomResiduals r;
	r.jacobi = br(br(u, v), w) + br(br(v, w), u) + br(br(w, u), v);
	r.derivation = tri(u, br(v, w)) - br(tri(u, v), w) - br(v, tri(u, w));
	r.postlie = tri(br(u, v), w) - (tri(u, tri(v, w)) - tri(tri(u, v), w) - tri(v, tri(u, w)) + tri(tri(v, u), w));
	return r;
}

} // namespace rtcalc
