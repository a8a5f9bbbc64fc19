#pragma once

#include "rtcalc/prelie.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rtcalc {

using GenComb = LinComb<int>; // combination of generator indices

// Finite-dimensional post-Lie algebra given by structure constants on its
// generators. The constructor rejects constants that break the axioms.
class PostLieBase
{
  public:
	struct Entry
	{
		int i, j, k;
		Scalar c; // {p_i, p_j} (or p_i |> p_j) contains c * p_k
	};

	PostLieBase(std::vector<std::string> gens, const std::vector<Entry>& bracket, const std::vector<Entry>& triangle);
	static PostLieBase trivial(std::vector<std::string> gens);

	int size() const { return static_cast<int>(gens_.size()); }
	const std::vector<std::string>& generators() const { return gens_; }
	int index_of(const std::string& name) const;
	bool is_trivial() const;

	GenComb bracket(const GenComb& x, const GenComb& y) const;
	GenComb triangle(const GenComb& x, const GenComb& y) const;
	std::string render(const GenComb& x) const;

  private:
	std::vector<std::string> gens_;
	std::vector<std::vector<GenComb>> br_, tr_;
};

// Actions of the generators on edge and vertex decorations.
struct PsiPair
{
	using Action = std::function<LinComb<Label>(int gen, const Label&)>;
	Action psiE;
	Action psiV;
	std::string description;

	LinComb<Label> E(const GenComb& p, const LinComb<Label>& a) const;
	LinComb<Label> V(const GenComb& p, const LinComb<Label>& b) const;
};

// Element of (D_E (x) trees) (+) P.
struct ExtElem
{
	PlantedComb planted;
	GenComb gens;

	static ExtElem of(PlantedTree p) { return {PlantedComb(std::move(p)), {}}; }
	static ExtElem gen(int i) { return {{}, GenComb(i)}; }
	bool is_zero() const { return planted.empty() && gens.empty(); }
	ExtElem& operator+=(const ExtElem& o);
	friend ExtElem operator+(ExtElem a, const ExtElem& b) { return a += b; }
	friend ExtElem operator-(ExtElem a, const ExtElem& b);
	friend ExtElem operator*(const Scalar& s, ExtElem a);
	bool operator==(const ExtElem& o) const { return planted == o.planted && gens == o.gens; }
};

struct Extension
{
	PhiMap phi;
	PostLieBase P;
	PsiPair psi;

	std::string render(const ExtElem& x) const;
};

ExtElem ext_triangle(const Extension& X, const ExtElem& u, const ExtElem& w);
ExtElem ext_bracket(const Extension& X, const ExtElem& u, const ExtElem& w);

struct Residual
{
	std::string name;
	long checked = 0;
	long failures = 0;
	std::string witness = {}; // first failure, empty if none
};
using ResidualReport = std::vector<Residual>;
bool all_zero(const ResidualReport& r);
std::string render(const ResidualReport& r);

// The four conditions on (phi, psi) over the sampled labels; EQ-names follow the
// usual numbering (EQ5 .. EQ8).
ResidualReport psi_compat_defects(const Extension& X, const std::vector<Label>& edgeLabels,
                                  const std::vector<Label>& vertexLabels);

struct AxiomResiduals
{
	ExtElem jacobi;     // {{u,v},w} + cyclic
	ExtElem derivation; // u |> {v,w} - {u |> v, w} - {v, u |> w}
	ExtElem postlie;    // {u,v} |> w - (associator difference)
	bool all_zero() const { return jacobi.is_zero() && derivation.is_zero() && postlie.is_zero(); }
};
AxiomResiduals postlie_axiom_defects(const Extension& X, const ExtElem& u, const ExtElem& v, const ExtElem& w);

} // namespace rtcalc
