#pragma once

#include "rtcalc/postlie.hpp"

#include <functional>
#include <stdexcept>

namespace rtcalc {

using ForestComb = LinComb<Forest>;
using ForestPair = std::pair<Forest, Forest>;
using ForestTensor = LinComb<ForestPair>;

std::string render(const ForestComb& x);
std::string render(const ForestTensor& x); // terms as (left | right)

ForestComb forest_product(const ForestComb& x, const ForestComb& y);
ForestTensor tensor_product(const ForestTensor& x, const ForestTensor& y); // componentwise
ForestTensor tensor(const ForestComb& x, const ForestComb& y);
// coefficient of the empty forest
Scalar counit(const ForestComb& x);

// Every tree of f hung on some vertex of p, phi applied at each landing site.
PlantedComb go_triangle(const PhiMap& phi, const ForestComb& f, const PlantedComb& p);
// Sum over grafting maps F -> V(G) + {apart}.
ForestComb star_product(const PhiMap& phi, const ForestComb& f, const ForestComb& g);
// Primitive planted trees; sums over sub-multisets by index, so repeats get
// binomial weights.
ForestTensor deshuffle(const ForestComb& f);
// Upper part on the left. phi acts at every edge leaving the lower part,
// on (edge label, label of its lower end).
ForestTensor bck_coproduct(const PhiMap& phi, const ForestComb& f);
ForestComb theta_bar(const PhiMap& phi, const ForestComb& f);

// Base pairing on (edge label, vertex label) pairs; primed side first.
struct Pairing
{
	std::function<Scalar(const LabelPair&, const LabelPair&)> base;
	std::string description;

	static Pairing delta();
	Scalar operator()(const PairComb& primed, const PairComb& x) const;
};

Scalar pair_forests(const Pairing& pr, const ForestComb& primed, const ForestComb& x);
Scalar pair_tensors(const Pairing& pr, const ForestTensor& primed, const ForestTensor& x);

struct AdjointnessViolated : std::runtime_error
{
	LabelPair primed, plain;
	AdjointnessViolated(const std::string& what, LabelPair p, LabelPair q)
	    : std::runtime_error(what), primed(std::move(p)), plain(std::move(q))
	{
	}
};

// <phi2(p), q> == <p, phi(q)> over the given label sets; throws AdjointnessViolated.
void require_adjoint(const PhiMap& phi, const PhiMap& phi2, const Pairing& pr, const std::vector<LabelPair>& primed,
                     const std::vector<LabelPair>& plain);

// Four residuals: star/coproduct, coproduct/product and the two unit/counit ones.
// Primed samples are paired against plain samples (and pairs of them).
ResidualReport hopf_pairing_defects(const PhiMap& phi, const PhiMap& phi2, const Pairing& pr,
                                    const std::vector<Forest>& primedSamples, const std::vector<Forest>& samples);

} // namespace rtcalc
