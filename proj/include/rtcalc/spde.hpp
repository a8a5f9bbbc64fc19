#pragma once

#include "rtcalc/postlie.hpp"

#include <stdexcept>

namespace rtcalc {

struct SpdeConfig
{
	int d = 0;
	std::vector<Scalar> lambda; // length d+1
	bool noise = false;

	static SpdeConfig ones(int d, bool noise = false);
	void validate() const;
	SpdeConfig negated() const;
};

// b_j (a - e_j) (x) (b - e_j), zero when a_j or b_j is 0.
PairComb partial_j(int j, const MultiIndex& a, const MultiIndex& b);

PhiMap partial_lambda(const SpdeConfig& cfg);
// Closed form: sum over l <= min(a,b) of lambda^l binom(b,l) (a-l) (x) (b-l).
PhiMap phi_lambda(const SpdeConfig& cfg);
// exp of partial_lambda; only meant as a cross-check of phi_lambda.
PhiMap phi_lambda_via_exp(const SpdeConfig& cfg, int maxIter = 64);
// phi_lambda (+) zero on Xi (x) *, with (a,*) -> 0 and (Xi,b) -> (Xi,b).
PhiMap noise_extend(const SpdeConfig& cfg);
// noise_extend when cfg.noise is set, phi_lambda otherwise.
PhiMap spde_phi(const SpdeConfig& cfg);

// P spanned by X_0..X_d with zero bracket and triangle; X_i raises vertex
// multi-indices and lowers edge ones, killing * and Xi.
std::pair<PostLieBase, PsiPair> spde_psi(const SpdeConfig& cfg);
Extension spde_extension(const SpdeConfig& cfg);

bool xi_admissible(const PlantedTree& p);

struct NotReached : std::runtime_error
{
	PlantedComb residual;
	NotReached(const std::string& what, PlantedComb r) : std::runtime_error(what), residual(std::move(r)) {}
};

// Rebuilds each target as a combination of iterated products of the
// generators [Xi](*), [a](*), [a](b), evaluated from scratch. Throws
// NotReached if the rebuilt value differs from a target.
bool xi_generation_probe(const SpdeConfig& cfg, const std::vector<PlantedTree>& targets, int maxVertices);

// Every Xi-admissible planted tree with at most n vertices whose multi-index
// entries are <= maxEntry.
std::vector<PlantedTree> admissible_trees(int d, int n, int maxEntry);

} // namespace rtcalc
