#pragma once

#include "rtcalc/phimaps.hpp"

#include <functional>

namespace rtcalc {

using TreeComb = LinComb<Tree>;
using PlantedComb = LinComb<PlantedTree>;
using PlantedPair = std::pair<PlantedTree, PlantedTree>;

std::string render(const TreeComb& x);
std::string render(const PlantedComb& x);

// x |>_a y: graft x on every vertex of y through a new edge labelled a.
TreeComb graft_free(const TreeComb& x, const Label& a, const TreeComb& y);
// Same sum, with phi applied to (new edge, receiving vertex) after each graft.
// Deliberately accepts any phi, compatible or not.
TreeComb graft_phi(const PhiMap& phi, const TreeComb& x, const Label& a, const TreeComb& y);

// (a (x) x) |> (a' (x) x') = a' (x) (x |>_a x'), the planted pre-Lie product.
PlantedComb planted_graft_phi(const PhiMap& phi, const PlantedComb& u, const PlantedComb& w);
PlantedComb planted_graft_free(const PlantedComb& u, const PlantedComb& w);

enum class EdgeOrder
{
	Canonical,
	Reversed,
	Checked // both orders, throws std::logic_error if they differ
};

// phi applied once at every (edge, source vertex). Refuses a refuted phi.
TreeComb theta(const PhiMap& phi, const TreeComb& x, EdgeOrder order = EdgeOrder::Canonical);
FlatComb theta_flat(const PhiMap& phi, const Flat& f, EdgeOrder order = EdgeOrder::Canonical);

using GraftProduct = std::function<TreeComb(const TreeComb&, const Label&, const TreeComb&)>;
GraftProduct free_product();
GraftProduct phi_product(const PhiMap& phi);

// x |>_a (y |>_a2 z) - (x |>_a y) |>_a2 z - y |>_a2 (x |>_a z) + (y |>_a2 x) |>_a z
TreeComb multiple_prelie_defect(const GraftProduct& prod, const Label& a, const Label& a2, const TreeComb& x,
                                const TreeComb& y, const TreeComb& z);

// Theta_phi(x |>^psi_a y) - Theta_phi(x) |>^{phi o psi}_a Theta_phi(y)
TreeComb theta_morphism_defect(const PhiMap& phi, const PhiMap& psi, const TreeComb& x, const Label& a,
                               const TreeComb& y);

// Splits at each edge leaving the body root: (d_e (x) upper part) (x) (a (x) rest).
LinComb<PlantedPair> nap_coproduct(const PlantedComb& x);
// Regrafts the first planted tree at the body root of the second.
PlantedComb nap_regraft(const LinComb<PlantedPair>& x);
// regraft(rho(x)) == (number of root edges) * x
bool nap_eigen_check(const PlantedTree& x);
// Kernel of rho restricted to the span of the given basis trees.
std::vector<PlantedComb> nap_kernel(const std::vector<PlantedTree>& basis);

} // namespace rtcalc
