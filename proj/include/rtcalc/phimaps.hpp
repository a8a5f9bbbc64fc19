#pragma once

#include "rtcalc/decorations.hpp"
#include "rtcalc/lincomb.hpp"
#include "rtcalc/matrix.hpp"
#include "rtcalc/trees.hpp"

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>

namespace rtcalc {

using LabelPair = std::pair<Label, Label>;
using PairComb = LinComb<LabelPair>;
using LabelTriple = std::tuple<Label, Label, Label>;
using TripleComb = LinComb<LabelTriple>;

std::string render_pair(const LabelPair& p);     // "[a](b)"
std::string render_triple(const LabelTriple& t); // "a|a'|b"

// A linear endomorphism of D_E (x) D_V, known through its values on basis pairs.
class PhiMap
{
  public:
	using Action = std::function<PairComb(const Label&, const Label&)>;
	using Table = std::map<LabelPair, PairComb>;

	PhiMap(DecorationBasis edges, DecorationBasis vertices, Action act, std::string description,
	       bool compatibleByConstruction = false);
	// For finite bases the table must cover every basis pair.
	static PhiMap from_table(DecorationBasis edges, DecorationBasis vertices, Table table, std::string description);

	const DecorationBasis& edge_basis() const { return edges_; }
	const DecorationBasis& vertex_basis() const { return vertices_; }
	const std::string& description() const { return desc_; }
	bool compatible_by_construction() const { return cbc_; }
	const std::optional<Table>& table() const { return table_; }
	bool is_finite() const { return edges_.is_finite() && vertices_.is_finite(); }

	// Value on a basis pair; throws std::invalid_argument for labels outside the bases.
	PairComb operator()(const Label& a, const Label& b) const;
	PairComb apply(const PairComb& x) const;
	// Full table over the finite bases.
	Table tabulate() const;

	PhiMap with_description(std::string d) const;

  private:
	friend void require_not_refuted(const PhiMap& phi);
	struct Cache;
	DecorationBasis edges_, vertices_;
	Action act_;
	std::string desc_;
	bool cbc_ = false;
	std::optional<Table> table_;
	std::shared_ptr<Cache> cache_;
};

PairComb phi_apply(const PhiMap& phi, const Label& a, const Label& b);

struct NonNilpotent : std::runtime_error
{
	LabelPair input;
	NonNilpotent(LabelPair in, int iters);
};

struct IncompatiblePhi : std::runtime_error
{
	LabelTriple witness;
	IncompatiblePhi(const std::string& what, LabelTriple w) : std::runtime_error(what), witness(std::move(w)) {}
};

// ---- compatibility

TripleComb phi13_phi23_defect(const PhiMap& phi, const Label& a, const Label& a2, const Label& b);
// psi13 o phi23 - phi23 o psi13, the cross hypothesis for compositions and sums.
TripleComb cross_defect(const PhiMap& psi, const PhiMap& phi, const Label& a, const Label& a2, const Label& b);

struct CompatVerdict
{
	enum class Status
	{
		Compatible,
		Refuted,
		VerifiedUpToBound
	};
	Status status = Status::Compatible;
	int bound = 0;
	std::optional<LabelTriple> witness;
	TripleComb lhs, rhs; // phi13 o phi23 and phi23 o phi13 at the witness

	bool refuted() const { return status == Status::Refuted; }
	std::string str() const;
};

// bound is required (and only used) when a basis is infinite.
CompatVerdict check_compat(const PhiMap& phi, std::optional<int> bound = std::nullopt);
CompatVerdict check_compat(const PhiMap& phi, const std::vector<LabelTriple>& triples);

// Throws IncompatiblePhi unless phi is compatible by construction or survives
// check_compat (at a small bound for infinite bases).
void require_not_refuted(const PhiMap& phi);

// ---- combinators

PhiMap identity_map(DecorationBasis edges, DecorationBasis vertices);
PhiMap zero_map(DecorationBasis edges, DecorationBasis vertices);
PhiMap direct_sum(const PhiMap& phi1, const PhiMap& phi2, const Scalar& lambda, const Scalar& mu);
// (phi o psi)(x) = phi(psi(x))
PhiMap compose(const PhiMap& phi, const PhiMap& psi);
PhiMap lin_comb(const Scalar& alpha, const PhiMap& phi, const Scalar& beta, const PhiMap& psi);
// coeffs[k] multiplies phi^k
PhiMap polynomial(const PhiMap& phi, std::vector<Scalar> coeffs);
PhiMap exp_series(const PhiMap& phi, int maxIter = 64);
PhiMap tensor_product(const PhiMap& phi, const PhiMap& phi2);
PhiMap transpose(const PhiMap& phi);
// f (x) g from endomorphisms of each factor, given on basis labels.
PhiMap simple_tensor(DecorationBasis edges, DecorationBasis vertices,
                     std::function<LinComb<Label>(const Label&)> f, std::function<LinComb<Label>(const Label&)> g,
                     std::string description);

// ---- matrices of phi

struct BlockMatrix
{
	int m = 0, n = 0;
	std::vector<std::vector<QMatrix>> blocks; // blocks[i][j] is A_ij, n x n

	static BlockMatrix zero(int m, int n);
	QMatrix assemble() const;
	static BlockMatrix split(const QMatrix& big, int m, int n);
	BlockMatrix transposed() const; // blocks (A_ji^T)
	bool operator==(const BlockMatrix&) const = default;
};

// phi(a_j (x) b) = sum_i a_i (x) A_ij b, in the bases e1..em and v1..vn unless given.
PhiMap from_blocks(const BlockMatrix& M);
PhiMap from_blocks(const BlockMatrix& M, DecorationBasis edges, DecorationBasis vertices);
BlockMatrix to_blocks(const PhiMap& phi);
bool blocks_commute(const BlockMatrix& M);
// First non-commuting pair ((i,j),(k,l)), if any.
std::optional<std::array<int, 4>> non_commuting_blocks(const BlockMatrix& M);

enum class JDForm
{
	J,
	D
};
QMatrix cell(JDForm f, const Scalar& a, const Scalar& b);
BlockMatrix build_JD(const QMatrix& A, const QMatrix& B, JDForm form);

struct M2Classification
{
	enum class Kind
	{
		AlreadyJD,
		NotCompatible,
		NeedsAlgebraicExtension
	};
	Kind kind = Kind::NotCompatible;
	JDForm form = JDForm::J;
	QMatrix A, B, P; // every block becomes P^-1 A_ij P = cell(form, a_ij, b_ij)
	std::string witness;
	std::string str() const;
};
M2Classification classify_m2(const BlockMatrix& M);

// ---- phi at a site of an exploded tree

using FlatComb = LinComb<Flat>;
// Replaces (el[edgeVertex], vl[site]) by their image under phi in every term.
FlatComb apply_at(const PhiMap& phi, const FlatComb& x, int edgeVertex, int site);

} // namespace rtcalc
