#pragma once

#include "rtcalc/scalar.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace rtcalc {

class MultiIndex
{
  public:
	MultiIndex() = default;
	explicit MultiIndex(std::vector<int> e);
	static MultiIndex zero(int d) { return MultiIndex(std::vector<int>(d + 1, 0)); }
	static MultiIndex unit(int d, int j);

	int size() const { return static_cast<int>(e_.size()); }
	int dim() const { return size() - 1; }
	int operator[](int i) const { return e_[i]; }
	const std::vector<int>& entries() const { return e_; }

	MultiIndex operator+(const MultiIndex& o) const;
	auto operator<=>(const MultiIndex&) const = default;
	std::string str() const;

  private:
	std::vector<int> e_;
};

// Stands for the zero vector produced by "c - l" when l is not below c.
struct Vanish
{
	bool operator==(const Vanish&) const = default;
};

bool mi_leq(const MultiIndex& a, const MultiIndex& b);
MultiIndex mi_min(const MultiIndex& a, const MultiIndex& b);
Scalar mi_binom(const MultiIndex& b, const MultiIndex& l);
std::variant<MultiIndex, Vanish> mi_sub(const MultiIndex& c, const MultiIndex& l);
Scalar lambda_pow(const std::vector<Scalar>& lambda, const MultiIndex& l);
int mi_abs(const MultiIndex& a);

// Every l with 0 <= l <= bound, in lexicographic order.
std::vector<MultiIndex> mi_below(const MultiIndex& bound);
// Every multi-index of length d+1 with entries <= maxEntry.
std::vector<MultiIndex> mi_box(int d, int maxEntry);

class Label
{
  public:
	enum class Kind
	{
		Sym,
		MI,
		Xi,
		Star,
		Pair
	};

	static Label sym(std::string name, int basisId = 0);
	static Label mi(MultiIndex m);
	static Label xi();
	static Label star();
	static Label pair(Label l, Label r);

	Kind kind() const { return kind_; }
	bool is_mi() const { return kind_ == Kind::MI; }
	const std::string& name() const { return name_; }
	int basis_id() const { return basisId_; }
	const MultiIndex& multi() const { return mi_; }
	const Label& left() const { return pair_->first; }
	const Label& right() const { return pair_->second; }

	std::string str() const;

	friend std::strong_ordering operator<=>(const Label& x, const Label& y);
	friend bool operator==(const Label& x, const Label& y) { return (x <=> y) == 0; }

  private:
	Kind kind_ = Kind::Sym;
	std::string name_;
	int basisId_ = 0;
	MultiIndex mi_;
	std::shared_ptr<const std::pair<Label, Label>> pair_;
};

class DecorationBasis
{
  public:
	enum class Kind
	{
		Finite,
		MultiIndices,
		MultiIndicesWithNoise,
		Noise,
		Sum,
		Product
	};

	static DecorationBasis finite(std::vector<std::string> names, int basisId = 0);
	static DecorationBasis multi_indices(int d);
	// noise must be Label::xi() for an edge basis or Label::star() for a vertex basis.
	static DecorationBasis multi_indices_with_noise(int d, Label noise);
	// The one-element basis {Xi} or {*}.
	static DecorationBasis noise(Label noise);
	// Disjoint union; throws if two parts can share a label. MultiIndices(d)
	// plus the matching Noise part collapses to MultiIndicesWithNoise.
	static DecorationBasis sum(std::vector<DecorationBasis> parts);
	static DecorationBasis product(DecorationBasis l, DecorationBasis r);

	Kind kind() const { return kind_; }
	int d() const { return d_; }
	bool contains(const Label& l) const;
	bool is_finite() const;
	// Finite bases only, in label order.
	std::vector<Label> elements() const;
	// All of a finite basis; for multi-indices every label with entries <= bound
	// (plus the noise label if any).
	std::vector<Label> elements_up_to(int bound) const;
	const std::vector<DecorationBasis>& parts() const { return parts_; }
	std::string str() const;
	bool operator==(const DecorationBasis& o) const { return str() == o.str(); }

  private:
	Kind kind_ = Kind::Finite;
	std::vector<std::string> names_;
	int basisId_ = 0;
	int d_ = 0;
	std::optional<Label> noise_;
	std::vector<DecorationBasis> parts_;
};

} // namespace rtcalc
