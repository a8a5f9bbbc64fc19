#include "rtcalc/decorations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace rtcalc {

MultiIndex::MultiIndex(std::vector<int> e) : e_(std::move(e))
{
	if (e_.empty())
		throw std::invalid_argument("multi-index needs at least one entry");
	for (int x : e_)
		if (x < 0)
			throw std::invalid_argument("negative multi-index entry");
}

MultiIndex MultiIndex::unit(int d, int j)
{
	if (j < 0 || j > d)
		throw std::out_of_range("unit index " + std::to_string(j) + " outside 0.." + std::to_string(d));
	std::vector<int> e(d + 1, 0);
	e[j] = 1;
	return MultiIndex(std::move(e));
}

static void same_len(const MultiIndex& a, const MultiIndex& b)
{
	if (a.size() != b.size())
		throw std::invalid_argument("multi-index length mismatch: " + a.str() + " vs " + b.str());
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const
{
	same_len(*this, o);
	std::vector<int> r(e_);
	for (int i = 0; i < size(); ++i)
		r[i] += o[i];
	return MultiIndex(std::move(r));
}

std::string MultiIndex::str() const
{
	std::string s = "<";
	for (int i = 0; i < size(); ++i)
	{
		if (i)
			s += ',';
		s += std::to_string(e_[i]);
	}
	return s + ">";
}

bool mi_leq(const MultiIndex& a, const MultiIndex& b)
{
	same_len(a, b);
	for (int i = 0; i < a.size(); ++i)
		if (a[i] > b[i])
			return false;
	return true;
}

MultiIndex mi_min(const MultiIndex& a, const MultiIndex& b)
{
	same_len(a, b);
	std::vector<int> r(a.size());
	for (int i = 0; i < a.size(); ++i)
		r[i] = std::min(a[i], b[i]);
	return MultiIndex(std::move(r));
}

Scalar mi_binom(const MultiIndex& b, const MultiIndex& l)
{
	if (!mi_leq(l, b))
		throw std::invalid_argument("mi_binom: " + l.str() + " not <= " + b.str());
	Scalar r = 1;
	for (int i = 0; i < b.size(); ++i)
		r *= binomial(b[i], l[i]);
	return r;
}

std::variant<MultiIndex, Vanish> mi_sub(const MultiIndex& c, const MultiIndex& l)
{
	same_len(c, l);
	if (!mi_leq(l, c))
		return Vanish{};
	std::vector<int> r(c.size());
	for (int i = 0; i < c.size(); ++i)
		r[i] = c[i] - l[i];
	return MultiIndex(std::move(r));
}

Scalar lambda_pow(const std::vector<Scalar>& lambda, const MultiIndex& l)
{
	if (static_cast<int>(lambda.size()) != l.size())
		throw std::invalid_argument("lambda has " + std::to_string(lambda.size()) + " entries, multi-index " +
		                            std::to_string(l.size()));
	Scalar r = 1;
	for (int i = 0; i < l.size(); ++i)
		for (int k = 0; k < l[i]; ++k) // 0^0 = 1 falls out of the empty product
			r *= lambda[i];
	return r;
}

int mi_abs(const MultiIndex& a)
{
	int s = 0;
	for (int x : a.entries())
		s += x;
	return s;
}

std::vector<MultiIndex> mi_below(const MultiIndex& bound)
{
	std::vector<MultiIndex> out;
	std::vector<int> cur(bound.size(), 0);
	for (;;)
	{
		out.emplace_back(cur);
		int i = bound.size() - 1;
		while (i >= 0 && cur[i] == bound[i])
			cur[i--] = 0;
		if (i < 0)
			return out;
		++cur[i];
	}
}

std::vector<MultiIndex> mi_box(int d, int maxEntry)
{
	return mi_below(MultiIndex(std::vector<int>(d + 1, maxEntry)));
}

// ---- labels

Label Label::sym(std::string name, int basisId)
{
	if (name.empty())
		throw std::invalid_argument("empty symbol name");
	Label l;
	l.kind_ = Kind::Sym;
	l.name_ = std::move(name);
	l.basisId_ = basisId;
	return l;
}

Label Label::mi(MultiIndex m)
{
	Label l;
	l.kind_ = Kind::MI;
	l.mi_ = std::move(m);
	return l;
}

Label Label::xi()
{
	Label l;
	l.kind_ = Kind::Xi;
	return l;
}

Label Label::star()
{
	Label l;
	l.kind_ = Kind::Star;
	return l;
}

Label Label::pair(Label a, Label b)
{
	Label l;
	l.kind_ = Kind::Pair;
	l.pair_ = std::make_shared<const std::pair<Label, Label>>(std::move(a), std::move(b));
	return l;
}

std::string Label::str() const
{
	switch (kind_)
	{
	case Kind::Sym:
		return name_;
	case Kind::MI:
		return mi_.str();
	case Kind::Xi:
		return "Xi";
	case Kind::Star:
		return "*";
	case Kind::Pair:
		return "{" + left().str() + "," + right().str() + "}";
	}
	return "?";
}

std::strong_ordering operator<=>(const Label& x, const Label& y)
{
	if (x.kind_ != y.kind_)
		return x.kind_ <=> y.kind_;
	switch (x.kind_)
	{
	case Label::Kind::Sym:
		if (auto c = x.basisId_ <=> y.basisId_; c != 0)
			return c;
		return x.name_ <=> y.name_;
	case Label::Kind::MI:
		return x.mi_ <=> y.mi_;
	case Label::Kind::Pair:
		if (auto c = x.left() <=> y.left(); c != 0)
			return c;
		return x.right() <=> y.right();
	default:
		return std::strong_ordering::equal;
	}
}

// ---- bases

DecorationBasis DecorationBasis::finite(std::vector<std::string> names, int basisId)
{
	std::set<std::string> seen;
	for (auto& n : names)
	{
		if (n.empty())
			throw std::invalid_argument("empty symbol name");
		if (!seen.insert(n).second)
			throw std::invalid_argument("duplicate symbol '" + n + "'");
	}
	DecorationBasis b;
	b.kind_ = Kind::Finite;
	b.names_ = std::move(names);
	b.basisId_ = basisId;
	return b;
}

DecorationBasis DecorationBasis::multi_indices(int d)
{
	if (d < 0)
		throw std::invalid_argument("d must be >= 0");
	DecorationBasis b;
	b.kind_ = Kind::MultiIndices;
	b.d_ = d;
	return b;
}

static void check_noise(const Label& n)
{
	if (n.kind() != Label::Kind::Xi && n.kind() != Label::Kind::Star)
		throw std::invalid_argument("noise label must be Xi or *");
}

DecorationBasis DecorationBasis::multi_indices_with_noise(int d, Label noise)
{
	check_noise(noise);
	DecorationBasis b = multi_indices(d);
	b.kind_ = Kind::MultiIndicesWithNoise;
	b.noise_ = std::move(noise);
	return b;
}

DecorationBasis DecorationBasis::noise(Label n)
{
	check_noise(n);
	DecorationBasis b;
	b.kind_ = Kind::Noise;
	b.noise_ = std::move(n);
	return b;
}

// Conservative: two parts overlap if some label could belong to both.
static bool may_overlap(const DecorationBasis& x, const DecorationBasis& y)
{
	using K = DecorationBasis::Kind;
	auto hasMI = [](const DecorationBasis& b) {
		return b.kind() == K::MultiIndices || b.kind() == K::MultiIndicesWithNoise;
	};
	if (hasMI(x) && hasMI(y))
		return true;
	if (x.is_finite() && y.is_finite())
	{
		for (auto& l : x.elements())
			if (y.contains(l))
				return true;
		return false;
	}
	const DecorationBasis& fin = x.is_finite() ? x : y;
	const DecorationBasis& inf = x.is_finite() ? y : x;
	if (!fin.is_finite())
		return true; // two infinite non-MI parts: sums/products, give up
	for (auto& l : fin.elements())
		if (inf.contains(l))
			return true;
	return false;
}

DecorationBasis DecorationBasis::sum(std::vector<DecorationBasis> parts)
{
	if (parts.empty())
		throw std::invalid_argument("empty direct sum");
	for (std::size_t i = 0; i < parts.size(); ++i)
		for (std::size_t j = i + 1; j < parts.size(); ++j)
			if (may_overlap(parts[i], parts[j]))
				throw std::invalid_argument("direct sum of overlapping bases " + parts[i].str() + " and " +
				                            parts[j].str());
	if (parts.size() == 2 && parts[0].kind() == Kind::MultiIndices && parts[1].kind() == Kind::Noise)
		return multi_indices_with_noise(parts[0].d(), *parts[1].noise_);
	if (parts.size() == 1)
		return parts[0];
	DecorationBasis b;
	b.kind_ = Kind::Sum;
	b.parts_ = std::move(parts);
	return b;
}

DecorationBasis DecorationBasis::product(DecorationBasis l, DecorationBasis r)
{
	DecorationBasis b;
	b.kind_ = Kind::Product;
	b.parts_ = {std::move(l), std::move(r)};
	return b;
}

bool DecorationBasis::contains(const Label& l) const
{
	switch (kind_)
	{
	case Kind::Finite:
		return l.kind() == Label::Kind::Sym && l.basis_id() == basisId_ &&
		       std::find(names_.begin(), names_.end(), l.name()) != names_.end();
	case Kind::MultiIndices:
		return l.is_mi() && l.multi().size() == d_ + 1;
	case Kind::MultiIndicesWithNoise:
		return (l.is_mi() && l.multi().size() == d_ + 1) || l == *noise_;
	case Kind::Noise:
		return l == *noise_;
	case Kind::Sum:
		for (auto& p : parts_)
			if (p.contains(l))
				return true;
		return false;
	case Kind::Product:
		return l.kind() == Label::Kind::Pair && parts_[0].contains(l.left()) && parts_[1].contains(l.right());
	}
	return false;
}

bool DecorationBasis::is_finite() const
{
	switch (kind_)
	{
	case Kind::Finite:
	case Kind::Noise:
		return true;
	case Kind::MultiIndices:
	case Kind::MultiIndicesWithNoise:
		return false;
	case Kind::Sum:
	case Kind::Product:
		return std::all_of(parts_.begin(), parts_.end(), [](auto& p) { return p.is_finite(); });
	}
	return false;
}

std::vector<Label> DecorationBasis::elements() const
{
	if (!is_finite())
		throw std::logic_error("elements() on the infinite basis " + str());
	return elements_up_to(0);
}

std::vector<Label> DecorationBasis::elements_up_to(int bound) const
{
	std::vector<Label> out;
	switch (kind_)
	{
	case Kind::Finite:
		for (auto& n : names_)
			out.push_back(Label::sym(n, basisId_));
		break;
	case Kind::Noise:
		out.push_back(*noise_);
		break;
	case Kind::MultiIndices:
	case Kind::MultiIndicesWithNoise:
		for (auto& m : mi_box(d_, bound))
			out.push_back(Label::mi(m));
		if (noise_)
			out.push_back(*noise_);
		break;
	case Kind::Sum:
		for (auto& p : parts_)
			for (auto& l : p.elements_up_to(bound))
				out.push_back(l);
		break;
	case Kind::Product:
		for (auto& x : parts_[0].elements_up_to(bound))
			for (auto& y : parts_[1].elements_up_to(bound))
				out.push_back(Label::pair(x, y));
		break;
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::string DecorationBasis::str() const
{
	switch (kind_)
	{
	case Kind::Finite:
	{
		std::string s = "{";
		for (std::size_t i = 0; i < names_.size(); ++i)
			s += (i ? "," : "") + names_[i];
		return s + "}#" + std::to_string(basisId_);
	}
	case Kind::MultiIndices:
		return "N^" + std::to_string(d_ + 1);
	case Kind::MultiIndicesWithNoise:
		return "N^" + std::to_string(d_ + 1) + "+" + noise_->str();
	case Kind::Noise:
		return "{" + noise_->str() + "}";
	case Kind::Sum:
	{
		std::string s = "(";
		for (std::size_t i = 0; i < parts_.size(); ++i)
			s += (i ? " (+) " : "") + parts_[i].str();
		return s + ")";
	}
	case Kind::Product:
		return "(" + parts_[0].str() + " (x) " + parts_[1].str() + ")";
	}
	return "?";
}

} // namespace rtcalc
