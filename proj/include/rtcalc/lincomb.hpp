#pragma once

#include "rtcalc/scalar.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>

namespace rtcalc {

// A finite formal sum over a totally ordered term type. Zero coefficients are
// never stored, so structural equality is semantic equality.
template <class T>
class LinComb
{
  public:
	using Map = std::map<T, Scalar>;
	using const_iterator = typename Map::const_iterator;

	LinComb() = default;
	explicit LinComb(T t, Scalar c = 1)
	{
		if (c != 0)
			terms_.emplace(std::move(t), std::move(c));
	}

	void add(const T& t, const Scalar& c)
	{
		if (c == 0)
			return;
		auto [it, fresh] = terms_.try_emplace(t, c);
		if (!fresh)
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}
	void add(T&& t, const Scalar& c)
	{
		if (c == 0)
			return;
		auto it = terms_.find(t);
		if (it == terms_.end())
			terms_.emplace(std::move(t), c);
		else
		{
			it->second += c;
			if (it->second == 0)
				terms_.erase(it);
		}
	}

	LinComb& operator+=(const LinComb& o)
	{
		for (auto& [t, c] : o.terms_)
			add(t, c);
		return *this;
	}
	LinComb& operator-=(const LinComb& o)
	{
		for (auto& [t, c] : o.terms_)
			add(t, -c);
		return *this;
	}
	LinComb& operator*=(const Scalar& s)
	{
		if (s == 0)
			terms_.clear();
		else
			for (auto& kv : terms_)
				kv.second *= s;
		return *this;
	}

	friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
	friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
	friend LinComb operator-(LinComb a) { return a *= Scalar(-1); }
	friend LinComb operator*(const Scalar& s, LinComb a) { return a *= s; }
	friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

	bool empty() const { return terms_.empty(); }
	bool is_zero() const { return terms_.empty(); }
	std::size_t size() const { return terms_.size(); }
	const_iterator begin() const { return terms_.begin(); }
	const_iterator end() const { return terms_.end(); }
	const Map& terms() const { return terms_; }

	Scalar coeff(const T& t) const
	{
		auto it = terms_.find(t);
		return it == terms_.end() ? Scalar(0) : it->second;
	}

  private:
	Map terms_;
};

template <class T>
LinComb<T> lc_add(const LinComb<T>& x, const LinComb<T>& y)
{
	return x + y;
}

template <class T>
LinComb<T> lc_scale(const Scalar& c, const LinComb<T>& x)
{
	return c * x;
}

template <class T>
bool lc_equal(const LinComb<T>& x, const LinComb<T>& y)
{
	return x == y;
}

// Linear extension of f: T -> LinComb<U>.
template <class T, class F>
auto lc_map(F&& f, const LinComb<T>& x) -> decltype(f(std::declval<const T&>()))
{
	decltype(f(std::declval<const T&>())) out;
	for (auto& [t, c] : x)
		for (auto& [u, d] : f(t))
			out.add(u, c * d);
	return out;
}

// "c1*t1 + c2*t2 - c3*t3"; unit coefficients are left implicit and the empty
// combination prints as 0.
template <class T, class R>
std::string render(const LinComb<T>& x, R&& term)
{
	if (x.empty())
		return "0";
	std::string out;
	bool first = true;
	for (auto& [t, c] : x)
	{
		Scalar a = abs(c);
		if (first)
			out += c < 0 ? "-" : "";
		else
			out += c < 0 ? " - " : " + ";
		first = false;
		if (a != 1)
			out += a.get_str() + "*";
		out += term(t);
	}
	return out;
}

} // namespace rtcalc
