#include "rtcalc/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace rtcalc {

Scalar make_scalar(long num, long den)
{
	if (den == 0)
		throw std::invalid_argument("zero denominator");
	Scalar s(num, den);
	s.canonicalize();
	return s;
}

static bool all_digits(std::string_view t)
{
	if (t.empty())
		return false;
	for (char c : t)
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
	return true;
}

Scalar parse_scalar(std::string_view text)
{
	std::string_view t = text;
	bool neg = false;
	if (!t.empty() && (t.front() == '-' || t.front() == '+'))
	{
		neg = t.front() == '-';
		t.remove_prefix(1);
	}
	auto slash = t.find('/');
	std::string_view num = t.substr(0, slash);
	std::string_view den = slash == std::string_view::npos ? std::string_view("1") : t.substr(slash + 1);
	if (!all_digits(num) || !all_digits(den))
		throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
	mpz_class n(std::string(num), 10), d(std::string(den), 10);
	if (d == 0)
		throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
	Scalar s(n, d);
	s.canonicalize();
	if (neg)
		s = -s;
	return s;
}

std::string to_string(const Scalar& s) { return s.get_str(); }

Scalar factorial(unsigned n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return Scalar(r);
}

Scalar binomial(unsigned n, unsigned k)
{
	if (k > n)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Scalar(r);
}

} // namespace rtcalc
