#include "rtcalc/matrix.hpp"

#include <optional>
#include <stdexcept>

namespace rtcalc {

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Scalar>> rows)
{
	r_ = static_cast<int>(rows.size());
	c_ = r_ ? static_cast<int>(rows.begin()->size()) : 0;
	for (auto& row : rows)
	{
		if (static_cast<int>(row.size()) != c_)
			throw std::invalid_argument("ragged matrix literal");
		a_.insert(a_.end(), row.begin(), row.end());
	}
}

QMatrix QMatrix::identity(int n)
{
	QMatrix m(n, n);
	for (int i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
	if (c_ != o.r_)
		throw std::invalid_argument("matrix product dimension mismatch");
	QMatrix m(r_, o.c_);
	for (int i = 0; i < r_; ++i)
		for (int k = 0; k < c_; ++k)
		{
			if ((*this)(i, k) == 0)
				continue;
			for (int j = 0; j < o.c_; ++j)
				m(i, j) += (*this)(i, k) * o(k, j);
		}
	return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
	if (r_ != o.r_ || c_ != o.c_)
		throw std::invalid_argument("matrix sum dimension mismatch");
	QMatrix m = *this;
	for (std::size_t i = 0; i < a_.size(); ++i)
		m.a_[i] += o.a_[i];
	return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o.scaled(-1); }

QMatrix QMatrix::scaled(const Scalar& s) const
{
	QMatrix m = *this;
	for (auto& x : m.a_)
		x *= s;
	return m;
}

QMatrix QMatrix::transposed() const
{
	QMatrix m(c_, r_);
	for (int i = 0; i < r_; ++i)
		for (int j = 0; j < c_; ++j)
			m(j, i) = (*this)(i, j);
	return m;
}

bool QMatrix::is_zero() const
{
	for (auto& x : a_)
		if (x != 0)
			return false;
	return true;
}

bool QMatrix::is_scalar() const
{
	if (r_ != c_)
		return false;
	for (int i = 0; i < r_; ++i)
		for (int j = 0; j < c_; ++j)
			if (i != j ? (*this)(i, j) != 0 : (*this)(i, i) != (*this)(0, 0))
				return false;
	return true;
}

// Row echelon form in place; returns pivot columns and the sign of the row swaps.
static std::vector<int> echelon(QMatrix& m, int& sign)
{
	std::vector<int> pivots;
	sign = 1;
	int row = 0;
	for (int col = 0; col < m.cols() && row < m.rows(); ++col)
	{
		int p = row;
		while (p < m.rows() && m(p, col) == 0)
			++p;
		if (p == m.rows())
			continue;
		if (p != row)
		{
			for (int j = 0; j < m.cols(); ++j)
				std::swap(m(p, j), m(row, j));
			sign = -sign;
		}
		for (int i = row + 1; i < m.rows(); ++i)
		{
			if (m(i, col) == 0)
				continue;
			Scalar f = m(i, col) / m(row, col);
			for (int j = col; j < m.cols(); ++j)
				m(i, j) -= f * m(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	return pivots;
}

Scalar QMatrix::det() const
{
	if (r_ != c_)
		throw std::invalid_argument("det of a non-square matrix");
	QMatrix m = *this;
	int sign;
	auto piv = echelon(m, sign);
	if (static_cast<int>(piv.size()) < r_)
		return 0;
	Scalar d = sign;
	for (int i = 0; i < r_; ++i)
		d *= m(i, i);
	return d;
}

int QMatrix::rank() const
{
	QMatrix m = *this;
	int sign;
	return static_cast<int>(echelon(m, sign).size());
}

std::optional<QMatrix> QMatrix::inverse() const
{
	if (r_ != c_)
		return std::nullopt;
	int n = r_;
	QMatrix aug(n, 2 * n);
	for (int i = 0; i < n; ++i)
	{
		for (int j = 0; j < n; ++j)
			aug(i, j) = (*this)(i, j);
		aug(i, n + i) = 1;
	}
	for (int col = 0; col < n; ++col)
	{
		int p = col;
		while (p < n && aug(p, col) == 0)
			++p;
		if (p == n)
			return std::nullopt;
		for (int j = 0; j < 2 * n; ++j)
			std::swap(aug(p, j), aug(col, j));
		Scalar inv = 1 / aug(col, col);
		for (int j = 0; j < 2 * n; ++j)
			aug(col, j) *= inv;
		for (int i = 0; i < n; ++i)
		{
			if (i == col || aug(i, col) == 0)
				continue;
			Scalar f = aug(i, col);
			for (int j = 0; j < 2 * n; ++j)
				aug(i, j) -= f * aug(col, j);
		}
	}
	QMatrix out(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			out(i, j) = aug(i, n + j);
	return out;
}

std::vector<std::vector<Scalar>> QMatrix::nullspace() const
{
	// reduced row echelon form
	QMatrix m = *this;
	std::vector<int> pivots;
	int row = 0;
	for (int col = 0; col < c_ && row < r_; ++col)
	{
		int p = row;
		while (p < r_ && m(p, col) == 0)
			++p;
		if (p == r_)
			continue;
		for (int j = 0; j < c_; ++j)
			std::swap(m(p, j), m(row, j));
		Scalar inv = 1 / m(row, col);
		for (int j = 0; j < c_; ++j)
			m(row, j) *= inv;
		for (int i = 0; i < r_; ++i)
		{
			if (i == row || m(i, col) == 0)
				continue;
			Scalar f = m(i, col);
			for (int j = 0; j < c_; ++j)
				m(i, j) -= f * m(row, j);
		}
		pivots.push_back(col);
		++row;
	}
	std::vector<bool> isPivot(c_, false);
	for (int p : pivots)
		isPivot[p] = true;
	std::vector<std::vector<Scalar>> basis;
	for (int free = 0; free < c_; ++free)
	{
		if (isPivot[free])
			continue;
		std::vector<Scalar> v(c_);
		v[free] = 1;
		for (std::size_t k = 0; k < pivots.size(); ++k)
			v[pivots[k]] = -m(static_cast<int>(k), free);
		basis.push_back(std::move(v));
	}
	return basis;
}

std::string QMatrix::str() const
{
	std::string s = "[";
	for (int i = 0; i < r_; ++i)
	{
		s += i ? ";[" : "[";
		for (int j = 0; j < c_; ++j)
			s += (j ? "," : "") + (*this)(i, j).get_str();
		s += "]";
	}
	return s + "]";
}

} // namespace rtcalc
