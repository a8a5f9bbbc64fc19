#pragma once

#include "rtcalc/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rtcalc {

// Small dense matrix over the rationals. Sizes here never exceed a few dozen,
// so plain Gaussian elimination is all that is needed.
class QMatrix
{
  public:
	QMatrix() = default;
	QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols) {}
	QMatrix(std::initializer_list<std::initializer_list<Scalar>> rows);
	static QMatrix identity(int n);

	int rows() const { return r_; }
	int cols() const { return c_; }
	Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
	const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

	QMatrix operator*(const QMatrix& o) const;
	QMatrix operator+(const QMatrix& o) const;
	QMatrix operator-(const QMatrix& o) const;
	QMatrix scaled(const Scalar& s) const;
	QMatrix transposed() const;
	bool operator==(const QMatrix& o) const = default;

	bool is_zero() const;
	bool is_scalar() const; // multiple of the identity
	Scalar det() const;
	std::optional<QMatrix> inverse() const;
	int rank() const;
	// Basis of {x : M x = 0}, one column vector per entry.
	std::vector<std::vector<Scalar>> nullspace() const;
	std::string str() const;

  private:
	int r_ = 0, c_ = 0;
	std::vector<Scalar> a_;
};

} // namespace rtcalc
