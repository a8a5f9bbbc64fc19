#include "rtcalc/phimaps.hpp"

namespace rtcalc {

BlockMatrix BlockMatrix::zero(int m, int n)
{
	BlockMatrix M;
	M.m = m;
	M.n = n;
	M.blocks.assign(m, std::vector<QMatrix>(m, QMatrix(n, n)));
	return M;
}

// Row (i,p) and column (j,q) of the big matrix hold (A_ij)_pq.
QMatrix BlockMatrix::assemble() const
{
	QMatrix big(m * n, m * n);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			for (int p = 0; p < n; ++p)
				for (int q = 0; q < n; ++q)
					big(i * n + p, j * n + q) = blocks[i][j](p, q);
	return big;
}

BlockMatrix BlockMatrix::split(const QMatrix& big, int m, int n)
{
	if (big.rows() != m * n || big.cols() != m * n)
		throw std::invalid_argument("split: matrix is not (mn)x(mn)");
	BlockMatrix M = zero(m, n);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			for (int p = 0; p < n; ++p)
				for (int q = 0; q < n; ++q)
					M.blocks[i][j](p, q) = big(i * n + p, j * n + q);
	return M;
}

BlockMatrix BlockMatrix::transposed() const { return split(assemble().transposed(), m, n); }

static std::vector<std::string> numbered(const char* stem, int k)
{
	std::vector<std::string> v;
	for (int i = 1; i <= k; ++i)
		v.push_back(stem + std::to_string(i));
	return v;
}

PhiMap from_blocks(const BlockMatrix& M)
{
	if (M.m > 9 || M.n > 9)
		throw std::invalid_argument("from_blocks: default basis names only go up to 9");
	return from_blocks(M, DecorationBasis::finite(numbered("e", M.m), 0), DecorationBasis::finite(numbered("v", M.n), 1));
}

PhiMap from_blocks(const BlockMatrix& M, DecorationBasis edges, DecorationBasis vertices)
{
	auto E = edges.elements();
	auto V = vertices.elements();
	if (static_cast<int>(E.size()) != M.m || static_cast<int>(V.size()) != M.n)
		throw std::invalid_argument("from_blocks: basis sizes do not match the block layout");
	PhiMap::Table t;
	for (int j = 0; j < M.m; ++j)
		for (int q = 0; q < M.n; ++q)
		{
			PairComb out;
			for (int i = 0; i < M.m; ++i)
				for (int p = 0; p < M.n; ++p)
					out.add({E[i], V[p]}, M.blocks[i][j](p, q));
			t[{E[j], V[q]}] = out;
		}
	return PhiMap::from_table(std::move(edges), std::move(vertices), std::move(t), "blocks");
}

BlockMatrix to_blocks(const PhiMap& phi)
{
	if (!phi.is_finite())
		throw std::invalid_argument("to_blocks needs finite bases");
	auto E = phi.edge_basis().elements();
	auto V = phi.vertex_basis().elements();
	int m = static_cast<int>(E.size()), n = static_cast<int>(V.size());
	BlockMatrix M = BlockMatrix::zero(m, n);
	for (int j = 0; j < m; ++j)
		for (int q = 0; q < n; ++q)
		{
			PairComb img = phi(E[j], V[q]);
			for (int i = 0; i < m; ++i)
				for (int p = 0; p < n; ++p)
					M.blocks[i][j](p, q) = img.coeff({E[i], V[p]});
		}
	return M;
}

std::optional<std::array<int, 4>> non_commuting_blocks(const BlockMatrix& M)
{
	for (int i = 0; i < M.m; ++i)
		for (int j = 0; j < M.m; ++j)
			for (int k = 0; k < M.m; ++k)
				for (int l = 0; l < M.m; ++l)
				{
					auto& X = M.blocks[i][j];
					auto& Y = M.blocks[k][l];
					if (!(X * Y == Y * X))
						return std::array<int, 4>{i, j, k, l};
				}
	return std::nullopt;
}

bool blocks_commute(const BlockMatrix& M) { return !non_commuting_blocks(M); }

QMatrix cell(JDForm f, const Scalar& a, const Scalar& b)
{
	if (f == JDForm::J)
		return QMatrix{{a, b}, {0, a}};
	return QMatrix{{a, 0}, {0, b}};
}

BlockMatrix build_JD(const QMatrix& A, const QMatrix& B, JDForm form)
{
	if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
		throw std::invalid_argument("build_JD: A and B must be square of the same size");
	int m = A.rows();
	BlockMatrix M = BlockMatrix::zero(m, 2);
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
			M.blocks[i][j] = cell(form, A(i, j), B(i, j));
	return M;
}

std::string M2Classification::str() const
{
	switch (kind)
	{
	case Kind::AlreadyJD:
		return std::string("AlreadyJD(") + (form == JDForm::J ? "J" : "D") + ", A=" + A.str() + ", B=" + B.str() +
		       ", P=" + P.str() + ")";
	case Kind::NotCompatible:
		return "NotCompatible(" + witness + ")";
	case Kind::NeedsAlgebraicExtension:
		return "NeedsAlgebraicExtension(" + witness + ")";
	}
	return "?";
}

static std::optional<Scalar> rational_sqrt(const Scalar& x)
{
	if (x < 0)
		return std::nullopt;
	mpz_class n = x.get_num(), d = x.get_den();
	if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
		return std::nullopt;
	mpz_class rn, rd;
	mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
	mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
	return Scalar(rn, rd);
}

// Some nonzero column of a nonzero 2x2 matrix, as a vector.
static std::pair<Scalar, Scalar> nonzero_column(const QMatrix& K, int& col)
{
	for (col = 0; col < 2; ++col)
		if (K(0, col) != 0 || K(1, col) != 0)
			return {K(0, col), K(1, col)};
	throw std::logic_error("nonzero_column of a zero matrix");
}

M2Classification classify_m2(const BlockMatrix& M)
{
	if (M.n != 2)
		throw std::invalid_argument("classify_m2 needs 2x2 blocks");
	M2Classification r;
	if (auto bad = non_commuting_blocks(M))
	{
		auto [i, j, k, l] = *bad;
		r.kind = M2Classification::Kind::NotCompatible;
		r.witness = "A" + std::to_string(i + 1) + std::to_string(j + 1) + " and A" + std::to_string(k + 1) +
		            std::to_string(l + 1) + " do not commute";
		return r;
	}
	int m = M.m;
	r.A = QMatrix(m, m);
	r.B = QMatrix(m, m);
	r.P = QMatrix::identity(2);
	const QMatrix* pivot = nullptr;
	for (int i = 0; i < m && !pivot; ++i)
		for (int j = 0; j < m && !pivot; ++j)
			if (!M.blocks[i][j].is_scalar())
				pivot = &M.blocks[i][j];
	if (!pivot)
	{
		r.kind = M2Classification::Kind::AlreadyJD;
		r.form = JDForm::J;
		for (int i = 0; i < m; ++i)
			for (int j = 0; j < m; ++j)
				r.A(i, j) = M.blocks[i][j](0, 0);
		return r;
	}
	const QMatrix& N = *pivot;
	Scalar tr = N(0, 0) + N(1, 1);
	Scalar disc = tr * tr - 4 * N.det();
	QMatrix P(2, 2);
	if (disc == 0)
	{
		// single eigenvalue, N - cI is nilpotent and nonzero: P = [K v, v]
		Scalar c = tr / 2;
		QMatrix K = N - QMatrix::identity(2).scaled(c);
		int col;
		auto [x, y] = nonzero_column(K, col);
		P(0, 0) = x;
		P(1, 0) = y;
		P(col, 1) = 1;
		r.form = JDForm::J;
	}
	else
	{
		auto s = rational_sqrt(disc);
		if (!s)
		{
			r.kind = M2Classification::Kind::NeedsAlgebraicExtension;
			r.witness = "a non-scalar block has characteristic discriminant " + disc.get_str() +
			            ", not a rational square";
			return r;
		}
		Scalar l1 = (tr - *s) / 2, l2 = (tr + *s) / 2;
		// the eigenvector for l1 spans the image of N - l2 I, and vice versa
		int col;
		auto [x1, y1] = nonzero_column(N - QMatrix::identity(2).scaled(l2), col);
		auto [x2, y2] = nonzero_column(N - QMatrix::identity(2).scaled(l1), col);
		P(0, 0) = x1;
		P(1, 0) = y1;
		P(0, 1) = x2;
		P(1, 1) = y2;
		r.form = JDForm::D;
	}
	QMatrix Pinv = *P.inverse();
	for (int i = 0; i < m; ++i)
		for (int j = 0; j < m; ++j)
		{
			QMatrix C = Pinv * M.blocks[i][j] * P;
			Scalar a = C(0, 0);
			Scalar b = r.form == JDForm::J ? C(0, 1) : C(1, 1);
			if (!(C == cell(r.form, a, b)))
				throw std::logic_error("classify_m2: commuting block escaped the commutant of the pivot");
			r.A(i, j) = a;
			r.B(i, j) = b;
		}
	r.kind = M2Classification::Kind::AlreadyJD;
	r.P = P;
	return r;
}

} // namespace rtcalc
