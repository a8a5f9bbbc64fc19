#include "rtcalc/cli.hpp"

#include <functional>
#include <ostream>
#include <random>

namespace rtcalc {

namespace {

struct Battery
{
	std::ostream& out;
	int failures = 0;

	void check(const std::string& name, const std::function<std::string()>& body)
	{
		std::string problem;
		try
		{
			problem = body();
		}
		catch (const std::exception& e)
		{
			problem = std::string("exception: ") + e.what();
		}
		if (problem.empty())
			out << "PASS " << name << std::endl;
		else
		{
			++failures;
			out << "FAIL " << name << ": " << problem << std::endl;
		}
	}
};

Scalar small_rational(std::mt19937& rng)
{
	std::uniform_int_distribution<int> num(-3, 3), den(1, 2);
	int n = num(rng);
	return make_scalar(n, den(rng));
}

QMatrix random_matrix(std::mt19937& rng, int n)
{
	QMatrix M(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			M(i, j) = small_rational(rng);
	return M;
}

std::vector<Label> names(const DecorationBasis& B) { return B.elements(); }

std::vector<Tree> small_trees(const std::vector<Label>& V, const std::vector<Label>& E, int n)
{
	std::vector<Tree> out;
	for (int k = 1; k <= n; ++k)
		for (auto& t : trees_of_size(k, V, E))
			out.push_back(t);
	return out;
}

std::vector<Forest> small_forests(const std::vector<Label>& V, const std::vector<Label>& E, int n)
{
	// forests are multisets of planted trees; build by vertex count
	std::vector<PlantedTree> planted;
	for (auto& t : small_trees(V, E, n))
		for (auto& e : E)
			planted.push_back({e, t});
	std::vector<Forest> out{Forest::one()};
	std::vector<Forest> frontier{Forest::one()};
	while (!frontier.empty())
	{
		std::vector<Forest> next;
		for (auto& f : frontier)
			for (auto& p : planted)
			{
				if (!f.trees.empty() && p < f.trees.back())
					continue;
				if (f.vertex_count() + p.vertex_count() > n)
					continue;
				Forest g = f * Forest::of(p);
				next.push_back(g);
				out.push_back(g);
			}
		frontier = std::move(next);
	}
	return out;
}

} // namespace

int verify_suite(const std::string& level, std::ostream& out)
{
	bool full = level == "full";
	Battery b{out};
	std::mt19937 rng(20240611);

	b.check("compatibility verdict matches the multiple pre-Lie defect", [&]() -> std::string {
		std::vector<PhiMap> maps;
		for (int k = 0; k < (full ? 30 : 8); ++k)
		{
			maps.push_back(from_blocks(build_JD(random_matrix(rng, 2), random_matrix(rng, 2),
			                                    k % 2 ? JDForm::J : JDForm::D)));
			BlockMatrix M = BlockMatrix::zero(2, 2);
			for (auto& row : M.blocks)
				for (auto& blk : row)
					blk = random_matrix(rng, 2);
			maps.push_back(from_blocks(M));
		}
		for (auto& phi : maps)
		{
			bool compat = !check_compat(phi).refuted();
			auto E = names(phi.edge_basis());
			auto V = names(phi.vertex_basis());
			bool zero = true;
			for (auto& a : E)
				for (auto& a2 : E)
					for (auto& x : V)
						for (auto& y : V)
							for (auto& z : V)
								zero = zero && multiple_prelie_defect(phi_product(phi), a, a2,
								                                      TreeComb(Tree::vertex(x)),
								                                      TreeComb(Tree::vertex(y)),
								                                      TreeComb(Tree::vertex(z)))
								                   .empty();
			if (compat != zero)
				return "disagreement on " + phi.description();
		}
		return "";
	});

	b.check("phi_lambda semigroup law", [&]() -> std::string {
		for (int d = 0; d <= (full ? 2 : 1); ++d)
		{
			SpdeConfig l{d, {}, false}, m{d, {}, false};
			for (int i = 0; i <= d; ++i)
			{
				l.lambda.push_back(small_rational(rng));
				m.lambda.push_back(small_rational(rng));
			}
			SpdeConfig lm = l;
			for (int i = 0; i <= d; ++i)
				lm.lambda[i] += m.lambda[i];
			PhiMap pl = phi_lambda(l), pm = phi_lambda(m), plm = phi_lambda(lm), pinv = phi_lambda(l.negated());
			for (auto& a : DecorationBasis::multi_indices(d).elements_up_to(2))
				for (auto& c : DecorationBasis::multi_indices(d).elements_up_to(2))
				{
					if (!(pl.apply(pm(a, c)) == plm(a, c)))
						return "sum law fails at " + render_pair({a, c});
					if (!(pl.apply(pinv(a, c)) == PairComb({a, c})))
						return "inverse law fails at " + render_pair({a, c});
				}
		}
		return "";
	});

	b.check("phi_lambda equals exp(partial_lambda)", [&]() -> std::string {
		for (int d = 0; d <= (full ? 2 : 1); ++d)
		{
			SpdeConfig c{d, {}, false};
			for (int i = 0; i <= d; ++i)
				c.lambda.push_back(small_rational(rng));
			PhiMap x = phi_lambda(c), y = phi_lambda_via_exp(c);
			for (auto& a : DecorationBasis::multi_indices(d).elements_up_to(full ? 3 : 2))
				for (auto& v : DecorationBasis::multi_indices(d).elements_up_to(full ? 3 : 2))
					if (!(x(a, v) == y(a, v)))
						return "differs at " + render_pair({a, v});
		}
		return "";
	});

	b.check("Theta is a morphism and Theta(-lambda) inverts it", [&]() -> std::string {
		SpdeConfig c = SpdeConfig::ones(0);
		PhiMap phi = phi_lambda(c), inv = phi_lambda(c.negated());
		auto L = DecorationBasis::multi_indices(0).elements_up_to(1);
		auto ts = small_trees(L, L, 2);
		PhiMap id = identity_map(phi.edge_basis(), phi.vertex_basis());
		for (auto& x : ts)
			for (auto& y : ts)
				for (auto& a : L)
					if (!theta_morphism_defect(phi, id, TreeComb(x), a, TreeComb(y)).empty())
						return "morphism fails for " + x.str() + ", " + y.str();
		for (auto& x : small_trees(L, L, full ? 4 : 3))
			if (!(theta(phi, theta(inv, TreeComb(x))) == TreeComb(x)))
				return "inverse fails on " + x.str();
		return "";
	});

	PhiMap finite = from_blocks(build_JD(QMatrix{{1, 2}, {0, 1}}, QMatrix{{0, 1}, {1, 0}}, JDForm::J));
	auto FE = names(finite.edge_basis()), FV = names(finite.vertex_basis());

	b.check("star product is associative with unit", [&]() -> std::string {
		auto fs = small_forests({FV[0]}, FE, full ? 3 : 2);
		ForestComb one(Forest::one());
		for (auto& x : fs)
		{
			ForestComb X(x);
			if (!(star_product(finite, one, X) == X) || !(star_product(finite, X, one) == X))
				return "unit fails on " + x.str();
			for (auto& y : fs)
				for (auto& z : fs)
				{
					if (x.vertex_count() + y.vertex_count() + z.vertex_count() > (full ? 4 : 3))
						continue;
					ForestComb Y(y), Z(z);
					if (!(star_product(finite, star_product(finite, X, Y), Z) ==
					      star_product(finite, X, star_product(finite, Y, Z))))
						return "associativity fails on " + x.str() + ", " + y.str() + ", " + z.str();
				}
		}
		return "";
	});

	b.check("cutting coproduct is coassociative and multiplicative", [&]() -> std::string {
		auto fs = small_forests(FV, {FE[0]}, full ? 3 : 2);
		auto left = [&](const ForestTensor& t) {
			LinComb<std::tuple<Forest, Forest, Forest>> out;
			for (auto& [p, c] : t)
				for (auto& [q, d] : bck_coproduct(finite, ForestComb(p.first)))
					out.add({q.first, q.second, p.second}, c * d);
			return out;
		};
		auto right = [&](const ForestTensor& t) {
			LinComb<std::tuple<Forest, Forest, Forest>> out;
			for (auto& [p, c] : t)
				for (auto& [q, d] : bck_coproduct(finite, ForestComb(p.second)))
					out.add({p.first, q.first, q.second}, c * d);
			return out;
		};
		for (auto& x : fs)
		{
			ForestTensor dx = bck_coproduct(finite, ForestComb(x));
			if (!(left(dx) == right(dx)))
				return "coassociativity fails on " + x.str();
			for (auto& y : fs)
				if (x.vertex_count() + y.vertex_count() <= (full ? 4 : 3) &&
				    !(bck_coproduct(finite, ForestComb(x * y)) ==
				      tensor_product(dx, bck_coproduct(finite, ForestComb(y)))))
					return "multiplicativity fails on " + x.str() + ", " + y.str();
		}
		return "";
	});

	b.check("Hopf pairing with the transposed map", [&]() -> std::string {
		auto fs = small_forests(FV, FE, 2);
		ResidualReport r = hopf_pairing_defects(finite, transpose(finite), Pairing::delta(), fs, fs);
		return all_zero(r) ? "" : render(r);
	});

	b.check("post-Lie extension of the multi-index map", [&]() -> std::string {
		for (int d = 0; d <= (full ? 2 : 1); ++d)
			for (bool noise : {false, true})
			{
				Extension X = spde_extension(SpdeConfig::ones(d, noise));
				auto E = X.phi.edge_basis().elements_up_to(2);
				auto V = X.phi.vertex_basis().elements_up_to(2);
				ResidualReport r = psi_compat_defects(X, E, V);
				if (!all_zero(r))
					return render(r);
				auto M = DecorationBasis::multi_indices(d).elements_up_to(1);
				std::vector<ExtElem> els;
				for (int g = 0; g <= d; ++g)
					els.push_back(ExtElem::gen(g));
				auto ts = small_trees(M, M, 2);
				std::size_t step = ts.size() / (full ? 8 : 4) + 1;
				for (std::size_t i = 0; i < ts.size(); i += step)
					els.push_back(ExtElem::of({M.back(), ts[i]}));
				for (auto& u : els)
					for (auto& v : els)
						for (auto& w : els)
							if (!postlie_axiom_defects(X, u, v, w).all_zero())
								return "axioms fail for " + X.render(u) + ", " + X.render(v) + ", " + X.render(w);
			}
		return "";
	});

	b.check("block criterion", [&]() -> std::string {
		for (int k = 0; k < (full ? 100 : 20); ++k)
		{
			int m = 2 + k % 2;
			BlockMatrix M = BlockMatrix::zero(m, 2);
			bool structured = k % 3 != 0;
			if (structured)
				M = build_JD(random_matrix(rng, m), random_matrix(rng, m), k % 2 ? JDForm::J : JDForm::D);
			else
				for (auto& row : M.blocks)
					for (auto& blk : row)
						blk = random_matrix(rng, 2);
			bool commute = blocks_commute(M);
			bool compat = !check_compat(from_blocks(M)).refuted();
			if (commute != compat)
				return "criterion fails on block matrix #" + std::to_string(k);
			if (structured && !commute)
				return "normal form does not commute";
		}
		return "";
	});

	b.check("NAP coproduct eigenvalues", [&]() -> std::string {
		std::vector<Label> V{Label::sym("b", 1)}, E{Label::sym("a", 0), Label::sym("c", 0)};
		for (auto& t : small_trees(V, E, full ? 4 : 3))
			for (auto& e : E)
				if (!nap_eigen_check({e, t}))
					return "fails on " + PlantedTree{e, t}.str();
		return "";
	});

	b.check("Xi-admissible trees are closed and generated", [&]() -> std::string {
		SpdeConfig c = SpdeConfig::ones(0, true);
		PhiMap phi = noise_extend(c);
		auto ts = admissible_trees(0, full ? 3 : 2, 1);
		for (auto& x : ts)
			for (auto& y : ts)
			{
				if (x.vertex_count() + y.vertex_count() > (full ? 3 : 2) + 1)
					continue;
				for (auto& [p, k] : planted_graft_phi(phi, PlantedComb(x), PlantedComb(y)))
					if (!xi_admissible(p))
						return x.str() + " |> " + y.str() + " leaves the admissible span";
			}
		xi_generation_probe(c, ts, full ? 3 : 2);
		return "";
	});

	out << (b.failures ? "FAILED " + std::to_string(b.failures) : std::string("ALL PASS")) << "\n";
	return b.failures;
}

} // namespace rtcalc
