// One line per acceptance criterion; exit status is the number of failures.
#include "rtcalc/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace rtcalc;

namespace {

std::mt19937 rng(424242);

Scalar rand_q(int lo = -3, int hi = 3)
{
	std::uniform_int_distribution<int> n(lo, hi), d(1, 3);
	return make_scalar(n(rng), d(rng));
}

QMatrix rand_matrix(int n, int lo = -3, int hi = 3)
{
	QMatrix M(n, n);
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
			M(i, j) = rand_q(lo, hi);
	return M;
}

BlockMatrix rand_blocks(int m, int n, double density)
{
	std::bernoulli_distribution keep(density);
	BlockMatrix M = BlockMatrix::zero(m, n);
	for (auto& row : M.blocks)
		for (auto& b : row)
			for (int i = 0; i < n; ++i)
				for (int j = 0; j < n; ++j)
					if (keep(rng))
						b(i, j) = rand_q(-2, 2);
	return M;
}

// blocks alpha I + beta N for one random N: they commute without being in normal form
BlockMatrix commuting_blocks(int m)
{
	QMatrix N = rand_matrix(2, -2, 2);
	BlockMatrix M = BlockMatrix::zero(m, 2);
	for (auto& row : M.blocks)
		for (auto& b : row)
			b = QMatrix::identity(2).scaled(rand_q()) + N.scaled(rand_q());
	return M;
}

std::vector<Tree> trees_upto(const std::vector<Label>& vs, const std::vector<Label>& es, int n)
{
	std::vector<Tree> out;
	for (int k = 1; k <= n; ++k)
		for (auto& t : trees_of_size(k, vs, es))
			out.push_back(t);
	return out;
}

std::vector<PlantedTree> planted_upto(const std::vector<Label>& vs, const std::vector<Label>& es, int n)
{
	std::vector<PlantedTree> out;
	for (auto& t : trees_upto(vs, es, n))
		for (auto& e : es)
			out.push_back({e, t});
	return out;
}

std::vector<Forest> forests_upto(const std::vector<Label>& vs, const std::vector<Label>& es, int n)
{
	auto ps = planted_upto(vs, es, n);
	std::vector<Forest> out{Forest::one()}, frontier{Forest::one()};
	while (!frontier.empty())
	{
		std::vector<Forest> next;
		for (auto& f : frontier)
			for (auto& p : ps)
				if ((f.trees.empty() || !(p < f.trees.back())) && f.vertex_count() + p.vertex_count() <= n)
				{
					next.push_back(f * Forest::of(p));
					out.push_back(next.back());
				}
		frontier = std::move(next);
	}
	return out;
}

SpdeConfig rand_config(int d)
{
	SpdeConfig c{d, {}, false};
	for (int i = 0; i <= d; ++i)
		c.lambda.push_back(rand_q());
	return c;
}

SpdeConfig plus(const SpdeConfig& x, const SpdeConfig& y)
{
	SpdeConfig z = x;
	for (int i = 0; i <= x.d; ++i)
		z.lambda[i] += y.lambda[i];
	return z;
}

using Triple = std::tuple<Forest, Forest, Forest>;
using Tensor3 = LinComb<Triple>;

Tensor3 left_cut(const PhiMap& phi, const ForestTensor& t)
{
	Tensor3 out;
	for (auto& [p, c] : t)
		for (auto& [q, d] : bck_coproduct(phi, ForestComb(p.first)))
			out.add({q.first, q.second, p.second}, c * d);
	return out;
}

Tensor3 right_cut(const PhiMap& phi, const ForestTensor& t)
{
	Tensor3 out;
	for (auto& [p, c] : t)
		for (auto& [q, d] : bck_coproduct(phi, ForestComb(p.second)))
			out.add({p.first, q.first, q.second}, c * d);
	return out;
}

ForestTensor star_tensor(const PhiMap& phi, const ForestTensor& x, const ForestTensor& y)
{
	ForestTensor out;
	for (auto& [p, c] : x)
		for (auto& [q, d] : y)
			for (auto& [l, e] : star_product(phi, ForestComb(p.first), ForestComb(q.first)))
				for (auto& [r, f] : star_product(phi, ForestComb(p.second), ForestComb(q.second)))
					out.add({l, r}, c * d * e * f);
	return out;
}

PlantedComb plant_str(const std::string& s) { return parse_expr(s).planted; }

std::string pt(const Label& e, const std::string& body) { return "[" + e.str() + "](" + body + ")"; }

int failures = 0;

void criterion(int n, const std::string& title, const std::function<std::string()>& body)
{
	auto t0 = std::chrono::steady_clock::now();
	std::string problem;
	try
	{
		problem = body();
	}
	catch (const std::exception& e)
	{
		problem = std::string("exception: ") + e.what();
	}
	double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	std::ostringstream time;
	time.precision(2);
	time << std::fixed << secs << "s";
	bool ok = problem.rfind("ok", 0) == 0;
	if (!ok)
		++failures;
	std::cout << (ok ? "PASS " : "FAIL ") << n << " " << title << " (" << time.str() << "): " << problem << std::endl;
}

} // namespace

int main()
{
	criterion(1, "compatibility verdict <=> multiple pre-Lie defect", []() -> std::string {
		std::vector<PhiMap> family;
		for (int k = 0; k < 20; ++k)
			family.push_back(from_blocks(build_JD(rand_matrix(2), rand_matrix(2), k % 2 ? JDForm::J : JDForm::D)));
		for (int k = 0; k < 20; ++k)
			family.push_back(from_blocks(rand_blocks(2, 2, 0.9)));
		for (int k = 0; k < 20; ++k)
			family.push_back(from_blocks(rand_blocks(2, 2, 0.25)));
		int compatible = 0, refuted = 0;
		for (auto& phi : family)
		{
			bool verdict = !check_compat(phi).refuted();
			(verdict ? compatible : refuted)++;
			auto E = phi.edge_basis().elements(), V = phi.vertex_basis().elements();
			bool zero = true;
			for (auto& a : E)
				for (auto& a2 : E)
					for (auto& x : V)
						for (auto& y : V)
							for (auto& z : V)
								zero = zero && multiple_prelie_defect(phi_product(phi), a, a2, TreeComb(Tree::vertex(x)),
								                                      TreeComb(Tree::vertex(y)),
								                                      TreeComb(Tree::vertex(z)))
								                   .empty();
			if (zero != verdict)
				return "verdict and defect disagree on " + to_blocks(phi).assemble().str();
		}
		if (refuted < 10)
			return "only " + std::to_string(refuted) + " incompatible maps in the family";
		return "ok: " + std::to_string(family.size()) + " maps, " + std::to_string(compatible) + " compatible, " +
		       std::to_string(refuted) + " incompatible";
	});

	std::vector<std::pair<SpdeConfig, SpdeConfig>> configs;
	for (int d = 0; d <= 2; ++d)
		for (int k = 0; k < 5; ++k)
			configs.push_back({rand_config(d), rand_config(d)});

	criterion(2, "semigroup law of phi_lambda", [&]() -> std::string {
		long checked = 0;
		for (auto& [l, m] : configs)
		{
			PhiMap pl = phi_lambda(l), pm = phi_lambda(m), plm = phi_lambda(plus(l, m)), pinv = phi_lambda(l.negated());
			for (auto& a : mi_box(l.d, 3))
				for (auto& b : mi_box(l.d, 3))
				{
					Label A = Label::mi(a), B = Label::mi(b);
					if (!(pl.apply(pm(A, B)) == plm(A, B)))
						return "sum law fails at " + render_pair({A, B});
					if (!(pl.apply(pinv(A, B)) == PairComb({A, B})))
						return "inverse law fails at " + render_pair({A, B});
					++checked;
				}
		}
		return "ok: " + std::to_string(checked) + " pairs over d = 0, 1, 2";
	});

	criterion(3, "phi_lambda = exp(partial_lambda), powers of partial_lambda", [&]() -> std::string {
		long checked = 0;
		for (auto& [l, m] : configs)
		{
			PhiMap closed = phi_lambda(l), series = phi_lambda_via_exp(l), dl = partial_lambda(l);
			for (auto& a : mi_box(l.d, 3))
				for (auto& b : mi_box(l.d, 3))
				{
					Label A = Label::mi(a), B = Label::mi(b);
					if (!(closed(A, B) == series(A, B)))
						return "closed form and series differ at " + render_pair({A, B});
					PairComb x({A, B});
					for (int n = 1; n <= 4; ++n)
					{
						x = dl.apply(x);
						PairComb want;
						for (auto& k : mi_below(mi_min(a, b)))
							if (mi_abs(k) == n)
								want.add({Label::mi(std::get<MultiIndex>(mi_sub(a, k))),
								          Label::mi(std::get<MultiIndex>(mi_sub(b, k)))},
								         factorial(n) * lambda_pow(l.lambda, k) * mi_binom(b, k));
						if (!(x == want))
							return "power " + std::to_string(n) + " differs at " + render_pair({A, B});
					}
					++checked;
				}
		}
		return "ok: " + std::to_string(checked) + " pairs, powers up to 4";
	});

	criterion(4, "Theta is a morphism; Theta(-lambda) inverts Theta(lambda)", [&]() -> std::string {
		std::vector<PhiMap> maps{phi_lambda(SpdeConfig::ones(0)), phi_lambda(configs[1].first)};
		for (int k = 0; k < 2; ++k)
			maps.push_back(from_blocks(build_JD(rand_matrix(2), rand_matrix(2), k ? JDForm::J : JDForm::D)));
		long checked = 0;
		for (auto& phi : maps)
		{
			std::vector<Label> L = phi.is_finite() ? phi.vertex_basis().elements() : std::vector<Label>{};
			std::vector<Label> EL = phi.is_finite() ? phi.edge_basis().elements() : std::vector<Label>{};
			if (!phi.is_finite())
				L = EL = {Label::mi(MultiIndex({0})), Label::mi(MultiIndex({1}))};
			PhiMap id = identity_map(phi.edge_basis(), phi.vertex_basis());
			auto ts = trees_upto(L, EL, 3);
			for (auto& x : ts)
				for (auto& y : ts)
					for (auto& a : EL)
					{
						if (!theta_morphism_defect(phi, id, TreeComb(x), a, TreeComb(y)).empty())
							return "morphism fails for " + x.str() + " |>_" + a.str() + " " + y.str() + " with " +
							       phi.description();
						++checked;
					}
		}
		long inv = 0;
		for (int d = 0; d <= 1; ++d)
		{
			SpdeConfig c = rand_config(d);
			PhiMap p = phi_lambda(c), q = phi_lambda(c.negated());
			auto L = DecorationBasis::multi_indices(d).elements_up_to(1);
			for (auto& t : trees_upto(L, L, 4))
			{
				if (!(theta(p, theta(q, TreeComb(t))) == TreeComb(t)))
					return "inverse fails on " + t.str();
				++inv;
			}
		}
		return "ok: " + std::to_string(checked) + " products, " + std::to_string(inv) + " inverse checks";
	});

	criterion(5, "star associativity, bialgebra laws, cutting coproduct, worked example", [&]() -> std::string {
		PhiMap phi = from_blocks(build_JD(QMatrix{{1, 2}, {-1, 1}}, QMatrix{{0, 1}, {2, -1}}, JDForm::J));
		auto E = phi.edge_basis().elements(), V = phi.vertex_basis().elements();
		// worked example: cherry b1 (a1), b2 (a2) over b3, plant a3
		PhiMap phi3 = from_blocks(build_JD(QMatrix{{1, 2, 0}, {0, 1, 1}, {1, 0, 2}},
		                                   QMatrix{{0, 1, 1}, {1, 0, 2}, {-1, 1, 0}}, JDForm::J));
		Label a1 = Label::sym("e1", 0), a2 = Label::sym("e2", 0), a3 = Label::sym("e3", 0);
		Label b1 = Label::sym("v1", 1), b2 = Label::sym("v2", 1), b3 = Label::sym("v1", 1);
		auto one_vertex = [](const Label& a, const Label& b) { return pt(a, b.str()); };
		Forest x = parse_expr(pt(a3, b3.str() + " [" + a1.str() + "](" + b1.str() + ") [" + a2.str() + "](" +
		                             b2.str() + ")"))
		               .as_forests()
		               .begin()
		               ->first;
		ForestTensor want = ForestTensor({x, Forest::one()}) + ForestTensor({Forest::one(), x});
		auto F = [](const std::string& s) { return parse_expr(s).as_forests().begin()->first; };
		for (auto& [p, c] : phi3(a1, b3))
			want.add({F(one_vertex(p.first, b1)), F(pt(a3, p.second.str() + " [" + a2.str() + "](" + b2.str() + ")"))},
			         c);
		for (auto& [p, c] : phi3(a2, b3))
			want.add({F(one_vertex(p.first, b2)), F(pt(a3, p.second.str() + " [" + a1.str() + "](" + b1.str() + ")"))},
			         c);
		for (auto& [q, d] : phi3(a2, b3))
			for (auto& [p, c] : phi3(a1, q.second))
				want.add({F(one_vertex(p.first, b1)) * F(one_vertex(q.first, b2)), F(one_vertex(a3, p.second))}, c * d);
		if (!(bck_coproduct(phi3, ForestComb(x)) == want))
			return "worked example differs: " + render(bck_coproduct(phi3, ForestComb(x))) + " vs " + render(want);

		auto fs = forests_upto(V, E, 4);
		std::vector<Forest> small;
		for (auto& f : fs)
			if (f.vertex_count() <= 2)
				small.push_back(f);
		long assoc = 0, bialg = 0, cut = 0;
		ForestComb one(Forest::one());
		for (auto& f : fs)
		{
			ForestComb X(f);
			if (!(star_product(phi, one, X) == X) || !(star_product(phi, X, one) == X))
				return "unit fails on " + f.str();
			ForestTensor dx = bck_coproduct(phi, X);
			if (!(left_cut(phi, dx) == right_cut(phi, dx)))
				return "coassociativity fails on " + f.str();
			++cut;
		}
		for (auto& f : small)
			for (auto& g : small)
			{
				ForestComb X(f), Y(g);
				if (f.vertex_count() + g.vertex_count() > 4)
					continue;
				if (!(deshuffle(star_product(phi, X, Y)) == star_tensor(phi, deshuffle(X), deshuffle(Y))))
					return "deshuffle is not multiplicative on " + f.str() + ", " + g.str();
				if (!(bck_coproduct(phi, forest_product(X, Y)) ==
				      tensor_product(bck_coproduct(phi, X), bck_coproduct(phi, Y))))
					return "cutting coproduct is not multiplicative on " + f.str() + ", " + g.str();
				++bialg;
				for (auto& h : small)
				{
					if (f.vertex_count() + g.vertex_count() + h.vertex_count() > 4)
						continue;
					ForestComb Z(h);
					if (!(star_product(phi, star_product(phi, X, Y), Z) ==
					      star_product(phi, X, star_product(phi, Y, Z))))
						return "associativity fails on " + f.str() + ", " + g.str() + ", " + h.str();
					++assoc;
				}
			}
		return "ok: example reproduced, " + std::to_string(assoc) + " triples, " + std::to_string(bialg) +
		       " pairs, " + std::to_string(cut) + " coassociativity checks";
	});

	criterion(6, "Hopf pairing with the transposed map", [&]() -> std::string {
		long forests = 0;
		for (int k = 0; k < 2; ++k)
		{
			PhiMap phi = from_blocks(build_JD(rand_matrix(2), rand_matrix(2), k ? JDForm::J : JDForm::D));
			auto fs = forests_upto(phi.vertex_basis().elements(), phi.edge_basis().elements(), 3);
			forests = static_cast<long>(fs.size());
			ResidualReport r = hopf_pairing_defects(phi, transpose(phi), Pairing::delta(), fs, fs);
			if (!all_zero(r))
				return render(r);
		}
		return "ok: " + std::to_string(forests) + " forests per side, two maps";
	});

	criterion(7, "post-Lie extension: compatibility, axioms, generator displays", [&]() -> std::string {
		long triples = 0;
		for (int d = 0; d <= 2; ++d)
			for (bool noise : {false, true})
			{
				Extension X = spde_extension(SpdeConfig::ones(d, noise));
				ResidualReport r = psi_compat_defects(X, X.phi.edge_basis().elements_up_to(3),
				                                      X.phi.vertex_basis().elements_up_to(3));
				if (!all_zero(r))
					return render(r);
				auto L = X.phi.vertex_basis().elements_up_to(3);
				auto EL = X.phi.edge_basis().elements_up_to(3);
				std::vector<ExtElem> els;
				for (int g = 0; g <= d; ++g)
					els.push_back(ExtElem::gen(g));
				std::uniform_int_distribution<int> n(1, 3);
				std::uniform_int_distribution<std::size_t> pick(0, 1000000);
				std::vector<PlantedTree> sample;
				while (sample.size() < 5)
				{
					// random tree of 1..3 vertices
					int k = n(rng);
					Tree t = Tree::vertex(L[pick(rng) % L.size()]);
					for (int v = 1; v < k; ++v)
						t = graft_at(Tree::vertex(L[pick(rng) % L.size()]), static_cast<int>(pick(rng) % v), t,
						             EL[pick(rng) % EL.size()]);
					PlantedTree p{EL[pick(rng) % EL.size()], t};
					if (!noise || xi_admissible(p))
						sample.push_back(p);
				}
				for (auto& p : sample)
					els.push_back(ExtElem::of(p));
				els.push_back(ExtElem::of(sample[0]) + make_scalar(-2, 3) * ExtElem::of(sample[1]) +
				              ExtElem::gen(d));
				for (auto& u : els)
					for (auto& v : els)
						for (auto& w : els)
						{
							if (!postlie_axiom_defects(X, u, v, w).all_zero())
								return "axioms fail on " + X.render(u) + ", " + X.render(v) + ", " + X.render(w);
							++triples;
						}
			}
		// X_i |> a (x) T and {a (x) T, X_i}, d = 1, i = 1
		Extension X = spde_extension(SpdeConfig::ones(1));
		auto body = [](const std::string& r, const std::string& m, const std::string& t, const std::string& s) {
			return "(" + r + " [<0,0>](" + m + " [<1,0>](" + t + ")) [<0,1>](" + s + "))";
		};
		ExtElem u{plant_str("[<1,1>]" + body("<0,0>", "<1,0>", "<0,1>", "<2,2>")), {}};
		ExtElem raised{plant_str("[<1,1>]" + body("<0,1>", "<1,0>", "<0,1>", "<2,2>") + " + [<1,1>]" +
		                         body("<0,0>", "<1,1>", "<0,1>", "<2,2>") + " + [<1,1>]" +
		                         body("<0,0>", "<1,0>", "<0,2>", "<2,2>") + " + [<1,1>]" +
		                         body("<0,0>", "<1,0>", "<0,1>", "<2,3>")),
		               {}};
		if (!(ext_triangle(X, ExtElem::gen(1), u) == raised))
			return "X_1 |> display differs: " + X.render(ext_triangle(X, ExtElem::gen(1), u));
		ExtElem lowered{plant_str("[<1,0>]" + body("<0,0>", "<1,0>", "<0,1>", "<2,2>")), {}};
		if (!(ext_bracket(X, u, ExtElem::gen(1)) == lowered))
			return "bracket display differs: " + X.render(ext_bracket(X, u, ExtElem::gen(1)));
		ExtElem v{plant_str("[<0,1>]" + body("<0,0>", "<1,0>", "<0,1>", "<2,2>")), {}};
		if (!ext_bracket(X, v, ExtElem::gen(0)).is_zero())
			return "bracket with a vanishing entry is not zero";
		return "ok: " + std::to_string(triples) + " axiom triples, both displays reproduced";
	});

	criterion(8, "block criterion, normal forms, determinants", [&]() -> std::string {
		int commuting = 0, total = 0;
		for (int k = 0; k < 120; ++k)
		{
			int m = 2 + k % 2;
			BlockMatrix M = k % 3 == 0 ? rand_blocks(m, 2, 0.6) : k % 3 == 1 ? commuting_blocks(m) : rand_blocks(m, 2, 0.2);
			bool commute = blocks_commute(M);
			bool compat = !check_compat(from_blocks(M)).refuted();
			if (commute != compat)
				return "criterion fails on " + M.assemble().str();
			commuting += commute;
			++total;
			BlockMatrix N = build_JD(rand_matrix(m), rand_matrix(m), k % 2 ? JDForm::J : JDForm::D);
			if (!blocks_commute(N) || check_compat(from_blocks(N)).refuted())
				return "normal form fails the criterion";
		}
		for (int n = 2; n <= 3; ++n)
			for (int k = 0; k < 10; ++k)
			{
				QMatrix A = rand_matrix(n), B = rand_matrix(n);
				if (build_JD(A, B, JDForm::D).assemble().det() != A.det() * B.det())
					return "det D(A,B) != det A det B";
				if (build_JD(A, B, JDForm::J).assemble().det() != A.det() * A.det())
					return "det J(A,B) != det(A)^2";
			}
		if (commuting == 0 || commuting == total)
			return "family is not mixed";
		return "ok: " + std::to_string(total) + " block matrices, " + std::to_string(commuting) + " commuting";
	});

	criterion(9, "NAP coproduct eigenvalues and kernel", [&]() -> std::string {
		std::vector<Label> V{Label::sym("b", 1), Label::sym("d", 1)}, E{Label::sym("a", 0), Label::sym("c", 0)};
		auto all = planted_upto(V, E, 4);
		for (auto& p : all)
		{
			PlantedComb back = nap_regraft(nap_coproduct(PlantedComb(p)));
			Scalar alpha = static_cast<long>(p.body.children.size());
			if (!(back == alpha * PlantedComb(p)))
				return "regraft o rho != alpha id on " + p.str();
		}
		// brute-force kernel on the span of trees with <= 3 vertices
		auto basis = planted_upto(V, E, 3);
		std::map<PlantedPair, int> rows;
		std::vector<LinComb<PlantedPair>> images;
		for (auto& p : basis)
		{
			images.push_back(nap_coproduct(PlantedComb(p)));
			for (auto& [q, c] : images.back())
				rows.emplace(q, static_cast<int>(rows.size()));
		}
		QMatrix M(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
		for (std::size_t j = 0; j < basis.size(); ++j)
			for (auto& [q, c] : images[j])
				M(rows.at(q), static_cast<int>(j)) = c;
		auto ker = M.nullspace();
		std::size_t singles = 0;
		for (auto& p : basis)
			singles += p.vertex_count() == 1;
		if (ker.size() != singles)
			return "kernel has dimension " + std::to_string(ker.size()) + ", expected " + std::to_string(singles);
		for (auto& v : ker)
			for (std::size_t j = 0; j < basis.size(); ++j)
				if (v[j] != 0 && basis[j].vertex_count() != 1)
					return "kernel vector involves " + basis[j].str();
		if (nap_kernel(basis).size() != singles)
			return "nap_kernel disagrees with the brute-force kernel";
		return "ok: " + std::to_string(all.size()) + " trees, kernel of dimension " + std::to_string(singles);
	});

	criterion(10, "Xi-admissible closure and generation", [&]() -> std::string {
		long products = 0, reached = 0;
		for (int d = 0; d <= 1; ++d)
		{
			SpdeConfig c = SpdeConfig::ones(d, true);
			PhiMap phi = noise_extend(c);
			auto ts = admissible_trees(d, 3, 1);
			for (auto& x : ts)
				for (auto& y : ts)
				{
					// every pair for d = 0; for d = 1 only products with at most 3 vertices
					if (d > 0 && x.vertex_count() + y.vertex_count() > 3)
						continue;
					for (auto& [p, k] : planted_graft_phi(phi, PlantedComb(x), PlantedComb(y)))
						if (!xi_admissible(p))
							return x.str() + " |> " + y.str() + " produces " + p.str();
					++products;
				}
			xi_generation_probe(c, ts, 3);
			reached += static_cast<long>(ts.size());
		}
		return "ok: " + std::to_string(products) + " products stay admissible, " + std::to_string(reached) +
		       " trees generated";
	});

	criterion(11, "golden command-line outputs", []() -> std::string {
		struct Case
		{
			std::vector<std::string> args;
			std::string expected;
		};
		std::vector<Case> cases{
		    {{"graft", "--phi", "phi_s.json", "--a", "<1>", "x.txt", "y.txt"}, "graft_s.expected"},
		    {{"graft", "--phi", "phi_s_noise.json", "--a", "<1>", "x.txt", "y_noise.txt"}, "graft_s_noise.expected"},
		    {{"graft-free", "--a", "<1>", "x.txt", "y.txt"}, "graft_free.expected"},
		};
		std::string dir = RTCALC_GOLDEN_DIR;
		for (auto& c : cases)
		{
			std::vector<std::string> args{"rtcalc"};
			for (auto& a : c.args)
				args.push_back(a.find(".txt") != std::string::npos || a.find(".json") != std::string::npos
				                   ? dir + "/" + a
				                   : a);
			std::vector<const char*> argv;
			for (auto& a : args)
				argv.push_back(a.c_str());
			std::ostringstream out, err;
			int rc = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
			std::ifstream f(dir + "/" + c.expected);
			std::stringstream want;
			want << f.rdbuf();
			if (rc != 0 || out.str() != want.str())
				return c.expected + " mismatch (exit " + std::to_string(rc) + "): " + out.str() + err.str();
		}
		return "ok: " + std::to_string(cases.size()) + " outputs byte-identical";
	});

	std::cout << (failures ? "FAILED " + std::to_string(failures) : std::string("ALL CRITERIA PASS")) << std::endl;
	return failures;
}
