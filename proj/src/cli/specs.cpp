#include "rtcalc/cli.hpp"

namespace rtcalc {

using nlohmann::json;

Scalar json_scalar(const json& j)
{
	if (j.is_number_integer())
		return Scalar(j.get<long>());
	if (j.is_string())
		return parse_scalar(j.get<std::string>());
	throw std::invalid_argument("expected a rational (integer or \"p/q\" string), got " + j.dump());
}

static const json& field(const json& j, const char* key)
{
	if (!j.is_object() || !j.contains(key))
		throw std::invalid_argument(std::string("missing field '") + key + "' in " + j.dump());
	return j.at(key);
}

DecorationBasis load_basis(const json& j, bool edge)
{
	if (j.is_array())
		return DecorationBasis::finite(j.get<std::vector<std::string>>(), edge ? 0 : 1);
	if (j.is_object() && j.contains("multi_indices"))
	{
		int d = j.at("multi_indices").get<int>();
		if (j.value("noise", false))
			return DecorationBasis::multi_indices_with_noise(d, edge ? Label::xi() : Label::star());
		return DecorationBasis::multi_indices(d);
	}
	throw std::invalid_argument("basis must be a list of names or {\"multi_indices\": d}: " + j.dump());
}

SpdeConfig load_spde_config(const json& j)
{
	SpdeConfig cfg;
	cfg.d = j.value("d", 0);
	if (j.contains("lambda"))
		for (auto& x : j.at("lambda"))
			cfg.lambda.push_back(json_scalar(x));
	else
		cfg.lambda.assign(cfg.d + 1, Scalar(1));
	cfg.noise = j.value("noise", false);
	cfg.validate();
	return cfg;
}

static QMatrix load_matrix(const json& j)
{
	int r = static_cast<int>(j.size());
	int c = r ? static_cast<int>(j.at(0).size()) : 0;
	QMatrix M(r, c);
	for (int i = 0; i < r; ++i)
	{
		if (static_cast<int>(j.at(i).size()) != c)
			throw std::invalid_argument("ragged matrix row in " + j.dump());
		for (int k = 0; k < c; ++k)
			M(i, k) = json_scalar(j.at(i).at(k));
	}
	return M;
}

static BlockMatrix load_blocks(const json& j)
{
	const json& b = field(j, "blocks");
	BlockMatrix M;
	M.m = static_cast<int>(b.size());
	for (auto& row : b)
	{
		if (static_cast<int>(row.size()) != M.m)
			throw std::invalid_argument("block layout must be m x m");
		std::vector<QMatrix> r;
		for (auto& blk : row)
			r.push_back(load_matrix(blk));
		M.blocks.push_back(std::move(r));
	}
	M.n = M.m ? M.blocks[0][0].rows() : 0;
	for (auto& row : M.blocks)
		for (auto& blk : row)
			if (blk.rows() != M.n || blk.cols() != M.n)
				throw std::invalid_argument("blocks must all be n x n");
	return M;
}

PhiMap load_phi(const json& j)
{
	if (j.is_object() && j.contains("table"))
	{
		DecorationBasis E = load_basis(field(j, "edgeBasis"), true);
		DecorationBasis V = load_basis(field(j, "vertexBasis"), false);
		LabelContext ctx{E, V};
		PhiMap::Table t;
		for (auto& row : j.at("table"))
		{
			const json& in = field(row, "in");
			LabelPair key{parse_label(in.at(0).get<std::string>(), true, ctx),
			              parse_label(in.at(1).get<std::string>(), false, ctx)};
			PairComb out;
			for (auto& o : field(row, "out"))
				out.add({parse_label(field(o, "e").get<std::string>(), true, ctx),
				         parse_label(field(o, "v").get<std::string>(), false, ctx)},
				        o.contains("c") ? json_scalar(o.at("c")) : Scalar(1));
			if (!t.emplace(key, out).second)
				throw std::invalid_argument("duplicate table row for " + render_pair(key));
		}
		return PhiMap::from_table(E, V, std::move(t), j.value("name", "table"));
	}
	const std::string b = j.is_string() ? j.get<std::string>() : field(j, "builder").get<std::string>();
	auto sub = [&](const char* k) { return load_phi(field(j, k)); };
	if (b == "identity" || b == "zero")
	{
		DecorationBasis E = load_basis(field(j, "edgeBasis"), true);
		DecorationBasis V = load_basis(field(j, "vertexBasis"), false);
		return b == "identity" ? identity_map(E, V) : zero_map(E, V);
	}
	if (b == "phi_lambda")
		return spde_phi(load_spde_config(j));
	if (b == "partial_lambda")
		return partial_lambda(load_spde_config(j));
	if (b == "phi_lambda_exp")
		return phi_lambda_via_exp(load_spde_config(j), j.value("maxIter", 64));
	if (b == "noise_extend")
		return noise_extend(load_spde_config(j));
	if (b == "tensor")
		return tensor_product(sub("left"), sub("right"));
	if (b == "direct_sum")
		return direct_sum(sub("left"), sub("right"), json_scalar(j.value("lambda", json(0))),
		                  json_scalar(j.value("mu", json(0))));
	if (b == "compose")
		return compose(sub("left"), sub("right"));
	if (b == "exp")
		return exp_series(sub("of"), j.value("maxIter", 64));
	if (b == "transpose")
		return transpose(sub("of"));
	if (b == "polynomial")
	{
		std::vector<Scalar> cs;
		for (auto& c : field(j, "coeffs"))
			cs.push_back(json_scalar(c));
		return polynomial(sub("of"), cs);
	}
	if (b == "blocks")
	{
		BlockMatrix M = load_blocks(j);
		if (j.contains("edgeBasis"))
			return from_blocks(M, load_basis(j.at("edgeBasis"), true), load_basis(field(j, "vertexBasis"), false));
		return from_blocks(M);
	}
	throw std::invalid_argument("unknown phi builder '" + b + "'");
}

PostLieBase load_postlie(const json& j)
{
	auto gens = field(j, "generators").get<std::vector<std::string>>();
	auto idx = [&](const json& x) {
		auto name = x.get<std::string>();
		for (std::size_t i = 0; i < gens.size(); ++i)
			if (gens[i] == name)
				return static_cast<int>(i);
		throw std::invalid_argument("unknown generator '" + name + "'");
	};
	auto entries = [&](const char* key) {
		std::vector<PostLieBase::Entry> es;
		if (j.contains(key))
			for (auto& e : j.at(key))
			{
				if (!e.is_array() || e.size() != 4)
					throw std::invalid_argument(std::string(key) + " entries are [i, j, k, c]: " + e.dump());
				es.push_back({idx(e[0]), idx(e[1]), idx(e[2]), json_scalar(e[3])});
			}
		return es;
	};
	return PostLieBase(gens, entries("bracket"), entries("triangle"));
}

PsiPair load_psi(const json& j, const PostLieBase& P)
{
	if (j.is_object() && j.value("builder", "") == "spde_psi")
	{
		auto [Q, psi] = spde_psi(load_spde_config(j));
		if (Q.generators() != P.generators())
			throw std::invalid_argument("spde_psi generators do not match the post-Lie algebra");
		return psi;
	}
	using Table = std::map<std::pair<int, Label>, LinComb<Label>>;
	auto table = [&](const char* key, bool edge) {
		Table t;
		if (j.contains(key))
			for (auto& row : j.at(key))
			{
				LinComb<Label> out;
				for (auto& o : field(row, "out"))
					out.add(parse_label(field(o, "l").get<std::string>(), edge),
					        o.contains("c") ? json_scalar(o.at("c")) : Scalar(1));
				t[{P.index_of(field(row, "gen").get<std::string>()),
				   parse_label(field(row, "in").get<std::string>(), edge)}] = out;
			}
		return t;
	};
	auto lookup = [](Table t) {
		return [t = std::move(t)](int g, const Label& l) {
			auto it = t.find({g, l});
			return it == t.end() ? LinComb<Label>() : it->second;
		};
	};
	PsiPair psi;
	psi.psiE = lookup(table("E", true));
	psi.psiV = lookup(table("V", false));
	psi.description = "psi tables";
	return psi;
}

json comb_to_json(const std::vector<std::pair<std::string, Scalar>>& terms)
{
	json a = json::array();
	for (auto& [t, c] : terms)
		a.push_back({{"c", to_string(c)}, {"t", t}});
	return {{"terms", a}};
}

json phi_to_json(const PhiMap& phi)
{
	auto names = [](const DecorationBasis& B) {
		json a = json::array();
		for (auto& l : B.elements())
			a.push_back(l.str());
		return a;
	};
	json rows = json::array();
	for (auto& [in, out] : phi.tabulate())
	{
		json o = json::array();
		for (auto& [p, c] : out)
			o.push_back({{"c", to_string(c)}, {"e", p.first.str()}, {"v", p.second.str()}});
		rows.push_back({{"in", {in.first.str(), in.second.str()}}, {"out", o}});
	}
	return {{"edgeBasis", names(phi.edge_basis())}, {"vertexBasis", names(phi.vertex_basis())}, {"table", rows}};
}

} // namespace rtcalc
