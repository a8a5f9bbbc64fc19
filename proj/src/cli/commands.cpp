#include "rtcalc/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace rtcalc {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Options
{
	std::string phi, phi2, psi, postlie, a, lambda, format = "text", order = "canonical", level = "small";
	std::optional<int> bound, d;
	bool noise = false;
	std::vector<std::string> inputs;
};

std::string slurp(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot read " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

json read_json(const std::string& path)
{
	try
	{
		return json::parse(slurp(path));
	}
	catch (const json::parse_error& e)
	{
		throw UsageError(path + ": " + e.what());
	}
}

// An argument naming an existing file is read from disk, anything else is taken literally.
std::string input_text(const std::string& arg)
{
	std::error_code ec;
	if (std::filesystem::is_regular_file(arg, ec))
		return slurp(arg);
	return arg;
}

SpdeConfig cli_config(const Options& o)
{
	SpdeConfig cfg;
	cfg.d = o.d.value_or(0);
	cfg.noise = o.noise;
	if (o.lambda.empty())
		cfg.lambda.assign(cfg.d + 1, Scalar(1));
	else
	{
		std::stringstream ss(o.lambda);
		std::string x;
		while (std::getline(ss, x, ','))
			cfg.lambda.push_back(parse_scalar(x));
	}
	try
	{
		cfg.validate();
	}
	catch (const std::invalid_argument& e)
	{
		throw UsageError(e.what());
	}
	return cfg;
}

std::optional<PhiMap> maybe_phi(const Options& o, const std::string& file)
{
	if (!file.empty())
		return load_phi(read_json(file));
	if (o.d)
		return spde_phi(cli_config(o));
	return std::nullopt;
}

PhiMap need_phi(const Options& o)
{
	if (auto p = maybe_phi(o, o.phi))
		return *p;
	throw UsageError("this command needs --phi FILE or --d N");
}

LabelContext context_of(const std::optional<PhiMap>& phi)
{
	if (!phi)
		return {};
	return {phi->edge_basis(), phi->vertex_basis()};
}

ParsedExpr input(const Options& o, std::size_t i, const LabelContext& ctx)
{
	if (i >= o.inputs.size())
		throw UsageError("missing input expression #" + std::to_string(i + 1));
	return parse_expr(input_text(o.inputs[i]), ctx);
}

void need_inputs(const Options& o, std::size_t n)
{
	if (o.inputs.size() != n)
		throw UsageError("expected " + std::to_string(n) + " input expression(s), got " +
		                 std::to_string(o.inputs.size()));
}

template<class T, class F>
void emit(const Options& o, std::ostream& out, const LinComb<T>& x, F&& term)
{
	if (o.format == "structured")
	{
		std::vector<std::pair<std::string, Scalar>> ts;
		for (auto& [t, c] : x)
			ts.emplace_back(term(t), c);
		out << comb_to_json(ts).dump() << "\n";
	}
	else
		out << render(x, term) << "\n";
}

void emit(const Options& o, std::ostream& out, const TreeComb& x)
{
	emit(o, out, x, [](const Tree& t) { return t.str(); });
}
void emit(const Options& o, std::ostream& out, const PlantedComb& x)
{
	emit(o, out, x, [](const PlantedTree& t) { return t.str(); });
}
void emit(const Options& o, std::ostream& out, const ForestComb& x)
{
	emit(o, out, x, [](const Forest& f) { return f.str(); });
}
void emit(const Options& o, std::ostream& out, const ForestTensor& x)
{
	emit(o, out, x, [](const ForestPair& p) { return "(" + p.first.str() + " | " + p.second.str() + ")"; });
}

PairComb as_pairs(const ParsedExpr& e)
{
	if (e.kind == ParsedExpr::Kind::Zero)
		return {};
	if (e.kind != ParsedExpr::Kind::Planted)
		throw UsageError("apply-phi takes combinations of [edge](vertex) pairs");
	PairComb out;
	for (auto& [p, c] : e.planted)
	{
		if (!p.body.children.empty())
			throw UsageError("apply-phi takes single-vertex planted terms, got " + p.str());
		out.add({p.edge, p.body.root}, c);
	}
	return out;
}

int cmd_apply_phi(const Options& o, std::ostream& out)
{
	PhiMap phi = need_phi(o);
	if (o.inputs.empty())
	{
		if (!phi.is_finite())
			throw UsageError("apply-phi without inputs prints the whole table and needs finite bases");
		if (o.format == "structured")
			out << phi_to_json(phi).dump() << "\n";
		else
			for (auto& [in, img] : phi.tabulate())
				out << render_pair(in) << " -> " << render(img, render_pair) << "\n";
		return 0;
	}
	auto ctx = context_of(phi);
	for (std::size_t i = 0; i < o.inputs.size(); ++i)
		emit(o, out, phi.apply(as_pairs(input(o, i, ctx))), render_pair);
	return 0;
}

int cmd_check_compat(const Options& o, std::ostream& out)
{
	PhiMap phi = need_phi(o);
	if (!phi.is_finite() && !o.bound)
		throw UsageError("infinite decoration basis: --bound N is required");
	CompatVerdict v = check_compat(phi, phi.is_finite() ? std::nullopt : o.bound);
	if (o.format == "structured")
		out << json{{"verdict", v.str()}}.dump() << "\n";
	else
		out << v.str() << "\n";
	return v.status == CompatVerdict::Status::Refuted ? 1 : 0;
}

int cmd_graft(const Options& o, std::ostream& out, bool free)
{
	need_inputs(o, 2);
	std::optional<PhiMap> phi = free ? maybe_phi(o, "") : std::optional<PhiMap>(need_phi(o));
	auto ctx = context_of(phi);
	ParsedExpr x = input(o, 0, ctx), y = input(o, 1, ctx);
	using K = ParsedExpr::Kind;
	if (x.kind == K::Tree || y.kind == K::Tree)
	{
		if (x.kind == K::Forest || y.kind == K::Forest || x.kind == K::Planted || y.kind == K::Planted)
			throw UsageError("graft needs two tree combinations or two planted combinations");
		if (o.a.empty())
			throw UsageError("grafting bare trees needs --a LABEL");
		Label a = parse_label(o.a, true, ctx);
		emit(o, out, free ? graft_free(x.trees, a, y.trees) : graft_phi(*phi, x.trees, a, y.trees));
		return 0;
	}
	if (x.kind == K::Forest || y.kind == K::Forest)
		throw UsageError("graft takes single planted trees, not forests (see star)");
	emit(o, out, free ? planted_graft_free(x.planted, y.planted) : planted_graft_phi(*phi, x.planted, y.planted));
	return 0;
}

EdgeOrder order_of(const Options& o)
{
	if (o.order == "canonical")
		return EdgeOrder::Canonical;
	if (o.order == "reversed")
		return EdgeOrder::Reversed;
	if (o.order == "checked")
		return EdgeOrder::Checked;
	throw UsageError("--order must be canonical, reversed or checked");
}

int cmd_theta(const Options& o, std::ostream& out)
{
	need_inputs(o, 1);
	PhiMap phi = need_phi(o);
	ParsedExpr x = input(o, 0, context_of(phi));
	if (x.kind == ParsedExpr::Kind::Tree)
		emit(o, out, theta(phi, x.trees, order_of(o)));
	else
		emit(o, out, theta_bar(phi, x.as_forests()));
	return 0;
}

int cmd_star(const Options& o, std::ostream& out)
{
	need_inputs(o, 2);
	PhiMap phi = need_phi(o);
	auto ctx = context_of(phi);
	emit(o, out, star_product(phi, input(o, 0, ctx).as_forests(), input(o, 1, ctx).as_forests()));
	return 0;
}

int cmd_coprod(const Options& o, std::ostream& out, bool bck)
{
	need_inputs(o, 1);
	std::optional<PhiMap> phi = bck ? std::optional<PhiMap>(need_phi(o)) : maybe_phi(o, o.phi);
	ForestComb x = input(o, 0, context_of(phi)).as_forests();
	emit(o, out, bck ? bck_coproduct(*phi, x) : deshuffle(x));
	return 0;
}

int cmd_pair(const Options& o, std::ostream& out)
{
	need_inputs(o, 2);
	ForestComb x2 = input(o, 0, context_of(maybe_phi(o, o.phi2))).as_forests();
	ForestComb x = input(o, 1, context_of(maybe_phi(o, o.phi))).as_forests();
	Scalar s = pair_forests(Pairing::delta(), x2, x);
	if (o.format == "structured")
		out << json{{"value", to_string(s)}}.dump() << "\n";
	else
		out << to_string(s) << "\n";
	return 0;
}

Extension load_extension(const Options& o)
{
	PhiMap phi = need_phi(o);
	std::optional<json> psiJson;
	if (!o.psi.empty())
		psiJson = read_json(o.psi);
	std::optional<PostLieBase> P;
	if (!o.postlie.empty())
		P = load_postlie(read_json(o.postlie));
	else if (psiJson && psiJson->is_object() && psiJson->value("builder", "") == "spde_psi")
		P = spde_psi(load_spde_config(*psiJson)).first;
	else if (!psiJson && o.d)
		return spde_extension(cli_config(o));
	else
		throw UsageError("post-Lie commands need --postlie FILE, a spde_psi --psi file, or --d N");
	if (!psiJson)
		throw UsageError("post-Lie commands need --psi FILE");
	return Extension{phi, *P, load_psi(*psiJson, *P)};
}

ExtElem ext_input(const Options& o, std::size_t i, const Extension& X)
{
	std::string text = input_text(o.inputs.at(i));
	std::string trimmed = text;
	trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
	trimmed.erase(trimmed.find_last_not_of(" \t\n") + 1);
	for (int g = 0; g < X.P.size(); ++g)
		if (X.P.generators()[g] == trimmed)
			return ExtElem::gen(g);
	ParsedExpr e = parse_expr(text, {X.phi.edge_basis(), X.phi.vertex_basis()});
	if (e.kind == ParsedExpr::Kind::Zero)
		return {};
	if (e.kind != ParsedExpr::Kind::Planted)
		throw UsageError("post-Lie inputs are planted combinations or generator names");
	return {e.planted, {}};
}

int cmd_postlie_check(const Options& o, std::ostream& out)
{
	Extension X = load_extension(o);
	if (o.inputs.size() == 2)
	{
		ExtElem u = ext_input(o, 0, X), w = ext_input(o, 1, X);
		out << "triangle: " << X.render(ext_triangle(X, u, w)) << "\n";
		out << "bracket: " << X.render(ext_bracket(X, u, w)) << "\n";
		return 0;
	}
	need_inputs(o, 3);
	AxiomResiduals r = postlie_axiom_defects(X, ext_input(o, 0, X), ext_input(o, 1, X), ext_input(o, 2, X));
	out << "jacobi: " << X.render(r.jacobi) << "\n";
	out << "derivation: " << X.render(r.derivation) << "\n";
	out << "postlie: " << X.render(r.postlie) << "\n";
	return r.all_zero() ? 0 : 1;
}

std::vector<Label> sample_labels(const DecorationBasis& B, const std::optional<int>& bound)
{
	if (B.is_finite())
		return B.elements();
	if (!bound)
		throw UsageError("infinite decoration basis: --bound N is required");
	return B.elements_up_to(*bound);
}

int cmd_psi_check(const Options& o, std::ostream& out)
{
	Extension X = load_extension(o);
	ResidualReport r = psi_compat_defects(X, sample_labels(X.phi.edge_basis(), o.bound),
	                                      sample_labels(X.phi.vertex_basis(), o.bound));
	out << render(r);
	return all_zero(r) ? 0 : 1;
}

int cmd_spde_demo(const Options& o, std::ostream& out)
{
	if (!o.bound)
		throw UsageError("spde-demo works on an infinite basis: --bound N is required");
	SpdeConfig cfg = cli_config(o);
	PhiMap phi = spde_phi(cfg), viaExp = phi_lambda_via_exp(cfg);
	out << "phi: " << phi.description() << "\n";
	auto labels = DecorationBasis::multi_indices(cfg.d).elements_up_to(*o.bound);
	long agree = 0, total = 0;
	for (auto& a : labels)
		for (auto& b : labels)
		{
			PairComb v = phi(a, b);
			out << render_pair({a, b}) << " -> " << render(v, render_pair) << "\n";
			++total;
			agree += v == viaExp(a, b);
		}
	out << "exp cross-check: " << agree << "/" << total << " agree\n";
	CompatVerdict v = check_compat(phi, o.bound);
	out << "compatibility: " << v.str() << "\n";
	Extension X = spde_extension(cfg);
	ResidualReport r = psi_compat_defects(X, sample_labels(phi.edge_basis(), o.bound),
	                                      sample_labels(phi.vertex_basis(), o.bound));
	out << render(r);
	return agree == total && v.status != CompatVerdict::Status::Refuted && all_zero(r) ? 0 : 1;
}

int cmd_classify(const Options& o, std::ostream& out)
{
	PhiMap phi = need_phi(o);
	M2Classification c = classify_m2(to_blocks(phi));
	out << c.str() << "\n";
	return c.kind == M2Classification::Kind::NotCompatible ? 1 : 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
	CLI::App app{"Exact computations with decorated rooted trees", "rtcalc"};
	app.require_subcommand(1);
	Options o;
	struct Cmd
	{
		const char* name;
		const char* help;
	};
	const std::vector<Cmd> cmds{
	    {"apply-phi", "evaluate phi on [edge](vertex) combinations, or print its table"},
	    {"check-compat", "tree-compatibility verdict for phi"},
	    {"graft", "graft X onto Y with phi (trees need --a)"},
	    {"graft-free", "graft X onto Y without phi"},
	    {"theta", "Theta_phi on trees, or its forest extension"},
	    {"star", "star product of two forest combinations"},
	    {"coprod", "phi-deformed cutting coproduct of a forest combination"},
	    {"deshuffle", "deshuffle coproduct of a forest combination"},
	    {"pair", "pairing <X', X> with the delta base pairing"},
	    {"postlie-check", "triangle and bracket of two elements, or axiom residuals of three"},
	    {"psi-check", "residuals of the phi/psi compatibility conditions"},
	    {"spde-demo", "the multi-index map on a small grid with its checks"},
	    {"classify-m2", "normal form of a phi with 2-dimensional vertex space"},
	    {"verify-suite", "run the property battery"},
	};
	std::string chosen;
	for (auto& c : cmds)
	{
		CLI::App* s = app.add_subcommand(c.name, c.help);
		s->add_option("--phi", o.phi, "phi spec file");
		s->add_option("--phi2", o.phi2, "phi spec for the primed side");
		s->add_option("--psi", o.psi, "psi spec file");
		s->add_option("--postlie", o.postlie, "post-Lie algebra spec file");
		s->add_option("--a", o.a, "edge label for grafting bare trees");
		s->add_option("--bound", o.bound, "entry bound for infinite bases")->check(CLI::NonNegativeNumber);
		s->add_option("--d", o.d, "multi-index dimension minus one")->check(CLI::NonNegativeNumber);
		s->add_option("--lambda", o.lambda, "comma-separated rationals, d+1 of them");
		s->add_flag("--noise", o.noise, "extend with Xi and *");
		s->add_option("--format", o.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
		s->add_option("--order", o.order, "edge order for theta");
		s->add_option("--level", o.level, "verify-suite size")->check(CLI::IsMember({"small", "full"}));
		s->add_option("inputs", o.inputs, "expressions or files holding them");
		s->callback([&chosen, name = std::string(c.name)] { chosen = name; });
	}
	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::CallForHelp& e)
	{
		out << app.help();
		return 0;
	}
	catch (const CLI::ParseError& e)
	{
		err << "rtcalc: " << e.what() << "\n";
		return 2;
	}
	try
	{
		if (chosen == "apply-phi")
			return cmd_apply_phi(o, out);
		if (chosen == "check-compat")
			return cmd_check_compat(o, out);
		if (chosen == "graft" || chosen == "graft-free")
			return cmd_graft(o, out, chosen == "graft-free");
		if (chosen == "theta")
			return cmd_theta(o, out);
		if (chosen == "star")
			return cmd_star(o, out);
		if (chosen == "coprod" || chosen == "deshuffle")
			return cmd_coprod(o, out, chosen == "coprod");
		if (chosen == "pair")
			return cmd_pair(o, out);
		if (chosen == "postlie-check")
			return cmd_postlie_check(o, out);
		if (chosen == "psi-check")
			return cmd_psi_check(o, out);
		if (chosen == "spde-demo")
			return cmd_spde_demo(o, out);
		if (chosen == "classify-m2")
			return cmd_classify(o, out);
		if (chosen == "verify-suite")
			return verify_suite(o.level, out) ? 1 : 0;
		err << "rtcalc: no command\n";
		return 2;
	}
	catch (const ParseError& e)
	{
		err << "rtcalc: parse error at " << e.what() << "\n";
		return 2;
	}
	catch (const UsageError& e)
	{
		err << "rtcalc: " << e.what() << "\n";
		return 2;
	}
	catch (const IncompatiblePhi& e)
	{
		err << "rtcalc: incompatible phi, witness " << render_triple(e.witness) << ": " << e.what() << "\n";
		return 1;
	}
	catch (const std::invalid_argument& e)
	{
		err << "rtcalc: " << e.what() << "\n";
		return 2;
	}
	catch (const std::exception& e)
	{
		err << "rtcalc: " << e.what() << "\n";
		return 1;
	}
}

} // namespace rtcalc
