#include "support.hpp"

#include <sstream>

using namespace testing;

namespace {

int run(std::vector<std::string> args, std::string& out, std::string& err)
{
	args.insert(args.begin(), "rtcalc");
	std::vector<const char*> argv;
	for (auto& a : args)
		argv.push_back(a.c_str());
	std::ostringstream o, e;
	int rc = run_cli(static_cast<int>(argv.size()), argv.data(), o, e);
	out = o.str();
	err = e.str();
	return rc;
}

} // namespace

TEST_CASE("parsing trees and combinations")
{
	Tree t = tree("(b1 [a1](b2))");
	CHECK(t.vertex_count() == 2);
	CHECK(t.root == V("b1"));
	CHECK(t.children[0].edge == E("a1"));

	PlantedComb x = planted("1/2*[<1>](<2>) - [<0>](<1>)");
	CHECK(x.size() == 2);
	CHECK(x.coeff(plant("[<1>](<2>)")) == make_scalar(1, 2));
	CHECK(x.coeff(plant("[<0>](<1>)")) == -1);

	CHECK(parse_expr("0").kind == ParsedExpr::Kind::Zero);
	CHECK(parse_expr("3").as_forests() == 3 * ForestComb(Forest::one()));
	CHECK(parse_expr("[a](b) [c](d) + [a](b)").kind == ParsedExpr::Kind::Forest);
	CHECK(parse_label("{a,<1,2>}", true) == Label::pair(E("a"), mi({1, 2})));
	CHECK(parse_label("*", false) == Label::star());
	CHECK(parse_label("Xi", true) == Label::xi());
}

TEST_CASE("parse errors carry positions")
{
	try
	{
		parse_expr("(b1 [a1](b2)");
		FAIL("no error");
	}
	catch (const ParseError& e)
	{
		CHECK(e.line == 1);
		CHECK(e.column == 13);
	}
	CHECK_THROWS_AS(parse_expr("(b1)\n  [a](b)"), ParseError);
	CHECK_THROWS_AS(parse_label("*", true), ParseError);
	CHECK_THROWS_AS(parse_label("Xi", false), ParseError);
	CHECK_THROWS_AS(parse_expr("(b) + [a](b)"), ParseError);
	LabelContext ctx{DecorationBasis::finite({"a"}, 0), DecorationBasis::finite({"b"}, 1)};
	CHECK_NOTHROW(parse_expr("[a](b)", ctx));
	CHECK_THROWS_AS(parse_expr("[a](c)", ctx), ParseError);
	CHECK_THROWS_AS(parse_expr("[<1>](<0>)", ctx), ParseError);
}

TEST_CASE("rendering round-trips through the parser")
{
	std::vector<Label> vs{V("u"), mi({0, 2}), Label::star()}, es{E("a"), mi({1, 0}), Label::xi()};
	for (int n = 1; n <= 3; ++n)
		for (auto& t : trees_of_size(n, vs, es))
		{
			CHECK(tree(t.str()) == t);
			PlantedTree p{es[n % 3], t};
			CHECK(plant(p.str()) == p);
		}
	for (auto& f : forests_upto({V("u")}, {E("a"), E("c")}, 3))
		CHECK(parse_expr(f.str()).as_forests() == ForestComb(f));

	PlantedComb x = planted("2/3*[a](u [c](w)) - [a](u) + 5*[c](w [a](u) [a](u))");
	CHECK(planted(render(x)) == x);
	ForestComb y = forests("1 - 2*[a](u) [a](u) + 1/7*[c](w)");
	CHECK(forests(render(y)) == y);
}

TEST_CASE("spec files")
{
	using nlohmann::json;
	PhiMap t = load_phi(json::parse(R"({
		"edgeBasis": ["a"], "vertexBasis": ["p", "q"],
		"table": [
			{"in": ["a", "p"], "out": [{"c": "1/2", "e": "a", "v": "q"}]},
			{"in": ["a", "q"], "out": []}
		]})"));
	CHECK(t(E("a"), V("p")) == PairComb({E("a"), V("q")}, make_scalar(1, 2)));
	CHECK(phi_to_json(t)["table"].size() == 2);
	CHECK_THROWS(load_phi(json::parse(R"({"edgeBasis":["a"],"vertexBasis":["p"],"table":[]})")));

	PhiMap s = load_phi(json::parse(R"({"builder":"phi_lambda","d":0})"));
	CHECK(s(mi({1}), mi({1})) == PairComb({mi({1}), mi({1})}) + PairComb({mi({0}), mi({0})}));
	PhiMap c = load_phi(json::parse(R"({"builder":"compose","left":{"builder":"phi_lambda","d":0},
		"right":{"builder":"phi_lambda","d":0,"lambda":[-1]}})"));
	CHECK(c(mi({2}), mi({2})) == PairComb({mi({2}), mi({2})}));
	CHECK_THROWS_AS(load_phi(json::parse(R"({"builder":"nope"})")), std::invalid_argument);

	PostLieBase P = load_postlie(json::parse(R"({"generators":["x","y"],"bracket":[]})"));
	CHECK(P.is_trivial());
}

TEST_CASE("command line")
{
	std::string out, err;
	CHECK(run({"graft-free", "--a", "a", "(b2)", "(b1)"}, out, err) == 0);
	CHECK(out == "(b1 [a](b2))\n");

	CHECK(run({"check-compat", "--d", "1", "--bound", "3"}, out, err) == 0);
	CHECK(out.find("VerifiedUpToBound(3)") != std::string::npos);
	CHECK(run({"check-compat", "--d", "1"}, out, err) == 2);
	CHECK(run({"graft-free", "--a", "a", "(b1 [a1](b2)", "(b)"}, out, err) == 2);
	CHECK(err.find("1:13") != std::string::npos);
	CHECK(run({"no-such-command"}, out, err) == 2);

	CHECK(run({"deshuffle", "[a](b) [a](b)"}, out, err) == 0);
	CHECK(out.find("2*([a](b) | [a](b))") != std::string::npos);

	CHECK(run({"pair", "[a](b [a](b) [a](b))", "[a](b [a](b) [a](b))"}, out, err) == 0);
	CHECK(out == "2\n");

	CHECK(run({"graft", "--d", "0", "--a", "<1>", "(<0>)", "(<2>)", "--format", "structured"}, out, err) == 0);
	auto j = nlohmann::json::parse(out);
	CHECK(j["terms"].size() == 2);
}
