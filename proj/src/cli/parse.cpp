#include "rtcalc/cli.hpp"

#include <cctype>

namespace rtcalc {

ForestComb ParsedExpr::as_forests() const
{
	if (kind == Kind::Tree)
		throw std::invalid_argument("expected planted trees or forests, got bare trees");
	ForestComb out = forests;
	for (auto& [p, c] : planted)
		out.add(Forest::of(p), c);
	return out;
}

namespace {

class Parser
{
  public:
	Parser(const std::string& s, const LabelContext& ctx) : s_(s), ctx_(ctx) {}

	[[noreturn]] void fail(const std::string& msg) const
	{
		int line = 1, col = 1;
		for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i)
		{
			if (s_[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
		throw ParseError(msg, line, col);
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool at_end()
	{
		skip();
		return pos_ >= s_.size();
	}

	char peek()
	{
		skip();
		return pos_ < s_.size() ? s_[pos_] : '\0';
	}

	void expect(char c)
	{
		if (peek() != c)
		{
			if (pos_ >= s_.size())
				fail(std::string("expected '") + c + "' but reached end of input");
			fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
		}
		++pos_;
	}

	static bool ident_char(char c)
	{
		return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'' || c == '^';
	}

	long integer()
	{
		skip();
		std::size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (start == pos_)
			fail("expected a number");
		try
		{
			return std::stol(s_.substr(start, pos_ - start));
		}
		catch (const std::out_of_range&)
		{
			pos_ = start;
			fail("number too large");
		}
	}

	Scalar rational()
	{
		skip();
		std::size_t start = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
			++pos_;
		if (peek() == '/')
		{
			++pos_;
			skip();
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
		}
		std::string text;
		for (std::size_t i = start; i < pos_; ++i)
			if (!std::isspace(static_cast<unsigned char>(s_[i])))
				text += s_[i];
		try
		{
			return parse_scalar(text);
		}
		catch (const std::invalid_argument&)
		{
			pos_ = start;
			fail("bad rational '" + text + "'");
		}
	}

	Label label(bool edge)
	{
		std::size_t start = (skip(), pos_);
		Label l = raw_label(edge);
		const auto& basis = edge ? ctx_.edges : ctx_.vertices;
		if (basis && !basis->contains(l))
		{
			pos_ = start;
			fail("unknown " + std::string(edge ? "edge" : "vertex") + " label '" + l.str() + "' for basis " +
			     basis->str());
		}
		return l;
	}

	Label raw_label(bool edge)
	{
		char c = peek();
		if (c == '<')
		{
			++pos_;
			std::vector<int> e;
			do
			{
				long v = integer();
				if (v > 1000000)
					fail("multi-index entry too large");
				e.push_back(static_cast<int>(v));
			} while (peek() == ',' && (++pos_, true));
			expect('>');
			return Label::mi(MultiIndex(e));
		}
		if (c == '{')
		{
			++pos_;
			Label l = raw_label(edge);
			expect(',');
			Label r = raw_label(edge);
			expect('}');
			return Label::pair(l, r);
		}
		if (c == '*')
		{
			if (edge)
				fail("'*' is a vertex decoration and cannot label an edge");
			++pos_;
			return Label::star();
		}
		std::size_t start = pos_;
		while (pos_ < s_.size() && ident_char(s_[pos_]))
			++pos_;
		if (start == pos_)
			fail(pos_ >= s_.size() ? "expected a label but reached end of input" : "expected a label");
		std::string name = s_.substr(start, pos_ - start);
		if (name == "Xi")
		{
			if (!edge)
			{
				pos_ = start;
				fail("'Xi' is an edge decoration and cannot label a vertex");
			}
			return Label::xi();
		}
		return Label::sym(name, edge ? 0 : 1);
	}

	Tree tree()
	{
		expect('(');
		Tree t{label(false), {}};
		while (peek() == '[')
		{
			++pos_;
			Label e = label(true);
			expect(']');
			t.children.push_back(Branch{e, tree()});
		}
		expect(')');
		return canonicalize(std::move(t));
	}

	PlantedTree planted()
	{
		expect('[');
		Label e = label(true);
		expect(']');
		return PlantedTree{e, tree()};
	}

	void term(ParsedExpr& out, Scalar sign)
	{
		Scalar c = sign;
		bool any = false;
		while (std::isdigit(static_cast<unsigned char>(peek())))
		{
			c *= rational();
			any = true;
			if (peek() == '*')
				++pos_;
		}
		char k = peek();
		if (k == '(')
		{
			merge(out, ParsedExpr::Kind::Tree);
			out.trees.add(tree(), c);
		}
		else if (k == '[')
		{
			std::vector<PlantedTree> ts;
			while (peek() == '[')
				ts.push_back(planted());
			if (ts.size() == 1 && out.kind != ParsedExpr::Kind::Forest)
			{
				merge(out, ParsedExpr::Kind::Planted);
				out.planted.add(ts[0], c);
			}
			else
			{
				merge(out, ParsedExpr::Kind::Forest);
				out.forests.add(Forest(std::move(ts)), c);
			}
		}
		else if (any)
		{
			if (c != 0)
			{
				merge(out, ParsedExpr::Kind::Forest);
				out.forests.add(Forest::one(), c);
			}
		}
		else if (pos_ >= s_.size())
			fail("expected a term but reached end of input");
		else
			fail(std::string("unexpected '") + s_[pos_] + "'");
	}

	void merge(ParsedExpr& out, ParsedExpr::Kind k)
	{
		using K = ParsedExpr::Kind;
		if (out.kind == K::Zero || out.kind == k)
		{
			out.kind = k;
			return;
		}
		if ((out.kind == K::Planted && k == K::Forest) || (out.kind == K::Forest && k == K::Planted))
		{
			out.forests = out.as_forests();
			out.planted = {};
			out.kind = K::Forest;
			return;
		}
		fail("cannot mix bare trees with planted trees or forests");
	}

	ParsedExpr expr()
	{
		ParsedExpr out;
		Scalar sign = 1;
		if (peek() == '-')
		{
			++pos_;
			sign = -1;
		}
		else if (peek() == '+')
			++pos_;
		term(out, sign);
		while (!at_end())
		{
			char c = peek();
			if (c != '+' && c != '-')
				fail(std::string("expected '+' or '-', found '") + c + "'");
			++pos_;
			term(out, c == '-' ? -1 : 1);
		}
		if (out.kind == ParsedExpr::Kind::Planted && out.planted.empty())
			out.kind = ParsedExpr::Kind::Zero;
		return out;
	}

	std::size_t pos() const { return pos_; }

  private:
	const std::string& s_;
	const LabelContext& ctx_;
	std::size_t pos_ = 0;
};

} // namespace

Label parse_label(const std::string& src, bool edge, const LabelContext& ctx)
{
	Parser p(src, ctx);
	Label l = p.label(edge);
	if (!p.at_end())
		p.fail("trailing input after label");
	return l;
}

ParsedExpr parse_expr(const std::string& src, const LabelContext& ctx)
{
	Parser p(src, ctx);
	if (p.at_end())
		p.fail("empty expression");
	return p.expr();
}

} // namespace rtcalc
