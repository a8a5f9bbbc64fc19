#pragma once

#include "rtcalc/hopf.hpp"
#include "rtcalc/spde.hpp"

#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <stdexcept>

namespace rtcalc {

struct ParseError : std::runtime_error
{
	int line, column;
	ParseError(const std::string& msg, int line, int column)
	    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line(line),
	      column(column)
	{
	}
};

// Label sets to validate against; either may be absent.
struct LabelContext
{
	std::optional<DecorationBasis> edges, vertices;
};

struct ParsedExpr
{
	enum class Kind
	{
		Zero, // literal 0
		Tree,
		Planted,
		Forest
	};
	Kind kind = Kind::Zero;
	TreeComb trees;
	PlantedComb planted;
	ForestComb forests;

	ForestComb as_forests() const; // planted terms become one-tree forests
};

Label parse_label(const std::string& src, bool edge, const LabelContext& ctx = {});
ParsedExpr parse_expr(const std::string& src, const LabelContext& ctx = {});

// ---- spec files (JSON)

Scalar json_scalar(const nlohmann::json& j);
DecorationBasis load_basis(const nlohmann::json& j, bool edge);
PhiMap load_phi(const nlohmann::json& j);
SpdeConfig load_spde_config(const nlohmann::json& j);
PostLieBase load_postlie(const nlohmann::json& j);
// Either {"builder":"spde_psi",...} or tables; generator names come from P.
PsiPair load_psi(const nlohmann::json& j, const PostLieBase& P);
nlohmann::json phi_to_json(const PhiMap& phi); // finite bases only
nlohmann::json comb_to_json(const std::vector<std::pair<std::string, Scalar>>& terms);

// Property battery behind `verify-suite`; one line per check. Returns the number of failures.
int verify_suite(const std::string& level, std::ostream& out);

// Whole command line; exit codes 0 (ok / all residuals zero), 1 (residual or
// refutation), 2 (usage or parse error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace rtcalc
