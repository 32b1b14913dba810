#pragma once

// JSON / CSV emission. Rationals are always written as "p/q" strings ("p"
// when q == 1) so no value ever passes through a float.

#include <iosfwd>
#include <vector>

#include <json.hpp>

#include "leonard_lab/leonard.hpp"
#include "leonard_lab/matrix.hpp"
#include "leonard_lab/params.hpp"
#include "leonard_lab/racah.hpp"
#include "leonard_lab/representation.hpp"
#include "leonard_lab/sl2_module.hpp"

namespace leonard_lab {

using Json = nlohmann::json;

Json to_json(const Rational& x);
/// Accepts only strings; throws RationalParseError otherwise.
Rational rational_from_json(const Json& j);

Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// Keys: d, r, s, theta, thetaStar, b, c, a, k, nu, bStar, cStar, aStar, kStar.
Json to_json(const DualHahnParams& p);

/// Keys: d, r, s, barTheta, barThetaStar, barB, barC, barA, barK, barNu,
/// barBStar, barCStar, barAStar, barKStar, barVarphi.
Json to_json(const RacahParams& q);

/// {d, r, s, lambda, verdict, witness, witnessCandidate, conditions,
///  theoremConditions, exhaustive, squarePreservingBranch}
Json report_to_json(const DualHahnParams& p, const LeonardPairReport& report);

/// One JSON-lines record of a grid scan.
Json to_json(const SearchRecord& rec);

Json to_json(const TheoremConditions& c);
Json to_json(const EvenModule& m);
Json to_json(const CatalogEntry& e);

/// Long-format CSV, header "i,j,theta_j,u_i(theta_j)".
void write_value_table_csv(std::ostream& os, const DualHahnParams& p, const ValueTable& u);

}  // namespace leonard_lab
