#include "leonard_lab/json_io.hpp"

#include <ostream>

namespace leonard_lab {

Json to_json(const Rational& x) { return x.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw RationalParseError("expected a \"p/q\" string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
    out.push_back(std::move(row));
  }
  return out;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw RationalParseError("matrix: expected an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  RationalMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const Json& row = j.at(static_cast<std::size_t>(i));
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw RationalParseError("matrix: ragged rows");
    }
    for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = rational_from_json(row.at(static_cast<std::size_t>(c)));
  }
  return m;
}

Json to_json(const DualHahnParams& p) {
  return Json{
      {"d", p.d},
      {"r", to_json(p.r)},
      {"s", to_json(p.s)},
      {"theta", to_json(p.theta)},
      {"thetaStar", to_json(p.theta_star)},
      {"b", to_json(p.b)},
      {"c", to_json(p.c)},
      {"a", to_json(p.a)},
      {"k", to_json(p.k)},
      {"nu", to_json(p.nu)},
      {"bStar", to_json(p.b_star)},
      {"cStar", to_json(p.c_star)},
      {"aStar", to_json(p.a_star)},
      {"kStar", to_json(p.k_star)},
  };
}

Json to_json(const RacahParams& q) {
  return Json{
      {"d", q.d},
      {"r", to_json(q.r)},
      {"s", to_json(-q.r)},
      {"barTheta", to_json(q.bar_theta)},
      {"barThetaStar", to_json(q.bar_theta_star)},
      {"barB", to_json(q.bar_b)},
      {"barC", to_json(q.bar_c)},
      {"barA", to_json(q.bar_a)},
      {"barK", to_json(q.bar_k)},
      {"barNu", to_json(q.bar_nu)},
      {"barBStar", to_json(q.bar_b_star)},
      {"barCStar", to_json(q.bar_c_star)},
      {"barAStar", to_json(q.bar_a_star)},
      {"barKStar", to_json(q.bar_k_star)},
      {"barVarphi", to_json(q.bar_varphi)},
  };
}

Json to_json(const TheoremConditions& c) {
  return Json{
      {"rNonzero", c.r_nonzero},
      {"rPlusSZero", c.r_plus_s_zero},
      {"twoLambdaEqualsRMinusD", c.two_lambda_is_r_minus_d},
  };
}

Json report_to_json(const DualHahnParams& p, const LeonardPairReport& report) {
  Json conditions = Json::object();
  for (const auto& c : report.condition_trace) conditions[c.name] = c.holds;
  Json out{
      {"d", p.d},
      {"r", to_json(p.r)},
      {"s", to_json(p.s)},
      {"lambda", to_json(report.lambda)},
      {"verdict", report.verdict},
      {"witness", report.witness ? Json(report.witness->perm) : Json(nullptr)},
      {"witnessCandidate", report.witness_candidate},
      {"conditions", std::move(conditions)},
      {"theoremConditions", to_json(theorem_conditions(p, report.lambda))},
      // Only the (A, A*^2) branch of square-preserving is examined here.
      {"squarePreservingBranch", "A, A*^2"},
      {"unexaminedBranches", Json::array({"A^2, A*"})},
  };
  if (report.exhaustive_agrees) {
    Json hits = Json::array();
    for (const auto& h : report.exhaustive_hits) hits.push_back(h.perm);
    out["exhaustive"] = Json{{"agrees", *report.exhaustive_agrees}, {"hits", std::move(hits)}};
  } else {
    out["exhaustive"] = nullptr;
  }
  return out;
}

Json to_json(const SearchRecord& rec) {
  Json out{
      {"d", rec.d},
      {"r", to_json(rec.r)},
      {"s", to_json(rec.s)},
      {"lambda", to_json(rec.lambda)},
      {"verdict", rec.report.verdict},
      {"witness", rec.report.witness ? Json(rec.report.witness->perm) : Json(nullptr)},
      {"theoremConditions", to_json(rec.conditions)},
      {"predictedByTheorem", rec.predicted_by_theorem},
  };
  if (rec.report.exhaustive_agrees) out["exhaustiveAgrees"] = *rec.report.exhaustive_agrees;
  return out;
}

Json to_json(const EvenModule& m) {
  return Json{
      {"kind", m.kind},
      {"n", m.n},
      {"dim", m.dim},
      {"Esq", to_json(m.e_sq)},
      {"Fsq", to_json(m.f_sq)},
      {"H", to_json(m.h)},
      {"Lambda", to_json(m.casimir)},
  };
}

Json to_json(const CatalogEntry& e) {
  return Json{
      {"k", e.k},
      {"kind", e.kind},
      {"n", e.n},
      {"A", to_json(e.adjacency)},
      {"AStar", to_json(e.dual_adjacency)},
  };
}

void write_value_table_csv(std::ostream& os, const DualHahnParams& p, const ValueTable& u) {
  os << "i,j,theta_j,u_i(theta_j)\n";
  for (int i = 0; i <= p.d; ++i) {
    for (int j = 0; j <= p.d; ++j) os << i << ',' << j << ',' << p.theta(j) << ',' << u(i, j) << '\n';
  }
}

}  // namespace leonard_lab
