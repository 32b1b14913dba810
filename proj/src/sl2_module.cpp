#include "leonard_lab/sl2_module.hpp"

#include <stdexcept>
#include <string>

#include "leonard_lab/leonard.hpp"
#include "leonard_lab/representation.hpp"

namespace leonard_lab {

namespace {

RationalMatrix identity(int n) {
  RationalMatrix out = RationalMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) out(i, i) = Rational(1);
  return out;
}

bool is_strictly_upper_bidiagonal(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j != i + 1 && !m(i, j).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace

EvenModule build_even_module(int kind, int n) {
  if (kind != 0 && kind != 1) throw std::invalid_argument("build_even_module: kind must be 0 or 1");
  if (n < 0) throw std::invalid_argument("build_even_module: n must be >= 0");
  if (kind == 1 && n < 1) throw std::invalid_argument("build_even_module: kind 1 needs n >= 1");

  EvenModule m;
  m.kind = kind;
  m.n = n;
  m.dim = kind == 0 ? n / 2 + 1 : (n + 1) / 2;
  const int dim = m.dim;
  m.e_sq = RationalMatrix::Zero(dim, dim);
  m.f_sq = RationalMatrix::Zero(dim, dim);
  m.h = RationalMatrix::Zero(dim, dim);
  for (int i = 0; i < dim; ++i) {
    if (kind == 0) {
      if (i >= 1) m.e_sq(i - 1, i) = Rational(2 * i * (2 * i - 1));
      if (i + 1 < dim) m.f_sq(i + 1, i) = Rational((n - 2 * i) * (n - 2 * i - 1));
      m.h(i, i) = Rational(n - 4 * i);
    } else {
      if (i >= 1) m.e_sq(i - 1, i) = Rational(2 * i * (2 * i + 1));
      if (i + 1 < dim) m.f_sq(i + 1, i) = Rational((n - 2 * i - 1) * (n - 2 * i - 2));
      m.h(i, i) = Rational(n - 4 * i - 2);
    }
  }
  m.casimir = Rational(n * (n + 2), 2) * identity(dim);
  return m;
}

bool check_module_relations(const EvenModule& m) {
  const RationalMatrix& e = m.e_sq;
  const RationalMatrix& f = m.f_sq;
  const RationalMatrix& h = m.h;
  const RationalMatrix& c = m.casimir;
  if (!is_strictly_upper_bidiagonal(e) || !is_strictly_upper_bidiagonal(f.transpose()) || !is_diagonal(h)) {
    return false;
  }
  const RationalMatrix he = h * e - e * h;
  const RationalMatrix hf = h * f - f * h;
  if (!exactly_equal(he, Rational(4) * e) || !exactly_equal(hf, Rational(-4) * f)) return false;
  if (!exactly_equal(c, Rational(m.n * (m.n + 2), 2) * identity(m.dim))) return false;
  for (const RationalMatrix* g : {&e, &f, &h}) {
    const RationalMatrix lhs = c * *g;
    const RationalMatrix rhs = *g * c;
    if (!exactly_equal(lhs, rhs)) return false;
  }
  return true;
}

std::pair<RationalMatrix, RationalMatrix> example_pair(int kind, int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("example_pair: n must be odd and >= 1");
  const EvenModule m = build_even_module(kind, n);
  const RationalMatrix id = identity(m.dim);
  const RationalMatrix h_sq = m.h * m.h;
  RationalMatrix first = (m.e_sq + m.f_sq + m.casimir - id) / Rational(4) - h_sq / Rational(8);
  RationalMatrix second = (Rational(n) * id - m.h) / Rational(4);
  if (kind == 1) second -= id / Rational(2);
  return {std::move(first), std::move(second)};
}

DualHahnParams example_params(int kind, int n) {
  if (n < 1 || n % 2 == 0) throw std::invalid_argument("example_params: n must be odd and >= 1");
  const Rational half(1, 2);
  return kind == 0 ? build_params((n - 1) / 2, -half, half) : build_params((n - 1) / 2, half, -half);
}

bool verify_example_match(int kind, int n) {
  const auto [first, second] = example_pair(kind, n);
  const DualHahnParams p = example_params(kind, n);
  return exactly_equal(first, matrix_L_u_basis(p)) && exactly_equal(second, matrix_Lstar_u_basis(p));
}

std::vector<CatalogEntry> terwilliger_catalog(int D) {
  if (D < 1) throw std::invalid_argument("terwilliger_catalog: D must be >= 1");
  std::vector<CatalogEntry> out;
  for (int k = 0; k <= D / 2; ++k) {
    const bool even = k % 2 == 0;
    if (!even && k > (D - 1) / 2) continue;
    CatalogEntry entry;
    entry.k = k;
    entry.kind = even ? 0 : 1;
    entry.n = D - 2 * k;
    const EvenModule m = build_even_module(entry.kind, entry.n);
    const RationalMatrix id = identity(m.dim);
    entry.adjacency = (m.e_sq + m.f_sq + m.casimir - Rational(D) * id) / Rational(2) - (m.h * m.h) / Rational(4);
    entry.dual_adjacency = m.h;
    out.push_back(std::move(entry));
  }
  return out;
}

bool check_catalog_entry(int D, const CatalogEntry& entry) {
  if (D % 2 == 0) throw std::invalid_argument("check_catalog_entry: D must be odd");
  const DualHahnParams p = example_params(entry.kind, entry.n);
  const RationalMatrix id = identity(p.d + 1);
  const RationalMatrix adjacency = Rational(2) * matrix_L_u_basis(p) + Rational(1 - D, 2) * id;
  const Rational offset(entry.kind == 0 ? entry.n : entry.n - 2);
  const RationalMatrix dual_adjacency = offset * id - Rational(4) * matrix_Lstar_u_basis(p);
  return exactly_equal(entry.adjacency, adjacency) && exactly_equal(entry.dual_adjacency, dual_adjacency) &&
         is_dual_almost_bipartite(p, canonical_lambda(p));
}

}  // namespace leonard_lab
