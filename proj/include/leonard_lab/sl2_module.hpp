#pragma once

// Irreducible modules L_n^(0), L_n^(1) of the even subalgebra of U(sl2),
// generated by E^2, F^2, H and the Casimir Lambda, as explicit matrices.

#include <utility>
#include <vector>

#include "leonard_lab/matrix.hpp"
#include "leonard_lab/params.hpp"

namespace leonard_lab {

/// Generator actions on the basis v_0..v_{dim-1}. Column i of a matrix is
/// the image of v_i.
struct EvenModule {
  int kind = 0;  ///< 0 or 1
  int n = 0;
  int dim = 0;   ///< floor(n/2)+1 for kind 0, floor((n+1)/2) for kind 1
  RationalMatrix e_sq;
  RationalMatrix f_sq;
  RationalMatrix h;
  RationalMatrix casimir;
};

/// Throws std::invalid_argument for kind not in {0, 1}, n < 0, or kind 1 with n < 1.
EvenModule build_even_module(int kind, int n);

/// [H, E^2] == 4 E^2, [H, F^2] == -4 F^2, Lambda == n(n+2)/2 I and Lambda
/// commutes with E^2, F^2, H; plus the shape constraints (E^2 strictly upper
/// bidiagonal, F^2 strictly lower bidiagonal, H diagonal).
bool check_module_relations(const EvenModule& m);

/// (E^2 + F^2 + Lambda - 1)/4 - H^2/8 and (n - H)/4 (kind 0) or
/// (n - H)/4 - 1/2 (kind 1). Throws std::invalid_argument for even n.
std::pair<RationalMatrix, RationalMatrix> example_pair(int kind, int n);

/// (r, s, d) the pair above corresponds to: (-1/2, 1/2, (n-1)/2) for kind 0,
/// (1/2, -1/2, (n-1)/2) for kind 1.
DualHahnParams example_params(int kind, int n);

/// example_pair(kind, n) equals (matrix_L_u_basis, matrix_Lstar_u_basis) at
/// example_params(kind, n), entry by entry.
bool verify_example_match(int kind, int n);

struct CatalogEntry {
  int k = 0;
  int kind = 0;
  int n = 0;
  RationalMatrix adjacency;       ///< (E^2 + F^2 + Lambda - D)/2 - H^2/4
  RationalMatrix dual_adjacency;  ///< H
};

/// Irreducible Terwilliger modules of the halved D-cube up to isomorphism:
/// L_{D-2k}^(0) for even k in [0, floor(D/2)], L_{D-2k}^(1) for odd k in
/// [0, floor((D-1)/2)], ordered by k. Throws std::invalid_argument if D < 1.
std::vector<CatalogEntry> terwilliger_catalog(int D);

/// For odd D: adjacency == 2 [L]_u + (1-D)/2 I and dual_adjacency ==
/// c I - 4 [L*]_u (c = n for kind 0, n-2 for kind 1) at example_params, and the
/// pair is dual almost bipartite after the (r-d)/2 shift. Throws
/// std::invalid_argument for even D.
bool check_catalog_entry(int D, const CatalogEntry& entry);

}  // namespace leonard_lab
