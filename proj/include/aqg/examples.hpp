#pragma once

#include <string>
#include <vector>

#include "aqg/algebra.hpp"

namespace aqg {

/// A finite group given by its Cayley table: table[i][j] = index of g_i g_j.
struct CayleyTable {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table;

  int order() const { return static_cast<int>(table.size()); }
  /// Throws NOT_A_GROUP unless the table is a group law.
  void validate() const;
  int identity() const;
  int inverse(int g) const;

  static CayleyTable cyclic(int n);
  static CayleyTable symmetric3();
  static CayleyTable dihedral4();
  /// Look up one of the built-in tables by name ("z2", "z3", "z4", "z6", "s3").
  static CayleyTable named(const std::string& name);
};

/// An algebra together with its candidate comultiplication (n^2 x n matrix
/// on coordinates) — the raw input of the verification pipeline.
struct AlgebraWithComult {
  FiniteStarAlgebra algebra;
  Matrix comult;
};

/// Group algebra C[G]: basis the group elements, g* = g^-1, D(g) = g (x) g.
AlgebraWithComult make_group_algebra(const CayleyTable& g);

/// Function algebra F(G): pointwise product on indicator functions,
/// D(f)(s,t) = f(st).
AlgebraWithComult make_function_algebra(const CayleyTable& g);

/// The four-dimensional Hopf *-algebra on generators g, x with g^2 = 1,
/// x^2 = 0, xg = -gx, D(g) = g (x) g, D(x) = x (x) 1 + g (x) x.  Its
/// two-sided integral is faithful but not positive, which makes it the one
/// desk-scale input with nontrivial modular data.
AlgebraWithComult make_sweedler();

/// The eight-dimensional Kac-Paljutkin quantum group, presented on the
/// canonical basis e1..e4 of C^4 plus matrix units of M_2(C).  Built as the
/// group algebra C[D_4] with the comultiplication twisted by the
/// nondegenerate 2-cocycle on the Klein subgroup {1, a^2, b, a^2 b}, then
/// base-changed to the central idempotent / matrix unit basis.
AlgebraWithComult make_kac_paljutkin();

/// Dispatch by kind name used by the CLI generator.
AlgebraWithComult make_example(const std::string& kind,
                               const std::string& group_name = "");

/// The seven bundled example names, in report order.
const std::vector<std::string>& bundled_example_names();
AlgebraWithComult make_bundled_example(const std::string& name);

}  // namespace aqg
