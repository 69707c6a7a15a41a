#include "aqg/examples.hpp"

#include <array>
#include <algorithm>

namespace aqg {

void CayleyTable::validate() const {
  const int n = order();
  if (n == 0 || static_cast<int>(labels.size()) != n)
    fail(ErrorCode::not_a_group, "empty or mislabelled Cayley table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      fail(ErrorCode::not_a_group, "Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        fail(ErrorCode::not_a_group, "Cayley table entry out of range");
  }
  // Latin square.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> row(n, false), col(n, false);
    for (int j = 0; j < n; ++j) {
      if (row[table[i][j]])
        fail(ErrorCode::not_a_group, "row is not a permutation");
      row[table[i][j]] = true;
      if (col[table[j][i]])
        fail(ErrorCode::not_a_group, "column is not a permutation");
      col[table[j][i]] = true;
    }
  }
  // Associativity.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (table[table[i][j]][k] != table[i][table[j][k]])
          fail(ErrorCode::not_a_group, "Cayley table is not associative");
  identity();  // throws when missing
}

int CayleyTable::identity() const {
  const int n = order();
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      ok = table[e][i] == i && table[i][e] == i;
    if (ok) return e;
  }
  fail(ErrorCode::not_a_group, "no identity element");
}

int CayleyTable::inverse(int g) const {
  const int e = identity();
  for (int h = 0; h < order(); ++h)
    if (table[g][h] == e && table[h][g] == e) return h;
  fail(ErrorCode::not_a_group, "missing inverse");
}

CayleyTable CayleyTable::cyclic(int n) {
  CayleyTable t;
  for (int i = 0; i < n; ++i)
    t.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  t.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t.table[i][j] = (i + j) % n;
  return t;
}

CayleyTable CayleyTable::symmetric3() {
  // Elements as permutations of {0,1,2}, composition (pq)(x) = p(q(x)).
  const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2},
                                                    {1, 2, 0},
                                                    {2, 0, 1},
                                                    {1, 0, 2},
                                                    {2, 1, 0},
                                                    {0, 2, 1}}};
  CayleyTable t;
  t.labels = {"e", "r", "r2", "s", "rs", "r2s"};
  t.table.assign(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      t.table[i][j] =
          static_cast<int>(std::find(perms.begin(), perms.end(), c) -
                           perms.begin());
    }
  return t;
}

CayleyTable CayleyTable::dihedral4() {
  // a^4 = b^2 = 1, b a b = a^3; elements a^m b^k, index m + 4k.
  CayleyTable t;
  t.labels = {"e", "a", "a2", "a3", "b", "ab", "a2b", "a3b"};
  t.table.assign(8, std::vector<int>(8));
  auto idx = [](int m, int k) { return ((m % 4) + 4) % 4 + 4 * (k % 2); };
  for (int m1 = 0; m1 < 4; ++m1)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int m2 = 0; m2 < 4; ++m2)
        for (int k2 = 0; k2 < 2; ++k2) {
          // (a^m1 b^k1)(a^m2 b^k2) = a^(m1 + s m2) b^(k1+k2), s = (-1)^k1.
          const int m = k1 == 0 ? m1 + m2 : m1 - m2;
          t.table[idx(m1, k1)][idx(m2, k2)] = idx(m, k1 + k2);
        }
  return t;
}

CayleyTable CayleyTable::named(const std::string& name) {
  if (name == "z2") return cyclic(2);
  if (name == "z3") return cyclic(3);
  if (name == "z4") return cyclic(4);
  if (name == "z5") return cyclic(5);
  if (name == "z6") return cyclic(6);
  if (name == "s3") return symmetric3();
  if (name == "d4") return dihedral4();
  fail(ErrorCode::not_a_group, "unknown group name: " + name);
}

AlgebraWithComult make_group_algebra(const CayleyTable& g) {
  g.validate();
  const int n = g.order();
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) left[i](g.table[i][j], j) = 1.0;
  Matrix star = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) star(g.inverse(i), i) = 1.0;
  Vector unit = Vector::Zero(n);
  unit(g.identity()) = 1.0;

  Matrix comult = Matrix::Zero(n * n, n);
  for (int i = 0; i < n; ++i) comult(i * n + i, i) = 1.0;

  FiniteStarAlgebra alg("group(" + std::to_string(n) + ")", g.labels,
                        std::move(left), std::move(star), std::move(unit));
  return {std::move(alg), std::move(comult)};
}

AlgebraWithComult make_function_algebra(const CayleyTable& g) {
  g.validate();
  const int n = g.order();
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i) left[i](i, i) = 1.0;  // pointwise product
  Matrix star = Matrix::Identity(n, n);
  Vector unit = Vector::Ones(n);

  // D(1_x) = sum_{st = x} 1_s (x) 1_t.
  Matrix comult = Matrix::Zero(n * n, n);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) comult(s * n + t, g.table[s][t]) = 1.0;

  std::vector<std::string> labels;
  for (const auto& l : g.labels) labels.push_back("1_" + l);
  FiniteStarAlgebra alg("functions(" + std::to_string(n) + ")",
                        std::move(labels), std::move(left), std::move(star),
                        std::move(unit));
  return {std::move(alg), std::move(comult)};
}

AlgebraWithComult make_sweedler() {
  // Basis (1, g, x, gx): monomial g^a x^b at index a + 2b.
  const int n = 4;
  auto mul = [](int i, int j, Complex& sign) -> int {
    const int a1 = i & 1, b1 = (i >> 1) & 1;
    const int a2 = j & 1, b2 = (j >> 1) & 1;
    if (b1 + b2 >= 2) return -1;  // x^2 = 0
    // move x past g^a2: x g = -g x
    sign = (b1 == 1 && a2 == 1) ? Complex(-1.0) : Complex(1.0);
    return ((a1 + a2) % 2) + 2 * (b1 + b2);
  };
  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex sign;
      const int k = mul(i, j, sign);
      if (k >= 0) left[i](k, j) = sign;
    }
  // 1* = 1, g* = g, x* = x, (gx)* = x g = -gx.
  Matrix star = Matrix::Zero(n, n);
  star(0, 0) = 1.0;
  star(1, 1) = 1.0;
  star(2, 2) = 1.0;
  star(3, 3) = -1.0;
  Vector unit = Vector::Zero(n);
  unit(0) = 1.0;

  Matrix comult = Matrix::Zero(n * n, n);
  auto put = [&](int col, int p, int q, Complex c) {
    comult(p * n + q, col) += c;
  };
  put(0, 0, 0, 1.0);               // D(1) = 1 (x) 1
  put(1, 1, 1, 1.0);               // D(g) = g (x) g
  put(2, 2, 0, 1.0);               // D(x) = x (x) 1 + g (x) x
  put(2, 1, 2, 1.0);
  put(3, 3, 1, 1.0);               // D(gx) = gx (x) g + 1 (x) gx
  put(3, 0, 3, 1.0);

  FiniteStarAlgebra alg("sweedler", {"1", "g", "x", "gx"}, std::move(left),
                        std::move(star), std::move(unit));
  return {std::move(alg), std::move(comult)};
}

AlgebraWithComult make_kac_paljutkin() {
  // Presentation on generators x, y, z: x, y commuting self-adjoint
  // involutions, z with
  //   z x = y z,  z y = x z,  z^2 = w := (1 + x + y - xy)/2,  z* = z^-1,
  //   D(x) = x (x) x,  D(y) = y (x) y,
  //   D(z) = J (z (x) z),  J := (1(x)1 + 1(x)x + y(x)1 - y(x)x)/2.
  // Monomial basis g z^d with g in {1, x, y, xy}: index(g) + 4 d, where
  // index(x^m y^n) = m + 2n.  The central element w satisfies w^2 = 1 and
  // sigma(g) = z g z^-1 swaps x and y.
  const int n = 8;
  auto sigma = [](int g) {  // swap the x and y exponents
    const int m = g & 1, nn = (g >> 1) & 1;
    return nn + 2 * m;
  };
  auto gmul = [](int g, int h) { return g ^ h; };
  const std::array<double, 4> w_coeff = {0.5, 0.5, 0.5, -0.5};  // w on 1,x,y,xy

  std::vector<Matrix> left(n, Matrix::Zero(n, n));
  for (int g = 0; g < 4; ++g)
    for (int d1 = 0; d1 < 2; ++d1)
      for (int h = 0; h < 4; ++h)
        for (int d2 = 0; d2 < 2; ++d2) {
          // (g z^d1)(h z^d2) = g sigma^d1(h) z^(d1+d2)
          const int i = g + 4 * d1, j = h + 4 * d2;
          const int gh = gmul(g, d1 ? sigma(h) : h);
          if (d1 + d2 < 2) {
            left[i](gh + 4 * (d1 + d2), j) = 1.0;
          } else {
            for (int k = 0; k < 4; ++k)  // z^2 = w
              left[i](gmul(gh, k), j) += w_coeff[k];
          }
        }

  // g* = g, (g z)* = z^-1 g = w sigma(g) z.
  Matrix star = Matrix::Zero(n, n);
  for (int g = 0; g < 4; ++g) {
    star(g, g) = 1.0;
    const int sg = sigma(g);
    for (int k = 0; k < 4; ++k) star(gmul(sg, k) + 4, g + 4) += w_coeff[k];
  }
  Vector unit = Vector::Zero(n);
  unit(0) = 1.0;

  Matrix comult = Matrix::Zero(n * n, n);
  // J expanded: pairs (j1, j2) in {1, y} x {1, x} with signs.
  const std::array<std::tuple<int, int, double>, 4> j_terms = {
      std::tuple<int, int, double>{0, 0, 0.5},
      {0, 1, 0.5},
      {2, 0, 0.5},
      {2, 1, -0.5}};
  for (int g = 0; g < 4; ++g) {
    comult(g * n + g, g) = 1.0;  // D(g) = g (x) g
    // D(g z) = (g (x) g) J (z (x) z) = sum c (g j1 z) (x) (g j2 z)
    for (const auto& [j1, j2, c] : j_terms) {
      const int p = gmul(g, j1) + 4, q = gmul(g, j2) + 4;
      comult(p * n + q, g + 4) += c;
    }
  }

  FiniteStarAlgebra monomial("kac_paljutkin_monomial",
                             {"1", "x", "y", "xy", "z", "xz", "yz", "xyz"},
                             left, star, unit);

  // Change to the canonical basis: four characters (counit first) plus the
  // matrix units of the two-dimensional representation
  //   x -> diag(1, -1), y -> diag(-1, 1), z -> offdiag(1, 1).
  // T maps monomial coordinates to (chi_1..chi_4, pi_11, pi_12, pi_21, pi_22);
  // the canonical basis is T^-1 applied to the standard basis.
  Matrix t = Matrix::Zero(n, n);
  const Complex I(0.0, 1.0);
  const std::array<Complex, 4> zval = {1.0, -1.0, I, -I};
  const std::array<double, 4> aval = {1.0, 1.0, -1.0, -1.0};
  for (int c = 0; c < 4; ++c)
    for (int g = 0; g < 4; ++g)
      for (int d = 0; d < 2; ++d) {
        const int m = g & 1, nn = (g >> 1) & 1;
        const double on_g = std::pow(aval[c], m + nn);
        t(c, g + 4 * d) = on_g * (d ? zval[c] : Complex(1.0));
      }
  Matrix px(2, 2), py(2, 2), pz(2, 2);
  px << 1, 0, 0, -1;
  py << -1, 0, 0, 1;
  pz << 0, 1, 1, 0;
  for (int g = 0; g < 4; ++g)
    for (int d = 0; d < 2; ++d) {
      Matrix rep = Matrix::Identity(2, 2);
      if (g & 1) rep = rep * px;
      if (g & 2) rep = rep * py;
      if (d) rep = rep * pz;
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) t(4 + 2 * r + s, g + 4 * d) = rep(r, s);
    }
  const Matrix c_basis = t.inverse();  // columns: canonical basis elements

  std::vector<Matrix> cleft(n);
  for (int i = 0; i < n; ++i)
    cleft[i] = t * monomial.left_mult_operator(Vector(c_basis.col(i))) * c_basis;
  Matrix cstar = t * monomial.star_matrix() * c_basis.conjugate();
  Vector cunit = t * monomial.unit();
  Matrix ccomult(n * n, n);
  const Matrix tt = kron(t, t);
  for (int i = 0; i < n; ++i)
    ccomult.col(i) = tt * (comult * c_basis.col(i));

  // Entries are exact multiples of 1/4 by construction; snap away the
  // inversion round-off.
  auto snap = [](Matrix& m) {
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        const double re = std::round(m(r, c).real() * 16.0) / 16.0;
        const double im = std::round(m(r, c).imag() * 16.0) / 16.0;
        if (std::abs(re - m(r, c).real()) < 1e-12 &&
            std::abs(im - m(r, c).imag()) < 1e-12)
          m(r, c) = Complex(re, im);
      }
  };
  for (auto& m : cleft) snap(m);
  snap(cstar);
  snap(ccomult);
  Matrix unit_m = cunit;
  snap(unit_m);
  cunit = unit_m.col(0);

  FiniteStarAlgebra alg("kac_paljutkin",
                        {"e1", "e2", "e3", "e4", "E11", "E12", "E21", "E22"},
                        std::move(cleft), std::move(cstar), std::move(cunit));
  return {std::move(alg), std::move(ccomult)};
}

AlgebraWithComult make_example(const std::string& kind,
                               const std::string& group_name) {
  if (kind == "group_algebra")
    return make_group_algebra(CayleyTable::named(group_name));
  if (kind == "function_algebra")
    return make_function_algebra(CayleyTable::named(group_name));
  if (kind == "sweedler") return make_sweedler();
  if (kind == "kac_paljutkin") return make_kac_paljutkin();
  fail(ErrorCode::schema_error, "unknown example kind: " + kind);
}

const std::vector<std::string>& bundled_example_names() {
  static const std::vector<std::string> names = {
      "group_z2",  "group_z4",      "group_s3", "functions_z2",
      "functions_s3", "kac_paljutkin", "sweedler"};
  return names;
}

AlgebraWithComult make_bundled_example(const std::string& name) {
  if (name == "group_z2") return make_group_algebra(CayleyTable::cyclic(2));
  if (name == "group_z4") return make_group_algebra(CayleyTable::cyclic(4));
  if (name == "group_s3") return make_group_algebra(CayleyTable::symmetric3());
  if (name == "functions_z2")
    return make_function_algebra(CayleyTable::cyclic(2));
  if (name == "functions_s3")
    return make_function_algebra(CayleyTable::symmetric3());
  if (name == "kac_paljutkin") return make_kac_paljutkin();
  if (name == "sweedler") return make_sweedler();
  fail(ErrorCode::schema_error, "unknown bundled example: " + name);
}

}  // namespace aqg
