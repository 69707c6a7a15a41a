#include <doctest.h>

#include "aqg/linalg.hpp"

using namespace aqg;

TEST_SUITE_BEGIN("linalg");

TEST_CASE("kron follows the row-major leg convention") {
  Matrix a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 1, 1, 0;
  Matrix k = kron(a, b);
  // (a (x) b)[(i,j),(k,l)] = a(i,k) b(j,l)
  CHECK(k(0 * 2 + 1, 1 * 2 + 0) == Complex(2.0));
  CHECK(k(1 * 2 + 0, 0 * 2 + 1) == Complex(3.0));
}

TEST_CASE("leg permutation moves tensor factors") {
  Vector x(2), y(3), z(2);
  x << 1, 2;
  y << 5, 7, 11;
  z << 13, 17;
  Vector xyz = kron(kron(Matrix(x), Matrix(y)), Matrix(z)).col(0);
  // send leg order (x, y, z) -> (z, x, y): perm maps position p to perm[p]
  Matrix p = leg_permutation({2, 3, 2}, {1, 2, 0});
  Vector zxy = kron(kron(Matrix(z), Matrix(x)), Matrix(y)).col(0);
  CHECK(max_norm(Vector(p * xyz - zxy)) < 1e-14);
}

TEST_CASE("embed_legs places operators with identities elsewhere") {
  Matrix w = Matrix::Random(4, 4);
  const std::vector<Eigen::Index> dims{2, 2, 2};
  Matrix w12 = embed_legs(w, {0, 1}, dims);
  CHECK(max_norm(Matrix(w12 - kron(w, eye(2)))) < 1e-14);
  Matrix w23 = embed_legs(w, {1, 2}, dims);
  CHECK(max_norm(Matrix(w23 - kron(eye(2), w))) < 1e-14);
  // w13 = (flip 2,3) (w (x) 1) (flip 2,3)
  Matrix flip23 = leg_permutation(dims, {0, 2, 1});
  Matrix w13 = embed_legs(w, {0, 2}, dims);
  CHECK(max_norm(Matrix(w13 - flip23 * kron(w, eye(2)) * flip23)) < 1e-14);
}

TEST_CASE("slices against vector states") {
  RandomElements rng(7);
  Matrix w = Matrix::Zero(6, 6);
  Matrix a = Matrix::Random(2, 2), b = Matrix::Random(3, 3);
  w = kron(a, b);
  Vector p = rng.vector(3), q = rng.vector(3);
  // (id (x) om_{p,q})(a (x) b) = <b p, q> a
  Matrix s = slice_leg2(w, 2, 3, p, q);
  CHECK(max_norm(Matrix(s - Complex(q.dot(Vector(b * p))) * a)) < 1e-12);
  Vector p2 = rng.vector(2), q2 = rng.vector(2);
  Matrix s1 = slice_leg1(w, 2, 3, p2, q2);
  CHECK(max_norm(Matrix(s1 - Complex(q2.dot(Vector(a * p2))) * b)) < 1e-12);
}

TEST_CASE("hermitian spectral calculus") {
  Matrix m(2, 2);
  m << 2, 0, 0, 8;
  CHECK(max_norm(Matrix(hermitian_sqrt(m) * hermitian_sqrt(m) - m)) < 1e-12);
  Matrix mit = positive_imaginary_power(m, 0.5);
  CHECK(is_unitary(mit, 1e-12));
  CHECK(std::abs(mit(0, 0) - std::pow(Complex(2.0), Complex(0, 0.5))) < 1e-12);
}

TEST_CASE("antilinear composition rules") {
  RandomElements rng(3);
  Matrix m = Matrix::Random(3, 3);
  AntiLinearOp j{m};
  Vector x = rng.vector(3);
  CHECK(max_norm(Vector(j.apply(x) - m * x.conjugate())) < 1e-14);
  // J o J is linear with matrix m conj(m)
  Matrix twice = j.compose_antilinear(j);
  CHECK(max_norm(Vector(j.apply(j.apply(x)) - twice * x)) < 1e-13);
}

TEST_CASE("nullspace and rank") {
  Matrix m(3, 3);
  m << 1, 0, 1, 0, 1, 1, 1, 1, 2;
  CHECK(numeric_rank(m) == 2);
  Matrix ns = nullspace(m);
  CHECK(ns.cols() == 1);
  CHECK(max_norm(Matrix(m * ns)) < 1e-12);
}

TEST_CASE("random stream is deterministic") {
  RandomElements a(42), b(42);
  CHECK(a.vector(5) == b.vector(5));
}

TEST_SUITE_END();
