#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "xxcorr/xxcorr.hpp"

using namespace xxcorr;
using testutil::make_rng;

TEST_CASE("kron basics", "[linalg]") {
  CHECK(max_abs_diff(kron(identity2(), identity2()), ComplexMatrix::identity(4)) == 0.0);

  const ComplexMatrix zz = kron(pauli_z(), pauli_z());
  ComplexMatrix zz_expect(4);
  zz_expect(0, 0) = 1.0;
  zz_expect(1, 1) = -1.0;
  zz_expect(2, 2) = -1.0;
  zz_expect(3, 3) = 1.0;
  CHECK(max_abs_diff(zz, zz_expect) == 0.0);

  // (sx x sx)|00> = |11>
  const ComplexMatrix xx = kron(pauli_x(), pauli_x());
  CHECK(xx(3, 0) == cplx(1.0));
  CHECK(xx(0, 0) == cplx(0.0));
  CHECK(xx(1, 0) == cplx(0.0));
  CHECK(xx(2, 0) == cplx(0.0));
}

TEST_CASE("partial trace on known states", "[linalg]") {
  const ComplexMatrix singlet = testutil::projector4({0.0, 1.0, -1.0, 0.0});
  const ComplexMatrix half = 0.5 * identity2();
  CHECK(max_abs_diff(partial_trace(singlet, Qubit::A), half) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(singlet, Qubit::B), half) <= 1e-15);

  ComplexMatrix ra(2), rb(2);
  ra(0, 0) = 0.7;
  ra(1, 1) = 0.3;
  ra(0, 1) = 0.1;
  ra(1, 0) = 0.1;
  rb(0, 0) = 0.6;
  rb(1, 1) = 0.4;
  rb(0, 1) = cplx(0.2, -0.1);
  rb(1, 0) = cplx(0.2, 0.1);
  const ComplexMatrix prod = kron(ra, rb);
  CHECK(max_abs_diff(partial_trace(prod, Qubit::A), ra) <= 1e-15);
  CHECK(max_abs_diff(partial_trace(prod, Qubit::B), rb) <= 1e-15);

  // Thermal marginal of the first qubit is diag((u1+w1)/z, (u2+w2)/z).
  const ThermalState ts = thermal_state({1.0, 0.7, -0.4, 0.8});
  const ComplexMatrix ma = partial_trace(ts.rho, Qubit::A);
  CHECK(std::abs(ma(0, 0) - cplx((ts.u1 + ts.w1) / ts.z)) <= 1e-14);
  CHECK(std::abs(ma(1, 1) - cplx((ts.u2 + ts.w2) / ts.z)) <= 1e-14);
  CHECK(std::abs(ma(0, 1)) == 0.0);
}

TEST_CASE("partial trace input validation", "[linalg]") {
  ComplexMatrix bad(4);
  bad(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(partial_trace(bad, Qubit::A), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(2), Qubit::A), std::invalid_argument);
}

TEST_CASE("eig_hermitian on known matrices", "[linalg]") {
  ComplexMatrix d(4);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  d(2, 2) = 2.0;
  d(3, 3) = 0.0;
  const auto ed = eig_hermitian(d);
  CHECK(ed.eigenvalues == std::vector<double>{0.0, 1.0, 2.0, 3.0});

  const auto ex = eig_hermitian(pauli_x());
  CHECK(ex.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-14));
  CHECK(ex.eigenvalues[1] == Catch::Approx(1.0).margin(1e-14));
  // Phase convention: first nonzero component real positive.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(ex.eigenvectors(0, 0) - cplx(inv_sqrt2)) <= 1e-14);
  CHECK(std::abs(ex.eigenvectors(1, 0) - cplx(-inv_sqrt2)) <= 1e-14);
  CHECK(std::abs(ex.eigenvectors(0, 1) - cplx(inv_sqrt2)) <= 1e-14);
  CHECK(std::abs(ex.eigenvectors(1, 1) - cplx(inv_sqrt2)) <= 1e-14);

  const auto eh = eig_hermitian(hamiltonian({1.0, 0.0, 0.0, 1.0}));
  CHECK(eh.eigenvalues[0] == Catch::Approx(-1.0).margin(1e-12));
  CHECK(eh.eigenvalues[1] == Catch::Approx(0.0).margin(1e-12));
  CHECK(eh.eigenvalues[2] == Catch::Approx(0.0).margin(1e-12));
  CHECK(eh.eigenvalues[3] == Catch::Approx(1.0).margin(1e-12));

  ComplexMatrix bad(2);
  bad(0, 1) = 1.0;
  CHECK_THROWS_AS(eig_hermitian(bad), std::invalid_argument);
}

TEST_CASE("eig_hermitian reconstruction and orthonormality", "[linalg]") {
  auto g = make_rng(1001u);
  for (int dim : {2, 4}) {
    for (int rep = 0; rep < 50; ++rep) {
      const ComplexMatrix m = testutil::random_hermitian(g, dim, 2.0);
      const auto e = eig_hermitian(m);

      ComplexMatrix rec(dim);
      for (int k = 0; k < dim; ++k)
        for (int r = 0; r < dim; ++r)
          for (int c = 0; c < dim; ++c)
            rec(r, c) += e.eigenvalues[k] * e.eigenvectors(r, k) * std::conj(e.eigenvectors(c, k));
      CHECK(max_abs_diff(rec, m) <= 1e-10);

      const ComplexMatrix vtv = e.eigenvectors.adjoint() * e.eigenvectors;
      CHECK(max_abs_diff(vtv, ComplexMatrix::identity(dim)) <= 1e-10);

      for (int k = 1; k < dim; ++k) CHECK(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
    }
  }
}

TEST_CASE("von Neumann entropy on known states", "[linalg]") {
  CHECK(von_neumann_entropy(0.25 * ComplexMatrix::identity(4)) == Catch::Approx(2.0).margin(1e-12));

  const ComplexMatrix pure = testutil::projector4({0.5, cplx(0.1, 0.3), -0.2, cplx(0.0, 0.7)});
  CHECK(von_neumann_entropy(pure) <= 1e-10);

  ComplexMatrix half(4);
  half(0, 0) = 0.5;
  half(1, 1) = 0.5;
  CHECK(von_neumann_entropy(half) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("von Neumann entropy rejects non-states", "[linalg]") {
  ComplexMatrix neg(4);
  neg(0, 0) = 0.6;
  neg(1, 1) = 0.5;
  neg(3, 3) = -0.1;  // trace 1 but indefinite
  CHECK_THROWS_AS(von_neumann_entropy(neg), std::invalid_argument);

  CHECK_THROWS_AS(von_neumann_entropy(ComplexMatrix::identity(4)), std::invalid_argument);

  ComplexMatrix skew(4);
  skew(0, 1) = 1.0;
  CHECK_THROWS_AS(von_neumann_entropy(skew), std::invalid_argument);
}

TEST_CASE("entropy is unitarily invariant", "[linalg]") {
  auto g = make_rng(1002u);
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix rho = testutil::random_state(g);
    const ComplexMatrix u = testutil::random_unitary(g, 4);
    const ComplexMatrix rot = u * rho * u.adjoint();
    CHECK(std::abs(von_neumann_entropy(rot) - von_neumann_entropy(rho)) <= 1e-9);
  }
}

TEST_CASE("partial trace of a tensor product scales by the other trace", "[linalg]") {
  auto g = make_rng(1003u);
  for (int rep = 0; rep < 30; ++rep) {
    const ComplexMatrix a = testutil::random_hermitian(g, 2);
    const ComplexMatrix b = testutil::random_hermitian(g, 2);
    const ComplexMatrix expect_a = a * b.trace();
    const ComplexMatrix expect_b = b * a.trace();
    CHECK(max_abs_diff(partial_trace(kron(a, b), Qubit::A), expect_a) <= 1e-12);
    CHECK(max_abs_diff(partial_trace(kron(a, b), Qubit::B), expect_b) <= 1e-12);
  }
}

TEST_CASE("entropy subadditivity on thermal states", "[linalg]") {
  for (double b1 : {-2.0, -0.5, 0.0, 1.0, 3.0})
    for (double b2 : {-1.0, 0.0, 2.0})
      for (double t : {0.2, 1.0, 2.5}) {
        const ComplexMatrix rho = thermal_state({1.0, b1, b2, t}).rho;
        const double s_ab = von_neumann_entropy(rho);
        const double s_a = von_neumann_entropy(partial_trace(rho, Qubit::A));
        const double s_b = von_neumann_entropy(partial_trace(rho, Qubit::B));
        CHECK(s_ab <= s_a + s_b + 1e-9);
      }
}

TEST_CASE("singular values", "[linalg]") {
  ComplexMatrix d(4);
  d(0, 0) = 3.0;
  d(1, 1) = -1.0;
  d(2, 2) = 2.0;
  d(3, 3) = 0.0;
  const auto sd = singular_values(d);
  CHECK(sd == std::vector<double>{3.0, 2.0, 1.0, 0.0});

  auto g = make_rng(1004u);
  const auto su = singular_values(testutil::random_unitary(g, 4));
  for (double s : su) CHECK(s == Catch::Approx(1.0).margin(1e-12));

  // For Hermitian m the singular values are the absolute eigenvalues.
  for (int rep = 0; rep < 20; ++rep) {
    const ComplexMatrix m = testutil::random_hermitian(g, 4, 2.0);
    auto expect = eig_hermitian(m).eigenvalues;
    for (double& x : expect) x = std::abs(x);
    std::sort(expect.begin(), expect.end(), std::greater<double>());
    const auto got = singular_values(m);
    for (int k = 0; k < 4; ++k) CHECK(std::abs(got[k] - expect[k]) <= 1e-10);
  }
}
