#include <gtest/gtest.h>

#include <pauli_fwht/oracle.hpp>
#include <pauli_fwht/random.hpp>
#include <pauli_fwht/transform.hpp>

#include "test_common.hpp"

using namespace pauli_fwht;
using pauli_fwht::testing::diag1234;
using pauli_fwht::testing::from_rows;
using pauli_fwht::testing::pauli_y;

namespace {

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.qubits());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k)
      for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

Complex trace(const ComplexMatrix& a) {
  Complex t{};
  for (std::size_t i = 0; i < a.dim(); ++i) t += a(i, i);
  return t;
}

}  // namespace

TEST(Materialize, Examples) {
  EXPECT_EQ(oracle::materialize(0, 0, 1), from_rows({{1.0, 0.0}, {0.0, 1.0}}));
  EXPECT_EQ(oracle::materialize(1, 1, 1), pauli_y());
  // I on qubit 1, X on qubit 0: block diagonal [[X, 0], [0, X]].
  EXPECT_EQ(oracle::materialize(1, 0, 2), from_rows({{0.0, 1.0, 0.0, 0.0},
                                                     {1.0, 0.0, 0.0, 0.0},
                                                     {0.0, 0.0, 0.0, 1.0},
                                                     {0.0, 0.0, 1.0, 0.0}}));
  // Z on qubit 1, I on qubit 0.
  EXPECT_EQ(oracle::materialize(0, 2, 2), from_rows({{1.0, 0.0, 0.0, 0.0},
                                                     {0.0, 1.0, 0.0, 0.0},
                                                     {0.0, 0.0, -1.0, 0.0},
                                                     {0.0, 0.0, 0.0, -1.0}}));
}

TEST(Materialize, HermitianUnitaryAndSparse) {
  for (unsigned n = 0; n <= 3; ++n) {
    const BitIndex d = BitIndex{1} << n;
    for (BitIndex r = 0; r < d; ++r) {
      for (BitIndex s = 0; s < d; ++s) {
        const ComplexMatrix p = oracle::materialize(r, s, n);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < d; ++i) {
          for (std::size_t j = 0; j < d; ++j) {
            ASSERT_EQ(p(i, j), std::conj(p(j, i)));
            const Complex z = p(i, j);
            if (z != Complex{}) {
              ++nonzero;
              ASSERT_TRUE(z == Complex(1, 0) || z == Complex(-1, 0) || z == Complex(0, 1) ||
                          z == Complex(0, -1));
            }
          }
        }
        EXPECT_EQ(nonzero, d);
        ComplexMatrix identity(n);
        for (std::size_t i = 0; i < d; ++i) identity(i, i) = 1.0;
        EXPECT_EQ(multiply(p, p), identity);
      }
    }
  }
}

TEST(Materialize, Orthonormal) {
  for (unsigned n = 0; n <= 3; ++n) {
    const BitIndex d = BitIndex{1} << n;
    for (BitIndex r = 0; r < d; ++r)
      for (BitIndex s = 0; s < d; ++s)
        for (BitIndex r2 = 0; r2 < d; ++r2)
          for (BitIndex s2 = 0; s2 < d; ++s2) {
            const Complex ip =
                trace(multiply(oracle::materialize(r, s, n), oracle::materialize(r2, s2, n))) / double(d);
            ASSERT_EQ(ip, Complex(r == r2 && s == s2 ? 1.0 : 0.0, 0.0));
          }
  }
}

TEST(TraceCoefficient, Examples) {
  const ComplexMatrix id = from_rows({{1.0, 0.0}, {0.0, 1.0}});
  EXPECT_EQ(oracle::trace_coefficient(id, 0, 0), Complex(1, 0));
  EXPECT_EQ(oracle::trace_coefficient(id, 1, 0), Complex(0, 0));
  EXPECT_EQ(oracle::trace_coefficient(diag1234(), 0, 1), Complex(-0.5, 0));
}

// tr(P A) / 2^n recovers alpha for non-Hermitian A; tr(A^dagger P) / 2^n would
// give its conjugate.
TEST(TraceCoefficient, NonHermitianCoefficientNotConjugated) {
  const Complex alpha{0.3, 0.7};
  ComplexMatrix a = oracle::materialize(1, 1, 1);
  for (Complex& z : a.data()) z *= alpha;
  EXPECT_NEAR(std::abs(oracle::trace_coefficient(a, 1, 1) - alpha), 0.0, 1e-15);
}

TEST(NaiveDecompose, IdentityAndBasis) {
  for (unsigned n = 0; n <= 3; ++n) {
    ComplexMatrix id(n);
    for (std::size_t i = 0; i < id.dim(); ++i) id(i, i) = 1.0;
    const CoefficientMatrix c = oracle::naive_decompose(id);
    for (std::size_t k = 0; k < c.size(); ++k) EXPECT_EQ(c.data()[k], Complex(k == 0 ? 1.0 : 0.0, 0.0));

    const BitIndex d = BitIndex{1} << n;
    for (BitIndex r = 0; r < d; ++r) {
      for (BitIndex s = 0; s < d; ++s) {
        const CoefficientMatrix b = oracle::naive_decompose(oracle::materialize(r, s, n));
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            ASSERT_EQ(b(i, j), Complex(i == r && j == s ? 1.0 : 0.0, 0.0));
      }
    }
  }
}

TEST(NaiveDecompose, SumOfTermsRebuildsMatrix) {
  for (unsigned n = 1; n <= 3; ++n) {
    const ComplexMatrix a = random_complex(n, 100 + n);
    const CoefficientMatrix c = oracle::naive_decompose(a);
    ComplexMatrix sum(n);
    for (BitIndex r = 0; r < a.dim(); ++r)
      for (BitIndex s = 0; s < a.dim(); ++s) {
        const ComplexMatrix p = oracle::materialize(r, s, n);
        for (std::size_t k = 0; k < sum.size(); ++k) sum.data()[k] += c(r, s) * p.data()[k];
      }
    EXPECT_LT(max_abs_diff(sum, a), 1e-12);
  }
}

TEST(NaiveDecompose, MatchesFastPath4x4) {
  const ComplexMatrix a = random_complex(2, 4242);
  const CoefficientMatrix expected = oracle::naive_decompose(a);
  EXPECT_LT(max_abs_diff(decompose(ComplexMatrix(a)), expected), 1e-12);
}

TEST(NaiveDecompose, RefusesBeyondCap) {
  EXPECT_THROW(oracle::naive_decompose(ComplexMatrix(oracle::kMaxOracleQubits + 1)), LimitError);
}
