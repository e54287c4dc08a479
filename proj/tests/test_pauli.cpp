#include <gtest/gtest.h>

#include <set>
#include <string>

#include <pauli_fwht/oracle.hpp>
#include <pauli_fwht/pauli.hpp>

using namespace pauli_fwht;

TEST(Label, Examples) {
  EXPECT_EQ(label_of(0, 0, 3), "III");
  EXPECT_EQ(label_of(1, 1, 1), "Y");
  EXPECT_EQ(label_of(1, 2, 2), "ZX");
  EXPECT_EQ(label_of(0, 0, 0), "");
}

TEST(Label, Parse) {
  EXPECT_EQ(parse_label("Y"), (ParsedLabel{1, 1, 1}));
  EXPECT_EQ(parse_label("ZX"), (ParsedLabel{1, 2, 2}));
  EXPECT_EQ(parse_label("IZ"), (ParsedLabel{0, 1, 2}));
  EXPECT_EQ(parse_label(""), (ParsedLabel{0, 0, 0}));
}

TEST(Label, ParseRejectsBadLetterWithPosition) {
  try {
    parse_label("XQZ");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("position 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_label("x"), ParseError);
  EXPECT_THROW(parse_label(std::string(kMaxQubits + 1, 'I')), ParseError);
}

TEST(Label, BijectionAndRoundTrip) {
  for (unsigned n = 0; n <= 4; ++n) {
    std::set<std::string> labels;
    const BitIndex d = BitIndex{1} << n;
    for (BitIndex r = 0; r < d; ++r) {
      for (BitIndex s = 0; s < d; ++s) {
        const std::string label = label_of(r, s, n);
        ASSERT_EQ(label.size(), n);
        labels.insert(label);
        ASSERT_EQ(parse_label(label), (ParsedLabel{r, s, n}));
      }
    }
    EXPECT_EQ(labels.size(), std::size_t{1} << (2 * n));
  }
}

// A label read as a literal tensor product (leftmost letter = leftmost
// Kronecker factor) must give the same matrix as materializing its (r, s).
TEST(Label, ConventionMatchesMaterialize) {
  const oracle::Matrix2 mats[4] = {oracle::single_qubit(0, 0), oracle::single_qubit(1, 0),
                                   oracle::single_qubit(0, 1), oracle::single_qubit(1, 1)};
  auto letter_matrix = [&](char c) -> const oracle::Matrix2& {
    switch (c) {
      case 'X': return mats[1];
      case 'Z': return mats[2];
      case 'Y': return mats[3];
      default: return mats[0];
    }
  };
  for (unsigned n = 1; n <= 3; ++n) {
    const BitIndex d = BitIndex{1} << n;
    for (BitIndex r = 0; r < d; ++r) {
      for (BitIndex s = 0; s < d; ++s) {
        const std::string label = label_of(r, s, n);
        const ComplexMatrix m = oracle::materialize(r, s, n);
        for (BitIndex p = 0; p < d; ++p) {
          for (BitIndex q = 0; q < d; ++q) {
            Complex v{1, 0};
            for (unsigned k = 0; k < n; ++k) {
              const unsigned bit = n - 1 - k;
              v *= letter_matrix(label[k])[(p >> bit) & 1u][(q >> bit) & 1u];
            }
            ASSERT_EQ(m(p, q), v) << label;
          }
        }
      }
    }
  }
}

TEST(Symplectic, PassThrough) {
  EXPECT_EQ(symplectic_of(PauliTerm{0, 0, 1.0, 1}), (SymplecticRep{0, 0, 0}));
  EXPECT_EQ(symplectic_of(PauliTerm{1, 1, 1.0, 1}), (SymplecticRep{1, 1, 0}));
  const PauliTerm t{5, 3, Complex{0.25, -2}, 3};
  EXPECT_EQ(symplectic_of(t), (SymplecticRep{5, 3, 0}));
  EXPECT_EQ(t.coeff, Complex(0.25, -2));
}

TEST(TermList, FromCoefficientsFiltersAndOrders) {
  CoefficientMatrix c(1);
  c(1, 1) = 0.5;
  c(0, 1) = Complex{0, -1e-13};
  c(0, 0) = 2.0;
  const TermList t = terms_from_coefficients(c, 1e-12);
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.terms[0].label(), "I");
  EXPECT_EQ(t.terms[1].label(), "Y");
  EXPECT_EQ(terms_from_coefficients(c, 0.0).size(), 3u);
  EXPECT_TRUE(terms_from_coefficients(c, 1e300).empty());
  EXPECT_THROW(terms_from_coefficients(c, -1.0), Error);
}

TEST(TermList, CoefficientsFromTermsRejectsDuplicates) {
  TermList t;
  t.n = 1;
  t.terms = {{1, 1, 1.0, 1}, {1, 1, 2.0, 1}};
  EXPECT_THROW(coefficients_from_terms(t), Error);
  t.terms = {{2, 0, 1.0, 1}};
  EXPECT_THROW(coefficients_from_terms(t), DimensionError);
}
