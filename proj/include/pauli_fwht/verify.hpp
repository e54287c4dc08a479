#pragma once

// Self-check: the fast decomposition against the trace oracle, plus the
// coefficient structure implied by each input's symmetry.

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "random.hpp"
#include "structure.hpp"
#include "transform.hpp"

namespace pauli_fwht {

struct VerifyConfig {
  unsigned n_max = 5;
  std::uint64_t seed = 1;
  unsigned trials = 10;
  double tolerance = 1e-12;
  unsigned threads = 1;
  /// Negative control: drops the XOR permutation from the decomposition.
  bool inject_fault = false;
};

struct VerifyRow {
  unsigned n = 0;
  SymmetryClass kind = SymmetryClass::general;
  /// max |fast - oracle| over all trials.
  double oracle_deviation = 0.0;
  /// Largest structure violation over all trials (imaginary parts for
  /// Hermitian inputs, forbidden positions for symmetric inputs).
  double structure_deviation = 0.0;
  bool classified_ok = true;
  bool passed = true;
};

struct VerifyResult {
  std::vector<VerifyRow> rows;
  double max_deviation = 0.0;
  bool passed = true;
};

inline ComplexMatrix make_input(SymmetryClass kind, unsigned n, std::uint64_t seed) {
  switch (kind) {
    case SymmetryClass::hermitian: return random_hermitian(n, seed);
    case SymmetryClass::real_symmetric: return random_real_symmetric(n, seed);
    case SymmetryClass::complex_symmetric: return random_complex_symmetric(n, seed);
    case SymmetryClass::general: break;
  }
  return random_complex(n, seed);
}

inline VerifyResult run_verify(const VerifyConfig& cfg) {
  if (cfg.n_max > oracle::kMaxOracleQubits) {
    throw LimitError("verify n_max " + std::to_string(cfg.n_max) + " exceeds cap " +
                     std::to_string(oracle::kMaxOracleQubits));
  }
  constexpr std::array kinds = {SymmetryClass::general, SymmetryClass::hermitian,
                                SymmetryClass::real_symmetric, SymmetryClass::complex_symmetric};
  VerifyResult result;
  SplitMix64 seeds(cfg.seed);
  for (unsigned n = 1; n <= cfg.n_max; ++n) {
    for (SymmetryClass kind : kinds) {
      VerifyRow row{n, kind};
      for (unsigned t = 0; t < cfg.trials; ++t) {
        const ComplexMatrix a = make_input(kind, n, seeds.next());
        const CoefficientMatrix expected = oracle::naive_decompose(a);

        ComplexMatrix work = a;
        if (cfg.inject_fault) {
          fwht_rows_in_place(work.data(), n, nullptr, cfg.threads);
          apply_prefactors_in_place(work.data(), n, nullptr, cfg.threads);
        } else {
          decompose_in_place(work.data(), n, nullptr, cfg.threads);
        }
        const CoefficientMatrix got = retag<CoefficientTag>(std::move(work));
        row.oracle_deviation = std::max(row.oracle_deviation, max_abs_diff(got, expected));

        const Classification cls = classify(a, cfg.tolerance);
        if (cls.kind != kind) row.classified_ok = false;
        const StructureReport rep = check_structure(got, cls, cfg.tolerance);
        if (cls.kind == SymmetryClass::hermitian || cls.kind == SymmetryClass::real_symmetric) {
          row.structure_deviation = std::max(row.structure_deviation, rep.max_imag_coeff);
        }
        if (cls.kind == SymmetryClass::complex_symmetric || cls.kind == SymmetryClass::real_symmetric) {
          row.structure_deviation = std::max(row.structure_deviation, rep.max_forbidden_coeff);
          if (rep.zero_pattern_count != rep.expected_zero_count) row.classified_ok = false;
        }
      }
      row.passed = row.classified_ok && row.oracle_deviation <= cfg.tolerance &&
                   row.structure_deviation <= cfg.tolerance;
      result.max_deviation = std::max({result.max_deviation, row.oracle_deviation, row.structure_deviation});
      result.passed = result.passed && row.passed;
      result.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace pauli_fwht
