// Decomposes a small Hermitian matrix, prints its Pauli terms, and rebuilds it.

#include <iostream>

#include <pauli_fwht/pauli_fwht.hpp>

int main() {
  using namespace pauli_fwht;

  ComplexMatrix h = random_hermitian(3, /*seed=*/7);
  const ComplexMatrix original = h;

  const TermList terms = decompose_to_terms(std::move(h), 0.05);
  write_terms(terms, std::cout);

  const ComplexMatrix back = reconstruct(decompose(ComplexMatrix(original)));
  std::cout << "max reconstruction error: " << max_abs_diff(back, original) << '\n';
}
