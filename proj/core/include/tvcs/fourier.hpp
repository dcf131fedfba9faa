#pragma once

#include "tvcs/types.hpp"

namespace tvcs {

// Unitary DFT with positive exponent:
//   (dft(x))_k = N^{-1/2} sum_j x_j exp(+2 pi i k j / N),
// frequencies stored at position k mod N. The 2D version transforms both
// indices with overall scaling 1/N.
CVec dft(const CVec& x);
CMat dft(const CMat& x);

// Conjugate-transpose transforms; dft_adjoint(dft(x)) == x.
CVec dft_adjoint(const CVec& s);
CMat dft_adjoint(const CMat& s);

} // namespace tvcs
