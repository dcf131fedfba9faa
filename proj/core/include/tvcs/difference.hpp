#pragma once

#include "tvcs/types.hpp"

namespace tvcs {

enum class TvFlavor { one_d, iso_2d, aniso_2d };

// Forward differences (Dx)_j = x_{j+1} - x_j, j = 0..N-2.
CVec diff(const CVec& x);
// Adjoint of diff: (D*z)_i = z_{i-1} - z_i with z_{-1} = z_{N-1} = 0.
CVec diff_adjoint(const CVec& z, int n);

// Per-pixel forward differences with Neumann truncation (see GradientField).
GradientField grad(const CMat& x);
// Adjoint of grad: D1* g1 + D2* g2. Does not assume the zero row/column.
CMat grad_adjoint(const GradientField& g);

double tv_norm(const CVec& x);
double tv_norm(const CMat& x, TvFlavor flavor);

// Per(J) = || indicator(J) ||_{TV,1}; pixels are flat column-major indices.
double perimeter(const std::vector<int>& pixels, int n);

} // namespace tvcs
