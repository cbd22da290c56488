#pragma once

#include <vector>

#include "rbmtopo/bits.hpp"

namespace rbmtopo::poly {

// Coefficients in ascending order: p(t) = c[0] + c[1] t + ...
using Poly = std::vector<Complex>;

Poly multiply(const Poly& a, const Poly& b);
Complex evaluate(const Poly& p, Complex t);
// Drops trailing coefficients with magnitude <= tol * max|c|.
Poly trim(Poly p, double tol = 0.0);

// Roots of p via companion-matrix eigenvalues, each polished by Newton steps
// until |p(r)| / sum|c_k||r|^k <= 1e-12. Throws SynthesisError if the eigen
// solver fails or a root cannot be polished.
std::vector<Complex> roots(const Poly& p);

}  // namespace rbmtopo::poly
