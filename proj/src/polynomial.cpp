#include "rbmtopo/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "rbmtopo/errors.hpp"

namespace rbmtopo::poly {

Poly multiply(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

Complex evaluate(const Poly& p, Complex t) {
  Complex acc{};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Poly trim(Poly p, double tol) {
  double peak = 0.0;
  for (const auto& c : p) peak = std::max(peak, std::abs(c));
  while (!p.empty() && std::abs(p.back()) <= tol * peak) p.pop_back();
  return p;
}

namespace {

Poly derivative(const Poly& p) {
  if (p.size() <= 1) return {};
  Poly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

double residual(const Poly& p, Complex r) {
  double scale = 0.0;
  double rk = 1.0;
  for (const auto& c : p) {
    scale += std::abs(c) * rk;
    rk *= std::abs(r);
  }
  return scale == 0.0 ? 0.0 : std::abs(evaluate(p, r)) / scale;
}

}  // namespace

std::vector<Complex> roots(const Poly& input) {
  const Poly p = trim(input);
  if (p.size() <= 1) return {};
  const Eigen::Index deg = static_cast<Eigen::Index>(p.size()) - 1;
  const Complex lead = p.back();

  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) companion(i, deg - 1) = -p[static_cast<std::size_t>(i)] / lead;

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  if (solver.info() != Eigen::Success) {
    throw SynthesisError("polynomial root finding failed: eigen solver did not converge (degree " +
                         std::to_string(deg) + ")");
  }

  const Poly dp = derivative(p);
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(deg));
  for (Eigen::Index i = 0; i < deg; ++i) {
    Complex r = solver.eigenvalues()[i];
    for (int it = 0; it < 50 && residual(p, r) > 1e-15; ++it) {
      const Complex d = evaluate(dp, r);
      if (std::abs(d) == 0.0) break;  // repeated root: Newton cannot improve it
      const Complex next = r - evaluate(p, r) / d;
      if (residual(p, next) >= residual(p, r)) break;
      r = next;
    }
    if (residual(p, r) > 1e-12) {
      std::ostringstream msg;
      msg << "polynomial root finding failed: root " << r << " has relative residual "
          << residual(p, r) << " (degree " << deg << ")";
      throw SynthesisError(msg.str());
    }
    out.push_back(r);
  }
  return out;
}

}  // namespace rbmtopo::poly
