#pragma once

#include <optional>
#include <vector>

#include "padicmech/quantum/complex.hpp"

namespace padicmech::quantum {

using Matrix = std::vector<std::vector<PadicComplex>>;

/// Identity matrix of size n over Q_p(i).
Matrix identity_matrix(std::uint32_t prime, std::size_t n, int precision);

/// A vector of a finite-dimensional p-adic Hilbert space with the symmetric
/// bilinear form (x, y) = x^T G y (G = identity when no gram is given) and
/// the max norm ||x|| = max_j |x_j|_p.
class HilbertVector {
 public:
  HilbertVector(std::vector<PadicComplex> coeffs, std::optional<Matrix> gram = std::nullopt);

  std::size_t dim() const noexcept { return coeffs_.size(); }
  std::uint32_t prime() const { return coeffs_.front().prime(); }
  const std::vector<PadicComplex>& coeffs() const noexcept { return coeffs_; }
  const PadicComplex& operator[](std::size_t j) const { return coeffs_.at(j); }
  const std::optional<Matrix>& gram() const noexcept { return gram_; }
  Norm norm() const;

 private:
  std::vector<PadicComplex> coeffs_;
  std::optional<Matrix> gram_;
};

/// Bilinear, not sesquilinear: no conjugation.
PadicComplex inner(const HilbertVector& x, const HilbertVector& y);

struct SchwarzReport {
  PadicComplex product;
  Norm norm_x;
  Norm norm_y;
  /// |(x, y)|_p <= ||x|| ||y||
  bool schwarz_ok;
};

SchwarzReport inner_and_schwarz(const HilbertVector& x, const HilbertVector& y);

/// A square matrix A with (Ax, y) = (x, Ay), i.e. A^T G = G A.
class SymmetricOperator {
 public:
  /// Throws InvalidArgument when A^T G and G A differ to the carried precision.
  SymmetricOperator(Matrix entries, std::optional<Matrix> gram = std::nullopt);

  std::size_t dim() const noexcept { return entries_.size(); }
  const Matrix& entries() const noexcept { return entries_; }
  HilbertVector apply(const HilbertVector& x) const;
  /// A v = lambda v to the carried precision.
  bool is_eigenpair(const HilbertVector& v, const PadicComplex& lambda) const;

 private:
  Matrix entries_;
  std::optional<Matrix> gram_;
};

}  // namespace padicmech::quantum
