#include "padicmech/quantum/hilbert.hpp"

#include "padicmech/errors.hpp"

namespace padicmech::quantum {
namespace {

void check_square(const Matrix& m, std::size_t n, const char* what) {
  if (m.size() != n) throw DimensionMismatch(std::string(what) + " must be " + std::to_string(n) + " x " + std::to_string(n));
  for (const auto& row : m) {
    if (row.size() != n) throw DimensionMismatch(std::string(what) + " must be square");
  }
}

PadicComplex zero_of(std::uint32_t prime) { return PadicComplex(PadicNumber::zero(prime)); }

}  // namespace

Matrix identity_matrix(std::uint32_t prime, std::size_t n, int precision) {
  Matrix m(n, std::vector<PadicComplex>(n, zero_of(prime)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = PadicComplex(PadicNumber::from_integer(1, prime, precision));
  return m;
}

HilbertVector::HilbertVector(std::vector<PadicComplex> coeffs, std::optional<Matrix> gram)
    : coeffs_(std::move(coeffs)), gram_(std::move(gram)) {
  if (coeffs_.empty()) throw DimensionMismatch("a Hilbert vector needs dimension >= 1");
  for (const auto& c : coeffs_) {
    if (c.prime() != prime()) throw PrimeMismatch("vector mixes primes");
  }
  if (gram_) check_square(*gram_, coeffs_.size(), "gram matrix");
}

Norm HilbertVector::norm() const {
  Norm n = Norm::zero(prime());
  for (const auto& c : coeffs_) n = std::max(n, c.norm());
  return n;
}

PadicComplex inner(const HilbertVector& x, const HilbertVector& y) {
  if (x.dim() != y.dim()) throw DimensionMismatch("inner product of vectors of different dimension");
  if (x.prime() != y.prime()) throw PrimeMismatch("inner product across primes");
  if (x.gram() != y.gram()) throw InvalidArgument("vectors carry different gram matrices");
  PadicComplex sum = zero_of(x.prime());
  const std::size_t n = x.dim();
  if (!x.gram()) {
    for (std::size_t i = 0; i < n; ++i) sum = sum + x[i] * y[i];
    return sum;
  }
  const Matrix& g = *x.gram();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!g[i][j].is_exact_zero()) sum = sum + x[i] * g[i][j] * y[j];
    }
  }
  return sum;
}

SchwarzReport inner_and_schwarz(const HilbertVector& x, const HilbertVector& y) {
  const PadicComplex product = inner(x, y);
  const Norm nx = x.norm();
  const Norm ny = y.norm();
  return {product, nx, ny, product.norm() <= nx * ny};
}

SymmetricOperator::SymmetricOperator(Matrix entries, std::optional<Matrix> gram)
    : entries_(std::move(entries)), gram_(std::move(gram)) {
  const std::size_t n = entries_.size();
  if (n == 0) throw DimensionMismatch("empty operator");
  check_square(entries_, n, "operator");
  if (gram_) check_square(*gram_, n, "gram matrix");
  const std::uint32_t p = entries_[0][0].prime();
  const int k = std::max(1, entries_[0][0].re().relative_precision());
  const Matrix g = gram_ ? *gram_ : identity_matrix(p, n, k);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PadicComplex lhs = zero_of(p);  // (A^T G)_ij
      PadicComplex rhs = zero_of(p);  // (G A)_ij
      for (std::size_t l = 0; l < n; ++l) {
        lhs = lhs + entries_[l][i] * g[l][j];
        rhs = rhs + g[i][l] * entries_[l][j];
      }
      if (!congruent(lhs, rhs)) {
        throw InvalidArgument("operator is not symmetric for the inner product at (" + std::to_string(i) + ", " +
                              std::to_string(j) + ")");
      }
    }
  }
}

HilbertVector SymmetricOperator::apply(const HilbertVector& x) const {
  if (x.dim() != dim()) throw DimensionMismatch("operator and vector dimensions differ");
  std::vector<PadicComplex> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    PadicComplex s = zero_of(x.prime());
    for (std::size_t j = 0; j < dim(); ++j) s = s + entries_[i][j] * x[j];
    out.push_back(s);
  }
  return HilbertVector(std::move(out), x.gram());
}

bool SymmetricOperator::is_eigenpair(const HilbertVector& v, const PadicComplex& lambda) const {
  const HilbertVector av = apply(v);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!congruent(av[i], lambda * v[i])) return false;
  }
  return true;
}

}  // namespace padicmech::quantum
