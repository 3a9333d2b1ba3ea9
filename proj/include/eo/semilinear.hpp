#pragma once

#include <cstddef>
#include <vector>

#include "eo/field.hpp"

namespace eo {

/// Dense matrix over a finite field, row major. Operators act on column
/// vectors; a sigma^e-linear operator with matrix A sends x to A * x^(sigma^e).
class MatrixOverF {
 public:
  MatrixOverF() = default;
  MatrixOverF(FieldPtr field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static MatrixOverF identity(FieldPtr field, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FiniteField& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  FieldElement at(std::size_t i, std::size_t j) const {
    return {field_.get(), a_[i * cols_ + j]};
  }
  void set(std::size_t i, std::size_t j, const FieldElement& v);
  std::uint32_t code_at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  void set_code(std::size_t i, std::size_t j, std::uint32_t c) { a_[i * cols_ + j] = c; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool operator==(const MatrixOverF& o) const;
  bool operator!=(const MatrixOverF& o) const { return !(*this == o); }

  MatrixOverF transpose() const;

  const std::vector<std::uint32_t>& codes() const { return a_; }

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

MatrixOverF operator*(const MatrixOverF& a, const MatrixOverF& b);

/// Entrywise frobenius(., e).
MatrixOverF twist(const MatrixOverF& m, std::int64_t e);

/// H^(m) = H * H^sigma * ... * H^(sigma^(m-1)); H^(0) is the identity.
MatrixOverF sigma_power_product(const MatrixOverF& h, std::size_t m);

MatrixOverF inverse(const MatrixOverF& m);

std::size_t matrix_rank(const MatrixOverF& m);

/// Subspace of F^n stored as a reduced row-echelon basis with strictly
/// increasing pivot columns and no zero rows, so equal subspaces have
/// identical stored bases.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero_subspace(FieldPtr field, std::size_t ambient);
  static Subspace full_space(FieldPtr field, std::size_t ambient);
  /// Row span of an arbitrary matrix.
  static Subspace span_of_rows(const MatrixOverF& rows);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixOverF& basis() const { return basis_; }
  const FiniteField& field() const { return basis_.field(); }
  const FieldPtr& field_ptr() const { return basis_.field_ptr(); }

  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  /// Strict weak order usable as a map key; not the inclusion order.
  bool operator<(const Subspace& o) const;

 private:
  explicit Subspace(MatrixOverF rref_basis)
      : ambient_(rref_basis.cols()), basis_(std::move(rref_basis)) {}

  std::size_t ambient_ = 0;
  MatrixOverF basis_;

  friend struct EchelonAccess;
};

struct Echelon {
  Subspace row_space;
  std::size_t rank = 0;
};

/// Gaussian elimination to reduced row-echelon form; returns the canonical
/// row space and the rank.
Echelon echelonize(const MatrixOverF& m);

/// Null space { x : m x = 0 } as a canonical subspace.
Subspace kernel(const MatrixOverF& m);

/// Image { a * v^(sigma^e) : v in s } of a sigma^e-semilinear map.
Subspace subspace_image(const MatrixOverF& a, std::int64_t e, const Subspace& s);

/// Preimage { x : a * x^(sigma^e) in s } of a sigma^e-semilinear map.
Subspace subspace_preimage(const MatrixOverF& a, std::int64_t e, const Subspace& s);

/// { x : b(x, s) = 0 for all s in S } for the bilinear form with Gram matrix b.
Subspace orthogonal_complement(const Subspace& s, const MatrixOverF& gram);

Subspace subspace_sum(const Subspace& s, const Subspace& t);
Subspace subspace_intersection(const Subspace& s, const Subspace& t);

enum class SubspaceRelation { Equal, LeftInRight, RightInLeft, Incomparable };
SubspaceRelation subspace_compare(const Subspace& s, const Subspace& t);
bool subspace_contains(const Subspace& outer, const Subspace& inner);

}  // namespace eo
