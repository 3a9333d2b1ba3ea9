#include "eo/semilinear.hpp"

#include <algorithm>

namespace eo {
namespace {

void require_same_field(const MatrixOverF& a, const MatrixOverF& b) {
  if (!a.field().same_field(b.field())) domain_error("FieldMismatch", "matrices over different fields");
}

// In-place reduced row-echelon form on a row-major code buffer.
// Returns the pivot columns in increasing order.
std::vector<std::size_t> rref(const FiniteField& f, std::vector<std::uint32_t>& a,
                              std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr * cols + c] == 0) ++pr;
    if (pr == rows) continue;
    if (pr != r)
      for (std::size_t j = c; j < cols; ++j) std::swap(a[r * cols + j], a[pr * cols + j]);
    const std::uint32_t s = f.inv(a[r * cols + c]);
    if (s != 1)
      for (std::size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const std::uint32_t x = a[i * cols + c];
      if (x == 0) continue;
      for (std::size_t j = c; j < cols; ++j)
        a[i * cols + j] = f.sub(a[i * cols + j], f.mul(x, a[r * cols + j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

MatrixOverF take_rows(const FieldPtr& f, const std::vector<std::uint32_t>& a,
                      std::size_t rows, std::size_t cols) {
  MatrixOverF m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set_code(i, j, a[i * cols + j]);
  return m;
}

}  // namespace

MatrixOverF MatrixOverF::identity(FieldPtr field, std::size_t n) {
  MatrixOverF m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.set_code(i, i, 1);
  return m;
}

void MatrixOverF::set(std::size_t i, std::size_t j, const FieldElement& v) {
  if (!field_->same_field(v.field())) domain_error("FieldMismatch", "entry from a different field");
  a_[i * cols_ + j] = v.code();
}

bool MatrixOverF::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t c) { return c == 0; });
}

bool MatrixOverF::operator==(const MatrixOverF& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  if (field_ && o.field_ && !field_->same_field(*o.field_)) return false;
  return a_ == o.a_;
}

MatrixOverF MatrixOverF::transpose() const {
  MatrixOverF t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set_code(j, i, code_at(i, j));
  return t;
}

MatrixOverF operator*(const MatrixOverF& a, const MatrixOverF& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) domain_error("DimensionMismatch", "matrix product shape mismatch");
  const FiniteField& f = a.field();
  MatrixOverF c(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t t = 0; t < a.cols(); ++t) {
      const std::uint32_t x = a.code_at(i, t);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.set_code(i, j, f.add(c.code_at(i, j), f.mul(x, b.code_at(t, j))));
    }
  return c;
}

MatrixOverF twist(const MatrixOverF& m, std::int64_t e) {
  const FiniteField& f = m.field();
  std::int64_t em = e % f.degree();
  if (em < 0) em += f.degree();
  if (em == 0) return m;
  MatrixOverF t(m.field_ptr(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.set_code(i, j, f.frob(m.code_at(i, j), em));
  return t;
}

MatrixOverF sigma_power_product(const MatrixOverF& h, std::size_t m) {
  if (!h.is_square()) domain_error("NotSquare", "sigma power product needs a square matrix");
  MatrixOverF r = MatrixOverF::identity(h.field_ptr(), h.rows());
  for (std::size_t i = 0; i < m; ++i) r = r * twist(h, static_cast<std::int64_t>(i));
  return r;
}

MatrixOverF inverse(const MatrixOverF& m) {
  if (!m.is_square()) domain_error("NotSquare", "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const FiniteField& f = m.field();
  std::vector<std::uint32_t> aug(n * 2 * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * 2 * n + j] = m.code_at(i, j);
    aug[i * 2 * n + n + i] = 1;
  }
  const auto pivots = rref(f, aug, n, 2 * n);
  if (pivots.size() < n || pivots[n - 1] >= n)
    domain_error("NotInvertible", "matrix is singular");
  MatrixOverF r(m.field_ptr(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.set_code(i, j, aug[i * 2 * n + n + j]);
  return r;
}

std::size_t matrix_rank(const MatrixOverF& m) {
  std::vector<std::uint32_t> a = m.codes();
  return rref(m.field(), a, m.rows(), m.cols()).size();
}

Subspace Subspace::zero_subspace(FieldPtr field, std::size_t ambient) {
  return Subspace(MatrixOverF(std::move(field), 0, ambient));
}

Subspace Subspace::full_space(FieldPtr field, std::size_t ambient) {
  return Subspace(MatrixOverF::identity(std::move(field), ambient));
}

Subspace Subspace::span_of_rows(const MatrixOverF& rows) { return echelonize(rows).row_space; }

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  if (dim() != o.dim()) return dim() < o.dim();
  return basis_.codes() < o.basis_.codes();
}

struct EchelonAccess {
  static Subspace wrap(MatrixOverF rref_basis) { return Subspace(std::move(rref_basis)); }
};

Echelon echelonize(const MatrixOverF& m) {
  std::vector<std::uint32_t> a = m.codes();
  const auto pivots = rref(m.field(), a, m.rows(), m.cols());
  const std::size_t rank = pivots.size();
  MatrixOverF basis(m.field_ptr(), rank, m.cols());
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) basis.set_code(i, j, a[i * m.cols() + j]);
  return {EchelonAccess::wrap(std::move(basis)), rank};
}

Subspace kernel(const MatrixOverF& m) {
  const FiniteField& f = m.field();
  std::vector<std::uint32_t> a = m.codes();
  const auto pivots = rref(f, a, m.rows(), m.cols());
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivots) is_pivot[c] = true;
  MatrixOverF rows(m.field_ptr(), n - pivots.size(), n);
  std::size_t r = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    rows.set_code(r, j, 1);
    for (std::size_t t = 0; t < pivots.size(); ++t)
      rows.set_code(r, pivots[t], f.neg(a[t * n + j]));
    ++r;
  }
  return Subspace::span_of_rows(rows);
}

Subspace subspace_image(const MatrixOverF& a, std::int64_t e, const Subspace& s) {
  if (a.cols() != s.ambient_dim())
    domain_error("DimensionMismatch", "operator does not act on the ambient space");
  return Subspace::span_of_rows(twist(s.basis(), e) * a.transpose());
}

Subspace subspace_preimage(const MatrixOverF& a, std::int64_t e, const Subspace& s) {
  if (a.rows() != s.ambient_dim())
    domain_error("DimensionMismatch", "operator does not land in the ambient space");
  // y with a*y in s, where s = { w : Z w = 0 } for the annihilator rows Z;
  // then untwist, since sigma^e is an automorphism.
  const Subspace ann = kernel(s.basis());
  const Subspace lin = kernel(ann.basis() * a);
  return Subspace::span_of_rows(twist(lin.basis(), -e));
}

Subspace orthogonal_complement(const Subspace& s, const MatrixOverF& gram) {
  if (!gram.is_square() || gram.rows() != s.ambient_dim())
    domain_error("DimensionMismatch", "Gram matrix does not match the ambient space");
  if (matrix_rank(gram) != gram.rows()) domain_error("DegenerateForm", "Gram matrix is singular");
  if (s.dim() == 0) return Subspace::full_space(s.field_ptr(), s.ambient_dim());
  return kernel(s.basis() * gram.transpose());
}

Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    domain_error("DimensionMismatch", "subspaces of different ambient spaces");
  MatrixOverF stacked(s.field_ptr(), s.dim() + t.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      stacked.set_code(i, j, s.basis().code_at(i, j));
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = 0; j < t.ambient_dim(); ++j)
      stacked.set_code(s.dim() + i, j, t.basis().code_at(i, j));
  return Subspace::span_of_rows(stacked);
}

Subspace subspace_intersection(const Subspace& s, const Subspace& t) {
  if (s.ambient_dim() != t.ambient_dim())
    domain_error("DimensionMismatch", "subspaces of different ambient spaces");
  const Subspace zs = kernel(s.basis());
  const Subspace zt = kernel(t.basis());
  MatrixOverF stacked(s.field_ptr(), zs.dim() + zt.dim(), s.ambient_dim());
  for (std::size_t i = 0; i < zs.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient_dim(); ++j)
      stacked.set_code(i, j, zs.basis().code_at(i, j));
  for (std::size_t i = 0; i < zt.dim(); ++i)
    for (std::size_t j = 0; j < t.ambient_dim(); ++j)
      stacked.set_code(zs.dim() + i, j, zt.basis().code_at(i, j));
  return kernel(stacked);
}

bool subspace_contains(const Subspace& outer, const Subspace& inner) {
  if (outer.ambient_dim() != inner.ambient_dim())
    domain_error("DimensionMismatch", "subspaces of different ambient spaces");
  if (inner.dim() > outer.dim()) return false;
  return subspace_sum(outer, inner).dim() == outer.dim();
}

SubspaceRelation subspace_compare(const Subspace& s, const Subspace& t) {
  if (s == t) return SubspaceRelation::Equal;
  if (subspace_contains(t, s)) return SubspaceRelation::LeftInRight;
  if (subspace_contains(s, t)) return SubspaceRelation::RightInLeft;
  return SubspaceRelation::Incomparable;
}

}  // namespace eo
