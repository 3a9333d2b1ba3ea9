#pragma once

#include <cstdint>
#include <vector>

#include "eo/eo_comb.hpp"
#include "eo/semilinear.hpp"

namespace eo {

/// y^2 = f(x) over F_{p^k} with p odd, f squarefree of degree 2g+1 or 2g+2.
class HyperellipticCurve {
 public:
  /// f given by packed coefficient codes, constant term first.
  HyperellipticCurve(FieldPtr field, std::vector<std::uint32_t> f_codes);

  int genus() const { return genus_; }
  const FieldPtr& field_ptr() const { return field_; }
  const FiniteField& field() const { return *field_; }
  int f_degree() const { return static_cast<int>(f_codes_.size()) - 1; }
  const std::vector<std::uint32_t>& f_codes() const { return f_codes_; }
  FieldElement f_coeff(std::size_t i) const {
    return {field_.get(), i < f_codes_.size() ? f_codes_[i] : 0};
  }

 private:
  FieldPtr field_;
  std::vector<std::uint32_t> f_codes_;
  int genus_ = 0;
};

/// gcd(f, f') is a nonzero constant; rejects f' == 0, which in
/// characteristic p means f is a p-th power.
bool poly_is_squarefree(const FiniteField& f, const std::vector<std::uint32_t>& codes);

/// Matrix of Frobenius on H^1(C, O_C): H_ij = c_{p*j - i} for
/// f^((p-1)/2) = sum c_t x^t, 1 <= i, j <= g.
MatrixOverF hasse_witt(const HyperellipticCurve& c);

/// M = twist(H, -1)^t, the matrix of the Cartier operator on differentials.
MatrixOverF cartier_manin(const MatrixOverF& h);

struct HasseWittInvariants {
  /// rho_0 = g, then rho_i = rank(H^(i)) until the first repeat or zero.
  std::vector<int> rho;
  HWPartition delta;
  int p_rank = 0;
  int a_number = 0;
};

HasseWittInvariants hw_partition(const MatrixOverF& h);

/// #{ (x, y) in F_p^2 : y^2 = f(x) } by exhaustive evaluation; only for
/// prime fields and genus 1. The curve is supersingular iff count + 1 = 1 mod p.
std::uint64_t affine_point_count(const HyperellipticCurve& c);

}  // namespace eo
