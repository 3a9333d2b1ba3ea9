#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "eo/error.hpp"

namespace eo {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Element of F_{p^k} in the polynomial basis. The k residues are packed
/// base p into a single code, least significant digit = constant term.
/// Elements keep a raw pointer to their field; the field must outlive them.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(const FiniteField* field, std::uint32_t code) : field_(field), code_(code) {}

  const FiniteField& field() const;
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  /// Length-k residue vector, constant term first.
  std::vector<std::uint32_t> coeffs() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement inverse() const;
  FieldElement pow(std::int64_t e) const;
  /// x^(p^(e mod k)); negative e gives sigma^{-1} powers.
  FieldElement frobenius(std::int64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  const FiniteField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

/// F_{p^k} with the lexicographically smallest monic irreducible modulus
/// (coefficients compared constant term first). Construction is deterministic:
/// equal (p, k) always yields the same modulus. Immutable after construction
/// and safe to share across threads.
class FiniteField {
 public:
  static FieldPtr make(std::uint64_t p, std::uint64_t k);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Monic modulus, constant term first, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {this, 0}; }
  FieldElement one() const { return {this, k_ == 0 ? 0u : 1u}; }
  /// n * 1 reduced into the prime subfield.
  FieldElement from_int(std::int64_t n) const;
  FieldElement element(std::uint32_t code) const;
  /// Residue vector of length <= k (padded with zeros), constant term first.
  FieldElement from_coeffs(const std::vector<std::uint32_t>& coeffs) const;

  /// Enumeration in wire order: elements sorted by their coefficient vector
  /// compared left to right (constant term most significant).
  FieldElement element_at_wire_index(std::uint32_t n) const;
  std::uint32_t wire_index(const FieldElement& x) const;

  /// Structural equality: same p, k and modulus.
  bool same_field(const FiniteField& o) const {
    return this == &o || (p_ == o.p_ && k_ == o.k_ && modulus_ == o.modulus_);
  }

  // Arithmetic on packed codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return tiny_ ? add_tab_[a * q_ + b] : add_generic(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tiny_ ? mul_tab_[a * q_ + b] : mul_generic(a, b);
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t neg(std::uint32_t a) const {
    return neg_tab_.empty() ? neg_generic(a) : neg_tab_[a];
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }
  std::uint32_t pow(std::uint32_t a, std::int64_t e) const;
  std::uint32_t frob(std::uint32_t a, std::int64_t e) const;

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

 private:
  FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t add_generic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg_generic(std::uint32_t a) const;
  std::uint32_t mul_generic(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv_generic(std::uint32_t a) const;
  std::uint32_t frob_once(std::uint32_t a) const;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::vector<std::uint32_t>> red_;  // x^{k+i} mod modulus, i = 0..k-2
  std::vector<std::uint32_t> pw_;                // p^i for i <= k

  bool tiny_ = false;  // full add/mul tables present
  std::vector<std::uint32_t> add_tab_, mul_tab_, neg_tab_, inv_tab_, sigma_tab_;
};

}  // namespace eo
