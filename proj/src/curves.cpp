#include "eo/curves.hpp"

#include <algorithm>

namespace eo {
namespace {

// File-local dense polynomials over one field, packed codes, constant first.
using PolyCodes = std::vector<std::uint32_t>;

void poly_trim(PolyCodes& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int poly_deg(const PolyCodes& a) { return static_cast<int>(a.size()) - 1; }

PolyCodes poly_mul(const FiniteField& f, const PolyCodes& a, const PolyCodes& b) {
  if (a.empty() || b.empty()) return {};
  PolyCodes c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

PolyCodes poly_pow(const FiniteField& f, PolyCodes base, std::uint64_t e) {
  PolyCodes r{1};
  while (e) {
    if (e & 1) r = poly_mul(f, r, base);
    base = poly_mul(f, base, base);
    e >>= 1;
  }
  return r;
}

PolyCodes poly_derivative(const FiniteField& f, const PolyCodes& a) {
  PolyCodes d;
  for (std::size_t i = 1; i < a.size(); ++i) {
    // i * 1 lands in the prime subfield, whose codes are 0..p-1
    const std::uint32_t m = static_cast<std::uint32_t>(i % f.p());
    d.push_back(f.mul(a[i], m));
  }
  poly_trim(d);
  return d;
}

PolyCodes poly_rem(const FiniteField& f, PolyCodes a, const PolyCodes& b) {
  poly_trim(a);
  const int db = poly_deg(b);
  const std::uint32_t lead_inv = f.inv(b.back());
  while (poly_deg(a) >= db) {
    const std::uint32_t c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    poly_trim(a);
  }
  return a;
}

PolyCodes poly_gcd(const FiniteField& f, PolyCodes a, PolyCodes b) {
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    a = poly_rem(f, std::move(a), b);
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool poly_is_squarefree(const FiniteField& f, const std::vector<std::uint32_t>& codes) {
  PolyCodes a = codes;
  poly_trim(a);
  if (a.empty()) return false;
  const PolyCodes d = poly_derivative(f, a);
  if (d.empty()) return false;  // f is a p-th power
  return poly_gcd(f, a, d).size() == 1;
}

HyperellipticCurve::HyperellipticCurve(FieldPtr field, std::vector<std::uint32_t> f_codes)
    : field_(std::move(field)), f_codes_(std::move(f_codes)) {
  if (field_->p() == 2) domain_error("EvenCharacteristic", "y^2 = f(x) needs odd p");
  poly_trim(f_codes_);
  const int deg = poly_deg(f_codes_);
  if (deg < 3) domain_error("DegreeOutOfRange", "deg f must be at least 3");
  genus_ = (deg - 1) / 2;
  for (std::uint32_t c : f_codes_)
    require_domain(c < field_->size(), "ElementOutOfRange", "coefficient code out of range");
  if (!poly_is_squarefree(*field_, f_codes_))
    domain_error("NotSquarefree", "f has a repeated root");
}

MatrixOverF hasse_witt(const HyperellipticCurve& c) {
  const FiniteField& f = c.field();
  const std::uint64_t e = (f.p() - 1) / 2;
  const PolyCodes h = poly_pow(f, c.f_codes(), e);
  const std::size_t g = static_cast<std::size_t>(c.genus());
  MatrixOverF m(c.field_ptr(), g, g);
  for (std::size_t i = 1; i <= g; ++i)
    for (std::size_t j = 1; j <= g; ++j) {
      const std::int64_t t = static_cast<std::int64_t>(f.p()) * static_cast<std::int64_t>(j) -
                             static_cast<std::int64_t>(i);
      if (t >= 0 && t < static_cast<std::int64_t>(h.size()))
        m.set_code(i - 1, j - 1, h[static_cast<std::size_t>(t)]);
    }
  return m;
}

MatrixOverF cartier_manin(const MatrixOverF& h) {
  if (!h.is_square()) domain_error("NotSquare", "Hasse-Witt matrix must be square");
  return twist(h, -1).transpose();
}

HasseWittInvariants hw_partition(const MatrixOverF& h) {
  if (!h.is_square()) domain_error("NotSquare", "rank sequence needs a square matrix");
  const int g = static_cast<int>(h.rows());
  HasseWittInvariants out;
  out.rho.push_back(g);
  MatrixOverF prod = MatrixOverF::identity(h.field_ptr(), h.rows());
  int prev = g;
  for (std::size_t i = 0;; ++i) {
    prod = prod * twist(h, static_cast<std::int64_t>(i));
    const int r = static_cast<int>(matrix_rank(prod));
    out.rho.push_back(r);
    if (r == prev || r == 0) break;
    prev = r;
  }
  std::vector<int> parts;
  for (std::size_t i = 1; i < out.rho.size(); ++i)
    if (out.rho[i - 1] != out.rho[i]) parts.push_back(out.rho[i - 1] - out.rho[i]);
  out.delta = make_hw_partition(std::move(parts), g);
  out.p_rank = g - out.delta.sum();
  out.a_number = out.delta.parts.empty() ? 0 : out.delta.parts.front();
  return out;
}

std::uint64_t affine_point_count(const HyperellipticCurve& c) {
  const FiniteField& f = c.field();
  if (f.degree() != 1) domain_error("NotPrimeField", "point count oracle needs k = 1");
  if (c.genus() != 1) domain_error("GenusNotOne", "point count oracle needs genus 1");
  std::uint64_t count = 0;
  for (std::uint32_t x = 0; x < f.p(); ++x) {
    // Horner evaluation of f at x
    std::uint32_t v = 0;
    for (std::size_t i = c.f_codes().size(); i-- > 0;) v = f.add(f.mul(v, x), c.f_codes()[i]);
    for (std::uint32_t y = 0; y < f.p(); ++y)
      if (f.mul(y, y) == v) ++count;
  }
  return count;
}

}  // namespace eo
