#include "eo/field.hpp"

#include <algorithm>
#include <array>

namespace eo {
namespace {

constexpr std::uint64_t kMaxFieldSize = 1u << 20;
constexpr std::uint32_t kTableMaxQ = 256;    // full add/mul tables
constexpr std::uint32_t kUnaryTabMaxQ = 1u << 16;  // neg/inv/sigma tables

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Dense polynomials over F_p with plain integer coefficients, constant term
// first, used only for modulus construction. Normalized: no trailing zeros.
using IPoly = std::vector<std::uint32_t>;

void ip_trim(IPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t int_pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t int_inv_mod(std::uint32_t a, std::uint32_t p) { return int_pow_mod(a, p - 2, p); }

// a mod f for monic f.
IPoly ip_mod(IPoly a, const IPoly& f, std::uint32_t p) {
  ip_trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    if (c)
      for (std::size_t i = 0; i < df; ++i)
        a[shift + i] = static_cast<std::uint32_t>(
            (a[shift + i] + p - static_cast<std::uint64_t>(f[i]) * c % p) % p);
    a.pop_back();
    ip_trim(a);
  }
  return a;
}

IPoly ip_mulmod(const IPoly& a, const IPoly& b, const IPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  IPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
  }
  return ip_mod(std::move(c), f, p);
}

IPoly ip_powmod(IPoly base, std::uint64_t e, const IPoly& f, std::uint32_t p) {
  IPoly r{1};
  base = ip_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = ip_mulmod(r, base, f, p);
    base = ip_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

IPoly ip_sub(IPoly a, const IPoly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  ip_trim(a);
  return a;
}

IPoly ip_gcd(IPoly a, IPoly b, std::uint32_t p) {
  ip_trim(a);
  ip_trim(b);
  while (!b.empty()) {
    // make b monic, then a mod b
    const std::uint32_t lead_inv = int_inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * lead_inv % p);
    a = ip_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// Rabin irreducibility test for monic f of degree k over F_p.
bool ip_irreducible(const IPoly& f, std::uint32_t p, std::uint32_t k) {
  const IPoly x{0, 1};
  // t = x^(p^k) mod f via k successive p-th powers
  IPoly t = x;
  for (std::uint32_t i = 0; i < k; ++i) t = ip_powmod(t, p, f, p);
  if (ip_sub(t, x, p) != IPoly{}) return false;
  for (std::uint32_t d = 2; d <= k; ++d) {
    if (k % d != 0 || !is_prime(d)) continue;
    IPoly s = x;
    for (std::uint32_t i = 0; i < k / d; ++i) s = ip_powmod(s, p, f, p);
    IPoly g = ip_gcd(ip_sub(s, x, p), f, p);
    if (!(g.size() == 1)) return false;
  }
  return true;
}

}  // namespace

FieldPtr FiniteField::make(std::uint64_t p, std::uint64_t k) {
  if (!is_prime(p)) domain_error("NonPrime", "p = " + std::to_string(p) + " is not prime");
  if (k == 0) domain_error("DegreeZero", "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) domain_error("FieldTooLarge", "p^k exceeds 2^20");
  }
  const auto pu = static_cast<std::uint32_t>(p);
  const auto ku = static_cast<std::uint32_t>(k);

  std::vector<std::uint32_t> modulus;
  if (ku == 1) {
    modulus = {0, 1};  // x, the trivial modulus of the prime field
  } else {
    // Scan monic degree-k candidates in lexicographic order, constant term
    // most significant, and take the first irreducible one.
    std::vector<std::uint32_t> c(ku, 0);
    for (;;) {
      IPoly f(c.begin(), c.end());
      f.push_back(1);
      if (ip_irreducible(f, pu, ku)) {
        modulus.assign(f.begin(), f.end());
        break;
      }
      // lexicographic increment: last coefficient is least significant
      std::size_t i = ku;
      while (i > 0) {
        --i;
        if (++c[i] < pu) break;
        c[i] = 0;
        if (i == 0) internal_error("NoIrreducible", "no irreducible polynomial found");
      }
    }
  }
  return FieldPtr(new FiniteField(pu, ku, std::move(modulus)));
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  pw_.resize(k_ + 1);
  pw_[0] = 1;
  for (std::uint32_t i = 1; i <= k_; ++i) pw_[i] = pw_[i - 1] * p_;
  q_ = pw_[k_];

  // x^{k+i} mod modulus for i = 0..k-2
  if (k_ >= 2) {
    std::vector<std::uint32_t> r(k_);  // current x^{k+i} mod f
    for (std::uint32_t j = 0; j < k_; ++j) r[j] = (p_ - modulus_[j] % p_) % p_;
    red_.push_back(r);
    for (std::uint32_t i = 1; i + 1 < k_; ++i) {
      std::vector<std::uint32_t> nr(k_, 0);
      const std::uint32_t top = r[k_ - 1];
      for (std::uint32_t j = k_ - 1; j > 0; --j) nr[j] = r[j - 1];
      nr[0] = 0;
      if (top)
        for (std::uint32_t j = 0; j < k_; ++j)
          nr[j] = static_cast<std::uint32_t>((nr[j] + static_cast<std::uint64_t>(top) * red_[0][j]) % p_);
      red_.push_back(nr);
      r = std::move(nr);
    }
  }

  if (q_ <= kUnaryTabMaxQ) {
    neg_tab_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) neg_tab_[a] = neg_generic(a);
  }
  if (q_ <= kTableMaxQ) {
    add_tab_.resize(static_cast<std::size_t>(q_) * q_);
    mul_tab_.resize(static_cast<std::size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = 0; b < q_; ++b) {
        add_tab_[a * q_ + b] = add_generic(a, b);
        mul_tab_[a * q_ + b] = mul_generic(a, b);
      }
    tiny_ = true;
  }
  if (q_ <= kUnaryTabMaxQ) {
    inv_tab_.resize(q_, 0);
    for (std::uint32_t a = 1; a < q_; ++a) inv_tab_[a] = inv_generic(a);
    sigma_tab_.resize(q_);
    for (std::uint32_t a = 0; a < q_; ++a) sigma_tab_[a] = pow(a, p_);
  }
}

FieldElement FiniteField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {this, static_cast<std::uint32_t>(r)};
}

FieldElement FiniteField::element(std::uint32_t code) const {
  require_domain(code < q_, "ElementOutOfRange", "element code out of range");
  return {this, code};
}

FieldElement FiniteField::from_coeffs(const std::vector<std::uint32_t>& coeffs) const {
  require_domain(coeffs.size() <= k_, "WrongLength", "too many coefficients for this field");
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    require_domain(coeffs[i] < p_, "ResidueOutOfRange", "coefficient not reduced mod p");
    code += coeffs[i] * pw_[i];
  }
  return {this, code};
}

FieldElement FiniteField::element_at_wire_index(std::uint32_t n) const {
  require_domain(n < q_, "ElementOutOfRange", "wire index out of range");
  std::uint32_t code = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    const std::uint32_t digit = (n / pw_[k_ - 1 - i]) % p_;
    code += digit * pw_[i];
  }
  return {this, code};
}

std::uint32_t FiniteField::wire_index(const FieldElement& x) const {
  std::uint32_t n = 0, c = x.code();
  for (std::uint32_t i = 0; i < k_; ++i) {
    n += (c % p_) * pw_[k_ - 1 - i];
    c /= p_;
  }
  return n;
}

std::uint32_t FiniteField::add_generic(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += (a % p_ + b % p_) % p_ * pw_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint32_t FiniteField::neg_generic(std::uint32_t a) const {
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) {
    r += (p_ - a % p_) % p_ * pw_[i];
    a /= p_;
  }
  return r;
}

std::uint32_t FiniteField::mul_generic(std::uint32_t a, std::uint32_t b) const {
  std::array<std::uint32_t, 24> da{}, db{};
  std::array<std::uint64_t, 47> acc{};
  for (std::uint32_t i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < k_; ++i) {
    if (!da[i]) continue;
    for (std::uint32_t j = 0; j < k_; ++j) acc[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
  }
  for (std::uint32_t d = 2 * k_ - 1; d-- > k_;) {
    const std::uint64_t c = acc[d] % p_;
    if (c)
      for (std::uint32_t j = 0; j < k_; ++j) acc[j] += c * red_[d - k_][j];
  }
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < k_; ++i) r += static_cast<std::uint32_t>(acc[i] % p_) * pw_[i];
  return r;
}

std::uint32_t FiniteField::inv(std::uint32_t a) const {
  if (a == 0) domain_error("DivisionByZero", "inverse of zero");
  if (!inv_tab_.empty()) return inv_tab_[a];
  return inv_generic(a);
}

std::uint32_t FiniteField::inv_generic(std::uint32_t a) const {
  if (a == 0) domain_error("DivisionByZero", "inverse of zero");
  const std::uint32_t r = pow(a, static_cast<std::int64_t>(q_) - 2);
  return r;
}

std::uint32_t FiniteField::pow(std::uint32_t a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  std::uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint32_t FiniteField::frob_once(std::uint32_t a) const {
  return sigma_tab_.empty() ? pow(a, p_) : sigma_tab_[a];
}

std::uint32_t FiniteField::frob(std::uint32_t a, std::int64_t e) const {
  std::int64_t em = e % k_;
  if (em < 0) em += k_;
  for (std::int64_t i = 0; i < em; ++i) a = frob_once(a);
  return a;
}

const FiniteField& FieldElement::field() const {
  if (!field_) internal_error("NullField", "element has no field");
  return *field_;
}

namespace {
const FiniteField* compat(const FieldElement& a, const FieldElement& b) {
  const FiniteField& fa = a.field();
  if (!fa.same_field(b.field())) domain_error("FieldMismatch", "elements of different fields");
  return &fa;
}
}  // namespace

std::vector<std::uint32_t> FieldElement::coeffs() const {
  const FiniteField& f = field();
  std::vector<std::uint32_t> c(f.degree());
  std::uint32_t v = code_;
  for (std::uint32_t i = 0; i < f.degree(); ++i) {
    c[i] = v % f.p();
    v /= f.p();
  }
  return c;
}

FieldElement FieldElement::operator-() const { return {&field(), field().neg(code_)}; }
FieldElement FieldElement::operator+(const FieldElement& o) const {
  const FiniteField* f = compat(*this, o);
  return {f, f->add(code_, o.code_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  const FiniteField* f = compat(*this, o);
  return {f, f->sub(code_, o.code_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  const FiniteField* f = compat(*this, o);
  return {f, f->mul(code_, o.code_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  const FiniteField* f = compat(*this, o);
  return {f, f->div(code_, o.code_)};
}
FieldElement FieldElement::inverse() const { return {&field(), field().inv(code_)}; }
FieldElement FieldElement::pow(std::int64_t e) const { return {&field(), field().pow(code_, e)}; }
FieldElement FieldElement::frobenius(std::int64_t e) const {
  return {&field(), field().frob(code_, e)};
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ == o.field_) return code_ == o.code_;
  if (!field_ || !o.field_) return false;
  return field_->same_field(*o.field_) && code_ == o.code_;
}

std::string FieldElement::to_string() const {
  const FiniteField& f = field();
  if (f.degree() == 1) return std::to_string(code_);
  std::string s = "[";
  const auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + "]";
}

}  // namespace eo
