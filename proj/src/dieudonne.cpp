#include "eo/dieudonne.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace eo {
namespace {

Subspace image_of_map(const MatrixOverF& op, std::int64_t e) {
  return subspace_image(op, e, Subspace::full_space(op.field_ptr(), op.cols()));
}

// Kernel of the semilinear map x -> op * x^(sigma^e): untwist the matrix kernel.
Subspace kernel_of_map(const MatrixOverF& op, std::int64_t e) {
  return Subspace::span_of_rows(twist(kernel(op).basis(), -e));
}

Subspace v_image(const DieudonneModule& d, const Subspace& s) {
  return subspace_image(d.v_op, -1, s);
}

bool is_alternating(const MatrixOverF& b) {
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (b.code_at(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      if (b.code_at(i, j) != b.field().neg(b.code_at(j, i))) return false;
  }
  return true;
}

}  // namespace

DieudonneModule make_module(FieldPtr field, MatrixOverF f_op, MatrixOverF v_op,
                            MatrixOverF gram) {
  const std::size_t n = f_op.rows();
  require_domain(n % 2 == 0, "OddDimension", "module dimension must be 2g");
  require_domain(f_op.is_square() && v_op.rows() == n && v_op.cols() == n &&
                     gram.rows() == n && gram.cols() == n,
                 "DimensionMismatch", "F, V, b must be square of equal size");
  require_domain(field->same_field(f_op.field()) && field->same_field(v_op.field()) &&
                     field->same_field(gram.field()),
                 "FieldMismatch", "matrices over different fields");
  return {std::move(field), static_cast<int>(n / 2), std::move(f_op), std::move(v_op),
          std::move(gram)};
}

ValidationReport validate_module(const DieudonneModule& d) {
  ValidationReport rep;
  const std::size_t n = static_cast<std::size_t>(2 * d.g);
  const Subspace ker_f = kernel_of_map(d.f_op, 1);
  const Subspace im_f = image_of_map(d.f_op, 1);
  const Subspace ker_v = kernel_of_map(d.v_op, -1);
  const Subspace im_v = image_of_map(d.v_op, -1);
  if (ker_f.dim() != static_cast<std::size_t>(d.g) || ker_f != im_v)
    rep.violations.push_back("ker(F) != im(V) of dimension g");
  if (ker_v.dim() != static_cast<std::size_t>(d.g) || ker_v != im_f)
    rep.violations.push_back("ker(V) != im(F) of dimension g");
  if (!is_alternating(d.gram)) rep.violations.push_back("b is not alternating");
  if (matrix_rank(d.gram) != n) rep.violations.push_back("b is degenerate");
  // b(F(x), y) = b(x, V(y))^p on basis pairs: F^t b = twist(b V, 1)
  if (d.f_op.transpose() * d.gram != twist(d.gram * d.v_op, 1))
    rep.violations.push_back("b(F(x), y) != b(x, V(y))^p");
  rep.ok = rep.violations.empty();
  return rep;
}

DieudonneModule ordinary_module(FieldPtr field, int l) {
  require_domain(l >= 1, "InvalidToricRank", "l must be positive");
  const std::size_t n = static_cast<std::size_t>(2 * l);
  MatrixOverF f_op(field, n, n), v_op(field, n, n), gram(field, n, n);
  for (int b = 0; b < l; ++b) {
    const std::size_t e = static_cast<std::size_t>(2 * b), f = e + 1;
    f_op.set_code(e, e, 1);                    // F(e) = e
    v_op.set_code(f, f, 1);                    // V(f) = f
    gram.set_code(e, f, 1);                    // b(e, f) = 1
    gram.set_code(f, e, field->neg(1));
  }
  return make_module(std::move(field), std::move(f_op), std::move(v_op), std::move(gram));
}

DieudonneModule supersingular_module(FieldPtr field) {
  MatrixOverF f_op(field, 2, 2), v_op(field, 2, 2), gram(field, 2, 2);
  f_op.set_code(1, 0, 1);                      // F(e) = f
  v_op.set_code(1, 0, field->neg(1));          // V(e) = -f
  gram.set_code(0, 1, 1);
  gram.set_code(1, 0, field->neg(1));
  return make_module(std::move(field), std::move(f_op), std::move(v_op), std::move(gram));
}

DieudonneModule direct_sum(const std::vector<DieudonneModule>& ds) {
  require_domain(!ds.empty(), "EmptySum", "direct sum of no modules");
  const FieldPtr field = ds.front().field;
  std::size_t n = 0;
  for (const auto& d : ds) {
    require_domain(field->same_field(*d.field), "FieldMismatch",
                   "summands over different fields");
    n += static_cast<std::size_t>(2 * d.g);
  }
  MatrixOverF f_op(field, n, n), v_op(field, n, n), gram(field, n, n);
  std::size_t off = 0;
  for (const auto& d : ds) {
    const std::size_t m = static_cast<std::size_t>(2 * d.g);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        f_op.set_code(off + i, off + j, d.f_op.code_at(i, j));
        v_op.set_code(off + i, off + j, d.v_op.code_at(i, j));
        gram.set_code(off + i, off + j, d.gram.code_at(i, j));
      }
    off += m;
  }
  return make_module(field, std::move(f_op), std::move(v_op), std::move(gram));
}

namespace {

// Closure of a set of subspaces under V-image and perp. Returns the members
// sorted by dimension, or nullopt as soon as the set stops being a chain or
// grows past the 2g+1 members a chain can have.
std::optional<std::vector<Subspace>> close_chain(const DieudonneModule& d,
                                                 std::vector<Subspace> members) {
  const std::size_t cap = static_cast<std::size_t>(2 * d.g) + 1;
  std::set<Subspace> seen(members.begin(), members.end());
  std::vector<Subspace> work(seen.begin(), seen.end());
  while (!work.empty()) {
    const Subspace s = work.back();
    work.pop_back();
    for (const Subspace& next :
         {v_image(d, s), orthogonal_complement(s, d.gram)}) {
      if (seen.count(next)) continue;
      for (const Subspace& old : seen) {
        const auto rel = subspace_compare(old, next);
        if (rel == SubspaceRelation::Incomparable) return std::nullopt;
      }
      seen.insert(next);
      if (seen.size() > cap) return std::nullopt;
      work.push_back(next);
    }
  }
  std::vector<Subspace> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(),
            [](const Subspace& a, const Subspace& b) { return a.dim() < b.dim(); });
  return out;
}

void require_valid(const DieudonneModule& d) {
  const auto rep = validate_module(d);
  if (!rep.ok) {
    std::string msg = "module axioms fail:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    domain_error("InvalidModule", msg);
  }
}

}  // namespace

std::vector<Subspace> canonical_filtration(const DieudonneModule& d) {
  require_valid(d);
  const std::size_t n = static_cast<std::size_t>(2 * d.g);
  auto chain = close_chain(d, {Subspace::zero_subspace(d.field, n),
                               Subspace::full_space(d.field, n)});
  if (!chain) domain_error("NotAChain", "canonical closure is not totally ordered");
  // midpoint V(M) and the perp mirror
  const std::size_t s = chain->size();
  require_internal(s % 2 == 1, "FiltrationParity", "canonical chain has even length");
  const Subspace vm = image_of_map(d.v_op, -1);
  require_internal((*chain)[s / 2] == vm, "FiltrationMidpoint", "V(M) is not the midpoint");
  for (std::size_t i = 0; i < s; ++i)
    require_internal(orthogonal_complement((*chain)[i], d.gram) == (*chain)[s - 1 - i],
                     "FiltrationMirror", "chain is not perp-symmetric");
  return *chain;
}

FinalType final_type(const DieudonneModule& d) {
  const auto chain = canonical_filtration(d);
  const int n = 2 * d.g;
  std::vector<int> nu_all(static_cast<std::size_t>(n) + 1, 0);
  std::size_t prev_dim = 0;
  int prev_v = 0;
  for (std::size_t idx = 1; idx < chain.size(); ++idx) {
    const std::size_t dim = chain[idx].dim();
    const int v = static_cast<int>(v_image(d, chain[idx]).dim());
    const int gap = static_cast<int>(dim - prev_dim);
    const int rise = v - prev_v;
    if (rise != 0 && rise != gap)
      internal_error("GradedPieceNotZeroOrBijective",
                     "V is neither zero nor bijective on a canonical graded piece");
    for (int t = 1; t <= gap; ++t)
      nu_all[prev_dim + static_cast<std::size_t>(t)] =
          prev_v + (rise == 0 ? 0 : t);
    prev_dim = dim;
    prev_v = v;
  }
  // nu duality along the perp mirror of the chain
  for (int i = 0; i <= d.g; ++i)
    require_internal(nu_all[static_cast<std::size_t>(n - i)] ==
                         nu_all[static_cast<std::size_t>(i)] - i + d.g,
                     "NuDuality", "nu(2g - i) != nu(i) - i + g");
  std::vector<int> values(nu_all.begin() + 1, nu_all.begin() + 1 + d.g);
  return make_final_type(std::move(values));
}

namespace {

// Lines of U beyond L, enumerated deterministically: complete L's basis by
// rows of U, then take normalized coordinate tuples on the completion.
std::vector<std::vector<std::uint32_t>> line_representatives(const FiniteField& f,
                                                             std::size_t dim) {
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t lead = 0; lead < dim; ++lead) {
    std::vector<std::uint32_t> c(dim, 0);
    c[lead] = 1;
    const std::size_t tail = dim - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < tail; ++i) total *= f.size();
    for (std::uint64_t n = 0; n < total; ++n) {
      std::uint64_t v = n;
      for (std::size_t i = 0; i < tail; ++i) {
        c[lead + 1 + i] = static_cast<std::uint32_t>(v % f.size());
        v /= f.size();
      }
      out.push_back(c);
    }
  }
  return out;
}

bool refine_flag(const DieudonneModule& d, std::vector<Subspace> chain,
                 std::vector<Subspace>& out) {
  const std::size_t want = static_cast<std::size_t>(2 * d.g) + 1;
  if (chain.size() == want) {
    out = std::move(chain);
    return true;
  }
  std::size_t idx = 0;
  while (chain[idx + 1].dim() == chain[idx].dim() + 1) ++idx;
  const Subspace& lower = chain[idx];
  const Subspace& upper = chain[idx + 1];

  // complement rows of lower inside upper
  const FiniteField& f = *d.field;
  std::vector<std::vector<std::uint32_t>> comp;
  Subspace grown = lower;
  for (std::size_t r = 0; r < upper.dim(); ++r) {
    MatrixOverF row(d.field, 1, upper.ambient_dim());
    for (std::size_t j = 0; j < upper.ambient_dim(); ++j)
      row.set_code(0, j, upper.basis().code_at(r, j));
    const Subspace cand = subspace_sum(grown, Subspace::span_of_rows(row));
    if (cand.dim() > grown.dim()) {
      comp.push_back(row.codes());
      grown = cand;
    }
  }

  for (const auto& coeffs : line_representatives(f, comp.size())) {
    MatrixOverF vec(d.field, 1, upper.ambient_dim());
    for (std::size_t t = 0; t < comp.size(); ++t) {
      if (!coeffs[t]) continue;
      for (std::size_t j = 0; j < upper.ambient_dim(); ++j)
        vec.set_code(0, j, f.add(vec.code_at(0, j), f.mul(coeffs[t], comp[t][j])));
    }
    std::vector<Subspace> next = chain;
    next.push_back(subspace_sum(lower, Subspace::span_of_rows(vec)));
    auto closed = close_chain(d, std::move(next));
    if (!closed) continue;
    if (refine_flag(d, std::move(*closed), out)) return true;
  }
  return false;
}

}  // namespace

std::vector<Subspace> final_flag_refine(const DieudonneModule& d) {
  auto chain = canonical_filtration(d);
  std::vector<Subspace> flag;
  if (!refine_flag(d, std::move(chain), flag))
    domain_error("NotAChain", "no stable refinement to a full final flag exists");
  return flag;
}

FinalType final_type_from_flag(const DieudonneModule& d, const std::vector<Subspace>& flag) {
  std::vector<int> values;
  for (int i = 1; i <= d.g; ++i)
    values.push_back(static_cast<int>(v_image(d, flag[static_cast<std::size_t>(i)]).dim()));
  return make_final_type(std::move(values));
}

namespace {

std::vector<std::size_t> pivot_columns(const MatrixOverF& rref_rows) {
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rref_rows.rows(); ++i)
    for (std::size_t j = 0; j < rref_rows.cols(); ++j)
      if (rref_rows.code_at(i, j) != 0) {
        pivots.push_back(j);
        break;
      }
  return pivots;
}

}  // namespace

HasseWittTriple triple_from_module(const DieudonneModule& d) {
  require_valid(d);
  const std::size_t n = static_cast<std::size_t>(2 * d.g);
  const std::size_t g = static_cast<std::size_t>(d.g);
  const FiniteField& f = *d.field;

  const Subspace ker_f = kernel_of_map(d.f_op, 1);
  const auto kpiv = pivot_columns(ker_f.basis());
  std::vector<bool> is_pivot(n, false);
  for (auto c : kpiv) is_pivot[c] = true;
  std::vector<std::size_t> qcoord;  // Q basis = non-pivot coordinates
  for (std::size_t j = 0; j < n; ++j)
    if (!is_pivot[j]) qcoord.push_back(j);
  require_internal(qcoord.size() == g, "QuotientDim", "dim M/ker F != g");

  // pi: M -> complement along ker F; x - sum_r x_{pivot_r} * krow_r
  auto project = [&](std::vector<std::uint32_t> x) {
    for (std::size_t r = 0; r < kpiv.size(); ++r) {
      const std::uint32_t c = x[kpiv[r]];
      if (!c) continue;
      for (std::size_t j = 0; j < n; ++j)
        x[j] = f.sub(x[j], f.mul(c, ker_f.basis().code_at(r, j)));
    }
    return x;
  };

  MatrixOverF phi(d.field, g, g);
  for (std::size_t jq = 0; jq < g; ++jq) {
    std::vector<std::uint32_t> fx(n, 0);
    for (std::size_t i = 0; i < n; ++i) fx[i] = d.f_op.code_at(i, qcoord[jq]);
    fx = project(std::move(fx));
    for (std::size_t iq = 0; iq < g; ++iq) phi.set_code(iq, jq, fx[qcoord[iq]]);
  }

  const Subspace ker_phi = kernel_of_map(phi, 1);
  const std::size_t r = ker_phi.dim();
  MatrixOverF psi(d.field, r, g);
  for (std::size_t t = 0; t < r; ++t) {
    // lift ker Phi basis row into M on the Q coordinates
    std::vector<std::uint32_t> lift(n, 0);
    for (std::size_t jq = 0; jq < g; ++jq) lift[qcoord[jq]] = ker_phi.basis().code_at(t, jq);
    // F(lift); basis vectors of Q are sigma-fixed only if 0/1, so twist first
    std::vector<std::uint32_t> fx(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        fx[i] = f.add(fx[i], f.mul(d.f_op.code_at(i, j), f.frob(lift[j], 1)));
    // well-definedness: b(z, F(lift)) = 0 for z in ker F
    for (std::size_t zr = 0; zr < ker_f.dim(); ++zr) {
      std::uint32_t acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          acc = f.add(acc, f.mul(ker_f.basis().code_at(zr, i),
                                 f.mul(d.gram.code_at(i, j), fx[j])));
      require_internal(acc == 0, "PsiIllDefined", "Psi depends on the choice of lift");
    }
    // dual coordinates: Psi(x)(eps_j) = b(e_{qcoord[j]}, F(lift))
    for (std::size_t jq = 0; jq < g; ++jq) {
      std::uint32_t acc = 0;
      for (std::size_t j = 0; j < n; ++j)
        acc = f.add(acc, f.mul(d.gram.code_at(qcoord[jq], j), fx[j]));
      psi.set_code(t, jq, acc);
    }
  }

  HasseWittTriple t{d.field, d.g, std::move(phi), ker_phi.basis(), std::move(psi)};
  const auto rep = validate_triple(t);
  require_internal(rep.ok, "InvalidTripleConstructed", "triple_from_module broke an axiom");
  return t;
}

ValidationReport validate_triple(const HasseWittTriple& t) {
  ValidationReport rep;
  const std::size_t g = static_cast<std::size_t>(t.g);
  if (!t.phi.is_square() || t.phi.rows() != g) {
    rep.violations.push_back("Phi is not g x g");
    rep.ok = false;
    return rep;
  }
  const Subspace ker_phi = kernel_of_map(t.phi, 1);
  if (t.ker_basis != ker_phi.basis())
    rep.violations.push_back("ker_basis is not the canonical basis of ker(Phi)");
  const std::size_t r = ker_phi.dim();
  if (t.psi.rows() != r || t.psi.cols() != g)
    rep.violations.push_back("Psi has the wrong shape");
  else {
    if (matrix_rank(t.psi) != r)
      rep.violations.push_back("Psi is not bijective onto im(Phi)^perp");
    if (!(t.psi * t.phi).is_zero())
      rep.violations.push_back("a Psi output does not annihilate im(Phi)");
  }
  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

// M = Q + Q^dual with the standard pairing; complement_rows spans a
// complement of L = ker Phi inside Q.
DieudonneModule build_from_triple(const HasseWittTriple& t, const MatrixOverF& complement_rows) {
  const FiniteField& f = *t.field;
  const std::size_t g = static_cast<std::size_t>(t.g);
  const std::size_t r = t.ker_basis.rows();
  const std::size_t n = 2 * g;

  // coordinates in the [L; U] basis: (a; b) = inv([W^T U^T]) q
  MatrixOverF basis_cols(t.field, g, g);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g; ++j) basis_cols.set_code(j, i, t.ker_basis.code_at(i, j));
  for (std::size_t i = 0; i < g - r; ++i)
    for (std::size_t j = 0; j < g; ++j)
      basis_cols.set_code(j, r + i, complement_rows.code_at(i, j));
  const MatrixOverF coords = inverse(basis_cols);  // rows 0..r-1 give the L coefficients

  MatrixOverF lcoeff(t.field, r, g);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g; ++j) lcoeff.set_code(i, j, coords.code_at(i, j));

  // q -> Psi(pi_L(q)) is sigma-linear with matrix psi^T * twist(lcoeff, 1)
  MatrixOverF psi_t(t.field, g, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < g; ++j) psi_t.set_code(j, i, t.psi.code_at(i, j));
  const MatrixOverF c_mat = psi_t * twist(lcoeff, 1);

  MatrixOverF f_op(t.field, n, n);
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t j = 0; j < g; ++j) {
      f_op.set_code(i, j, t.phi.code_at(i, j));
      f_op.set_code(g + i, j, c_mat.code_at(i, j));
    }

  MatrixOverF gram(t.field, n, n);
  for (std::size_t i = 0; i < g; ++i) {
    gram.set_code(i, g + i, 1);
    gram.set_code(g + i, i, f.neg(1));
  }

  // V from the adjunction: V = b^{-1} * twist(F^t b, -1)
  const MatrixOverF v_op = inverse(gram) * twist(f_op.transpose() * gram, -1);

  return make_module(t.field, std::move(f_op), v_op, std::move(gram));
}

MatrixOverF default_complement(const HasseWittTriple& t) {
  const std::size_t g = static_cast<std::size_t>(t.g);
  const auto pivots = pivot_columns(t.ker_basis);
  std::vector<bool> is_pivot(g, false);
  for (auto c : pivots) is_pivot[c] = true;
  MatrixOverF rows(t.field, g - pivots.size(), g);
  std::size_t r = 0;
  for (std::size_t j = 0; j < g; ++j)
    if (!is_pivot[j]) rows.set_code(r++, j, 1);
  return rows;
}

}  // namespace

DieudonneModule module_from_triple(const HasseWittTriple& t) {
  const auto rep = validate_triple(t);
  if (!rep.ok) {
    std::string msg = "triple axioms fail:";
    for (const auto& v : rep.violations) msg += " " + v + ";";
    domain_error("InvalidTriple", msg);
  }
  const MatrixOverF comp = default_complement(t);
  DieudonneModule d = build_from_triple(t, comp);
  require_internal(validate_module(d).ok, "ConstructionAxiomFailure",
                   "module_from_triple output fails the module axioms");
  const HasseWittTriple back = triple_from_module(d);
  require_internal(back.phi == t.phi && back.ker_basis == t.ker_basis && back.psi == t.psi,
                   "ConstructionAxiomFailure",
                   "module_from_triple does not invert triple_from_module");
  // the final type must not depend on the complement choice
  const std::size_t r = t.ker_basis.rows();
  const std::size_t g = static_cast<std::size_t>(t.g);
  if (r > 0 && r < g) {
    MatrixOverF sheared = comp;
    const FiniteField& f = *t.field;
    for (std::size_t i = 0; i < sheared.rows(); ++i) {
      const std::size_t src = i % r;
      for (std::size_t j = 0; j < g; ++j)
        sheared.set_code(i, j, f.add(sheared.code_at(i, j), t.ker_basis.code_at(src, j)));
    }
    const DieudonneModule alt = build_from_triple(t, sheared);
    require_internal(validate_module(alt).ok, "ConstructionAxiomFailure",
                     "sheared-complement module fails the axioms");
    require_internal(final_type(alt) == final_type(d), "ConstructionAxiomFailure",
                     "final type depends on the complement choice");
  }
  return d;
}

HWPartition module_delta(const DieudonneModule& d) {
  require_valid(d);
  // route (a): iterated V-images of N_g = V(M)
  std::vector<int> rho_a{d.g};
  Subspace s = image_of_map(d.v_op, -1);
  for (;;) {
    s = v_image(d, s);
    const int r = static_cast<int>(s.dim());
    rho_a.push_back(r);
    if (r == rho_a[rho_a.size() - 2] || r == 0) break;
  }
  std::vector<int> parts_a;
  for (std::size_t i = 1; i < rho_a.size(); ++i)
    if (rho_a[i - 1] != rho_a[i]) parts_a.push_back(rho_a[i - 1] - rho_a[i]);

  // route (b): rank(Phi^(j)) of the induced triple
  const HasseWittTriple t = triple_from_module(d);
  std::vector<int> parts_b;
  {
    int prev = d.g;
    MatrixOverF prod = MatrixOverF::identity(d.field, static_cast<std::size_t>(d.g));
    for (std::size_t i = 0;; ++i) {
      prod = prod * twist(t.phi, static_cast<std::int64_t>(i));
      const int r = static_cast<int>(matrix_rank(prod));
      if (r != prev) parts_b.push_back(prev - r);
      if (r == prev || r == 0) break;
      prev = r;
    }
  }
  require_internal(parts_a == parts_b, "InternalInconsistency",
                   "V-image delta and Phi-rank delta disagree");
  return make_hw_partition(std::move(parts_a), d.g);
}

HasseWittTriple triple_with_canonical_psi(FieldPtr field, MatrixOverF phi) {
  require_domain(phi.is_square(), "NotSquare", "Phi must be square");
  const std::size_t g = phi.rows();
  const Subspace ker_phi = kernel_of_map(phi, 1);
  const Subspace im_phi = Subspace::span_of_rows(phi.transpose());
  const Subspace ann = kernel(im_phi.basis());
  require_internal(ann.dim() == ker_phi.dim(), "RankNullity",
                   "annihilator and kernel dimensions differ");
  MatrixOverF psi(field, ker_phi.dim(), g);
  for (std::size_t i = 0; i < ann.dim(); ++i)
    for (std::size_t j = 0; j < g; ++j) psi.set_code(i, j, ann.basis().code_at(i, j));
  return {std::move(field), static_cast<int>(g), std::move(phi), ker_phi.basis(),
          std::move(psi)};
}

DieudonneModule module_from_delta(FieldPtr field, int g, const std::vector<int>& delta) {
  const HWPartition hw = make_hw_partition(delta, g);
  const int f_rank = g - hw.sum();
  // conjugate partition: jordan_sizes[i] = #{ j : delta_j > i }
  std::vector<int> jordan;
  for (int i = 0;; ++i) {
    int count = 0;
    for (int part : hw.parts)
      if (part > i) ++count;
    if (count == 0) break;
    jordan.push_back(count);
  }
  MatrixOverF phi(field, static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  std::size_t off = 0;
  for (int i = 0; i < f_rank; ++i, ++off) phi.set_code(off, off, 1);
  for (int size : jordan) {
    for (int t = 0; t + 1 < size; ++t)
      phi.set_code(off + static_cast<std::size_t>(t) + 1, off + static_cast<std::size_t>(t), 1);
    off += static_cast<std::size_t>(size);
  }
  return module_from_triple(triple_with_canonical_psi(field, std::move(phi)));
}

DieudonneModule random_valid_module(FieldPtr field, int g, std::mt19937_64& rng) {
  require_domain(g >= 1, "InvalidGenus", "g must be positive");
  std::vector<DieudonneModule> blocks;
  for (int i = 0; i < g; ++i)
    blocks.push_back(rng() & 1 ? ordinary_module(field, 1) : supersingular_module(field));
  DieudonneModule d = direct_sum(blocks);

  const FiniteField& f = *field;
  const std::size_t n = static_cast<std::size_t>(2 * g);
  MatrixOverF big = MatrixOverF::identity(field, n);
  const int transvections = 2 * g + 4;
  for (int t = 0; t < transvections; ++t) {
    std::vector<std::uint32_t> v(n, 0);
    bool nonzero = false;
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(rng() % f.size());
      nonzero |= x != 0;
    }
    if (!nonzero) v[0] = 1;
    const std::uint32_t c = 1 + static_cast<std::uint32_t>(rng() % (f.size() - 1));
    // T x = x + c * b(x, v) * v, symplectic for any v and c
    std::vector<std::uint32_t> bv(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        bv[i] = f.add(bv[i], f.mul(d.gram.code_at(i, j), v[j]));
    MatrixOverF tr = MatrixOverF::identity(field, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        tr.set_code(i, j, f.add(tr.code_at(i, j), f.mul(c, f.mul(v[i], bv[j]))));
    big = tr * big;
  }

  const MatrixOverF big_inv = inverse(big);
  MatrixOverF f_op = big * d.f_op * twist(big_inv, 1);
  MatrixOverF v_op = big * d.v_op * twist(big_inv, -1);
  MatrixOverF gram = big_inv.transpose() * d.gram * big_inv;
  require_internal(gram == d.gram, "TransvectionNotSymplectic",
                   "base change failed to preserve the form");
  DieudonneModule out = make_module(field, std::move(f_op), std::move(v_op), std::move(gram));
  require_internal(validate_module(out).ok, "ConjugationBrokeAxioms",
                   "conjugated module fails the axioms");
  return out;
}

}  // namespace eo
