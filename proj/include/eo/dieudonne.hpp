#pragma once

#include <random>
#include <string>
#include <vector>

#include "eo/eo_comb.hpp"
#include "eo/semilinear.hpp"

namespace eo {

/// Mod-p Dieudonne module (M, F, V, b) on M = F_q^(2g): F is sigma-linear
/// with matrix f_op (F(x) = f_op * x^sigma), V is sigma^{-1}-linear with
/// matrix v_op, and gram is the alternating nondegenerate polarization with
/// b(F(x), y) = b(x, V(y))^p.
struct DieudonneModule {
  FieldPtr field;
  int g = 0;
  MatrixOverF f_op;
  MatrixOverF v_op;
  MatrixOverF gram;
};

DieudonneModule make_module(FieldPtr field, MatrixOverF f_op, MatrixOverF v_op,
                            MatrixOverF gram);

/// Hasse-Witt triple (Q, Phi, Psi): Phi sigma-linear on Q = F_q^g;
/// ker_basis is the canonical echelon basis of ker(Phi) (r rows), and row i
/// of psi holds the dual coordinates of Psi(ker_basis row i), a functional
/// annihilating im(Phi).
struct HasseWittTriple {
  FieldPtr field;
  int g = 0;
  MatrixOverF phi;
  MatrixOverF ker_basis;
  MatrixOverF psi;
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> violations;
};

/// Checks ker/im exchange, the alternating nondegenerate form, and the
/// adjunction, reporting each failure separately.
ValidationReport validate_module(const DieudonneModule& d);

ValidationReport validate_triple(const HasseWittTriple& t);

/// l-fold sum of the rank-2 ordinary block: F(e) = e, F(f) = 0, V(f) = f,
/// V(e) = 0, b(e, f) = 1.
DieudonneModule ordinary_module(FieldPtr field, int l);

/// The g = 1 supersingular block: F(e) = f, V(e) = -f, F(f) = V(f) = 0.
DieudonneModule supersingular_module(FieldPtr field);

DieudonneModule direct_sum(const std::vector<DieudonneModule>& ds);

/// Smallest set of subspaces containing {0, M} and closed under V-image and
/// orthogonal complement, sorted by dimension. Asserts it is a chain with
/// V(M) as the self-perpendicular midpoint.
std::vector<Subspace> canonical_filtration(const DieudonneModule& d);

/// nu(i) = dim V(N_i) along a final filtration, computed from the canonical
/// filtration: V is zero or bijective on each graded piece, so intermediate
/// values interpolate flat or with unit slope.
FinalType final_type(const DieudonneModule& d);

/// Explicit final filtration N_0 c ... c N_2g with dim N_i = i, stable as a
/// set under V-image and perp. Refines the canonical chain by inserting one
/// line at a time and closing; backtracks over the inserted line when a
/// choice breaks the chain. Independent oracle for final_type.
std::vector<Subspace> final_flag_refine(const DieudonneModule& d);

/// Final type read off a final flag: nu(i) = dim V(flag[i]).
FinalType final_type_from_flag(const DieudonneModule& d, const std::vector<Subspace>& flag);

/// Moonen's map (M, F, V, b) -> (Q, Phi, Psi): Q = M/ker F with the non-pivot
/// coordinates of ker F as basis, Phi induced by F, Psi(x) = b(-, F(x)).
HasseWittTriple triple_from_module(const DieudonneModule& d);

/// Inverse direction on M = Q + Q^dual with b((q,l),(q',l')) = l'(q) - l(q'),
/// F(q, l) = (Phi(q), Psi(pi_L(q))) for the projection pi_L onto L = ker Phi
/// along the non-pivot complement, and V solved from the adjunction.
DieudonneModule module_from_triple(const HasseWittTriple& t);

/// delta computed two ways (iterated V-images of V(M), and rank(Phi^(j)) of
/// the induced triple) and asserted equal.
HWPartition module_delta(const DieudonneModule& d);

/// Triple with the given Phi and the canonical Psi pairing the echelon basis
/// of ker(Phi) with the echelon basis of the annihilator of im(Phi).
HasseWittTriple triple_with_canonical_psi(FieldPtr field, MatrixOverF phi);

/// Module with Hasse-Witt partition delta: identity block of size g - sum(delta)
/// plus the nilpotent with Jordan sizes conjugate to delta, through
/// triple_with_canonical_psi. Its mu is canonical among the delta-candidates.
DieudonneModule module_from_delta(FieldPtr field, int g, const std::vector<int>& delta);

/// Random block sum (ordinary and supersingular) conjugated by a random
/// symplectic base change built from transvections.
DieudonneModule random_valid_module(FieldPtr field, int g, std::mt19937_64& rng);

}  // namespace eo
