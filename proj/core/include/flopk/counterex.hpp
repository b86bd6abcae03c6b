#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flopk/kgroup.hpp"
#include "flopk/matrix.hpp"

namespace flopk {

/// The main-component correspondence for t = 1, h = 3 at the level of
/// K-groups, where the flop map fails to be onto.
///
/// The "line basis" of box (1, h-1) is ([O(1)], [O], [O(-1)], ...,
/// [O(-(h-2))]); it is unimodularly related to {[Sigma^alpha tau]}.

/// Columns are the canonical coordinates of the line basis.
IntegerMatrix line_basis_change(int h);

/// Canonical coordinates -> line-basis coordinates.
std::vector<Integer> to_line_basis(const KVector& v);
KVector from_line_basis(int h, const std::vector<Integer>& coords);

/// [pi^*(wedge^i Theta (x) O(-1))] on T*P^{h-1}.
KVector koszul_term(int h, int i);

/// [I (x) O(-1)] for I the ideal sheaf of the zero section of T*P^{h-1},
/// as the alternating Koszul sum over i >= 1. Throws DomainError if h < 2.
KVector koszul_ideal_class(int h);

/// Matrix of the main-component map on ([O+(-1)], [O+], [O+(1)]) with
/// images ([O(1)], [O], [O(-1) (x) I]), in the line basis.
IntegerMatrix psi_prime_matrix();

/// Same map with both sides in the canonical bases {[O], [tau], [Sigma^2 tau]}.
IntegerMatrix psi_prime_matrix_canonical();

/// Index of the column lattice in Z^n: product of the Smith invariants,
/// or nullopt ("infinite") when the matrix is singular.
/// Throws DomainError for non-square input.
std::optional<Integer> image_index(const IntegerMatrix& m);

}  // namespace flopk
