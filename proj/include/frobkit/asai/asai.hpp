#pragma once

#include <functional>

#include "frobkit/asai/character_table.hpp"
#include "frobkit/groups/pgl2.hpp"
#include "frobkit/report.hpp"

namespace frobkit::asai {

using groups::GroupData;
using groups::Mat2;
using groups::S5Class;

/// Tensor induction from an index-2 subgroup h of g: psi(x) psi(g0^-1 x g0)
/// on h and psi(x^2) off h. psi must live on h's group and g0 outside h.
/// Throws DomainError on bad input and VerificationFailure when the result
/// depends on the class representative or on g0.
ClassFunction asai_transfer(const ClassFunction& psi, const GroupData& h, const GroupData& g, int g0);

enum class Section { kMinimal, kMaximal };

/// The linear character alpha(c) beta(class of M) where M = c s(M mod scalars)
/// and s picks the smallest (or largest) det-1 matrix over each projective
/// element. Throws DomainError when alpha(-I) != 1 and InternalError when the
/// result is not multiplicative.
ClassFunction chi_from_lemma(const std::function<Complex(const Mat2&)>& alpha,
                             const std::function<Complex(S5Class)>& beta, const GroupData& g,
                             Section section = Section::kMinimal, double tau = kDefaultTolerance);

/// Pullback of the standard character of S5 (fixed points on 5 letters minus one).
ClassFunction theta_std(const GroupData& g, double tau = kDefaultTolerance);
/// Pullback of the sign of S5.
ClassFunction epsilon(const GroupData& g, double tau = kDefaultTolerance);

/// Members of g whose image lies in PSL2(F5), as a group.
GroupData psl_preimage(const GroupData& g);

/// Asai(eta) (x) chi = theta_std for every degree-2 irreducible eta of the
/// PSL2 preimage, together with the central values 4 det eta(c).
Report verify_prop_asai(const GroupData& g, int r, const CharacterTableOptions& opts = {});

/// The lift-independent formulas for tr theta_std through psi and chi.
Report verify_cor_asai(const GroupData& g, const CharacterTableOptions& opts = {});

/// Value of the product of Hilbert eigenvalues at a prime with Frobenius class c
/// whose lift has determinant sign det_sign: (det sgn)(c) tr theta_std(c).
int predicted_hilbert_product(S5Class c, int det_sign);

/// chi^2 = epsilon + theta_4 for each faithful degree-2 irreducible of GL2(F3).
Report verify_n4_identity(const CharacterTableOptions& opts = {});

}  // namespace frobkit::asai
