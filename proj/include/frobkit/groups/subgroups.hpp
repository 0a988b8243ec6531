#pragma once

#include <array>
#include <string>
#include <vector>

#include "frobkit/groups/pgl2.hpp"

namespace frobkit::groups {

struct H80Data {
  Subset h;  // stabilizer of [1:0]
  Subset u;  // unique normal subgroup of order 5
  Fingerprint quotient;  // invariants of H/U
  bool stabilizers_conjugate = false;
};

/// Stabilizer of [1:0] in the P^1 action. Throws InternalError if its order is not 80.
H80Data find_H80(const GroupData& g);

/// Invariants of C8 x C2.
Fingerprint c8_x_c2_fingerprint();
/// Invariants of the dihedral group of order 10.
Fingerprint d5_fingerprint();

/// The two normal subgroups of H of order 10 with quotient C8, ordered by
/// smallest non-identity member. Throws InternalError unless there are exactly two.
std::array<Subset, 2> normal_order10_subgroups(const GroupData& g, const H80Data& h);

/// Left translation on the left cosets of n, cosets ordered by smallest
/// member. Throws VerificationFailure when the action is not faithful.
PermAction coset_action(const FiniteGroup& g, const Subset& n);

struct Index2Kernel {
  std::string label;  // "sgn", "det" or "det*sgn"
  Subset kernel;
};

/// All surjections to C2, labelled by comparison with sgn and det. Throws
/// VerificationFailure unless there are exactly three, each with a label.
std::vector<Index2Kernel> index2_kernels(const GroupData& g);

}  // namespace frobkit::groups
