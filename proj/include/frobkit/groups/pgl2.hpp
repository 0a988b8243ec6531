#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "frobkit/arith/fields.hpp"
#include "frobkit/groups/mat2.hpp"
#include "frobkit/groups/matrix_group.hpp"
#include "frobkit/groups/perm_action.hpp"
#include "frobkit/poly/cycle_type.hpp"

namespace frobkit::groups {

using arith::F25;
using GroupData = MatrixGroup<F25>;

/// Conjugacy classes of S5, in the row order of the trace table.
enum class S5Class : std::uint8_t {
  kIdentity,
  kFiveCycle,
  kDoubleTransposition,
  kTransposition,
  kThreeCycle,
  kSixType,  // (1,5)(2,3,4)
  kFourCycle,
};

inline constexpr std::array<S5Class, 7> kAllS5Classes = {
    S5Class::kIdentity,   S5Class::kFiveCycle, S5Class::kDoubleTransposition, S5Class::kTransposition,
    S5Class::kThreeCycle, S5Class::kSixType,   S5Class::kFourCycle};

/// "(1)", "(1,3,5,4,2)", "(2,5)(3,4)", "(1,4)", "(1,4,5)", "(1,5)(2,3,4)", "(1,2,5,3)".
std::string_view label(S5Class c);
std::optional<S5Class> s5_class_from_label(std::string_view s);
/// Cycle type on 5 letters.
poly::CycleType five_point_type(S5Class c);
std::optional<S5Class> s5_class_from_five_point_type(const poly::CycleType& t);
int s5_class_size(S5Class c);
/// Fixed points on 5 letters minus one.
int theta_trace(S5Class c);
int sgn(S5Class c);

struct ProjectiveData {
  int order = 1;
  bool in_psl = true;
  friend bool operator==(const ProjectiveData&, const ProjectiveData&) = default;
};

/// Order modulo scalars, and whether the image lies in PSL2(F5). M must be a
/// scalar multiple of a matrix over F5.
ProjectiveData projective_data(const Mat2& m);
S5Class s5_class_of(const Mat2& m);

Mat2 unipotent_upper();  // [[1,1],[0,1]]
Mat2 unipotent_lower();  // [[1,0],[1,1]]
Mat2 w_matrix();         // [[0,z],[-z^-1,0]]
Mat2 w_prime_matrix();   // [[0,z],[z^-1,0]]
Mat2 scalar(int s);
std::vector<Mat2> sl2_f5_generators();
/// SL2(F5) and w; for r = 2 also 2I. Throws DomainError for other r.
std::vector<Mat2> extension_generators(int r);
GroupData build_extension(int r);
GroupData build_sl2_f5();

/// Points of P^1(F5): index x for [x:1], index 5 for [1:0].
inline constexpr int kInfinity = 5;
int p1_image(const Mat2& m, int point);
PermAction p1_action(const GroupData& g);

}  // namespace frobkit::groups
