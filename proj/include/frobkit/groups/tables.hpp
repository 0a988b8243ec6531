#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "frobkit/groups/pgl2.hpp"
#include "frobkit/report.hpp"

namespace frobkit::groups {

struct ClassCycleTable {
  std::vector<poly::CycleType> by_class;                 // indexed by class
  std::map<poly::CycleType, std::vector<int>> inverse;   // class lists ascending
};

ClassCycleTable class_cycletype_table(const PermAction& a, const FiniteGroup& g);

/// 6-point cycle type of each S5 class, read off the P^1 action. Throws
/// InternalError if a class meets two different types.
std::map<S5Class, poly::CycleType> six_point_dictionary(const GroupData& g);

using TraceDet = std::pair<F25, F25>;

struct Table1Row {
  S5Class cls = S5Class::kIdentity;
  int theta_trace = 0;
  std::vector<TraceDet> lifts;  // sorted by (trace, det) lexicographic keys
  int sgn = 1;
  friend bool operator==(const Table1Row&, const Table1Row&) = default;
};

/// Trace/determinant pairs of every lift of every S5 class.
std::vector<Table1Row> table1(const GroupData& g);
/// The published table.
const std::vector<Table1Row>& expected_table1();
std::string format_lifts(const std::vector<TraceDet>& lifts);
Report verify_table1(const GroupData& g);

/// Three index-2 kernels and their generators.
Report verify_table2(const GroupData& g);

/// Inertia-matrix identities and the resulting conductor exponent count.
Report verify_inertia_matrices(const GroupData& g);

/// dim of the fixed space of m acting on F25^2.
int fixed_space_dimension(const Mat2& m);

}  // namespace frobkit::groups
