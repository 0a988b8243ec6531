#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "frobkit/frobenius/data_bundle.hpp"
#include "frobkit/groups/tables.hpp"
#include "frobkit/report.hpp"

namespace frobkit::frobenius {

using groups::S5Class;

enum class Verdict { kPass, kFail, kSkipped };
char verdict_char(Verdict v);

/// Check ids, in report order.
inline constexpr std::array<const char*, 6> kCheckIds{"i", "ii", "iii", "iv", "v", "c15"};

struct FrobeniusReport {
  std::uint32_t p = 0;
  poly::CycleType type5;
  std::optional<poly::CycleType> type6;   // absent when g mod p is not squarefree
  std::optional<poly::CycleType> type48;  // absent when h mod p is not squarefree
  S5Class cls = S5Class::kIdentity;
  std::vector<int> candidates;            // classes of the extension group
  std::vector<std::string> candidate_traces;
  int det = 1;                            // in F5: 1 or 4
  std::optional<int> ap_sq;               // a_p^2 in F5, from the 48-point data
  int n_p = 0;
  int k19 = 0;    // (-19/p)
  int k151 = 0;   // (-151/p)
  int k2869 = 0;  // (2869/p)
  std::array<Verdict, kCheckIds.size()> verdicts{};
  int predicted_product = 0;

  bool all_pass() const;
  /// "PPPPPP"; '-' marks a skipped check.
  std::string verdict_string() const;
};

/// Factorization patterns of f5, g, h mod p; the last two are absent when not squarefree.
struct PrimeTypes {
  poly::CycleType type5;
  std::optional<poly::CycleType> type6;
  std::optional<poly::CycleType> type48;
  friend bool operator==(const PrimeTypes&, const PrimeTypes&) = default;
};

struct CalibrationChoice {
  int action = 0;                   // 0 for N1, 1 for N2
  std::vector<std::uint32_t> primes;
  std::array<int, 2> agreements{};  // primes each action survived
  std::string name() const { return action == 0 ? "N1" : "N2"; }
};

struct RangeSummary {
  std::uint32_t pmax = 0;
  std::vector<FrobeniusReport> reports;  // ascending p
  std::vector<std::pair<std::uint32_t, std::string>> skipped;
  std::map<S5Class, int> class_counts;
  Report checks{"range"};
};

/// Immutable lookup tables for the per-prime pipeline.
class Pipeline {
 public:
  /// Builds the extension group, both 48-point actions and the class tables,
  /// then calibrates on the first 25 admissible primes.
  explicit Pipeline(DataBundle data);

  const DataBundle& data() const { return data_; }
  const groups::GroupData& group() const { return g_; }
  const CalibrationChoice& calibration() const { return calibration_; }
  const groups::ClassCycleTable& action_table(int which) const { return tables48_.at(static_cast<std::size_t>(which)); }

  /// 19, 151 and primes with h mod p not squarefree are rejected; needs at
  /// least 25 primes. Throws DomainError on a bad sample, DataError when no action survives.
  CalibrationChoice calibrate(const std::vector<std::uint32_t>& sample) const;
  /// The first n primes other than 19, 151 with h mod p squarefree.
  std::vector<std::uint32_t> admissible_primes(std::size_t n) const;

  /// Throws RamifiedError for 19 and 151, DomainError if p is not prime.
  PrimeTypes factor(std::uint32_t p) const;
  FrobeniusReport report(std::uint32_t p) const { return assemble(p, factor(p)); }
  /// Report from precomputed types. Same preconditions as report.
  FrobeniusReport assemble(std::uint32_t p, const PrimeTypes& t) const;

  using TypeSource = std::function<PrimeTypes(std::uint32_t)>;
  /// Throws DomainError for pmax < 100.
  RangeSummary verify_range(std::uint32_t pmax, const TypeSource& source = {}) const;
  /// Same without the lower bound on pmax. source defaults to factor.
  RangeSummary sweep(std::uint32_t pmax, const TypeSource& source = {}) const;

  /// Classes of the extension group in the fibre of a 48-point type with the given det over an S5 class.
  std::vector<int> candidates(int action, const poly::CycleType& t48, int det, S5Class cls) const;

 private:
  DataBundle data_;
  groups::GroupData g_;
  std::array<groups::ClassCycleTable, 2> tables48_;
  std::map<S5Class, poly::CycleType> six_;
  std::vector<S5Class> class_s5_;
  std::vector<arith::F25> class_trace_;
  std::vector<int> class_det_;
  CalibrationChoice calibration_;
};

/// Separation of S5 classes by (a_p, (-19/p), (-151/p)): only (1) and the
/// 5-cycles collide.
Report triple_injectivity_check(const groups::GroupData& g);

/// F5 value of 1 + (2869/p)((-19/p) a_p^2 + (2869/p) - 1).
int cor13_rhs(int k19, int k2869, int ap_sq);

}  // namespace frobkit::frobenius
