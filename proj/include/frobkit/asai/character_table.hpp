#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "frobkit/asai/class_function.hpp"

namespace frobkit::asai {

struct CharacterTableOptions {
  std::uint64_t seed = 0x5eed5;
  double tau = kDefaultTolerance;
  int max_reseeds = 5;
};

class CharacterTable {
 public:
  CharacterTable(std::shared_ptr<const FiniteGroup> g, std::vector<ClassFunction> irreducibles, std::vector<int> degrees,
                 int attempts);

  const FiniteGroup& group() const { return *group_; }
  const std::vector<ClassFunction>& irreducibles() const { return irr_; }
  const std::vector<int>& degrees() const { return degrees_; }
  /// Irreducibles of the given degree, in table order.
  std::vector<ClassFunction> of_degree(int d) const;
  /// Number of random combinations tried (1 when the first seed separated all eigenvalues).
  int attempts() const { return attempts_; }
  /// Inner products with every irreducible, in table order.
  std::vector<Complex> decompose(const ClassFunction& f) const;

 private:
  std::shared_ptr<const FiniteGroup> group_;
  std::vector<ClassFunction> irr_;
  std::vector<int> degrees_;
  int attempts_;
};

/// Irreducible characters as simultaneous eigenvectors of the class
/// multiplication matrices. Rows are ordered by degree, then by values in
/// decreasing order, so the trivial character comes first.
/// Throws DomainError for |G| > 1000 and NumericalFailure when no seed
/// separates the eigenvalues or the result fails orthogonality.
CharacterTable character_table(std::shared_ptr<const FiniteGroup> g, const CharacterTableOptions& opts = {});

/// Class multiplication constant a_ijk: number of x in C_i, y in C_j with x y = rep(C_k).
std::vector<std::vector<std::vector<int>>> class_multiplication_constants(const FiniteGroup& g);

}  // namespace frobkit::asai
