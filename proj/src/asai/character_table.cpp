#include "frobkit/asai/character_table.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <tuple>

#include "frobkit/errors.hpp"

namespace frobkit::asai {

CharacterTable::CharacterTable(std::shared_ptr<const FiniteGroup> g, std::vector<ClassFunction> irreducibles,
                               std::vector<int> degrees, int attempts)
    : group_(std::move(g)), irr_(std::move(irreducibles)), degrees_(std::move(degrees)), attempts_(attempts) {}

std::vector<ClassFunction> CharacterTable::of_degree(int d) const {
  std::vector<ClassFunction> out;
  for (std::size_t i = 0; i < irr_.size(); ++i) {
    if (degrees_[i] == d) out.push_back(irr_[i]);
  }
  return out;
}

std::vector<Complex> CharacterTable::decompose(const ClassFunction& f) const {
  std::vector<Complex> out;
  for (const auto& chi : irr_) out.push_back(inner_product(f, chi));
  return out;
}

std::vector<std::vector<std::vector<int>>> class_multiplication_constants(const FiniteGroup& g) {
  const std::size_t r = g.num_classes();
  std::vector<std::vector<std::vector<int>>> a(r, std::vector<std::vector<int>>(r, std::vector<int>(r, 0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (int x : g.classes()[i]) {
      for (std::size_t k = 0; k < r; ++k) {
        const int y = g.mul(g.inv(x), g.class_rep(static_cast<int>(k)));
        ++a[i][static_cast<std::size_t>(g.class_of(y))][k];
      }
    }
  }
  return a;
}

namespace {

using Row = std::vector<Complex>;

// One attempt: returns rows on success, empty on degenerate or inaccurate output.
std::vector<Row> attempt(const FiniteGroup& g, const std::vector<std::vector<std::vector<int>>>& a,
                         std::mt19937_64& rng, double tau) {
  const auto r = static_cast<Eigen::Index>(g.num_classes());
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(r, r);
  for (Eigen::Index i = 0; i < r; ++i) {
    const double c = dist(rng);
    for (Eigen::Index j = 0; j < r; ++j) {
      for (Eigen::Index k = 0; k < r; ++k) {
        m(j, k) += c * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)];
      }
    }
  }
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success) return {};
  const auto& ev = solver.eigenvalues();
  double scale = 1.0;
  for (Eigen::Index i = 0; i < r; ++i) scale = std::max(scale, std::abs(ev(i)));
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = i + 1; j < r; ++j) {
      if (std::abs(ev(i) - ev(j)) < 1e-4 * scale) return {};
    }
  }
  const int id = g.class_of(g.identity());
  const double order = static_cast<double>(g.size());
  std::vector<Row> rows;
  for (Eigen::Index e = 0; e < r; ++e) {
    const Eigen::VectorXcd v = solver.eigenvectors().col(e);
    if (std::abs(v(id)) < 1e-12) return {};
    double s = 0;
    Row omega(static_cast<std::size_t>(r));
    for (Eigen::Index k = 0; k < r; ++k) {
      omega[static_cast<std::size_t>(k)] = v(k) / v(id);
      s += std::norm(omega[static_cast<std::size_t>(k)]) / static_cast<double>(g.class_size(static_cast<int>(k)));
    }
    const double d = std::sqrt(order / s);
    if (std::abs(d - std::round(d)) > tau) return {};
    Row chi(static_cast<std::size_t>(r));
    for (Eigen::Index k = 0; k < r; ++k) {
      chi[static_cast<std::size_t>(k)] =
          std::round(d) * omega[static_cast<std::size_t>(k)] / static_cast<double>(g.class_size(static_cast<int>(k)));
    }
    rows.push_back(std::move(chi));
  }
  return rows;
}

bool orthonormal(const FiniteGroup& g, const std::vector<Row>& rows, double tau) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      Complex s = 0;
      for (std::size_t k = 0; k < rows[i].size(); ++k) {
        s += static_cast<double>(g.class_size(static_cast<int>(k))) * rows[i][k] * std::conj(rows[j][k]);
      }
      s /= static_cast<double>(g.size());
      if (std::abs(s - Complex(i == j ? 1.0 : 0.0)) > tau) return false;
    }
  }
  // Column orthogonality.
  for (std::size_t k = 0; k < rows.front().size(); ++k) {
    for (std::size_t l = 0; l < rows.front().size(); ++l) {
      Complex s = 0;
      for (const auto& row : rows) s += row[k] * std::conj(row[l]);
      const double want =
          k == l ? static_cast<double>(g.size()) / static_cast<double>(g.class_size(static_cast<int>(k))) : 0.0;
      if (std::abs(s - want) > tau * static_cast<double>(g.size())) return false;
    }
  }
  return true;
}

}  // namespace

CharacterTable character_table(std::shared_ptr<const FiniteGroup> g, const CharacterTableOptions& opts) {
  if (g->size() > 1000) throw DomainError("character_table: group order exceeds 1000");
  const auto a = class_multiplication_constants(*g);
  std::mt19937_64 rng(opts.seed);
  const int id = g->class_of(g->identity());
  for (int tries = 1; tries <= opts.max_reseeds + 1; ++tries) {
    std::vector<Row> rows = attempt(*g, a, rng, opts.tau);
    if (rows.empty() || !orthonormal(*g, rows, opts.tau)) continue;
    long long degree_sq = 0;
    for (const auto& row : rows) degree_sq += std::llround(row[static_cast<std::size_t>(id)].real()) *
                                              std::llround(row[static_cast<std::size_t>(id)].real());
    if (degree_sq != static_cast<long long>(g->size())) continue;

    auto key = [&](const Row& row) {
      std::vector<std::tuple<long long, long long>> k;
      k.emplace_back(std::llround(row[static_cast<std::size_t>(id)].real()), 0);
      for (const auto& z : row) k.emplace_back(-std::llround(z.real() * 1e6), -std::llround(z.imag() * 1e6));
      return k;
    };
    std::sort(rows.begin(), rows.end(), [&](const Row& x, const Row& y) { return key(x) < key(y); });
    std::vector<ClassFunction> irr;
    std::vector<int> degrees;
    for (auto& row : rows) {
      degrees.push_back(static_cast<int>(std::llround(row[static_cast<std::size_t>(id)].real())));
      irr.emplace_back(g, std::move(row), opts.tau);
    }
    return CharacterTable(g, std::move(irr), std::move(degrees), tries);
  }
  throw NumericalFailure("character_table: eigenvalues not separated after " + std::to_string(opts.max_reseeds) +
                         " reseeds");
}

}  // namespace frobkit::asai
