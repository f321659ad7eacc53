#pragma once

// Pairwise comparison matrices: dense storage for orders up to 7,
// reciprocal completion, construction from weights, and the reciprocity /
// consistency predicates.

#include <array>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace pcmc {

inline constexpr std::size_t kMaxOrder = 7;
inline constexpr std::size_t kMinExperimentOrder = 3;
inline constexpr double kReciprocityTolerance = 1e-12;

/// Positive weight vector of length n <= kMaxOrder.
class SolutionVector {
 public:
  SolutionVector() = default;
  /// Throws InvalidEntryError on a non-positive component, ShapeError on bad length.
  explicit SolutionVector(std::span<const double> weights);
  SolutionVector(std::initializer_list<double> weights);

  std::size_t size() const noexcept { return n_; }
  double operator[](std::size_t i) const noexcept { return w_[i]; }
  std::span<const double> weights() const noexcept { return {w_.data(), n_}; }
  double sum() const noexcept;

  friend bool operator==(const SolutionVector& a, const SolutionVector& b) noexcept;

 private:
  std::array<double, kMaxOrder> w_{};
  std::size_t n_ = 0;
};

/// Square matrix of positive comparison coefficients a_ij, stored row-major.
///
/// Every entry is strictly positive. Matrices produced by the factory
/// functions below are additionally reciprocal; a hand-built matrix need not
/// be (is_reciprocal() reports it).
class PairwiseMatrix {
 public:
  /// All-ones matrix of order n (2..kMaxOrder).
  explicit PairwiseMatrix(std::size_t n);
  /// Hand-built matrix from rows. Throws ShapeError / InvalidEntryError.
  PairwiseMatrix(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t order() const noexcept { return n_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return a_[i * kMaxOrder + j]; }

  /// Sets a_ij and a_ji = 1 / value. Value must be positive.
  void set_pair(std::size_t i, std::size_t j, double value);

  /// Upper triangle, row-major over i < j.
  std::vector<double> upper_triangle() const;

  /// Row i as a span of n values.
  std::span<const double> row(std::size_t i) const noexcept { return {a_.data() + i * kMaxOrder, n_}; }

  friend bool operator==(const PairwiseMatrix& a, const PairwiseMatrix& b) noexcept;

 private:
  std::array<double, kMaxOrder * kMaxOrder> a_{};
  std::size_t n_ = 0;
};

struct Triad {
  std::size_t i;
  std::size_t j;
  std::size_t k;
  friend bool operator==(const Triad&, const Triad&) = default;
};

/// Reciprocal completion of an upper triangle given row-major over i < j.
PairwiseMatrix from_upper_triangle(std::size_t n, std::span<const double> upper);
PairwiseMatrix from_upper_triangle(std::size_t n, std::initializer_list<double> upper);

/// Consistent matrix a_ij = s_i / s_j. Accepts unnormalized weights.
PairwiseMatrix from_weights(std::span<const double> weights);
PairwiseMatrix from_weights(const SolutionVector& s);

bool is_reciprocal(const PairwiseMatrix& a, double tol = kReciprocityTolerance);

/// True iff |a_ij a_jk / a_ik - 1| <= tol over every triad i < j < k.
/// Assumes reciprocity; orders below 3 are trivially consistent.
bool is_consistent(const PairwiseMatrix& a, double tol);

/// All i < j < k in lexicographic order. Throws ShapeError for n < 3.
std::vector<Triad> triads(std::size_t n);

}  // namespace pcmc
