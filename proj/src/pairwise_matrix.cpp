#include "pcmc/pairwise_matrix.hpp"

#include <cmath>
#include <string>

#include "pcmc/errors.hpp"

namespace pcmc {
namespace {

void check_order(std::size_t n, std::size_t min_order) {
  if (n < min_order || n > kMaxOrder) {
    throw ShapeError("matrix order " + std::to_string(n) + " outside [" +
                     std::to_string(min_order) + ", " + std::to_string(kMaxOrder) + "]");
  }
}

void check_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidEntryError(std::string(what) + " must be positive and finite, got " +
                            std::to_string(v));
  }
}

}  // namespace

SolutionVector::SolutionVector(std::span<const double> weights) : n_(weights.size()) {
  if (n_ == 0 || n_ > kMaxOrder) {
    throw ShapeError("solution length " + std::to_string(n_) + " outside [1, " +
                     std::to_string(kMaxOrder) + "]");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    check_positive(weights[i], "weight");
    w_[i] = weights[i];
  }
}

SolutionVector::SolutionVector(std::initializer_list<double> weights)
    : SolutionVector(std::span<const double>(weights.begin(), weights.size())) {}

double SolutionVector::sum() const noexcept {
  double s = 0.0;
  for (std::size_t i = 0; i < n_; ++i) s += w_[i];
  return s;
}

bool operator==(const SolutionVector& a, const SolutionVector& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i) {
    if (a.w_[i] != b.w_[i]) return false;
  }
  return true;
}

PairwiseMatrix::PairwiseMatrix(std::size_t n) : n_(n) {
  check_order(n, 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a_[i * kMaxOrder + j] = 1.0;
  }
}

PairwiseMatrix::PairwiseMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : n_(rows.size()) {
  check_order(n_, 2);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != n_) throw ShapeError("matrix rows must all have length " + std::to_string(n_));
    std::size_t j = 0;
    for (double v : r) {
      check_positive(v, "matrix entry");
      a_[i * kMaxOrder + j++] = v;
    }
    ++i;
  }
}

void PairwiseMatrix::set_pair(std::size_t i, std::size_t j, double value) {
  check_positive(value, "matrix entry");
  a_[i * kMaxOrder + j] = value;
  a_[j * kMaxOrder + i] = 1.0 / value;
}

std::vector<double> PairwiseMatrix::upper_triangle() const {
  std::vector<double> out;
  out.reserve(n_ * (n_ - 1) / 2);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) out.push_back((*this)(i, j));
  }
  return out;
}

bool operator==(const PairwiseMatrix& a, const PairwiseMatrix& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i) {
    for (std::size_t j = 0; j < a.n_; ++j) {
      if (a(i, j) != b(i, j)) return false;
    }
  }
  return true;
}

PairwiseMatrix from_upper_triangle(std::size_t n, std::span<const double> upper) {
  check_order(n, 2);
  if (upper.size() != n * (n - 1) / 2) {
    throw ShapeError("upper triangle of order " + std::to_string(n) + " needs " +
                     std::to_string(n * (n - 1) / 2) + " entries, got " +
                     std::to_string(upper.size()));
  }
  PairwiseMatrix a(n);
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a.set_pair(i, j, upper[idx++]);
  }
  return a;
}

PairwiseMatrix from_upper_triangle(std::size_t n, std::initializer_list<double> upper) {
  return from_upper_triangle(n, std::span<const double>(upper.begin(), upper.size()));
}

PairwiseMatrix from_weights(std::span<const double> weights) {
  const std::size_t n = weights.size();
  check_order(n, 2);
  for (double w : weights) check_positive(w, "weight");
  PairwiseMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) a.set_pair(i, j, weights[i] / weights[j]);
  }
  return a;
}

PairwiseMatrix from_weights(const SolutionVector& s) { return from_weights(s.weights()); }

bool is_reciprocal(const PairwiseMatrix& a, double tol) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(a(i, i) - 1.0) > tol) return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(a(i, j) * a(j, i) - 1.0) > tol) return false;
    }
  }
  return true;
}

bool is_consistent(const PairwiseMatrix& a, double tol) {
  const std::size_t n = a.order();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        if (std::abs(a(i, j) * a(j, k) / a(i, k) - 1.0) > tol) return false;
      }
    }
  }
  return true;
}

std::vector<Triad> triads(std::size_t n) {
  if (n < 3) throw ShapeError("triads need order >= 3, got " + std::to_string(n));
  std::vector<Triad> out;
  out.reserve(n * (n - 1) * (n - 2) / 6);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) out.push_back({i, j, k});
    }
  }
  return out;
}

}  // namespace pcmc
