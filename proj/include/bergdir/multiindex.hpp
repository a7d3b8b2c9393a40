#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bergdir {

using BigInt = boost::multiprecision::cpp_int;

/// Exponent tuple p = (p_1, ..., p_n) of a monomial z^p.
class MultiIndex {
 public:
  /// Throws InvalidParameter if `parts` is empty or has a negative entry.
  explicit MultiIndex(std::vector<int> parts);
  MultiIndex(std::initializer_list<int> parts) : MultiIndex(std::vector<int>(parts)) {}

  /// The zero index of length n.
  static MultiIndex zero(std::size_t n);

  [[nodiscard]] std::size_t size() const { return parts_.size(); }
  [[nodiscard]] int operator[](std::size_t i) const { return parts_[i]; }
  [[nodiscard]] std::span<const int> parts() const { return parts_; }

  /// True if q_i <= p_i for every i, i.e. D^q z^p is nonzero.
  [[nodiscard]] bool dominates(const MultiIndex& q) const;

  MultiIndex operator+(const MultiIndex& other) const;
  /// Componentwise difference; requires dominates(other).
  MultiIndex operator-(const MultiIndex& other) const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> parts_;
};

/// Canonical order used by every sum over indices: ascending total degree,
/// then lexicographically descending parts (the enumerate_indices order).
struct CanonicalOrder {
  bool operator()(const MultiIndex& a, const MultiIndex& b) const;
};

/// |p| = p_1 + ... + p_n
[[nodiscard]] int degree(const MultiIndex& p);

/// p! = p_1! ... p_n!, exact.
[[nodiscard]] BigInt multifactorial(const MultiIndex& p);

/// k!, exact.
[[nodiscard]] BigInt factorial(int k);

[[nodiscard]] double to_double(const BigInt& value);
[[nodiscard]] long double to_long_double(const BigInt& value);
/// log(value) for value > 0, accurate for values far beyond double range.
[[nodiscard]] long double log_big(const BigInt& value);

/// All p of length n with |p| = k, lexicographically descending on parts.
/// The result has C(k+n-1, n-1) entries.
[[nodiscard]] std::vector<MultiIndex> enumerate_indices(std::size_t n, int k);

/// x (x-1) ... (x-m+1); 1 for m = 0.
[[nodiscard]] double falling_factorial(double x, int m);

/// |prod_{j<k}(z1+z2-j) - k! sum_{|p|=k} [prod_{j<p1}(z1-j) prod_{j<p2}(z2-j)] / p!|,
/// both sides evaluated in extended precision.
[[nodiscard]] double snomial_identity_residual(double z1, double z2, int k);

/// |sum_{|p|=k} z^p conj(w)^p / p! - <z,w>^k / k!|, in extended precision.
[[nodiscard]] double power_sum_residual(std::span<const std::complex<double>> z,
                                        std::span<const std::complex<double>> w, int k);

}  // namespace bergdir
