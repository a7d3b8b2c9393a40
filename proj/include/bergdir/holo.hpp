#pragma once

#include <complex>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "bergdir/multiindex.hpp"

namespace bergdir {

using Complex = std::complex<double>;

/// A point of C^n with finite components.
class CVector {
 public:
  explicit CVector(std::vector<Complex> components);
  CVector(std::initializer_list<Complex> components)
      : CVector(std::vector<Complex>(components)) {}

  [[nodiscard]] std::size_t size() const { return components_.size(); }
  [[nodiscard]] const Complex& operator[](std::size_t i) const { return components_[i]; }
  [[nodiscard]] std::span<const Complex> components() const { return components_; }

  /// |z| = sqrt(<z,z>)
  [[nodiscard]] double norm() const;

  /// Componentwise real scaling.
  [[nodiscard]] CVector scaled(double factor) const;

 private:
  std::vector<Complex> components_;
};

/// <z,w> = sum_j z_j conj(w_j)
[[nodiscard]] Complex inner(const CVector& z, const CVector& w);

/// Finite Taylor series sum_p a_p z^p in n variables, stored sparsely
/// in canonical index order with exact zeros pruned.
class TaylorSeries {
 public:
  using Map = std::map<MultiIndex, Complex, CanonicalOrder>;

  explicit TaylorSeries(std::size_t dimension);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] const Map& terms() const { return terms_; }
  [[nodiscard]] bool empty() const { return terms_.empty(); }
  /// Highest total degree present; -1 for the zero series.
  [[nodiscard]] int max_degree() const;

  /// Coefficient at p (zero if absent).
  [[nodiscard]] Complex coefficient(const MultiIndex& p) const;

  /// Sets a_p; setting zero removes the entry.
  void set(const MultiIndex& p, Complex value);
  /// a_p += value, pruning an exact zero result.
  void add(const MultiIndex& p, Complex value);

  friend bool operator==(const TaylorSeries&, const TaylorSeries&) = default;

 private:
  void check_index(const MultiIndex& p) const;

  std::size_t dimension_;
  Map terms_;
};

/// sum_p a_p z^p, summed in canonical order.
[[nodiscard]] Complex evaluate(const TaylorSeries& f, const CVector& z);

/// (f_{1,m}, f_{2,m}): terms with |p| < m and |p| >= m.
[[nodiscard]] std::pair<TaylorSeries, TaylorSeries> split(const TaylorSeries& f, int m);

/// D^q f, with D^q z^p = p!/(p-q)! z^(p-q) and zero when some p_i < q_i.
[[nodiscard]] TaylorSeries derivative(const TaylorSeries& f, const MultiIndex& q);

/// z^p
[[nodiscard]] TaylorSeries monomial(const MultiIndex& p);

/// {"n": int, "terms": [{"p": [ints], "re": float, "im": float}]}
[[nodiscard]] nlohmann::json to_json(const TaylorSeries& f);
/// Throws InvalidParameter on malformed input.
[[nodiscard]] TaylorSeries taylor_series_from_json(const nlohmann::json& j);

}  // namespace bergdir
