#include "bergdir/multiindex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bergdir/compensated.hpp"
#include "bergdir/errors.hpp"

namespace bergdir {

MultiIndex::MultiIndex(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidParameter("multi-index must have length >= 1");
  for (int v : parts_) {
    if (v < 0) throw InvalidParameter("multi-index entries must be nonnegative, got " + std::to_string(v));
  }
}

MultiIndex MultiIndex::zero(std::size_t n) { return MultiIndex(std::vector<int>(n, 0)); }

bool MultiIndex::dominates(const MultiIndex& q) const {
  if (q.size() != size()) throw DimensionMismatch(size(), q.size());
  for (std::size_t i = 0; i < size(); ++i) {
    if (q.parts_[i] > parts_[i]) return false;
  }
  return true;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DimensionMismatch(size(), other.size());
  std::vector<int> out(parts_);
  for (std::size_t i = 0; i < size(); ++i) out[i] += other.parts_[i];
  return MultiIndex(std::move(out));
}

MultiIndex MultiIndex::operator-(const MultiIndex& other) const {
  if (!dominates(other)) throw DomainError("multi-index difference would be negative");
  std::vector<int> out(parts_);
  for (std::size_t i = 0; i < size(); ++i) out[i] -= other.parts_[i];
  return MultiIndex(std::move(out));
}

bool CanonicalOrder::operator()(const MultiIndex& a, const MultiIndex& b) const {
  const int da = degree(a);
  const int db = degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                      a.parts().end());
}

int degree(const MultiIndex& p) {
  return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

BigInt factorial(int k) {
  BigInt out = 1;
  for (int j = 2; j <= k; ++j) out *= j;
  return out;
}

BigInt multifactorial(const MultiIndex& p) {
  BigInt out = 1;
  for (int v : p.parts()) out *= factorial(v);
  return out;
}

double to_double(const BigInt& value) { return value.convert_to<double>(); }

long double to_long_double(const BigInt& value) { return value.convert_to<long double>(); }

long double log_big(const BigInt& value) {
  if (value <= 0) throw DomainError("log of nonpositive integer");
  // Shift off low bits so the mantissa fits in a long double exactly enough.
  const auto bits = static_cast<long>(boost::multiprecision::msb(value));
  constexpr long keep = 100;
  if (bits < keep) return std::log(to_long_double(value));
  const BigInt head = value >> static_cast<unsigned>(bits - keep);
  return std::log(to_long_double(head)) +
         static_cast<long double>(bits - keep) * std::log(2.0L);
}

namespace {

void enumerate_into(std::vector<int>& prefix, std::size_t n, int remaining,
                    std::vector<MultiIndex>& out) {
  if (prefix.size() + 1 == n) {
    prefix.push_back(remaining);
    out.emplace_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    prefix.push_back(v);
    enumerate_into(prefix, n, remaining - v, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> enumerate_indices(std::size_t n, int k) {
  if (n < 1) throw InvalidParameter("enumerate_indices requires n >= 1");
  if (k < 0) throw InvalidParameter("enumerate_indices requires k >= 0");
  std::vector<MultiIndex> out;
  std::vector<int> prefix;
  prefix.reserve(n);
  enumerate_into(prefix, n, k, out);
  return out;
}

double falling_factorial(double x, int m) {
  double out = 1.0;
  for (int j = 0; j < m; ++j) out *= x - j;
  return out;
}

namespace {

long double falling_ld(long double x, int m) {
  long double out = 1.0L;
  for (int j = 0; j < m; ++j) out *= x - j;
  return out;
}

}  // namespace

double snomial_identity_residual(double z1, double z2, int k) {
  if (k < 0) throw InvalidParameter("snomial_identity_residual requires k >= 0");
  const long double a = z1;
  const long double b = z2;
  const long double lhs = falling_ld(a + b, k);
  const BigInt kfact = factorial(k);
  NeumaierSum<long double> rhs;
  for (const auto& p : enumerate_indices(2, k)) {
    const long double multinomial = to_long_double(kfact / multifactorial(p));
    rhs += multinomial * falling_ld(a, p[0]) * falling_ld(b, p[1]);
  }
  return static_cast<double>(std::abs(lhs - rhs.value()));
}

double power_sum_residual(std::span<const std::complex<double>> z,
                          std::span<const std::complex<double>> w, int k) {
  using CLD = std::complex<long double>;
  if (z.size() != w.size()) throw DimensionMismatch(z.size(), w.size());
  if (z.empty()) throw InvalidParameter("power_sum_residual requires dimension >= 1");
  if (k < 0) throw InvalidParameter("power_sum_residual requires k >= 0");
  std::vector<CLD> products(z.size());
  CLD inner = 0.0L;
  for (std::size_t i = 0; i < z.size(); ++i) {
    products[i] = CLD(z[i].real(), z[i].imag()) * CLD(w[i].real(), -w[i].imag());
    inner += products[i];
  }
  ComplexNeumaierSum<long double> lhs;
  for (const auto& p : enumerate_indices(z.size(), k)) {
    CLD term = 1.0L / to_long_double(multifactorial(p));
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (int e = 0; e < p[i]; ++e) term *= products[i];
    }
    lhs += term;
  }
  CLD rhs = 1.0L;
  for (int e = 0; e < k; ++e) rhs *= inner;
  rhs /= to_long_double(factorial(k));
  return static_cast<double>(std::abs(lhs.value() - rhs));
}

}  // namespace bergdir
