#include "bergdir/holo.hpp"

#include <cmath>
#include <string>

#include "bergdir/compensated.hpp"
#include "bergdir/errors.hpp"

namespace bergdir {

CVector::CVector(std::vector<Complex> components) : components_(std::move(components)) {
  if (components_.empty()) throw InvalidParameter("point must have dimension >= 1");
  for (const auto& c : components_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw InvalidParameter("point components must be finite");
    }
  }
}

double CVector::norm() const { return std::sqrt(inner(*this, *this).real()); }

CVector CVector::scaled(double factor) const {
  std::vector<Complex> out(components_);
  for (auto& c : out) c *= factor;
  return CVector(std::move(out));
}

Complex inner(const CVector& z, const CVector& w) {
  if (z.size() != w.size()) throw DimensionMismatch(z.size(), w.size());
  Complex acc = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) acc += z[j] * std::conj(w[j]);
  return acc;
}

TaylorSeries::TaylorSeries(std::size_t dimension) : dimension_(dimension) {
  if (dimension_ < 1) throw InvalidParameter("series dimension must be >= 1");
}

void TaylorSeries::check_index(const MultiIndex& p) const {
  if (p.size() != dimension_) throw DimensionMismatch(dimension_, p.size());
}

int TaylorSeries::max_degree() const {
  // Canonical order is degree-ascending.
  return terms_.empty() ? -1 : degree(terms_.rbegin()->first);
}

Complex TaylorSeries::coefficient(const MultiIndex& p) const {
  check_index(p);
  const auto it = terms_.find(p);
  return it == terms_.end() ? Complex{} : it->second;
}

void TaylorSeries::set(const MultiIndex& p, Complex value) {
  check_index(p);
  if (value == Complex{}) {
    terms_.erase(p);
  } else {
    terms_.insert_or_assign(p, value);
  }
}

void TaylorSeries::add(const MultiIndex& p, Complex value) {
  check_index(p);
  const Complex updated = coefficient(p) + value;
  set(p, updated);
}

namespace {

// Powers z_i^e for e <= max_exp, so monomials cost n multiplications.
std::vector<std::vector<Complex>> power_table(const CVector& z, int max_exp) {
  std::vector<std::vector<Complex>> table(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto& row = table[i];
    row.resize(static_cast<std::size_t>(max_exp) + 1);
    row[0] = 1.0;
    for (int e = 1; e <= max_exp; ++e) row[e] = row[e - 1] * z[i];
  }
  return table;
}

}  // namespace

Complex evaluate(const TaylorSeries& f, const CVector& z) {
  if (f.dimension() != z.size()) throw DimensionMismatch(f.dimension(), z.size());
  if (f.empty()) return 0.0;
  const auto table = power_table(z, f.max_degree());
  ComplexNeumaierSum<double> acc;
  for (const auto& [p, a] : f.terms()) {
    Complex term = a;
    for (std::size_t i = 0; i < p.size(); ++i) term *= table[i][p[i]];
    acc += term;
  }
  return acc.value();
}

std::pair<TaylorSeries, TaylorSeries> split(const TaylorSeries& f, int m) {
  TaylorSeries low(f.dimension());
  TaylorSeries high(f.dimension());
  for (const auto& [p, a] : f.terms()) {
    (degree(p) < m ? low : high).set(p, a);
  }
  return {std::move(low), std::move(high)};
}

TaylorSeries derivative(const TaylorSeries& f, const MultiIndex& q) {
  if (q.size() != f.dimension()) throw DimensionMismatch(f.dimension(), q.size());
  TaylorSeries out(f.dimension());
  for (const auto& [p, a] : f.terms()) {
    if (!p.dominates(q)) continue;
    double factor = 1.0;
    for (std::size_t i = 0; i < p.size(); ++i) factor *= falling_factorial(p[i], q[i]);
    out.set(p - q, a * factor);
  }
  return out;
}

TaylorSeries monomial(const MultiIndex& p) {
  TaylorSeries out(p.size());
  out.set(p, 1.0);
  return out;
}

nlohmann::json to_json(const TaylorSeries& f) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [p, a] : f.terms()) {
    terms.push_back({{"p", std::vector<int>(p.parts().begin(), p.parts().end())},
                     {"re", a.real()},
                     {"im", a.imag()}});
  }
  return {{"n", f.dimension()}, {"terms", std::move(terms)}};
}

TaylorSeries taylor_series_from_json(const nlohmann::json& j) {
  try {
    const auto n = j.at("n").get<long long>();
    if (n < 1) throw InvalidParameter("series JSON: n must be >= 1");
    TaylorSeries out(static_cast<std::size_t>(n));
    for (const auto& term : j.at("terms")) {
      const MultiIndex p(term.at("p").get<std::vector<int>>());
      const Complex a(term.at("re").get<double>(), term.value("im", 0.0));
      out.add(p, a);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParameter(std::string("series JSON: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw InvalidParameter(std::string("series JSON: ") + e.what());
  }
}

}  // namespace bergdir
