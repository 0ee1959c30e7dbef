#include "essgb/bma.hpp"

#include <set>

#include "essgb/errors.hpp"

namespace essgb {

BasisResult buchberger_moller(const PointSet& ps, const TermOrder& order) {
  if (ps.points.empty()) throw InputError("Buchberger-Moeller needs at least one point");
  if (order.n_vars() != ps.n_vars) throw DimensionMismatch("order and point set rings differ");
  std::vector<std::ptrdiff_t> column(ps.n_vars, -1);
  for (std::size_t j = 0; j < ps.vars.size(); ++j) {
    if (ps.vars[j] >= ps.n_vars) throw DimensionMismatch("point set variable out of range");
    column[ps.vars[j]] = static_cast<std::ptrdiff_t>(j);
  }
  for (const Point& pt : ps.points) {
    if (pt.size() != ps.vars.size()) throw DimensionMismatch("projected point length");
  }
  if (std::set<Point>(ps.points.begin(), ps.points.end()).size() != ps.points.size()) {
    throw InputError("Buchberger-Moeller needs distinct points");
  }

  const PrimeField& field = ps.field;
  const std::size_t m = ps.points.size();
  auto evaluate_on_points = [&](const Monomial& mono) {
    FieldVector values(m, 1);
    for (std::size_t t = 0; t < m; ++t) {
      for (const auto& f : mono.factors()) {
        values[t] = field.mul(values[t], field.pow(ps.points[t][column[f.var]], f.exp));
      }
    }
    return values;
  };

  auto ascending = [&order](const Monomial& a, const Monomial& b) { return order.less(a, b); };
  std::set<Monomial, decltype(ascending)> candidates(ascending);
  candidates.insert(Monomial(ps.n_vars));

  BasisResult result;
  std::vector<Monomial> leading;
  EchelonBasis echelon(field, m);
  while (!candidates.empty()) {
    Monomial candidate = std::move(candidates.extract(candidates.begin()).value());
    bool in_leading_ideal = false;
    for (const Monomial& lt : leading) {
      if (divides(lt, candidate)) {
        in_leading_ideal = true;
        break;
      }
    }
    if (in_leading_ideal) continue;

    auto inserted = echelon.insert(evaluate_on_points(candidate));
    if (auto* dep = std::get_if<EchelonBasis::Dependent>(&inserted)) {
      // candidate - sum c_j s_j, with every s_j smaller than the candidate.
      std::vector<Term> terms;
      terms.reserve(result.standard.size() + 1);
      terms.push_back({1, candidate});
      for (std::size_t j = result.standard.size(); j-- > 0;) {
        if (dep->coeffs[j] != 0) terms.push_back({field.neg(dep->coeffs[j]), result.standard[j]});
      }
      leading.push_back(candidate);
      result.basis.push_back(Polynomial::from_sorted_terms(std::move(terms)));
    } else {
      for (std::size_t var : ps.vars) candidates.insert(candidate.times_variable(var));
      result.standard.push_back(std::move(candidate));
    }
  }
  return result;
}

}  // namespace essgb
