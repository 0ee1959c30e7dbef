#include "essgb/essbm.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

#include "essgb/errors.hpp"

namespace essgb {

std::vector<Polynomial> GroebnerResult::groebner_basis() const {
  std::vector<Polynomial> g = basis;
  g.insert(g.end(), relations.begin(), relations.end());
  return g;
}

std::vector<Monomial> candidate_monomials(std::span<const Monomial> sm_prev, std::size_t var,
                                          const TermOrder& order) {
  Monomial x = Monomial::variable(order.n_vars(), var);
  std::vector<Monomial> out;
  for (const Monomial& s : sm_prev) {
    if (order.less(s, x)) out.push_back(s);
  }
  return out;
}

PointSet project_points(const Variety& v, std::span<const std::size_t> vars) {
  if (vars.empty()) throw std::invalid_argument("projection onto an empty variable set");
  PointSet ps{v.field(), v.n_vars(), {vars.begin(), vars.end()}, {}};
  std::sort(ps.vars.begin(), ps.vars.end());
  ps.vars.erase(std::unique(ps.vars.begin(), ps.vars.end()), ps.vars.end());
  if (ps.vars.back() >= v.n_vars()) throw DimensionMismatch("projection variable out of range");
  std::set<Point> seen;
  for (const Point& pt : v.points()) {
    Point projected(ps.vars.size());
    for (std::size_t j = 0; j < ps.vars.size(); ++j) projected[j] = pt[ps.vars[j]];
    if (seen.insert(projected).second) ps.points.push_back(std::move(projected));
  }
  return ps;
}

FieldMatrix build_eval_matrix(std::span<const Monomial> monos, const Variety& v) {
  FieldMatrix eval(v.size(), monos.size());
  for (std::size_t t = 0; t < v.size(); ++t) {
    for (std::size_t j = 0; j < monos.size(); ++j) {
      eval.at(t, j) = evaluate(monos[j], v[t], v.field());
    }
  }
  return eval;
}

GroebnerResult essbm(const Variety& v, const TermOrder& order) {
  if (order.n_vars() != v.n_vars()) {
    throw DimensionMismatch("order has " + std::to_string(order.n_vars()) +
                            " variables, variety has " + std::to_string(v.n_vars()));
  }
  const PrimeField& field = v.field();
  GroebnerResult res;
  res.standard.push_back(Monomial(v.n_vars()));

  for (std::size_t var : variable_rank(order)) {
    std::vector<Monomial> smaller = candidate_monomials(res.standard, var, order);
    FieldMatrix eval = build_eval_matrix(smaller, v);
    FieldVector values(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) values[t] = v[t][var];

#ifndef NDEBUG
    // Columns are evaluation vectors of standard monomials, so any solution
    // is unique.
    EchelonBasis columns(field, v.size());
    for (std::size_t j = 0; j < eval.cols(); ++j) columns.insert(eval.column(j));
    assert(columns.rank() == eval.cols());
#endif

    if (auto c = solve_linear(field, eval, values)) {
      std::vector<Term> terms;
      terms.reserve(smaller.size() + 1);
      terms.push_back({1, Monomial::variable(v.n_vars(), var)});
      for (std::size_t j = smaller.size(); j-- > 0;) {
        if ((*c)[j] != 0) terms.push_back({field.neg((*c)[j]), smaller[j]});
      }
      res.relations.push_back(Polynomial::from_sorted_terms(std::move(terms)));
    } else {
      res.essential.insert(std::upper_bound(res.essential.begin(), res.essential.end(), var),
                           var);
      BasisResult sub = buchberger_moller(project_points(v, res.essential), order);
      res.basis = std::move(sub.basis);
      res.standard = std::move(sub.standard);
    }
  }
  return res;
}

}  // namespace essgb
