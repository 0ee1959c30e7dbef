#pragma once

#include <vector>

#include "essgb/order.hpp"
#include "essgb/poly.hpp"

namespace essgb {

/// Distinct points in the coordinates `vars` (ascending ambient indices) of an
/// n_vars-variable ring. points[t][j] is the value of variable vars[j].
struct PointSet {
  PrimeField field;
  std::size_t n_vars;
  std::vector<std::size_t> vars;
  std::vector<Point> points;
};

/// Reduced Groebner basis of a vanishing ideal and its standard monomials.
struct BasisResult {
  std::vector<Polynomial> basis;     // monic, ascending by leading term
  std::vector<Monomial> standard;    // ascending
};

/// Buchberger-Moeller: the reduced Groebner basis of I(points) inside
/// k[vars] under `order` (the ambient order, which agrees with the induced
/// one on k[vars]).
///
/// Candidate monomials are visited in ascending order starting from 1. A
/// candidate divisible by a known leading term is skipped; otherwise its
/// evaluation vector either extends the standard monomials or, when it is a
/// combination of theirs, yields the basis element candidate - sum c_j s_j.
///
/// Throws InputError on an empty or repeated point set.
BasisResult buchberger_moller(const PointSet& ps, const TermOrder& order);

}  // namespace essgb
