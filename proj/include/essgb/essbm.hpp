#pragma once

#include <span>
#include <vector>

#include "essgb/bma.hpp"
#include "essgb/field.hpp"
#include "essgb/order.hpp"
#include "essgb/poly.hpp"
#include "essgb/variety.hpp"

namespace essgb {

/// Output of essbm(): G = basis followed by relations is the reduced Groebner
/// basis of I(V), and `standard` is its set of standard monomials.
struct GroebnerResult {
  std::vector<std::size_t> essential;   // ascending variable indices
  std::vector<Monomial> standard;       // ascending
  std::vector<Polynomial> basis;        // supported on `essential`, ascending LT
  std::vector<Polynomial> relations;    // x_i - g, in variable-processing order

  /// basis then relations.
  std::vector<Polynomial> groebner_basis() const;
};

/// Monomials of sm_prev (ascending) strictly smaller than the variable.
std::vector<Monomial> candidate_monomials(std::span<const Monomial> sm_prev, std::size_t var,
                                          const TermOrder& order);

/// The points of v restricted to vars (sorted ascending), duplicates dropped,
/// first occurrences kept in order. Throws std::invalid_argument for an
/// empty subset.
PointSet project_points(const Variety& v, std::span<const std::size_t> vars);

/// Entry (t, j) is monos[j] evaluated at point t of v.
FieldMatrix build_eval_matrix(std::span<const Monomial> monos, const Variety& v);

/// Reduced Groebner basis of I(V) built one variable at a time, smallest
/// first. A variable equal on V to a combination of the smaller standard
/// monomials contributes a relation; any other variable becomes essential and
/// the basis of the projection onto the essential variables is recomputed
/// with Buchberger-Moeller.
GroebnerResult essbm(const Variety& v, const TermOrder& order);

}  // namespace essgb
