#pragma once

#include <span>
#include <string>
#include <vector>

#include "essgb/field.hpp"
#include "essgb/order.hpp"

namespace essgb {

using Point = std::vector<Residue>;

/// Coefficient field plus term order: everything needed to normalize a
/// polynomial.
struct Ring {
  PrimeField field;
  TermOrder order;

  std::size_t n_vars() const { return order.n_vars(); }
};

struct Term {
  Residue coeff;  // nonzero
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly decreasing under the ring's order, no
/// zero coefficients. The zero polynomial has no terms.
class Polynomial {
 public:
  Polynomial() = default;

  /// Combines like terms, drops zeros and sorts by the ring's order.
  static Polynomial from_terms(std::vector<Term> terms, const Ring& ring);
  /// Caller guarantees the terms are already normalized.
  static Polynomial from_sorted_terms(std::vector<Term> terms) {
    Polynomial f;
    f.terms_ = std::move(terms);
    return f;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Term> terms_;
};

/// Throws std::invalid_argument for the zero polynomial.
const Term& leading_term(const Polynomial& f);
Polynomial tail(const Polynomial& f);
/// Variables with a positive exponent somewhere in f, ascending.
std::vector<std::size_t> support(const Polynomial& f);
bool is_monic(const Polynomial& f);

Residue evaluate(const Monomial& m, std::span<const Residue> point, const PrimeField& field);
Residue evaluate(const Polynomial& f, std::span<const Residue> point, const PrimeField& field);

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& ring);
Polynomial scale(const Polynomial& f, Residue c, const Ring& ring);
/// c * m * f; order is preserved by multiplicativity, so no re-sort.
Polynomial mul_term(const Polynomial& f, Residue c, const Monomial& m, const Ring& ring);
Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& ring);
/// f scaled so the leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& f, const Ring& ring);

/// Remainder of f on division by G. Repeatedly reduces the largest reducible
/// monomial using the first element of G whose leading term divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const Ring& ring);

/// Rewrites f so that no variable heading an element of `relations` occurs,
/// keeping LT(f) and staying in the same residue class modulo the ideal.
///
/// Each relation must be x_b + g with g free of relation-heading variables.
/// Variables are substituted from the largest down, replacing x_b^i by
/// -x_b^(i-1) g until x_b is gone. Throws std::invalid_argument when a
/// relation is not headed by a single variable or when LT(f) mentions one.
Polynomial eliminate_inessential(const Polynomial& f, std::span<const Polynomial> relations,
                                 const Ring& ring);

/// Terms in decreasing order joined by " + ", e.g. `x1^2*x2 + 2*x2 + 1`.
std::string render(const Polynomial& f);

}  // namespace essgb
