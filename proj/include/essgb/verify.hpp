#pragma once

#include <span>
#include <string>
#include <vector>

#include "essgb/essbm.hpp"

namespace essgb {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;  // empty on success

  explicit operator bool() const { return passed; }
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  /// One line per check: `PASS <name>` or `FAIL <name>: <counterexample>`.
  std::string render() const;
};

/// Every polynomial vanishes at every point.
CheckResult check_vanishing(std::span<const Polynomial> g, const Variety& v);

/// For all g != h, LT(g) divides no monomial of h. Throws
/// std::invalid_argument on a zero or non-monic element.
CheckResult check_reduced(std::span<const Polynomial> g, const TermOrder& order);

/// |SM| = m, SM closed under division, supp(SM) = EV, and the m x m
/// evaluation matrix of SM on V is invertible.
CheckResult check_sm(std::span<const Monomial> sm, const Variety& v,
                     std::span<const std::size_t> essential);

/// Relations are monic x_i + tail with x_i inessential, tail monomials
/// standard and smaller than x_i; |Rel| = n - |EV| and |EV| <= |SM|.
CheckResult check_rel_shape(const GroebnerResult& res, const TermOrder& order);

/// G and SM equal the full-ring Buchberger-Moeller output as sets.
CheckResult check_result_equivalence(const GroebnerResult& res, const Variety& v,
                                     const TermOrder& order);

/// All structural checks, plus the oracle comparison when requested.
VerificationReport verify_result(const GroebnerResult& res, const Variety& v,
                                 const TermOrder& order, bool with_oracle = true);

/// Canonical form used for set comparison: monic elements, sorted by
/// rendered text.
std::vector<std::string> canonical_set(std::span<const Polynomial> g, const Ring& ring);

}  // namespace essgb
