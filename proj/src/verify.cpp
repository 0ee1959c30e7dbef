#include "essgb/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace essgb {

namespace {

CheckResult pass(std::string name) { return {std::move(name), true, {}}; }

CheckResult fail(std::string name, std::string counterexample) {
  return {std::move(name), false, std::move(counterexample)};
}

std::string render_point(const Point& pt) {
  std::string out = "(";
  for (std::size_t i = 0; i < pt.size(); ++i) out += (i ? "," : "") + std::to_string(pt[i]);
  return out + ")";
}

std::string render_vars(std::span<const std::size_t> vars) {
  std::string out = "{";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += (i ? "," : "") + std::string("x") + std::to_string(vars[i] + 1);
  }
  return out + "}";
}

}  // namespace

bool VerificationReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::render() const {
  std::ostringstream out;
  for (const CheckResult& c : checks) {
    if (c.passed) {
      out << "PASS " << c.name << '\n';
    } else {
      out << "FAIL " << c.name << ": " << c.counterexample << '\n';
    }
  }
  return out.str();
}

CheckResult check_vanishing(std::span<const Polynomial> g, const Variety& v) {
  for (const Polynomial& f : g) {
    for (const Point& pt : v.points()) {
      if (evaluate(f, pt, v.field()) != 0) {
        return fail("check_vanishing", render(f) + " at " + render_point(pt));
      }
    }
  }
  return pass("check_vanishing");
}

CheckResult check_reduced(std::span<const Polynomial> g, const TermOrder& order) {
  std::vector<const Monomial*> leads;
  for (const Polynomial& f : g) {
    if (f.is_zero()) throw std::invalid_argument("reducedness check on a zero polynomial");
    const Term* lead = &f.terms().front();
    for (const Term& t : f.terms()) {
      if (order.less(lead->mono, t.mono)) lead = &t;
    }
    if (lead->coeff != 1) {
      throw std::invalid_argument("reducedness check on non-monic " + render(f));
    }
    leads.push_back(&lead->mono);
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const Term& t : g[j].terms()) {
        if (divides(*leads[i], t.mono)) {
          return fail("check_reduced", render(*leads[i]) + " divides " + render(t.mono) +
                                           " in " + render(g[j]));
        }
      }
    }
  }
  return pass("check_reduced");
}

CheckResult check_sm(std::span<const Monomial> sm, const Variety& v,
                     std::span<const std::size_t> essential) {
  const std::string name = "check_sm";
  if (sm.size() != v.size()) {
    return fail(name, "|SM| = " + std::to_string(sm.size()) + " but m = " +
                          std::to_string(v.size()));
  }
  std::unordered_set<Monomial, MonomialHash> members(sm.begin(), sm.end());
  std::vector<std::size_t> supp;
  for (const Monomial& s : sm) {
    for (const auto& f : s.factors()) {
      supp.push_back(f.var);
      Monomial divisor = s / Monomial::variable(s.n_vars(), f.var);
      if (!members.count(divisor)) {
        return fail(name, "order ideal: " + render(divisor) + " divides " + render(s) +
                              " but is missing");
      }
    }
  }
  std::sort(supp.begin(), supp.end());
  supp.erase(std::unique(supp.begin(), supp.end()), supp.end());
  std::vector<std::size_t> ev(essential.begin(), essential.end());
  std::sort(ev.begin(), ev.end());
  if (supp != ev) {
    return fail(name, "supp(SM) = " + render_vars(supp) + " but EV = " + render_vars(ev));
  }
  EchelonBasis columns(v.field(), v.size());
  for (const Monomial& s : sm) {
    FieldVector values(v.size());
    for (std::size_t t = 0; t < v.size(); ++t) values[t] = evaluate(s, v[t], v.field());
    if (std::holds_alternative<EchelonBasis::Dependent>(columns.insert(values))) {
      return fail(name, "evaluation vector of " + render(s) +
                            " depends on those of smaller standard monomials");
    }
  }
  return pass(name);
}

CheckResult check_rel_shape(const GroebnerResult& res, const TermOrder& order) {
  const std::string name = "check_rel_shape";
  const std::size_t n = order.n_vars();
  std::unordered_set<Monomial, MonomialHash> standard(res.standard.begin(), res.standard.end());
  std::vector<bool> essential(n, false);
  for (std::size_t var : res.essential) essential.at(var) = true;
  std::vector<bool> headed(n, false);
  for (const Polynomial& rel : res.relations) {
    if (!is_monic(rel)) return fail(name, render(rel) + " is not monic");
    const Monomial& head = rel.terms().front().mono;
    if (head.factors().size() != 1 || head.degree() != 1) {
      return fail(name, render(rel) + " is not headed by a single variable");
    }
    std::size_t var = head.factors().front().var;
    if (essential[var]) return fail(name, render(rel) + " is headed by essential " + render(head));
    if (headed[var]) return fail(name, "two relations headed by " + render(head));
    headed[var] = true;
    for (auto t = rel.terms().begin() + 1; t != rel.terms().end(); ++t) {
      if (!standard.count(t->mono)) {
        return fail(name, render(t->mono) + " in " + render(rel) + " is not standard");
      }
      if (!order.less(t->mono, head)) {
        return fail(name, render(t->mono) + " in " + render(rel) + " is not below " +
                              render(head));
      }
    }
  }
  if (res.relations.size() + res.essential.size() != n) {
    return fail(name, "|Rel| = " + std::to_string(res.relations.size()) + " but n - |EV| = " +
                          std::to_string(n - res.essential.size()));
  }
  if (res.essential.size() > res.standard.size()) {
    return fail(name, "|EV| = " + std::to_string(res.essential.size()) + " exceeds m = " +
                          std::to_string(res.standard.size()));
  }
  return pass(name);
}

std::vector<std::string> canonical_set(std::span<const Polynomial> g, const Ring& ring) {
  std::vector<std::string> out;
  out.reserve(g.size());
  for (const Polynomial& f : g) {
    out.push_back(render(make_monic(Polynomial::from_terms(f.terms(), ring), ring)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckResult check_result_equivalence(const GroebnerResult& res, const Variety& v,
                                     const TermOrder& order) {
  const std::string name = "check_result_equivalence";
  std::vector<std::size_t> all(v.n_vars());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  BasisResult oracle = buchberger_moller(project_points(v, all), order);
  Ring ring{v.field(), order};

  std::vector<std::string> got = canonical_set(res.groebner_basis(), ring);
  std::vector<std::string> want = canonical_set(oracle.basis, ring);
  if (got != want) {
    std::vector<std::string> extra, missing;
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(extra));
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(missing));
    std::string detail = "G differs from Buchberger-Moeller;";
    if (!extra.empty()) detail += " unexpected " + extra.front();
    if (!missing.empty()) detail += " missing " + missing.front();
    return fail(name, detail);
  }
  auto monomial_set = [](std::span<const Monomial> ms) {
    std::vector<std::string> out;
    for (const Monomial& m : ms) out.push_back(render(m));
    std::sort(out.begin(), out.end());
    return out;
  };
  if (monomial_set(res.standard) != monomial_set(oracle.standard)) {
    return fail(name, "standard monomials differ from Buchberger-Moeller");
  }
  return pass(name);
}

VerificationReport verify_result(const GroebnerResult& res, const Variety& v,
                                 const TermOrder& order, bool with_oracle) {
  VerificationReport report;
  std::vector<Polynomial> g = res.groebner_basis();
  report.checks.push_back(check_vanishing(g, v));
  try {
    report.checks.push_back(check_reduced(g, order));
  } catch (const std::invalid_argument& e) {
    report.checks.push_back(fail("check_reduced", e.what()));
  }
  report.checks.push_back(check_sm(res.standard, v, res.essential));
  report.checks.push_back(check_rel_shape(res, order));
  if (with_oracle) report.checks.push_back(check_result_equivalence(res, v, order));
  return report;
}

}  // namespace essgb
