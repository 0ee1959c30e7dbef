#include "essgb/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "essgb/errors.hpp"

namespace essgb {

Polynomial Polynomial::from_terms(std::vector<Term> terms, const Ring& ring) {
  for (const Term& t : terms) {
    if (t.mono.n_vars() != ring.n_vars()) throw DimensionMismatch("term in wrong ring");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return ring.order.less(b.mono, a.mono);
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (Term& t : terms) {
    Residue c = ring.field.reduce(t.coeff);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = ring.field.add(out.back().coeff, c);
      if (out.back().coeff == 0) out.pop_back();
    } else if (c != 0) {
      out.push_back({c, std::move(t.mono)});
    }
  }
  return from_sorted_terms(std::move(out));
}

const Term& leading_term(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  return f.terms().front();
}

Polynomial tail(const Polynomial& f) {
  if (f.is_zero()) return f;
  return Polynomial::from_sorted_terms({f.terms().begin() + 1, f.terms().end()});
}

std::vector<std::size_t> support(const Polynomial& f) {
  std::vector<std::size_t> vars;
  for (const Term& t : f.terms()) {
    for (const auto& factor : t.mono.factors()) vars.push_back(factor.var);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

bool is_monic(const Polynomial& f) { return !f.is_zero() && f.terms().front().coeff == 1; }

Residue evaluate(const Monomial& m, std::span<const Residue> point, const PrimeField& field) {
  if (point.size() != m.n_vars()) {
    throw DimensionMismatch("point has " + std::to_string(point.size()) +
                            " coordinates, monomial has " + std::to_string(m.n_vars()) +
                            " variables");
  }
  Residue value = 1;
  for (const auto& f : m.factors()) {
    value = field.mul(value, field.pow(point[f.var], f.exp));
    if (value == 0) break;
  }
  return value;
}

Residue evaluate(const Polynomial& f, std::span<const Residue> point, const PrimeField& field) {
  Residue value = 0;
  for (const Term& t : f.terms()) {
    value = field.add(value, field.mul(t.coeff, evaluate(t.mono, point, field)));
  }
  return value;
}

namespace {

// f + c * g by merging the two sorted term lists.
Polynomial add_scaled(const Polynomial& f, Residue c, const Polynomial& g, const Ring& ring) {
  const auto& a = f.terms();
  const auto& b = g.terms();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    auto cmp = i == a.size()   ? std::strong_ordering::less
               : j == b.size() ? std::strong_ordering::greater
                               : ring.order.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      Residue coeff = ring.field.mul(c, b[j].coeff);
      if (coeff != 0) out.push_back({coeff, b[j].mono});
      ++j;
    } else {
      Residue coeff = ring.field.add(a[i].coeff, ring.field.mul(c, b[j].coeff));
      if (coeff != 0) out.push_back({coeff, a[i].mono});
      ++i;
      ++j;
    }
  }
  return Polynomial::from_sorted_terms(std::move(out));
}

}  // namespace

Polynomial add(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  return add_scaled(f, 1, g, ring);
}

Polynomial sub(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  return add_scaled(f, ring.field.neg(1), g, ring);
}

Polynomial scale(const Polynomial& f, Residue c, const Ring& ring) {
  c = ring.field.reduce(c);
  if (c == 0) return {};
  std::vector<Term> out = f.terms();
  for (Term& t : out) t.coeff = ring.field.mul(t.coeff, c);
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial mul_term(const Polynomial& f, Residue c, const Monomial& m, const Ring& ring) {
  c = ring.field.reduce(c);
  if (c == 0) return {};
  std::vector<Term> out;
  out.reserve(f.size());
  for (const Term& t : f.terms()) out.push_back({ring.field.mul(t.coeff, c), t.mono * m});
  return Polynomial::from_sorted_terms(std::move(out));
}

Polynomial mul(const Polynomial& f, const Polynomial& g, const Ring& ring) {
  Polynomial out;
  for (const Term& t : f.terms()) out = add(out, mul_term(g, t.coeff, t.mono, ring), ring);
  return out;
}

Polynomial make_monic(const Polynomial& f, const Ring& ring) {
  if (f.is_zero() || is_monic(f)) return f;
  return scale(f, ring.field.inverse(f.terms().front().coeff), ring);
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const Ring& ring) {
  for (const Polynomial& g : divisors) {
    if (g.is_zero()) throw std::invalid_argument("normal form against a zero divisor");
  }
  std::vector<Term> remainder;
  Polynomial h = f;
  while (!h.is_zero()) {
    const Term& lt = h.terms().front();
    const Polynomial* divisor = nullptr;
    for (const Polynomial& g : divisors) {
      if (divides(g.terms().front().mono, lt.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lt);
      h = tail(h);
      continue;
    }
    const Term& lg = divisor->terms().front();
    Residue c = ring.field.div(lt.coeff, lg.coeff);
    h = sub(h, mul_term(*divisor, c, lt.mono / lg.mono, ring), ring);
  }
  return Polynomial::from_sorted_terms(std::move(remainder));
}

Polynomial eliminate_inessential(const Polynomial& f, std::span<const Polynomial> relations,
                                 const Ring& ring) {
  // heading variable -> tail of the monic relation, largest variable first
  auto by_priority = [&](std::size_t a, std::size_t b) {
    return ring.order.rank(a) < ring.order.rank(b);
  };
  std::map<std::size_t, Polynomial, decltype(by_priority)> tails(by_priority);
  for (const Polynomial& rel : relations) {
    if (rel.is_zero()) throw std::invalid_argument("zero relation");
    const Monomial& head = rel.terms().front().mono;
    if (head.factors().size() != 1 || head.degree() != 1) {
      throw std::invalid_argument("relation " + render(rel) +
                                  " is not headed by a single variable");
    }
    tails.emplace(head.factors().front().var, tail(make_monic(rel, ring)));
  }
  for (const auto& [var, g] : tails) {
    for (std::size_t v : support(g)) {
      if (tails.count(v)) {
        throw std::invalid_argument("relation tail mentions inessential variable x" +
                                    std::to_string(v + 1));
      }
    }
  }
  if (f.is_zero()) return f;
  for (const auto& factor : f.terms().front().mono.factors()) {
    if (tails.count(factor.var)) {
      throw std::invalid_argument("leading term of " + render(f) +
                                  " contains inessential variable x" +
                                  std::to_string(factor.var + 1));
    }
  }

  Polynomial current = f;
  for (const auto& [var, g] : tails) {
    Monomial x = Monomial::variable(ring.n_vars(), var);
    Polynomial minus_g = scale(g, ring.field.neg(1), ring);
    while (true) {
      std::vector<Term> keep;
      Polynomial replaced;
      for (const Term& t : current.terms()) {
        if (t.mono.exponent(var) == 0) {
          keep.push_back(t);
        } else {
          replaced = add(replaced, mul_term(minus_g, t.coeff, t.mono / x, ring), ring);
        }
      }
      if (keep.size() == current.size()) break;
      current = add(Polynomial::from_sorted_terms(std::move(keep)), replaced, ring);
    }
  }
  return current;
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const Term& t : f.terms()) {
    if (!out.empty()) out += " + ";
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else {
      if (t.coeff != 1) out += std::to_string(t.coeff) + '*';
      out += render(t.mono);
    }
  }
  return out;
}

}  // namespace essgb
