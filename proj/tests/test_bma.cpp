#include <doctest.h>

#include <numeric>
#include <unordered_set>

#include "essgb/bma.hpp"
#include "essgb/errors.hpp"
#include "essgb/essbm.hpp"
#include "essgb/random.hpp"
#include "essgb/variety.hpp"
#include "essgb/verify.hpp"
#include "oracle.hpp"

using namespace essgb;

namespace {

PointSet full_set(const PrimeField& field, std::size_t n, std::vector<Point> points) {
  std::vector<std::size_t> vars(n);
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  return {field, n, vars, std::move(points)};
}

std::vector<std::string> rendered(const std::vector<Polynomial>& g) {
  std::vector<std::string> out;
  for (const auto& f : g) out.push_back(render(f));
  return out;
}

std::vector<std::string> rendered(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(render(m));
  return out;
}

}  // namespace

TEST_CASE("single point gives the point ideal") {
  PrimeField f5(5);
  for (const TermOrder& order : {TermOrder::lex(3), TermOrder::grevlex(3),
                                 TermOrder::lex(3, {2, 0, 1})}) {
    BasisResult r = buchberger_moller(full_set(f5, 3, {{1, 2, 3}}), order);
    Ring ring{f5, order};
    CHECK(canonical_set(r.basis, ring) ==
          std::vector<std::string>{"x1 + 4", "x2 + 3", "x3 + 2"});
    CHECK(rendered(r.standard) == std::vector<std::string>{"1"});
  }
}

TEST_CASE("all of F_3 on a line") {
  PrimeField f3(3);
  TermOrder order = TermOrder::lex(1);
  Ring ring{f3, order};
  // oracle: expand x(x-1)(x-2) mod 3
  auto linear = [&](Residue root) {
    return Polynomial::from_terms({{1, Monomial::variable(1, 0)}, {f3.neg(root), Monomial(1)}},
                                  ring);
  };
  Polynomial product = mul(mul(linear(0), linear(1), ring), linear(2), ring);
  CHECK(render(product) == "x1^3 + 2*x1");
  for (Residue a = 0; a < 3; ++a) CHECK(evaluate(product, Point{a}, f3) == 0);

  BasisResult r = buchberger_moller(full_set(f3, 1, {{0}, {1}, {2}}), order);
  REQUIRE(r.basis.size() == 1);
  CHECK(r.basis.front() == product);
  CHECK(rendered(r.standard) == std::vector<std::string>{"1", "x1", "x1^2"});
}

TEST_CASE("three points in the plane, lex") {
  PrimeField f3(3);
  TermOrder order = TermOrder::lex(2);
  std::vector<Point> pts{{0, 0}, {1, 1}, {2, 1}};
  BasisResult r = buchberger_moller(full_set(f3, 2, pts), order);
  CHECK(rendered(r.basis) ==
        std::vector<std::string>{"x2^2 + 2*x2", "x1*x2 + 2*x1", "x1^2 + 2*x2"});
  CHECK(rendered(r.standard) == std::vector<std::string>{"1", "x2", "x1"});

  // independent confirmation: every element vanishes, and the enumeration
  // oracle finds the same standard monomials
  for (const Polynomial& g : r.basis) {
    for (const Point& pt : pts) CHECK(evaluate(g, pt, f3) == 0);
  }
  BasisResult ref = testing::enumerate_vanishing_basis(f3, 2, pts, order);
  CHECK(rendered(ref.standard) == rendered(r.standard));
  CHECK(rendered(ref.basis) == rendered(r.basis));
}

TEST_CASE("point set errors") {
  PrimeField f3(3);
  CHECK_THROWS_AS(buchberger_moller(full_set(f3, 2, {}), TermOrder::lex(2)), InputError);
  CHECK_THROWS_AS(buchberger_moller(full_set(f3, 2, {{1, 1}, {1, 1}}), TermOrder::lex(2)),
                  InputError);
  CHECK_THROWS_AS(buchberger_moller(full_set(f3, 2, {{1, 1}}), TermOrder::lex(3)),
                  DimensionMismatch);
}

TEST_CASE("agrees with the enumeration oracle on random point sets") {
  ResidueSampler rng(101);
  for (int trial = 0; trial < 150; ++trial) {
    std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5}[rng.uniform(3)];
    std::size_t n = 1 + rng.uniform(p == 5 ? 3 : 4);
    std::uint64_t capacity = 1;
    for (std::size_t i = 0; i < n; ++i) capacity *= p;
    std::size_t m = 1 + rng.uniform(std::min<std::uint64_t>(capacity, 10));
    Variety v = random_variety(p, n, m, 5000 + trial);
    TermOrder order = trial % 2 ? TermOrder::lex(n) : TermOrder::grevlex(n);
    BasisResult got = buchberger_moller(full_set(v.field(), n, v.points()), order);
    BasisResult want = testing::enumerate_vanishing_basis(v.field(), n, v.points(), order);
    CHECK(rendered(got.standard) == rendered(want.standard));
    CHECK(rendered(got.basis) == rendered(want.basis));
  }
}

TEST_CASE("structural invariants on random point sets") {
  ResidueSampler rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    std::uint32_t p = std::vector<std::uint32_t>{3, 7, 17}[rng.uniform(3)];
    std::size_t n = 1 + rng.uniform(8);
    std::size_t m = 1 + rng.uniform(12);
    std::uint64_t capacity = 1;
    for (std::size_t i = 0; i < n && capacity < m; ++i) capacity *= p;
    m = std::min<std::size_t>(m, capacity);
    Variety v = random_variety(p, n, m, 7000 + trial);
    TermOrder order = trial % 2 ? TermOrder::lex(n) : TermOrder::grevlex(n);
    BasisResult r = buchberger_moller(full_set(v.field(), n, v.points()), order);

    CHECK(r.standard.size() == m);
    for (std::size_t i = 1; i < r.standard.size(); ++i) {
      CHECK(order.less(r.standard[i - 1], r.standard[i]));
    }
    std::vector<std::size_t> ev;
    for (const auto& s : r.standard) {
      for (const auto& f : s.factors()) ev.push_back(f.var);
    }
    std::sort(ev.begin(), ev.end());
    ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
    CHECK(check_sm(r.standard, v, ev));
    CHECK(check_vanishing(r.basis, v));
    CHECK(check_reduced(r.basis, order));
    for (std::size_t i = 1; i < r.basis.size(); ++i) {
      CHECK(order.less(r.basis[i - 1].terms().front().mono, r.basis[i].terms().front().mono));
    }
    for (const Polynomial& g : r.basis) {
      CHECK(is_monic(g));
      for (auto t = g.terms().begin() + 1; t != g.terms().end(); ++t) {
        CHECK(std::find(r.standard.begin(), r.standard.end(), t->mono) != r.standard.end());
      }
    }

    // basis size is bounded by the border of the standard monomials
    std::unordered_set<Monomial, MonomialHash> sm(r.standard.begin(), r.standard.end());
    std::unordered_set<Monomial, MonomialHash> border;
    for (const auto& s : r.standard) {
      for (std::size_t var = 0; var < n; ++var) {
        Monomial t = s.times_variable(var);
        if (!sm.count(t)) border.insert(t);
      }
    }
    CHECK(r.basis.size() <= border.size());
  }
}

TEST_CASE("works on a variable subset of a larger ring") {
  PrimeField f3(3);
  TermOrder order = TermOrder::lex(4);
  PointSet ps{f3, 4, {1, 3}, {{0, 0}, {1, 2}}};
  BasisResult r = buchberger_moller(ps, order);
  CHECK(rendered(r.standard) == std::vector<std::string>{"1", "x4"});
  CHECK(rendered(r.basis) == std::vector<std::string>{"x4^2 + x4", "x2 + x4"});
}
