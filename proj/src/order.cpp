#include "essgb/order.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "essgb/errors.hpp"
#include "essgb/field.hpp"

namespace essgb {

Monomial Monomial::from_exponents(std::span<const std::uint32_t> exponents) {
  Monomial m(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    m.factors_.push_back({static_cast<std::uint32_t>(i), exponents[i]});
    m.degree_ += exponents[i];
  }
  return m;
}

Monomial Monomial::variable(std::size_t n_vars, std::size_t var, std::uint32_t exp) {
  if (var >= n_vars) throw DimensionMismatch("variable index out of range");
  Monomial m(n_vars);
  if (exp != 0) {
    m.factors_.push_back({static_cast<std::uint32_t>(var), exp});
    m.degree_ = exp;
  }
  return m;
}

std::uint32_t Monomial::exponent(std::size_t var) const {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), var,
                             [](const Factor& f, std::size_t v) { return f.var < v; });
  return it != factors_.end() && it->var == var ? it->exp : 0;
}

std::vector<std::uint32_t> Monomial::dense() const {
  std::vector<std::uint32_t> out(n_vars_, 0);
  for (const Factor& f : factors_) out[f.var] = f.exp;
  return out;
}

Monomial Monomial::times_variable(std::size_t var) const {
  if (var >= n_vars_) throw DimensionMismatch("variable index out of range");
  Monomial out(*this);
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), var,
                             [](const Factor& f, std::size_t v) { return f.var < v; });
  if (it != out.factors_.end() && it->var == var) {
    if (it->exp == std::numeric_limits<std::uint32_t>::max()) {
      throw std::overflow_error("monomial exponent overflow");
    }
    ++it->exp;
  } else {
    out.factors_.insert(it, Factor{static_cast<std::uint32_t>(var), 1});
  }
  ++out.degree_;
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n_vars_ != other.n_vars_) throw DimensionMismatch("monomial product");
  Monomial out(n_vars_);
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() || b != other.factors_.end()) {
    if (b == other.factors_.end() || (a != factors_.end() && a->var < b->var)) {
      out.factors_.push_back(*a++);
    } else if (a == factors_.end() || b->var < a->var) {
      out.factors_.push_back(*b++);
    } else {
      std::uint64_t e = std::uint64_t{a->exp} + b->exp;
      if (e > std::numeric_limits<std::uint32_t>::max()) {
        throw std::overflow_error("monomial exponent overflow");
      }
      out.factors_.push_back({a->var, static_cast<std::uint32_t>(e)});
      ++a;
      ++b;
    }
  }
  out.degree_ = degree_ + other.degree_;
  return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
  if (n_vars_ != other.n_vars_) throw DimensionMismatch("monomial quotient");
  Monomial out(n_vars_);
  auto b = other.factors_.begin();
  for (const Factor& f : factors_) {
    std::uint32_t sub = 0;
    if (b != other.factors_.end() && b->var == f.var) sub = (b++)->exp;
    if (f.exp > sub) out.factors_.push_back({f.var, f.exp - sub});
  }
  out.degree_ = degree_ - other.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ull ^ n_vars_;
  for (const Factor& f : factors_) {
    h ^= (std::uint64_t{f.var} << 32 | f.exp) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.n_vars() != b.n_vars()) throw DimensionMismatch("divisibility test");
  if (a.degree() > b.degree()) return false;
  const auto& fb = b.factors();
  auto it = fb.begin();
  for (const Monomial::Factor& f : a.factors()) {
    while (it != fb.end() && it->var < f.var) ++it;
    if (it == fb.end() || it->var != f.var || it->exp < f.exp) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> checked_priority(std::size_t n_vars, std::vector<std::size_t> priority) {
  if (priority.empty()) {
    priority.resize(n_vars);
    std::iota(priority.begin(), priority.end(), std::size_t{0});
    return priority;
  }
  if (priority.size() != n_vars) {
    throw InputError("variable order lists " + std::to_string(priority.size()) +
                     " variables, expected " + std::to_string(n_vars));
  }
  std::vector<bool> seen(n_vars, false);
  for (std::size_t v : priority) {
    if (v >= n_vars || seen[v]) throw InputError("variable order is not a permutation");
    seen[v] = true;
  }
  return priority;
}

// Rank over Q is at least the rank modulo any prime; two large primes make a
// false rejection practically impossible.
bool has_full_column_rank(const std::vector<std::int64_t>& weights, std::size_t rows,
                          std::size_t cols) {
  for (std::uint32_t q : {2147483647u, 2147483629u}) {
    PrimeField field(q);
    EchelonBasis basis(field, rows);
    for (std::size_t c = 0; c < cols; ++c) {
      FieldVector column(rows);
      for (std::size_t r = 0; r < rows; ++r) column[r] = field.reduce(weights[r * cols + c]);
      basis.insert(column);
    }
    if (basis.rank() == cols) return true;
  }
  return false;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::size_t n_vars, std::vector<std::size_t> priority,
                     std::vector<std::int64_t> weights)
    : kind_(kind),
      n_vars_(n_vars),
      priority_(checked_priority(n_vars, std::move(priority))),
      rank_(n_vars),
      weights_(std::move(weights)) {
  for (std::size_t pos = 0; pos < n_vars_; ++pos) rank_[priority_[pos]] = pos;
  if (kind_ != OrderKind::matrix) return;
  if (n_vars_ == 0 || weights_.size() % n_vars_ != 0 || weights_.size() < n_vars_ * n_vars_) {
    throw InputError("weight matrix needs at least n rows of n = " + std::to_string(n_vars_) +
                     " entries");
  }
  std::size_t rows = weights_.size() / n_vars_;
  for (std::size_t c = 0; c < n_vars_; ++c) {
    std::int64_t first = 0;
    for (std::size_t r = 0; r < rows && first == 0; ++r) first = weights_[r * n_vars_ + c];
    if (first <= 0) {
      throw InputError("weight matrix column " + std::to_string(c + 1) +
                       " must start with a positive entry");
    }
  }
  if (!has_full_column_rank(weights_, rows, n_vars_)) {
    throw InputError("weight matrix is singular");
  }
}

TermOrder TermOrder::lex(std::size_t n_vars, std::vector<std::size_t> priority) {
  return TermOrder(OrderKind::lex, n_vars, std::move(priority), {});
}

TermOrder TermOrder::grevlex(std::size_t n_vars, std::vector<std::size_t> priority) {
  return TermOrder(OrderKind::grevlex, n_vars, std::move(priority), {});
}

TermOrder TermOrder::matrix(std::size_t n_vars, std::vector<std::int64_t> weights,
                            std::vector<std::size_t> priority) {
  return TermOrder(OrderKind::matrix, n_vars, std::move(priority), std::move(weights));
}

namespace {

template <typename Int>
std::vector<Int> parse_int_list(std::string_view text, std::string_view what) {
  std::vector<Int> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos
                                                   ? std::string_view::npos
                                                   : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    Int value{};
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size()) {
      throw InputError("malformed " + std::string(what) + " entry '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

TermOrder TermOrder::parse(std::string_view spec, std::size_t n_vars, std::string_view varorder) {
  std::vector<std::size_t> priority;
  for (std::size_t v : parse_int_list<std::size_t>(varorder, "varorder")) {
    if (v == 0 || v > n_vars) {
      throw InputError("varorder index " + std::to_string(v) + " outside 1.." +
                       std::to_string(n_vars));
    }
    priority.push_back(v - 1);
  }
  if (spec == "lex") return lex(n_vars, std::move(priority));
  if (spec == "grevlex") return grevlex(n_vars, std::move(priority));
  constexpr std::string_view kMatrix = "matrix:";
  if (spec.substr(0, kMatrix.size()) == kMatrix) {
    auto weights = parse_int_list<std::int64_t>(spec.substr(kMatrix.size()), "matrix");
    if (weights.size() != n_vars * n_vars) {
      throw InputError("matrix order needs " + std::to_string(n_vars * n_vars) +
                       " entries, got " + std::to_string(weights.size()));
    }
    return matrix(n_vars, std::move(weights), std::move(priority));
  }
  throw InputError("unknown term order '" + std::string(spec) + "'");
}

std::string TermOrder::name() const {
  switch (kind_) {
    case OrderKind::lex:
      return "lex";
    case OrderKind::grevlex:
      return "grevlex";
    case OrderKind::matrix:
      return "matrix";
  }
  return "?";
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.n_vars() != n_vars_ || b.n_vars() != n_vars_) {
    throw DimensionMismatch("monomial length differs from the order's variable count");
  }
  switch (kind_) {
    case OrderKind::lex:
      return compare_lex(a, b);
    case OrderKind::grevlex:
      return compare_grevlex(a, b);
    case OrderKind::matrix:
      return compare_matrix(a, b);
  }
  return std::strong_ordering::equal;
}

namespace {

// Walks the union of both supports and reports the differing variable chosen
// by `better(rank_a, rank_b)`, together with the two exponents there.
struct Difference {
  bool found = false;
  std::size_t rank = 0;
  std::uint32_t exp_a = 0;
  std::uint32_t exp_b = 0;
};

template <typename Better>
Difference find_difference(const Monomial& a, const Monomial& b,
                           const std::vector<std::size_t>& rank, Better better) {
  Difference d;
  auto consider = [&](std::size_t var, std::uint32_t ea, std::uint32_t eb) {
    if (ea == eb) return;
    std::size_t r = rank[var];
    if (!d.found || better(r, d.rank)) d = {true, r, ea, eb};
  };
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  auto ia = fa.begin();
  auto ib = fb.begin();
  while (ia != fa.end() || ib != fb.end()) {
    if (ib == fb.end() || (ia != fa.end() && ia->var < ib->var)) {
      consider(ia->var, ia->exp, 0);
      ++ia;
    } else if (ia == fa.end() || ib->var < ia->var) {
      consider(ib->var, 0, ib->exp);
      ++ib;
    } else {
      consider(ia->var, ia->exp, ib->exp);
      ++ia;
      ++ib;
    }
  }
  return d;
}

}  // namespace

std::strong_ordering TermOrder::compare_lex(const Monomial& a, const Monomial& b) const {
  Difference d = find_difference(a, b, rank_, [](std::size_t r, std::size_t best) {
    return r < best;
  });
  if (!d.found) return std::strong_ordering::equal;
  return d.exp_a <=> d.exp_b;
}

std::strong_ordering TermOrder::compare_grevlex(const Monomial& a, const Monomial& b) const {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  Difference d = find_difference(a, b, rank_, [](std::size_t r, std::size_t best) {
    return r > best;
  });
  if (!d.found) return std::strong_ordering::equal;
  return d.exp_b <=> d.exp_a;
}

std::strong_ordering TermOrder::compare_matrix(const Monomial& a, const Monomial& b) const {
  std::size_t rows = weight_rows();
  for (std::size_t r = 0; r < rows; ++r) {
    const std::int64_t* row = weights_.data() + r * n_vars_;
    std::int64_t wa = 0, wb = 0;
    for (const auto& f : a.factors()) wa += row[rank_[f.var]] * std::int64_t{f.exp};
    for (const auto& f : b.factors()) wb += row[rank_[f.var]] * std::int64_t{f.exp};
    if (wa != wb) return wa <=> wb;
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::as_matrix_order() const {
  if (kind_ == OrderKind::matrix) return *this;
  std::vector<std::int64_t> w(n_vars_ * n_vars_, 0);
  if (kind_ == OrderKind::lex) {
    for (std::size_t i = 0; i < n_vars_; ++i) w[i * n_vars_ + i] = 1;
  } else {
    for (std::size_t c = 0; c < n_vars_; ++c) w[c] = 1;
    for (std::size_t r = 1; r < n_vars_; ++r) w[r * n_vars_ + (n_vars_ - r)] = -1;
  }
  return matrix(n_vars_, std::move(w), priority_);
}

std::vector<std::size_t> variable_rank(const TermOrder& order) {
  std::vector<std::size_t> vars(order.n_vars());
  std::iota(vars.begin(), vars.end(), std::size_t{0});
  std::sort(vars.begin(), vars.end(), [&](std::size_t a, std::size_t b) {
    return order.less(Monomial::variable(order.n_vars(), a),
                      Monomial::variable(order.n_vars(), b));
  });
  return vars;
}

TermOrder induced_order(const TermOrder& order, std::span<const std::size_t> vars) {
  if (vars.empty()) throw std::invalid_argument("induced order needs a nonempty variable set");
  std::vector<std::size_t> sub(vars.begin(), vars.end());
  std::sort(sub.begin(), sub.end());
  sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
  if (sub.back() >= order.n_vars()) throw DimensionMismatch("induced order variable out of range");

  std::vector<std::size_t> priority(sub.size());
  std::iota(priority.begin(), priority.end(), std::size_t{0});
  std::sort(priority.begin(), priority.end(), [&](std::size_t a, std::size_t b) {
    return order.rank(sub[a]) < order.rank(sub[b]);
  });

  switch (order.kind()) {
    case OrderKind::lex:
      return TermOrder::lex(sub.size(), std::move(priority));
    case OrderKind::grevlex:
      return TermOrder::grevlex(sub.size(), std::move(priority));
    case OrderKind::matrix: {
      std::size_t n = order.n_vars();
      std::size_t rows = order.weight_rows();
      std::vector<std::int64_t> w(rows * sub.size());
      for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < sub.size(); ++c) {
          w[r * sub.size() + c] = order.weights()[r * n + order.rank(sub[priority[c]])];
        }
      }
      return TermOrder::matrix(sub.size(), std::move(w), std::move(priority));
    }
  }
  throw std::logic_error("unreachable");
}

std::string render(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (const auto& f : m.factors()) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(f.var + 1);
    if (f.exp != 1) out += '^' + std::to_string(f.exp);
  }
  return out;
}

}  // namespace essgb
