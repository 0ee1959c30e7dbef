#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace essgb {

/// x^a over n variables, stored sparsely: only the variables with a positive
/// exponent are kept, sorted by variable index. Logically it is the length-n
/// exponent vector with every other entry zero.
class Monomial {
 public:
  struct Factor {
    std::uint32_t var;
    std::uint32_t exp;
    friend bool operator==(const Factor&, const Factor&) = default;
  };

  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n_vars = 0) : n_vars_(n_vars) {}

  static Monomial from_exponents(std::span<const std::uint32_t> exponents);
  static Monomial variable(std::size_t n_vars, std::size_t var, std::uint32_t exp = 1);

  std::size_t n_vars() const { return n_vars_; }
  std::uint32_t exponent(std::size_t var) const;
  std::uint64_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::vector<std::uint32_t> dense() const;

  Monomial times_variable(std::size_t var) const;
  Monomial operator*(const Monomial& other) const;
  /// this / other; caller guarantees other divides this.
  Monomial operator/(const Monomial& other) const;

  std::size_t hash() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::size_t n_vars_;
  std::uint64_t degree_ = 0;
  std::vector<Factor> factors_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// a_i <= b_i for every variable. Throws DimensionMismatch on length mismatch.
bool divides(const Monomial& a, const Monomial& b);

enum class OrderKind { lex, grevlex, matrix };

/// A term order on k[x1..xn].
///
/// priority lists the variables from largest to smallest. For matrix orders
/// the weight matrix has one column per variable *in priority order*: column
/// j weighs variable priority[j]. Monomials are compared by the
/// lexicographic order of their weight vectors.
class TermOrder {
 public:
  static TermOrder lex(std::size_t n_vars, std::vector<std::size_t> priority = {});
  static TermOrder grevlex(std::size_t n_vars, std::vector<std::size_t> priority = {});
  /// weights is row-major with n_vars columns. The matrix must have rank
  /// n_vars and the first nonzero entry of every column must be positive.
  static TermOrder matrix(std::size_t n_vars, std::vector<std::int64_t> weights,
                          std::vector<std::size_t> priority = {});

  /// `lex`, `grevlex`, or `matrix:<row-major comma-separated integers>`.
  /// varorder is an optional comma-separated list of 1-based variable
  /// indices, largest first. Throws InputError.
  static TermOrder parse(std::string_view spec, std::size_t n_vars,
                         std::string_view varorder = {});

  OrderKind kind() const { return kind_; }
  std::size_t n_vars() const { return n_vars_; }
  const std::vector<std::size_t>& priority() const { return priority_; }
  /// Position of var in priority(); 0 is the largest variable.
  std::size_t rank(std::size_t var) const { return rank_[var]; }
  std::size_t weight_rows() const { return weights_.size() / (n_vars_ == 0 ? 1 : n_vars_); }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// The same order expressed as a weight matrix (identity for lex, the
  /// standard degree/negated-reverse matrix for grevlex).
  TermOrder as_matrix_order() const;

 private:
  TermOrder(OrderKind kind, std::size_t n_vars, std::vector<std::size_t> priority,
            std::vector<std::int64_t> weights);

  std::strong_ordering compare_lex(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare_grevlex(const Monomial& a, const Monomial& b) const;
  std::strong_ordering compare_matrix(const Monomial& a, const Monomial& b) const;

  OrderKind kind_;
  std::size_t n_vars_;
  std::vector<std::size_t> priority_;
  std::vector<std::size_t> rank_;
  std::vector<std::int64_t> weights_;
};

/// Variable indices sorted ascending under the order: first entry is the
/// smallest variable.
std::vector<std::size_t> variable_rank(const TermOrder& order);

/// The order induced on the subring k[vars]. The result lives on |vars|
/// variables; subring variable j stands for vars[j] after sorting vars
/// ascending. Throws std::invalid_argument for an empty subset.
TermOrder induced_order(const TermOrder& order, std::span<const std::size_t> vars);

/// `x3`, `x1^2*x2`, or `1`. Variables are 1-based.
std::string render(const Monomial& m);

}  // namespace essgb
