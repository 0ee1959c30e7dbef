#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace essgb {

/// Canonical residue in [0, p).
using Residue = std::uint32_t;
using FieldVector = std::vector<Residue>;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The coefficient field F_p for a prime p < 2^31.
class PrimeField {
 public:
  /// Throws InputError unless p is a prime in [2, 2^31).
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }

  Residue reduce(std::int64_t a) const {
    std::int64_t r = a % static_cast<std::int64_t>(p_);
    return static_cast<Residue>(r < 0 ? r + p_ : r);
  }
  Residue add(Residue a, Residue b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Residue sub(Residue a, Residue b) const { return a >= b ? a - b : a + p_ - b; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const {
    return static_cast<Residue>(static_cast<std::uint64_t>(a) * b % p_);
  }
  /// Throws DivisionByZero for a == 0.
  Residue inverse(Residue a) const;
  Residue div(Residue a, Residue b) const { return mul(a, inverse(b)); }
  Residue pow(Residue base, std::uint64_t exp) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Dense row-major matrix over F_p.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static FieldMatrix identity(std::size_t n);
  static FieldMatrix from_rows(const std::vector<FieldVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Residue& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Residue at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldVector column(std::size_t c) const;
  std::span<const Residue> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  FieldVector data_;
};

/// Incrementally built row-echelon basis of a subspace of F_p^length.
///
/// Each stored row r_k has a pivot column, is zero at the pivots of all
/// earlier rows, and carries a transform T_k with r_k = sum_j T_k[j] * b_j
/// where b_j is the j-th vector accepted by insert(). That bookkeeping lets a
/// dependent vector be expressed directly in terms of the accepted inputs.
class EchelonBasis {
 public:
  struct Independent {};
  struct Dependent {
    FieldVector coeffs;  // v = sum_j coeffs[j] * (j-th accepted vector)
  };
  using InsertResult = std::variant<Independent, Dependent>;

  EchelonBasis(const PrimeField& field, std::size_t length);

  /// Adds v when it is independent of the accepted vectors; otherwise leaves
  /// the basis unchanged and reports the combination that reproduces v.
  InsertResult insert(std::span<const Residue> v);

  /// Coefficients over the accepted vectors reproducing v, if v is in the span.
  std::optional<FieldVector> express(std::span<const Residue> v) const;

  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return length_; }

 private:
  // Reduces w against every stored row, accumulating the transform of the
  // subtracted combination into t.
  void reduce(FieldVector& w, FieldVector& t) const;

  PrimeField field_;
  std::size_t length_;
  std::vector<FieldVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<FieldVector> transforms_;
};

/// Solves A c = b. Returns nullopt when inconsistent. Columns of A that are
/// dependent on earlier columns receive coefficient zero, so the answer is
/// the unique solution whenever the columns are independent.
std::optional<FieldVector> solve_linear(const PrimeField& field, const FieldMatrix& a,
                                        std::span<const Residue> b);

}  // namespace essgb
