#include "essgb/field.hpp"

#include <algorithm>
#include <string>

#include "essgb/errors.hpp"

namespace essgb {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod64(result, base, m);
    base = mulmod64(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are sufficient for all n < 2^64.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw InputError("modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
}

Residue PrimeField::inverse(Residue a) const {
  if (a == 0) throw DivisionByZero();
  // Extended Euclid on (a, p); tracks only the coefficient of a.
  std::int64_t r0 = p_, r1 = a;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - q * s1;
    s0 = s1;
    s1 = tmp;
  }
  return reduce(s0);
}

Residue PrimeField::pow(Residue base, std::uint64_t exp) const {
  return static_cast<Residue>(powmod64(base, exp, p_));
}

FieldMatrix FieldMatrix::identity(std::size_t n) {
  FieldMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

FieldMatrix FieldMatrix::from_rows(const std::vector<FieldVector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FieldMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

FieldVector FieldMatrix::column(std::size_t c) const {
  FieldVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

EchelonBasis::EchelonBasis(const PrimeField& field, std::size_t length)
    : field_(field), length_(length) {}

void EchelonBasis::reduce(FieldVector& w, FieldVector& t) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Residue c = w[pivots_[k]];
    if (c == 0) continue;
    const FieldVector& row = rows_[k];
    for (std::size_t j = pivots_[k]; j < length_; ++j) {
      if (row[j] != 0) w[j] = field_.sub(w[j], field_.mul(c, row[j]));
    }
    const FieldVector& tk = transforms_[k];
    for (std::size_t j = 0; j < tk.size(); ++j) {
      if (tk[j] != 0) t[j] = field_.add(t[j], field_.mul(c, tk[j]));
    }
  }
}

std::optional<FieldVector> EchelonBasis::express(std::span<const Residue> v) const {
  if (v.size() != length_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " inserted into echelon basis of length " +
                            std::to_string(length_));
  }
  FieldVector w(v.begin(), v.end());
  FieldVector t(rows_.size(), 0);
  reduce(w, t);
  if (std::all_of(w.begin(), w.end(), [](Residue x) { return x == 0; })) return t;
  return std::nullopt;
}

EchelonBasis::InsertResult EchelonBasis::insert(std::span<const Residue> v) {
  if (v.size() != length_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " inserted into echelon basis of length " +
                            std::to_string(length_));
  }
  FieldVector w(v.begin(), v.end());
  FieldVector t(rows_.size(), 0);
  reduce(w, t);
  auto nz = std::find_if(w.begin(), w.end(), [](Residue x) { return x != 0; });
  if (nz == w.end()) return Dependent{std::move(t)};

  // w = v - sum t_j b_j, so w / w[pivot] has transform (e_new - t) / w[pivot].
  std::size_t pivot = static_cast<std::size_t>(nz - w.begin());
  Residue scale = field_.inverse(w[pivot]);
  for (Residue& x : w) x = field_.mul(x, scale);
  FieldVector transform(rows_.size() + 1, 0);
  for (std::size_t j = 0; j < t.size(); ++j) transform[j] = field_.mul(field_.neg(t[j]), scale);
  transform.back() = scale;
  for (FieldVector& tk : transforms_) tk.push_back(0);

  rows_.push_back(std::move(w));
  pivots_.push_back(pivot);
  transforms_.push_back(std::move(transform));
  return Independent{};
}

std::optional<FieldVector> solve_linear(const PrimeField& field, const FieldMatrix& a,
                                        std::span<const Residue> b) {
  if (b.size() != a.rows()) {
    throw DimensionMismatch("right-hand side has " + std::to_string(b.size()) +
                            " entries for a matrix with " + std::to_string(a.rows()) +
                            " rows");
  }
  EchelonBasis basis(field, a.rows());
  std::vector<std::size_t> accepted;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (std::holds_alternative<EchelonBasis::Independent>(basis.insert(a.column(c)))) {
      accepted.push_back(c);
    }
  }
  auto coeffs = basis.express(b);
  if (!coeffs) return std::nullopt;
  FieldVector solution(a.cols(), 0);
  for (std::size_t j = 0; j < accepted.size(); ++j) solution[accepted[j]] = (*coeffs)[j];
  return solution;
}

}  // namespace essgb
