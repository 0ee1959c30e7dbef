#include "essgb/variety.hpp"

#include <set>
#include <sstream>

#include "essgb/errors.hpp"
#include "essgb/random.hpp"

namespace essgb {

namespace {

void check_points(const PrimeField& field, std::size_t n_vars, const std::vector<Point>& points) {
  if (points.empty()) throw InputError("a variety needs at least one point");
  for (std::size_t t = 0; t < points.size(); ++t) {
    if (points[t].size() != n_vars) {
      throw InputError("point " + std::to_string(t + 1) + " has " +
                       std::to_string(points[t].size()) + " coordinates, expected " +
                       std::to_string(n_vars));
    }
    for (Residue c : points[t]) {
      if (c >= field.characteristic()) {
        throw InputError("coordinate " + std::to_string(c) + " of point " +
                         std::to_string(t + 1) + " is outside [0," +
                         std::to_string(field.characteristic()) + ")");
      }
    }
  }
}

}  // namespace

Variety::Variety(PrimeField field, std::size_t n_vars, std::vector<Point> points)
    : field_(field), n_vars_(n_vars), points_(std::move(points)) {
  check_points(field_, n_vars_, points_);
  std::set<Point> seen;
  for (std::size_t t = 0; t < points_.size(); ++t) {
    if (!seen.insert(points_[t]).second) {
      throw InputError("point " + std::to_string(t + 1) + " repeats an earlier point");
    }
  }
}

Variety Variety::deduplicated(PrimeField field, std::size_t n_vars, std::vector<Point> points,
                              std::size_t* removed) {
  check_points(field, n_vars, points);
  std::set<Point> seen;
  std::vector<Point> unique;
  for (Point& pt : points) {
    if (seen.insert(pt).second) unique.push_back(std::move(pt));
  }
  if (removed != nullptr) *removed = points.size() - unique.size();
  return Variety(field, n_vars, std::move(unique));
}

namespace {

struct LineReader {
  std::istringstream in;
  std::size_t line_no = 0;

  // Next non-blank line, or false at end of input.
  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("line " + std::to_string(line_no) + ": " + what);
  }
};

std::uint64_t parse_header(LineReader& reader, const std::string& key) {
  std::string line;
  if (!reader.next(line)) reader.fail("missing '" + key + "' header");
  std::istringstream fields(line);
  std::string name, extra;
  long long value = -1;
  if (!(fields >> name >> value) || name != key || (fields >> extra) || value < 0) {
    reader.fail("expected '" + key + " <nonnegative integer>', got '" + line + "'");
  }
  return static_cast<std::uint64_t>(value);
}

}  // namespace

ParsedVariety parse_variety(std::string_view text, const ParseOptions& options) {
  LineReader reader{std::istringstream(std::string(text))};
  std::uint64_t p = parse_header(reader, "p");
  if (p >= (1ull << 31) || !is_prime(p)) reader.fail(std::to_string(p) + " is not a prime below 2^31");
  PrimeField field(static_cast<std::uint32_t>(p));
  std::uint64_t n = parse_header(reader, "n");
  if (n == 0) reader.fail("variable count must be positive");
  std::uint64_t m = parse_header(reader, "m");
  if (m == 0) reader.fail("point count must be positive");

  std::vector<Point> points;
  std::string line;
  while (reader.next(line)) {
    std::istringstream fields(line);
    Point pt;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long c = -1;
      try {
        c = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) reader.fail("'" + token + "' is not an integer");
      if (c < 0 || static_cast<std::uint64_t>(c) >= p) {
        reader.fail("coordinate " + token + " outside [0," + std::to_string(p) + ")");
      }
      pt.push_back(static_cast<Residue>(c));
    }
    if (pt.size() != n) {
      reader.fail("row has " + std::to_string(pt.size()) + " coordinates, expected " +
                  std::to_string(n));
    }
    points.push_back(std::move(pt));
  }
  if (points.size() != m) {
    throw InputError("header declares " + std::to_string(m) + " points but " +
                     std::to_string(points.size()) + " rows follow");
  }

  ParsedVariety out{Variety::deduplicated(field, n, points), {}};
  std::size_t removed = points.size() - out.variety.size();
  if (removed != 0) {
    if (options.strict) {
      // Re-run the strict constructor for a diagnostic naming the row.
      Variety strict(field, n, std::move(points));
    }
    out.warnings.push_back("removed " + std::to_string(removed) + " duplicate point" +
                           (removed == 1 ? "" : "s") + "; m is now " +
                           std::to_string(out.variety.size()));
  }
  return out;
}

std::string render_variety(const Variety& v) {
  std::ostringstream out;
  out << "p " << v.field().characteristic() << "\nn " << v.n_vars() << "\nm " << v.size()
      << '\n';
  for (const Point& pt : v.points()) {
    for (std::size_t i = 0; i < pt.size(); ++i) out << (i == 0 ? "" : " ") << pt[i];
    out << '\n';
  }
  return out.str();
}

Variety random_variety(std::uint32_t p, std::size_t n, std::size_t m, std::uint64_t seed) {
  PrimeField field(p);
  if (n == 0) throw InputError("variable count must be positive");
  if (m == 0) throw InputError("point count must be positive");
  // p^n with saturation at m + 1, enough to decide m <= p^n.
  std::uint64_t capacity = 1;
  for (std::size_t i = 0; i < n && capacity <= m; ++i) capacity *= p;
  if (m > capacity) {
    throw InputError("cannot draw " + std::to_string(m) + " distinct points from " +
                     std::to_string(p) + "^" + std::to_string(n) + " = " +
                     std::to_string(capacity));
  }
  ResidueSampler sampler(seed);
  std::set<Point> seen;
  std::vector<Point> points;
  points.reserve(m);
  while (points.size() < m) {
    Point pt(n);
    for (Residue& c : pt) c = static_cast<Residue>(sampler.uniform(p));
    if (seen.insert(pt).second) points.push_back(std::move(pt));
  }
  return Variety(field, n, std::move(points));
}

}  // namespace essgb
