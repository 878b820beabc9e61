#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace curv {

using json = nlohmann::ordered_json;

// Vertices are dense indices 0..n-1 within a complex.
using VertexId = int;

// A simplex is a strictly increasing list of vertex ids.
using Simplex = std::vector<VertexId>;

// A cycle is a cyclic vertex sequence: consecutive entries (mod length) are
// adjacent in the ambient complex and all entries are distinct.
using Cycle = std::vector<VertexId>;

inline constexpr int kMaxDimension = 8;
inline constexpr std::size_t kMaxMaximalSimplices = 1'000'000;

class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Outcome of a check: pass, or fail with a machine-readable code and a
// witness pinning the failure to concrete vertices in ambient coordinates.
struct Verdict {
  bool pass = true;
  std::string code;
  std::string message;
  json witness;

  static Verdict ok() { return {}; }
  static Verdict ok_with(std::string c, std::string msg, json w = json()) {
    Verdict v;
    v.code = std::move(c);
    v.message = std::move(msg);
    v.witness = std::move(w);
    return v;
  }
  static Verdict fail(std::string c, std::string msg, json w = json()) {
    Verdict v;
    v.pass = false;
    v.code = std::move(c);
    v.message = std::move(msg);
    v.witness = std::move(w);
    return v;
  }
  explicit operator bool() const { return pass; }
};

json verdict_to_json(const Verdict& v);

// Exact rational arithmetic for curvature bookkeeping; den > 0 always.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d);

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const { return *this < o || *this == o; }
  std::string str() const;  // rendered as "p/q"
};

}  // namespace curv
