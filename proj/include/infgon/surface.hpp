#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace infgon {

using Index = std::int64_t;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::string token, const std::string& what)
      : std::invalid_argument(what + ": '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

enum class SurfaceKind { kUncompleted, kCompleted };

/// Disc boundary with m integer intervals, or n intervals plus n accumulation points.
class Surface {
 public:
  static Surface uncompleted(int m);
  static Surface completed(int n);

  SurfaceKind kind() const { return kind_; }
  int intervals() const { return count_; }
  bool is_completed() const { return kind_ == SurfaceKind::kCompleted; }

  friend bool operator==(const Surface&, const Surface&) = default;

 private:
  Surface(SurfaceKind kind, int count) : kind_(kind), count_(count) {}

  SurfaceKind kind_;
  int count_;
};

/// Regular(interval, pos) or Accumulation(interval). The defaulted ordering is
/// lexicographic on (interval, variant, pos), which is also the circuit order
/// starting at the bottom of interval 1.
struct Point {
  int interval = 1;
  bool accumulation = false;
  Index pos = 0;

  static Point regular(int interval, Index pos) { return {interval, false, pos}; }
  static Point limit(int interval) { return {interval, true, 0}; }

  bool is_regular() const { return !accumulation; }

  friend auto operator<=>(const Point&, const Point&) = default;
};

/// Throws DomainError if p does not lie on s.
void require_on(const Surface& s, const Point& p);
bool lies_on(const Surface& s, const Point& p);

/// Position of p on one anticlockwise circuit, comparable lexicographically.
struct CircuitKey {
  int slot = 0;
  Index pos = 0;
  friend auto operator<=>(const CircuitKey&, const CircuitKey&) = default;
};
CircuitKey circuit_key(const Surface& s, const Point& p);

/// A point on the universal cover, measured from a base point.
struct Lift {
  Point base;
  Index turns = 0;
  Point point;
};
Lift lift_point(const Surface& s, const Point& base, const Point& p, Index turns);
/// Total order on lifts sharing a base.
std::strong_ordering compare_lifts(const Surface& s, const Lift& a, const Lift& b);

/// Weak cyclic order: base <= chain[0] <= ... <= chain.back() <= base+ on one circuit.
bool cyclic_ordered(const Surface& s, const Point& base, std::span<const Point> chain);
bool cyclic_ordered(const Surface& s, const Point& base, std::initializer_list<Point> chain);
/// Strict version: cyclic_ordered plus pairwise distinctness of base and chain.
bool strictly_ordered(const Surface& s, const Point& base, std::initializer_list<Point> chain);

Point step(const Point& p, int direction);
Point step_by(const Point& p, Index count);
bool adjacent(const Point& p, const Point& q);

/// Mirror image under the orientation-reversing symmetry of the disc.
Point reversed(const Surface& s, const Point& p);

/// Regular positions lo..hi (unbounded when empty) inside one interval.
struct Run {
  int interval = 1;
  std::optional<Index> lo;
  std::optional<Index> hi;

  bool contains(Index pos) const { return (!lo || *lo <= pos) && (!hi || pos <= *hi); }
  friend bool operator==(const Run&, const Run&) = default;
};

/// A boundary span as pieces in anticlockwise walk order.
using SpanPiece = std::variant<Run, Point>;
using Span = std::vector<SpanPiece>;

/// Anticlockwise span from `from` to `to`. With from == to and both ends
/// included this is the single point; with both excluded it is the rest of the circle.
Span boundary_span(const Surface& s, const Point& from, const Point& to, bool include_from,
                   bool include_to);
bool span_contains(const Span& span, const Point& p);

std::string to_string(const Surface& s);
std::string to_string(const Point& p);
Surface parse_surface(std::string_view text);
Point parse_point(std::string_view text);
/// Parses a point prefix of text and returns the number of characters consumed.
std::size_t parse_point_prefix(std::string_view text, Point& out);

}  // namespace infgon
