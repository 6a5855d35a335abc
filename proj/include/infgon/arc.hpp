#pragma once

#include <optional>
#include <tuple>
#include <string>
#include <string_view>
#include <variant>

#include "infgon/surface.hpp"

namespace infgon {

/// Unordered pair of distinct, non-adjacent points, stored with first < second.
class Arc {
 public:
  /// Throws DomainError unless p, q lie on s and form an arc.
  Arc(const Surface& s, const Point& p, const Point& q);

  const Surface& surface() const { return surface_; }
  const Point& first() const { return first_; }
  const Point& second() const { return second_; }
  bool has_endpoint(const Point& p) const { return p == first_ || p == second_; }
  /// The endpoint other than p; p must be an endpoint.
  const Point& other(const Point& p) const;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend bool operator<(const Arc& a, const Arc& b) {
    return std::tie(a.first_, a.second_) < std::tie(b.first_, b.second_);
  }

 private:
  Surface surface_;
  Point first_;
  Point second_;
};

bool is_arc(const Surface& s, const Point& p, const Point& q);
std::optional<Arc> make_arc(const Surface& s, const Point& p, const Point& q);

bool cross_transverse(const Arc& g, const Arc& d);
Arc shift_arc(const Arc& g, Index k);

struct Collapsed {
  friend bool operator==(const Collapsed&, const Collapsed&) = default;
};
using SqueezeResult = std::variant<Arc, Collapsed>;

Point squeeze_point(const Point& p);
/// Image on completed:n of an arc on uncompleted:2n.
SqueezeResult squeeze(const Arc& g);
Arc canonical_lift(const Arc& g);
/// Lift with accumulation endpoints sent to the given positions of their even intervals.
Arc lift_with(const Arc& g, Index first_pos, Index second_pos);

enum class ArcClass { kInD, kInPerpD, kNeither };
ArcClass classify(const Arc& g);
std::string to_string(ArcClass c);

Arc reversed(const Arc& g);

std::string to_string(const Arc& g);
Arc parse_arc(const Surface& s, std::string_view text);

}  // namespace infgon
