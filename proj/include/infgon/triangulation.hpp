#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "infgon/affine.hpp"
#include "infgon/arc.hpp"

namespace infgon {

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Regular(interval, base + stride * i) at parameter i.
struct Moving {
  int interval = 1;
  Index base = 0;
  Index stride = 1;
  friend bool operator==(const Moving&, const Moving&) = default;
};

using AffineEndpoint = std::variant<Point, Moving>;

struct Family {
  AffineEndpoint e0;
  AffineEndpoint e1;
  ParamRange domain;

  Point endpoint_at(int which, Index i) const;
  Arc at(const Surface& s, Index i) const;
  bool is_fan() const;
  friend bool operator==(const Family&, const Family&) = default;
};

using ArcGenerator = std::variant<Arc, Family>;

struct CertifiedMaximal {
  friend bool operator==(const CertifiedMaximal&, const CertifiedMaximal&) = default;
};
struct WindowChecked {
  Index bound = 0;
  friend bool operator==(const WindowChecked&, const WindowChecked&) = default;
};
struct Unverified {
  friend bool operator==(const Unverified&, const Unverified&) = default;
};
using Certificate = std::variant<CertifiedMaximal, WindowChecked, Unverified>;

class Triangulation {
 public:
  /// Throws DomainError when a family instantiates to a non-arc or leaves the surface.
  Triangulation(Surface surface, std::vector<ArcGenerator> generators, Certificate certificate);

  const Surface& surface() const { return surface_; }
  const std::vector<ArcGenerator>& generators() const { return generators_; }
  const Certificate& certificate() const { return certificate_; }
  bool verified() const { return !std::holds_alternative<Unverified>(certificate_); }

  friend bool operator==(const Triangulation&, const Triangulation&) = default;

 private:
  Surface surface_;
  std::vector<ArcGenerator> generators_;
  Certificate certificate_;
};

/// Where an arc occurs among the generators.
struct ArcLocation {
  std::size_t generator = 0;
  Index param = 0;
};
std::optional<ArcLocation> locate(const Triangulation& t, const Arc& a);
bool contains(const Triangulation& t, const Arc& a);

/// Finite marked sub-polygon: positions with |pos| <= bound plus accumulation points.
struct Window {
  Surface surface;
  Index bound = 0;

  std::vector<Point> points() const;
  std::vector<Arc> arcs() const;
  bool retains(const Point& p) const;
};

/// Instances of t with both endpoints in the window, sorted.
std::vector<Arc> arcs_in_window(const Triangulation& t, const Window& w);

struct ValidationReport {
  bool ok = true;
  std::string problem;
  std::optional<Arc> first;
  std::optional<Arc> second;
};
ValidationReport validate_non_crossing(const Triangulation& t);
/// Some instance of t crossing a, if any.
std::optional<Arc> crossing_instance(const Triangulation& t, const Arc& a);

Triangulation build_fountain(const Surface& s, const Point& base);

/// Throws DomainError when the incidence conditions fail or the index set is bounded.
Triangulation build_zigzag_leapfrog(const Surface& s, const Family& alpha, const Family& beta,
                                    const std::vector<Arc>& closing);

/// All maximal non-crossing sets of window arcs, each sorted.
std::vector<std::vector<Arc>> window_brute_force(const Window& w);
constexpr std::size_t kWindowPointLimit = 12;

struct LeapfrogWitness {
  std::size_t alpha = 0;
  std::size_t beta = 0;
  /// beta instance i + offset follows alpha instance i.
  Index offset = 0;
  ParamRange chain;
  Arc curve;
};
std::optional<LeapfrogWitness> detect_leapfrog(const Triangulation& t);

struct ConvergesToArc {
  Arc limit;
};
struct ConvergesToAccumulationPoint {
  Point point;
};
struct ConvergesToBoundarySegment {};
using LimitResult = std::variant<ConvergesToArc, ConvergesToAccumulationPoint, ConvergesToBoundarySegment>;

enum class ParamEnd { kUpper, kLower };
/// Limit of the family as the parameter runs to its open end. When both ends
/// are open, `end` picks one.
LimitResult limit_of_family(const Surface& s, const Family& f, std::optional<ParamEnd> end = std::nullopt);
/// Accumulation point a Moving endpoint approaches at the given end.
Point limit_point(const Surface& s, const Moving& m, ParamEnd end);

enum class Side { kLeft, kRight };
std::string to_string(Side side);

/// {anchor + stride * t} intersected with [lo, hi] inside one interval; stride > 0.
struct Progression {
  int interval = 1;
  Index anchor = 0;
  Index stride = 1;
  std::optional<Index> lo;
  std::optional<Index> hi;

  bool empty() const;
  std::optional<Index> first() const;
  std::optional<Index> last() const;
  friend bool operator==(const Progression&, const Progression&) = default;
};
using ScanPiece = std::variant<Point, Progression>;

struct NeighborScan {
  Point at_endpoint;
  Side side = Side::kLeft;
  std::vector<ScanPiece> points;
  std::optional<Point> extremum;

  bool empty() const { return points.empty(); }
};

/// Partners w of arcs {endpoint, w} in t on the given side of a. Throws
/// DomainError when a is not in t or endpoint is not on a.
NeighborScan neighbor_scan(const Triangulation& t, const Arc& a, const Point& endpoint, Side side);

Family reversed(const Surface& s, const Family& f);
Triangulation reversed(const Triangulation& t);

}  // namespace infgon
