#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "infgon/hom_ext.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

/// Neighbour points of an arc {u, v} with u = arc.first(). An empty entry is Undefined.
struct QuadFrame {
  Arc arc;
  std::optional<Point> u_left;
  std::optional<Point> u_right;
  std::optional<Point> v_left;
  std::optional<Point> v_right;

  bool defined() const { return u_left && u_right && v_left && v_right; }
};

/// Throws DomainError when a is not in t or t is unverified.
QuadFrame quad_frame(const Triangulation& t, const Arc& a);

struct ApproxExists {
  std::vector<Arc> summands;
};
/// A neighbour scan that is nonempty but has no extremum.
struct ApproxFails {
  NeighborScan witness;
};
using ApproxResult = std::variant<ApproxExists, ApproxFails>;

ApproxResult approximate(const Triangulation& t, const Arc& a, Side side);

enum class MutabilityReason { kMutable, kNoExtremum, kFrameMismatch };
std::string to_string(MutabilityReason r);

struct Mutability {
  bool mutable_arc = false;
  MutabilityReason reason = MutabilityReason::kMutable;
  QuadFrame frame;
};
Mutability check_mutability(const Triangulation& t, const Arc& a);
bool is_mutable(const Triangulation& t, const Arc& a);

class MutabilityError : public std::runtime_error {
 public:
  MutabilityError(Mutability why, std::optional<NeighborScan> scan);
  const Mutability& why() const { return why_; }
  const std::optional<NeighborScan>& scan() const { return scan_; }

 private:
  Mutability why_;
  std::optional<NeighborScan> scan_;
};

/// from -> middle summands -> to.
struct Conflation {
  Arc from;
  std::vector<Arc> middle;
  Arc to;
};

struct MutationResult {
  Arc new_arc;
  Triangulation new_triangulation;
  /// (new_arc, sides, arc) and (arc, sides, new_arc).
  std::vector<Conflation> conflations;
};

/// Throws MutabilityError unless a is mutable in t.
MutationResult flip(const Triangulation& t, const Arc& a);

/// t with a removed; families are split around the parameter of a.
Triangulation without(const Triangulation& t, const Arc& a);

struct NotFinitelyGenerated {
  std::size_t generator = 0;
  ParamRange range;
  std::string reason;
};
using ModuleGenerators = std::variant<std::vector<Arc>, NotFinitelyGenerated>;

/// Arcs of t whose maps into the shift of g generate all maps from t.
/// Throws DomainError unless t is certified maximal on a completed surface.
ModuleGenerators right_module_generators(const Triangulation& t, const Arc& g);

}  // namespace infgon
