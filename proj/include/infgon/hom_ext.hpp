#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "infgon/arc.hpp"

namespace infgon {

/// Every Hom and extension space here is zero or one dimensional.
enum class HomDim { kZero = 0, kOne = 1 };
inline int as_int(HomDim d) { return static_cast<int>(d); }
inline HomDim dim_of(bool nonzero) { return nonzero ? HomDim::kOne : HomDim::kZero; }

enum class ExtCase {
  kTransverseCross,
  kClockwiseAtAccumulation,
  kDoubleAccumulationSelf,
  kNoExt,
};
std::string to_string(ExtCase c);

/// Closed anticlockwise boundary interval from `from` to `to`.
struct BoundaryInterval {
  Point from;
  Point to;
  friend bool operator==(const BoundaryInterval&, const BoundaryInterval&) = default;
};
bool interval_contains(const Surface& s, const BoundaryInterval& i, const Point& p);

struct Hourglass {
  BoundaryInterval i0;
  BoundaryInterval i1;
};
/// True iff a has one endpoint in each interval.
bool spans_hourglass(const Surface& s, const Hourglass& h, const Arc& a);

/// Arc classes that factorisation queries range over.
struct ArcSelector {
  enum class Kind { kAll, kInD, kInPerpD, kListed };
  Kind kind = Kind::kAll;
  std::vector<Arc> listed;

  static ArcSelector all() { return {Kind::kAll, {}}; }
  static ArcSelector in_d() { return {Kind::kInD, {}}; }
  static ArcSelector in_perp_d() { return {Kind::kInPerpD, {}}; }
  static ArcSelector of(std::vector<Arc> arcs) { return {Kind::kListed, std::move(arcs)}; }

  bool accepts(const Arc& a) const;
};

/// Some selected arc with one endpoint in each interval and satisfying `extra`, if any.
std::optional<Arc> arc_across(const Surface& s, const BoundaryInterval& i0,
                              const BoundaryInterval& i1, const ArcSelector& selector,
                              const std::function<bool(const Arc&)>& extra = {});

// Uncompleted surfaces.
HomDim hom_c(const Arc& g, const Arc& d);
/// Requires hom_c(g, d) = 1; throws DomainError otherwise.
Hourglass hourglass(const Arc& g, const Arc& d);
bool factors_over(const Arc& g, const Arc& d, const ArcSelector& selector);

// Completed surfaces.
ExtCase ext_case(const Arc& g, const Arc& d);
HomDim hom_cbar(const Arc& g, const Arc& d);
HomDim ext_perp_d(const Arc& g, const Arc& d);

/// Positions of the even-interval points standing in for accumulation endpoints.
struct LiftChoice {
  Index g_first = 0;
  Index g_second = 0;
  Index d_first = 0;
  Index d_second = 0;
};
/// Re-derives the extension predicate from factorisations through the lifted category.
HomDim ext_perp_d_oracle(const Arc& g, const Arc& d, const LiftChoice& lifts = {});

/// True iff some choice of lifts makes the composite g -> mid -> d nonzero
/// and not factoring through an even-interval arc. Uncompleted inputs use hourglass membership.
bool composite_nonzero(const Arc& g, const Arc& mid, const Arc& d);
/// hom_cbar recomputed by searching lifts; used to cross-check composite_nonzero.
HomDim hom_cbar_by_lifts(const Arc& g, const Arc& d);

/// Sides of the quadrilateral spanned by two crossing arcs; empty where the side is
/// a boundary segment. alpha sides sit in gp -> alpha1 + alpha2 -> g, beta sides in
/// g -> beta1 + beta2 -> gp.
struct ExchangeTriangles {
  std::optional<Arc> alpha1;
  std::optional<Arc> alpha2;
  std::optional<Arc> beta1;
  std::optional<Arc> beta2;
};
ExchangeTriangles exchange_triangles(const Arc& g, const Arc& gp);

}  // namespace infgon
