#pragma once

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "infgon/surface.hpp"

namespace infgon {

/// Integer affine form c + a*i + b*j in two parameters.
struct Form {
  Index c = 0;
  Index a = 0;
  Index b = 0;

  Index at(Index i, Index j) const { return c + a * i + b * j; }
  bool constant() const { return a == 0 && b == 0; }
  friend Form operator-(const Form& x, const Form& y) { return {x.c - y.c, x.a - y.a, x.b - y.b}; }
  friend Form operator+(const Form& x, Index k) { return {x.c + k, x.a, x.b}; }
  friend bool operator==(const Form&, const Form&) = default;
};

/// Integer parameter interval; an empty optional is an open end.
struct ParamRange {
  std::optional<Index> lo;
  std::optional<Index> hi;

  bool contains(Index i) const { return (!lo || *lo <= i) && (!hi || i <= *hi); }
  bool empty() const { return lo && hi && *lo > *hi; }
  bool bounded() const { return lo && hi; }
  friend bool operator==(const ParamRange&, const ParamRange&) = default;
};

ParamRange intersect(const ParamRange& x, const ParamRange& y);

Index floor_div(Index num, Index den);
Index ceil_div(Index num, Index den);

/// Exact integer feasibility of a conjunction of constraints form >= 0.
/// Returns a solution (i, j) when one exists.
std::optional<std::pair<Index, Index>> solve_constraints(std::span<const Form> nonneg);

std::vector<Form> range_constraints(const ParamRange& r, bool second_param);

/// A boundary point whose position is affine in the parameters.
struct SymPoint {
  int interval = 1;
  bool accumulation = false;
  Form pos;

  static SymPoint fixed(const Point& p) { return {p.interval, p.accumulation, {p.accumulation ? 0 : p.pos, 0, 0}}; }
  Point at(Index i, Index j) const {
    return accumulation ? Point::limit(interval) : Point::regular(interval, pos.at(i, j));
  }
};

using ConcretePredicate = std::function<bool(std::span<const Point>)>;

/// Searches for (i, j) satisfying `base` where pred holds on the instantiated points.
/// pred may depend on cyclic order and coincidences only, or also on unit gaps
/// when gap_sensitive is set.
std::optional<std::pair<Index, Index>> find_witness(std::span<const SymPoint> points, std::vector<Form> base,
                                                    const ConcretePredicate& pred, bool gap_sensitive = false);

/// Maximal ranges of the first parameter inside `domain` on which pred holds.
/// Points must not depend on the second parameter.
std::vector<ParamRange> ranges_where(std::span<const SymPoint> points, const ParamRange& domain,
                                     const ConcretePredicate& pred);

}  // namespace infgon
