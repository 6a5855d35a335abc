#include "infgon/hom_ext.hpp"

#include <algorithm>
#include <array>

namespace infgon {

namespace {

enum class Parity { kAny, kOdd, kEven };

void require_uncompleted(const Arc& g, const Arc& d) {
  if (g.surface() != d.surface()) throw DomainError("arcs lie on different surfaces");
  if (g.surface().is_completed()) throw DomainError("expected an uncompleted surface");
}

void require_completed(const Arc& g, const Arc& d) {
  if (g.surface() != d.surface()) throw DomainError("arcs lie on different surfaces");
  if (!g.surface().is_completed()) throw DomainError("expected a completed surface");
}

bool parity_ok(Parity parity, int interval) {
  switch (parity) {
    case Parity::kAny:
      return true;
    case Parity::kOdd:
      return interval % 2 == 1;
    case Parity::kEven:
      return interval % 2 == 0;
  }
  return true;
}

/// A few points from each end of every run. Non-adjacency can only fail for
/// close pairs, so three per end are enough to decide whether some pair is an arc.
std::vector<Point> sample_points(const Span& span, Parity parity) {
  std::vector<Point> out;
  for (const SpanPiece& piece : span) {
    if (const auto* p = std::get_if<Point>(&piece)) {
      if (p->accumulation ? parity == Parity::kAny : parity_ok(parity, p->interval)) out.push_back(*p);
      continue;
    }
    const Run& run = std::get<Run>(piece);
    if (!parity_ok(parity, run.interval)) continue;
    std::vector<Index> positions;
    if (!run.lo && !run.hi) positions = {0, 1, 2};
    if (run.lo) positions.insert(positions.end(), {*run.lo, *run.lo + 1, *run.lo + 2});
    if (run.hi) positions.insert(positions.end(), {*run.hi, *run.hi - 1, *run.hi - 2});
    std::sort(positions.begin(), positions.end());
    positions.erase(std::unique(positions.begin(), positions.end()), positions.end());
    for (Index pos : positions) {
      if (run.contains(pos)) out.push_back(Point::regular(run.interval, pos));
    }
  }
  return out;
}

Parity parity_for(const ArcSelector& selector) {
  switch (selector.kind) {
    case ArcSelector::Kind::kInD:
      return Parity::kEven;
    case ArcSelector::Kind::kInPerpD:
      return Parity::kOdd;
    default:
      return Parity::kAny;
  }
}

Span closed_span(const Surface& s, const BoundaryInterval& i) {
  return boundary_span(s, i.from, i.to, true, true);
}

/// Hourglass survives the quotient by even-interval arcs.
bool avoids_d(const Surface& s, const Hourglass& h) {
  return !arc_across(s, h.i0, h.i1, ArcSelector::in_d()).has_value();
}

constexpr std::array<Index, 5> kLiftPositions{-6, -3, 0, 3, 6};

/// Calls visit on every lift of the arcs, with accumulation endpoints placed
/// at kLiftPositions. Stops early when visit returns true.
bool any_lift(const std::vector<Arc>& arcs, const std::function<bool(const std::vector<Arc>&)>& visit) {
  std::vector<int> slots;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    if (arcs[a].first().accumulation) slots.push_back(static_cast<int>(2 * a));
    if (arcs[a].second().accumulation) slots.push_back(static_cast<int>(2 * a + 1));
  }
  std::vector<std::size_t> choice(slots.size(), 0);
  std::vector<Index> positions(2 * arcs.size(), 0);
  while (true) {
    for (std::size_t k = 0; k < slots.size(); ++k) positions[slots[k]] = kLiftPositions[choice[k]];
    std::vector<Arc> lifted;
    lifted.reserve(arcs.size());
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      lifted.push_back(lift_with(arcs[a], positions[2 * a], positions[2 * a + 1]));
    }
    if (visit(lifted)) return true;
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == kLiftPositions.size()) choice[k++] = 0;
    if (k == choice.size()) return false;
  }
}

}  // namespace

std::string to_string(ExtCase c) {
  switch (c) {
    case ExtCase::kTransverseCross:
      return "TransverseCross";
    case ExtCase::kClockwiseAtAccumulation:
      return "ClockwiseAtAccumulation";
    case ExtCase::kDoubleAccumulationSelf:
      return "DoubleAccumulationSelf";
    case ExtCase::kNoExt:
      return "NoExt";
  }
  return "NoExt";
}

bool interval_contains(const Surface& s, const BoundaryInterval& i, const Point& p) {
  return span_contains(closed_span(s, i), p);
}

bool spans_hourglass(const Surface& s, const Hourglass& h, const Arc& a) {
  const bool forward = interval_contains(s, h.i0, a.first()) && interval_contains(s, h.i1, a.second());
  const bool backward = interval_contains(s, h.i1, a.first()) && interval_contains(s, h.i0, a.second());
  return forward || backward;
}

bool ArcSelector::accepts(const Arc& a) const {
  switch (kind) {
    case Kind::kAll:
      return true;
    case Kind::kInD:
      return classify(a) == ArcClass::kInD;
    case Kind::kInPerpD:
      return classify(a) == ArcClass::kInPerpD;
    case Kind::kListed:
      return std::find(listed.begin(), listed.end(), a) != listed.end();
  }
  return false;
}

std::optional<Arc> arc_across(const Surface& s, const BoundaryInterval& i0,
                              const BoundaryInterval& i1, const ArcSelector& selector,
                              const std::function<bool(const Arc&)>& extra) {
  const Hourglass h{i0, i1};
  if (selector.kind == ArcSelector::Kind::kListed) {
    for (const Arc& a : selector.listed) {
      if (a.surface() == s && spans_hourglass(s, h, a) && (!extra || extra(a))) return a;
    }
    return std::nullopt;
  }
  const Parity parity = parity_for(selector);
  const std::vector<Point> left = sample_points(closed_span(s, i0), parity);
  const std::vector<Point> right = sample_points(closed_span(s, i1), parity);
  for (const Point& p : left) {
    for (const Point& q : right) {
      if (!is_arc(s, p, q)) continue;
      const Arc a(s, p, q);
      if (selector.accepts(a) && (!extra || extra(a))) return a;
    }
  }
  return std::nullopt;
}

HomDim hom_c(const Arc& g, const Arc& d) {
  require_uncompleted(g, d);
  return dim_of(cross_transverse(g, shift_arc(d, -1)));
}

Hourglass hourglass(const Arc& g, const Arc& d) {
  require_uncompleted(g, d);
  const Surface& s = g.surface();
  const std::array<std::array<Point, 2>, 2> g_labels{{{g.first(), g.second()}, {g.second(), g.first()}}};
  const std::array<std::array<Point, 2>, 2> d_labels{{{d.first(), d.second()}, {d.second(), d.first()}}};
  for (const auto& [x0, x1] : g_labels) {
    for (const auto& [y0, y1] : d_labels) {
      if (strictly_ordered(s, x0, {step(y1, -1), x1, step(y0, -1)})) {
        return {{y0, x0}, {y1, x1}};
      }
    }
  }
  throw DomainError("no nonzero morphism " + to_string(g) + " -> " + to_string(d));
}

bool factors_over(const Arc& g, const Arc& d, const ArcSelector& selector) {
  const Hourglass h = hourglass(g, d);
  return arc_across(g.surface(), h.i0, h.i1, selector).has_value();
}

ExtCase ext_case(const Arc& g, const Arc& d) {
  require_completed(g, d);
  if (cross_transverse(g, d)) return ExtCase::kTransverseCross;
  if (g == d) {
    return g.first().accumulation && g.second().accumulation ? ExtCase::kDoubleAccumulationSelf
                                                             : ExtCase::kNoExt;
  }
  for (const Point& p : {g.first(), g.second()}) {
    if (!p.accumulation || !d.has_endpoint(p)) continue;
    const Point& a = g.other(p);
    const Point& b = d.other(p);
    if (strictly_ordered(g.surface(), p, {b, a})) return ExtCase::kClockwiseAtAccumulation;
  }
  return ExtCase::kNoExt;
}

HomDim hom_cbar(const Arc& g, const Arc& d) {
  return dim_of(ext_case(g, shift_arc(d, -1)) != ExtCase::kNoExt);
}

HomDim ext_perp_d(const Arc& g, const Arc& d) {
  require_completed(g, d);
  return dim_of(cross_transverse(g, d));
}

HomDim ext_perp_d_oracle(const Arc& g, const Arc& d, const LiftChoice& lifts) {
  require_completed(g, d);
  if (hom_cbar_by_lifts(g, shift_arc(d, 1)) == HomDim::kZero) return HomDim::kZero;
  const Arc g_hat = lift_with(g, lifts.g_first, lifts.g_second);
  const Arc sd_hat = shift_arc(lift_with(d, lifts.d_first, lifts.d_second), 1);
  if (hom_c(g_hat, sd_hat) == HomDim::kZero) return HomDim::kZero;
  const Surface& s = g_hat.surface();
  const Hourglass h = hourglass(g_hat, sd_hat);
  const auto composes = [&](const Arc& alpha) {
    return hom_c(g_hat, alpha) == HomDim::kOne && hom_c(alpha, sd_hat) == HomDim::kOne;
  };
  if (!arc_across(s, h.i0, h.i1, ArcSelector::in_perp_d(), composes)) return HomDim::kZero;
  return dim_of(avoids_d(s, h));
}

bool composite_nonzero(const Arc& g, const Arc& mid, const Arc& d) {
  if (g.surface() != mid.surface() || g.surface() != d.surface()) {
    throw DomainError("arcs lie on different surfaces");
  }
  const auto through = [](const Arc& a, const Arc& m, const Arc& b) {
    if (hom_c(a, b) == HomDim::kZero) return false;
    if (hom_c(a, m) == HomDim::kZero || hom_c(m, b) == HomDim::kZero) return false;
    return spans_hourglass(a.surface(), hourglass(a, b), m);
  };
  if (!g.surface().is_completed()) return through(g, mid, d);
  return any_lift({g, mid, d}, [&](const std::vector<Arc>& l) {
    return through(l[0], l[1], l[2]) && avoids_d(l[0].surface(), hourglass(l[0], l[2]));
  });
}

HomDim hom_cbar_by_lifts(const Arc& g, const Arc& d) {
  require_completed(g, d);
  return dim_of(any_lift({g, d}, [](const std::vector<Arc>& l) {
    return hom_c(l[0], l[1]) == HomDim::kOne && avoids_d(l[0].surface(), hourglass(l[0], l[1]));
  }));
}

ExchangeTriangles exchange_triangles(const Arc& g, const Arc& gp) {
  if (!cross_transverse(g, gp)) {
    throw DomainError(to_string(g) + " and " + to_string(gp) + " do not cross");
  }
  const Surface& s = g.surface();
  const Point& x = g.first();
  const Point& y = g.second();
  const bool first_inside = strictly_ordered(s, x, {gp.first(), y});
  const Point& u = first_inside ? gp.first() : gp.second();
  const Point& v = gp.other(u);
  return {make_arc(s, x, v), make_arc(s, u, y), make_arc(s, u, x), make_arc(s, y, v)};
}

}  // namespace infgon
