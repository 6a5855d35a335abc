#include "infgon/arc.hpp"

#include <tuple>

namespace infgon {

namespace {

void require_same_surface(const Arc& g, const Arc& d) {
  if (g.surface() != d.surface()) throw DomainError("arcs lie on different surfaces");
}

void require_even_uncompleted(const Surface& s) {
  if (s.is_completed() || s.intervals() % 2 != 0) {
    throw DomainError("expected an uncompleted surface with an even number of intervals, got " +
                      to_string(s));
  }
}

Point lift_point(const Point& p, Index acc_pos) {
  if (p.accumulation) return Point::regular(2 * p.interval, acc_pos);
  return Point::regular(2 * p.interval - 1, p.pos);
}

}  // namespace

bool is_arc(const Surface& s, const Point& p, const Point& q) {
  return lies_on(s, p) && lies_on(s, q) && p != q && !adjacent(p, q);
}

std::optional<Arc> make_arc(const Surface& s, const Point& p, const Point& q) {
  if (!is_arc(s, p, q)) return std::nullopt;
  return Arc(s, p, q);
}

Arc::Arc(const Surface& s, const Point& p, const Point& q)
    : surface_(s), first_(std::min(p, q)), second_(std::max(p, q)) {
  require_on(s, p);
  require_on(s, q);
  if (p == q) throw DomainError("arc endpoints coincide: " + to_string(p));
  if (adjacent(p, q)) throw DomainError("arc endpoints are adjacent: " + to_string(p) + ", " + to_string(q));
}

const Point& Arc::other(const Point& p) const {
  if (p == first_) return second_;
  if (p == second_) return first_;
  throw DomainError(to_string(p) + " is not an endpoint of " + to_string(*this));
}

bool cross_transverse(const Arc& g, const Arc& d) {
  require_same_surface(g, d);
  const Surface& s = g.surface();
  const Point& x = g.first();
  const Point& y = g.second();
  return strictly_ordered(s, x, {d.first(), y, d.second()}) ||
         strictly_ordered(s, x, {d.second(), y, d.first()});
}

Arc shift_arc(const Arc& g, Index k) {
  return Arc(g.surface(), step_by(g.first(), k), step_by(g.second(), k));
}

Point squeeze_point(const Point& p) {
  if (p.accumulation) throw DomainError("uncompleted surfaces have no accumulation points");
  if (p.interval % 2 == 1) return Point::regular((p.interval + 1) / 2, p.pos);
  return Point::limit(p.interval / 2);
}

SqueezeResult squeeze(const Arc& g) {
  require_even_uncompleted(g.surface());
  const Point a = squeeze_point(g.first());
  const Point b = squeeze_point(g.second());
  if (a == b) return Collapsed{};
  return Arc(Surface::completed(g.surface().intervals() / 2), a, b);
}

Arc canonical_lift(const Arc& g) { return lift_with(g, 0, 0); }

Arc lift_with(const Arc& g, Index first_pos, Index second_pos) {
  if (!g.surface().is_completed()) throw DomainError("lifting needs a completed surface");
  const Surface target = Surface::uncompleted(2 * g.surface().intervals());
  return Arc(target, lift_point(g.first(), first_pos), lift_point(g.second(), second_pos));
}

ArcClass classify(const Arc& g) {
  require_even_uncompleted(g.surface());
  const int a = g.first().interval;
  const int b = g.second().interval;
  if (a == b && a % 2 == 0) return ArcClass::kInD;
  if (a % 2 == 1 && b % 2 == 1) return ArcClass::kInPerpD;
  return ArcClass::kNeither;
}

std::string to_string(ArcClass c) {
  switch (c) {
    case ArcClass::kInD:
      return "InD";
    case ArcClass::kInPerpD:
      return "InPerpD";
    case ArcClass::kNeither:
      return "Neither";
  }
  return "Neither";
}

Arc reversed(const Arc& g) {
  const Surface& s = g.surface();
  return Arc(s, reversed(s, g.first()), reversed(s, g.second()));
}

std::string to_string(const Arc& g) { return to_string(g.first()) + "-" + to_string(g.second()); }

Arc parse_arc(const Surface& s, std::string_view text) {
  Point p;
  const std::size_t used = parse_point_prefix(text, p);
  if (used >= text.size() || text[used] != '-') throw ParseError(std::string(text), "malformed arc");
  const Point q = parse_point(text.substr(used + 1));
  if (!lies_on(s, p)) throw ParseError(to_string(p), "point is not on " + to_string(s));
  if (!lies_on(s, q)) throw ParseError(to_string(q), "point is not on " + to_string(s));
  if (!is_arc(s, p, q)) throw ParseError(std::string(text), "endpoints do not form an arc");
  return Arc(s, p, q);
}

}  // namespace infgon
