#include "infgon/surface.hpp"

#include <charconv>
#include <tuple>

namespace infgon {

namespace {

int slot_count(const Surface& s) { return s.is_completed() ? 2 * s.intervals() : s.intervals(); }

SpanPiece whole_slot(const Surface& s, int slot) {
  if (s.is_completed()) {
    const int k = slot / 2 + 1;
    if (slot % 2 == 1) return Point::limit(k);
    return Run{k, std::nullopt, std::nullopt};
  }
  return Run{slot + 1, std::nullopt, std::nullopt};
}

void push_run(Span& out, int interval, std::optional<Index> lo, std::optional<Index> hi) {
  if (lo && hi && *lo > *hi) return;
  out.emplace_back(Run{interval, lo, hi});
}

/// Offset of p from base along the circuit starting at base.
std::tuple<int, CircuitKey> offset_from(const Surface& s, const Point& base, const Point& p) {
  const CircuitKey b = circuit_key(s, base);
  const CircuitKey k = circuit_key(s, p);
  return {k >= b ? 0 : 1, k};
}

Index parse_index(std::string_view text, std::string_view whole) {
  Index value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(std::string(whole), "malformed integer");
  }
  return value;
}

}  // namespace

Surface Surface::uncompleted(int m) {
  if (m < 1) throw DomainError("uncompleted surface needs m >= 1");
  return Surface(SurfaceKind::kUncompleted, m);
}

Surface Surface::completed(int n) {
  if (n < 1) throw DomainError("completed surface needs n >= 1");
  return Surface(SurfaceKind::kCompleted, n);
}

bool lies_on(const Surface& s, const Point& p) {
  if (p.interval < 1 || p.interval > s.intervals()) return false;
  if (p.accumulation) return s.is_completed() && p.pos == 0;
  return true;
}

void require_on(const Surface& s, const Point& p) {
  if (!lies_on(s, p)) throw DomainError("point " + to_string(p) + " is not on " + to_string(s));
}

CircuitKey circuit_key(const Surface& s, const Point& p) {
  if (s.is_completed()) return {2 * (p.interval - 1) + (p.accumulation ? 1 : 0), p.pos};
  return {p.interval - 1, p.pos};
}

Lift lift_point(const Surface& s, const Point& base, const Point& p, Index turns) {
  require_on(s, base);
  require_on(s, p);
  return {base, turns, p};
}

std::strong_ordering compare_lifts(const Surface& s, const Lift& a, const Lift& b) {
  if (a.base != b.base) throw DomainError("lifts with different bases are incomparable");
  if (auto c = a.turns <=> b.turns; c != 0) return c;
  return offset_from(s, a.base, a.point) <=> offset_from(s, b.base, b.point);
}

bool cyclic_ordered(const Surface& s, const Point& base, std::span<const Point> chain) {
  require_on(s, base);
  // 0 = base itself, 1 = strictly inside the circuit, 2 = base+.
  std::tuple<int, int, CircuitKey> previous{0, 0, circuit_key(s, base)};
  bool only_base_so_far = true;
  for (const Point& y : chain) {
    require_on(s, y);
    std::tuple<int, int, CircuitKey> current;
    if (y == base) {
      current = only_base_so_far ? previous : std::tuple{2, 0, CircuitKey{}};
    } else {
      only_base_so_far = false;
      auto [wrap, key] = offset_from(s, base, y);
      current = {1, wrap, key};
    }
    if (current < previous) return false;
    previous = current;
  }
  return true;
}

bool cyclic_ordered(const Surface& s, const Point& base, std::initializer_list<Point> chain) {
  return cyclic_ordered(s, base, std::span<const Point>(chain.begin(), chain.size()));
}

bool strictly_ordered(const Surface& s, const Point& base, std::initializer_list<Point> chain) {
  std::vector<Point> all{base};
  all.insert(all.end(), chain.begin(), chain.end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) return false;
    }
  }
  return cyclic_ordered(s, base, chain);
}

Point step(const Point& p, int direction) { return step_by(p, direction); }

Point step_by(const Point& p, Index count) {
  if (p.accumulation) return p;
  return Point::regular(p.interval, p.pos + count);
}

bool adjacent(const Point& p, const Point& q) {
  return p != q && (step(p, 1) == q || step(q, 1) == p);
}

Point reversed(const Surface& s, const Point& p) {
  const int n = s.intervals();
  if (p.accumulation) return Point::limit(n - p.interval == 0 ? n : n - p.interval);
  return Point::regular(n + 1 - p.interval, -p.pos);
}

Span boundary_span(const Surface& s, const Point& from, const Point& to, bool include_from,
                   bool include_to) {
  require_on(s, from);
  require_on(s, to);
  Span out;
  const int slots = slot_count(s);
  const int sf = circuit_key(s, from).slot;
  const int st = circuit_key(s, to).slot;
  const Index from_shift = include_from ? 0 : 1;
  const Index to_shift = include_to ? 0 : 1;

  if (from == to && include_from && include_to) {
    out.emplace_back(from);
    return out;
  }
  const bool same_slot_forward =
      sf == st && from != to && from.is_regular() && from.pos < to.pos;
  if (same_slot_forward) {
    push_run(out, from.interval, from.pos + from_shift, to.pos - to_shift);
    return out;
  }
  // The walk leaves the starting slot.
  if (from.accumulation) {
    if (include_from) out.emplace_back(from);
  } else {
    push_run(out, from.interval, from.pos + from_shift, std::nullopt);
  }
  for (int k = 1; k < slots; ++k) {
    const int slot = (sf + k) % slots;
    if (slot == st) break;
    out.push_back(whole_slot(s, slot));
  }
  if (sf == st && from.accumulation) return out;
  if (to.accumulation) {
    if (include_to) out.emplace_back(to);
  } else {
    push_run(out, to.interval, std::nullopt, to.pos - to_shift);
  }
  return out;
}

bool span_contains(const Span& span, const Point& p) {
  for (const SpanPiece& piece : span) {
    if (const auto* run = std::get_if<Run>(&piece)) {
      if (p.is_regular() && p.interval == run->interval && run->contains(p.pos)) return true;
    } else if (std::get<Point>(piece) == p) {
      return true;
    }
  }
  return false;
}

std::string to_string(const Surface& s) {
  return (s.is_completed() ? "completed:" : "uncompleted:") + std::to_string(s.intervals());
}

std::string to_string(const Point& p) {
  if (p.accumulation) return "a" + std::to_string(p.interval);
  return std::to_string(p.interval) + ":" + std::to_string(p.pos);
}

Surface parse_surface(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError(std::string(text), "malformed surface");
  const std::string_view kind = text.substr(0, colon);
  const Index count = parse_index(text.substr(colon + 1), text);
  if (count < 1 || count > 1'000'000) throw ParseError(std::string(text), "surface size out of range");
  if (kind == "uncompleted") return Surface::uncompleted(static_cast<int>(count));
  if (kind == "completed") return Surface::completed(static_cast<int>(count));
  throw ParseError(std::string(text), "unknown surface kind");
}

std::size_t parse_point_prefix(std::string_view text, Point& out) {
  auto digits_end = [&](std::size_t i) {
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    return i;
  };
  if (!text.empty() && text.front() == 'a') {
    const std::size_t end = digits_end(1);
    if (end == 1) throw ParseError(std::string(text), "malformed point");
    const Index k = parse_index(text.substr(1, end - 1), text);
    if (k < 1 || k > 1'000'000) throw ParseError(std::string(text), "interval out of range");
    out = Point::limit(static_cast<int>(k));
    return end;
  }
  const std::size_t k_end = digits_end(0);
  if (k_end == 0 || k_end >= text.size() || text[k_end] != ':') {
    throw ParseError(std::string(text), "malformed point");
  }
  std::size_t pos_begin = k_end + 1;
  std::size_t pos_end = pos_begin;
  if (pos_end < text.size() && (text[pos_end] == '-' || text[pos_end] == '+')) ++pos_end;
  pos_end = digits_end(pos_end);
  const Index k = parse_index(text.substr(0, k_end), text);
  if (k < 1 || k > 1'000'000) throw ParseError(std::string(text), "interval out of range");
  const Index pos = parse_index(text.substr(pos_begin, pos_end - pos_begin), text);
  out = Point::regular(static_cast<int>(k), pos);
  return pos_end;
}

Point parse_point(std::string_view text) {
  Point p;
  if (parse_point_prefix(text, p) != text.size()) throw ParseError(std::string(text), "malformed point");
  return p;
}

}  // namespace infgon
