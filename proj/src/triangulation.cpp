#include "infgon/triangulation.hpp"

#include <algorithm>
#include <array>
#include <bitset>
#include <set>

namespace infgon {

namespace {

SymPoint sym(const AffineEndpoint& e, bool second_param, Index shift = 0) {
  if (const auto* p = std::get_if<Point>(&e)) return SymPoint::fixed(*p);
  const Moving& m = std::get<Moving>(e);
  const Index base = m.base + m.stride * shift;
  return {m.interval, false, second_param ? Form{base, 0, m.stride} : Form{base, m.stride, 0}};
}

/// Symbolic endpoints of a generator; singles are constant.
std::array<SymPoint, 2> sym_arc(const ArcGenerator& g, bool second_param, Index shift = 0) {
  if (const auto* a = std::get_if<Arc>(&g)) return {SymPoint::fixed(a->first()), SymPoint::fixed(a->second())};
  const Family& f = std::get<Family>(g);
  return {sym(f.e0, second_param, shift), sym(f.e1, second_param, shift)};
}

ParamRange domain_of(const ArcGenerator& g) {
  if (const auto* f = std::get_if<Family>(&g)) return f->domain;
  return {0, 0};
}

ParamRange shifted(const ParamRange& r, Index by) {
  ParamRange out = r;
  if (out.lo) *out.lo += by;
  if (out.hi) *out.hi += by;
  return out;
}

bool points_cross(const Surface& s, const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  return strictly_ordered(s, a0, {b0, a1, b1}) || strictly_ordered(s, a0, {b1, a1, b0});
}

bool same_pair(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  return (a0 == b0 && a1 == b1) || (a0 == b1 && a1 == b0);
}

bool share_endpoint(const Point& a0, const Point& a1, const Point& b0, const Point& b1) {
  return a0 == b0 || a0 == b1 || a1 == b0 || a1 == b1;
}

Arc instance(const Surface& s, const ArcGenerator& g, Index i) {
  if (const auto* a = std::get_if<Arc>(&g)) return *a;
  return std::get<Family>(g).at(s, i);
}

/// Parameter range on which a Moving endpoint stays within |pos| <= bound.
ParamRange window_params(const Moving& m, Index bound) {
  Index lo = ceil_div(-bound - m.base, m.stride);
  Index hi = floor_div(bound - m.base, m.stride);
  if (m.stride < 0) {
    lo = ceil_div(bound - m.base, m.stride);
    hi = floor_div(-bound - m.base, m.stride);
  }
  return {lo, hi};
}

std::optional<Arc> first_crossing(const Surface& s, const ArcGenerator& g, const Arc& a) {
  const auto e = sym_arc(g, false);
  const std::array<SymPoint, 4> pts{e[0], e[1], SymPoint::fixed(a.first()), SymPoint::fixed(a.second())};
  const auto found = find_witness(pts, range_constraints(domain_of(g), false), [&](std::span<const Point> p) {
    return points_cross(s, p[0], p[1], p[2], p[3]);
  });
  if (!found) return std::nullopt;
  return instance(s, g, found->first);
}

bool window_maximal(const Triangulation& t, const Window& w) {
  for (const Arc& a : w.arcs()) {
    if (!contains(t, a) && !crossing_instance(t, a)) return false;
  }
  return true;
}

/// Partners of `u` inside `span` contributed by one generator, grouped by span piece.
void collect_partners(const ArcGenerator& g, const Arc& excluded, const Point& u,
                      const Span& span, std::vector<std::vector<ScanPiece>>& by_piece) {
  const auto add_point = [&](const Point& w) {
    if (w == u || same_pair(u, w, excluded.first(), excluded.second())) return;
    for (std::size_t k = 0; k < span.size(); ++k) {
      if (span_contains(Span{span[k]}, w)) {
        by_piece[k].emplace_back(w);
        return;
      }
    }
  };
  if (const auto* a = std::get_if<Arc>(&g)) {
    if (a->has_endpoint(u)) add_point(a->other(u));
    return;
  }
  const Family& f = std::get<Family>(g);
  for (int which = 0; which < 2; ++which) {
    const AffineEndpoint& here = which == 0 ? f.e0 : f.e1;
    const AffineEndpoint& there = which == 0 ? f.e1 : f.e0;
    if (const auto* fixed = std::get_if<Point>(&here)) {
      if (*fixed != u) continue;
      const Moving& m = std::get<Moving>(there);
      Progression prog{m.interval, m.base, m.stride < 0 ? -m.stride : m.stride, std::nullopt, std::nullopt};
      const std::optional<Index>& low_param = m.stride > 0 ? f.domain.lo : f.domain.hi;
      const std::optional<Index>& high_param = m.stride > 0 ? f.domain.hi : f.domain.lo;
      if (low_param) prog.lo = m.base + m.stride * *low_param;
      if (high_param) prog.hi = m.base + m.stride * *high_param;
      for (std::size_t k = 0; k < span.size(); ++k) {
        const auto* run = std::get_if<Run>(&span[k]);
        if (!run || run->interval != m.interval) continue;
        Progression clipped = prog;
        if (run->lo) clipped.lo = clipped.lo ? std::max(*clipped.lo, *run->lo) : *run->lo;
        if (run->hi) clipped.hi = clipped.hi ? std::min(*clipped.hi, *run->hi) : *run->hi;
        if (clipped.empty()) continue;
        if (clipped.first() && clipped.first() == clipped.last()) {
          add_point(Point::regular(m.interval, *clipped.first()));
        } else {
          by_piece[k].emplace_back(clipped);
        }
      }
      continue;
    }
    const Moving& m = std::get<Moving>(here);
    if (u.accumulation || u.interval != m.interval || (u.pos - m.base) % m.stride != 0) continue;
    const Index i = (u.pos - m.base) / m.stride;
    if (!f.domain.contains(i)) continue;
    add_point(f.endpoint_at(1 - which, i));
  }
}

NeighborScan right_scan(const Triangulation& t, const Arc& a, const Point& u) {
  const Surface& s = t.surface();
  const Point& v = a.other(u);
  const Span span = boundary_span(s, v, u, false, false);
  std::vector<std::vector<ScanPiece>> by_piece(span.size());
  for (const ArcGenerator& g : t.generators()) collect_partners(g, a, u, span, by_piece);

  NeighborScan scan{u, Side::kRight, {}, std::nullopt};
  bool decided = false;
  for (std::size_t k = 0; k < span.size(); ++k) {
    auto& pieces = by_piece[k];
    if (pieces.empty()) continue;
    // Deduplicate single points; order by leading position.
    std::set<Point> singles;
    std::vector<Progression> progs;
    for (const ScanPiece& p : pieces) {
      if (const auto* pt = std::get_if<Point>(&p)) {
        singles.insert(*pt);
      } else {
        progs.push_back(std::get<Progression>(p));
      }
    }
    std::sort(progs.begin(), progs.end(), [](const Progression& x, const Progression& y) {
      return std::tie(x.lo, x.hi, x.anchor, x.stride) < std::tie(y.lo, y.hi, y.anchor, y.stride);
    });
    for (const Point& p : singles) scan.points.emplace_back(p);
    for (const Progression& p : progs) scan.points.emplace_back(p);
    if (decided) continue;
    decided = true;
    if (const auto* acc = std::get_if<Point>(&span[k])) {
      scan.extremum = *acc;
      continue;
    }
    std::optional<Index> best;
    bool unbounded = false;
    for (const Point& p : singles) best = best ? std::min(*best, p.pos) : p.pos;
    for (const Progression& p : progs) {
      const auto first = p.first();
      if (!first) {
        unbounded = true;
      } else {
        best = best ? std::min(*best, *first) : *first;
      }
    }
    if (!unbounded && best) scan.extremum = Point::regular(std::get<Run>(span[k]).interval, *best);
  }
  return scan;
}

ScanPiece reversed_piece(const Surface& s, const ScanPiece& piece) {
  if (const auto* p = std::get_if<Point>(&piece)) return reversed(s, *p);
  const Progression& p = std::get<Progression>(piece);
  Progression out{s.intervals() + 1 - p.interval, -p.anchor, p.stride, std::nullopt, std::nullopt};
  if (p.hi) out.lo = -*p.hi;
  if (p.lo) out.hi = -*p.lo;
  return out;
}

}  // namespace

Point Family::endpoint_at(int which, Index i) const {
  const AffineEndpoint& e = which == 0 ? e0 : e1;
  if (const auto* p = std::get_if<Point>(&e)) return *p;
  const Moving& m = std::get<Moving>(e);
  return Point::regular(m.interval, m.base + m.stride * i);
}

Arc Family::at(const Surface& s, Index i) const {
  if (!domain.contains(i)) throw DomainError("parameter outside the family domain");
  return Arc(s, endpoint_at(0, i), endpoint_at(1, i));
}

bool Family::is_fan() const {
  return std::holds_alternative<Point>(e0) || std::holds_alternative<Point>(e1);
}

Triangulation::Triangulation(Surface surface, std::vector<ArcGenerator> generators, Certificate certificate)
    : surface_(surface), generators_(std::move(generators)), certificate_(certificate) {
  for (const ArcGenerator& g : generators_) {
    if (const auto* a = std::get_if<Arc>(&g)) {
      if (a->surface() != surface_) throw DomainError("arc " + to_string(*a) + " is on another surface");
      continue;
    }
    const Family& f = std::get<Family>(g);
    if (f.domain.empty()) throw DomainError("family with empty domain");
    int fixed = 0;
    for (const AffineEndpoint* e : {&f.e0, &f.e1}) {
      if (const auto* p = std::get_if<Point>(e)) {
        require_on(surface_, *p);
        ++fixed;
      } else {
        const Moving& m = std::get<Moving>(*e);
        if (m.stride == 0) throw DomainError("moving endpoint with zero stride");
        require_on(surface_, Point::regular(m.interval, 0));
      }
    }
    if (fixed == 2) throw DomainError("family with two fixed endpoints; use a single arc");
    const auto e = sym_arc(g, false);
    const std::array<SymPoint, 2> pts{e[0], e[1]};
    const auto bad = ranges_where(pts, f.domain, [&](std::span<const Point> p) {
      return !is_arc(surface_, p[0], p[1]);
    });
    if (!bad.empty()) throw DomainError("family instance is not an arc");
  }
}

std::optional<ArcLocation> locate(const Triangulation& t, const Arc& a) {
  if (a.surface() != t.surface()) return std::nullopt;
  for (std::size_t k = 0; k < t.generators().size(); ++k) {
    const ArcGenerator& g = t.generators()[k];
    if (const auto* single = std::get_if<Arc>(&g)) {
      if (*single == a) return ArcLocation{k, 0};
      continue;
    }
    const Family& f = std::get<Family>(g);
    const auto e = sym_arc(g, false);
    const std::array<SymPoint, 4> pts{e[0], e[1], SymPoint::fixed(a.first()), SymPoint::fixed(a.second())};
    const auto hits = ranges_where(pts, f.domain, [](std::span<const Point> p) {
      return same_pair(p[0], p[1], p[2], p[3]);
    });
    if (!hits.empty()) return ArcLocation{k, hits.front().lo ? *hits.front().lo : *hits.front().hi};
  }
  return std::nullopt;
}

bool contains(const Triangulation& t, const Arc& a) { return locate(t, a).has_value(); }

bool Window::retains(const Point& p) const {
  return lies_on(surface, p) && (p.accumulation || (p.pos >= -bound && p.pos <= bound));
}

std::vector<Point> Window::points() const {
  std::vector<Point> out;
  for (int k = 1; k <= surface.intervals(); ++k) {
    for (Index i = -bound; i <= bound; ++i) out.push_back(Point::regular(k, i));
    if (surface.is_completed()) out.push_back(Point::limit(k));
  }
  return out;
}

std::vector<Arc> Window::arcs() const {
  const std::vector<Point> pts = points();
  std::vector<Arc> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      if (is_arc(surface, pts[i], pts[j])) out.emplace_back(surface, pts[i], pts[j]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Arc> arcs_in_window(const Triangulation& t, const Window& w) {
  std::vector<Arc> out;
  for (const ArcGenerator& g : t.generators()) {
    if (const auto* a = std::get_if<Arc>(&g)) {
      if (w.retains(a->first()) && w.retains(a->second())) out.push_back(*a);
      continue;
    }
    const Family& f = std::get<Family>(g);
    ParamRange r = f.domain;
    bool dropped = false;
    for (const AffineEndpoint* e : {&f.e0, &f.e1}) {
      if (const auto* p = std::get_if<Point>(e)) {
        dropped = dropped || !w.retains(*p);
      } else {
        r = intersect(r, window_params(std::get<Moving>(*e), w.bound));
      }
    }
    if (dropped || !r.bounded() || r.empty()) continue;
    for (Index i = *r.lo; i <= *r.hi; ++i) out.push_back(f.at(t.surface(), i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ValidationReport validate_non_crossing(const Triangulation& t) {
  const Surface& s = t.surface();
  const auto& gens = t.generators();
  for (std::size_t x = 0; x < gens.size(); ++x) {
    for (std::size_t y = x; y < gens.size(); ++y) {
      if (x == y && std::holds_alternative<Arc>(gens[x])) continue;
      const auto a = sym_arc(gens[x], false);
      const auto b = sym_arc(gens[y], true);
      const std::array<SymPoint, 4> pts{a[0], a[1], b[0], b[1]};
      std::vector<Form> base = range_constraints(domain_of(gens[x]), false);
      const auto second = range_constraints(domain_of(gens[y]), true);
      base.insert(base.end(), second.begin(), second.end());
      if (x == y) base.push_back({-1, -1, 1});  // j >= i + 1
      const auto hit = find_witness(pts, base, [&](std::span<const Point> p) {
        return points_cross(s, p[0], p[1], p[2], p[3]) || same_pair(p[0], p[1], p[2], p[3]);
      });
      if (!hit) continue;
      const Arc first = instance(s, gens[x], hit->first);
      const Arc other = instance(s, gens[y], hit->second);
      return {false, first == other ? "duplicate" : "crossing", first, other};
    }
  }
  return {};
}

std::optional<Arc> crossing_instance(const Triangulation& t, const Arc& a) {
  for (const ArcGenerator& g : t.generators()) {
    if (auto hit = first_crossing(t.surface(), g, a)) return hit;
  }
  return std::nullopt;
}

Triangulation build_fountain(const Surface& s, const Point& base) {
  require_on(s, base);
  std::vector<ArcGenerator> gens;
  for (int k = 1; k <= s.intervals(); ++k) {
    if (base.is_regular() && base.interval == k) {
      gens.emplace_back(Family{base, Moving{k, base.pos + 2, 1}, {0, std::nullopt}});
      gens.emplace_back(Family{base, Moving{k, base.pos - 2, -1}, {0, std::nullopt}});
    } else {
      gens.emplace_back(Family{base, Moving{k, 0, 1}, {}});
    }
    if (s.is_completed() && Point::limit(k) != base) gens.emplace_back(Arc(s, base, Point::limit(k)));
  }
  return Triangulation(s, std::move(gens), CertifiedMaximal{});
}

Triangulation build_zigzag_leapfrog(const Surface& s, const Family& alpha, const Family& beta,
                                    const std::vector<Arc>& closing) {
  if (alpha.domain != beta.domain) throw DomainError("leapfrog strands need a common index set");
  const ParamRange& index = alpha.domain;
  if (index.bounded()) throw DomainError("index set bounded on both sides: not an infinite leapfrog");

  // Conditions on alpha_i, beta_i, beta_{i-1}, alpha_{i+1}, all written in i.
  const auto a0 = sym_arc(alpha, false);
  const auto b0 = sym_arc(beta, false);
  const auto b_prev = sym_arc(beta, false, -1);
  const auto a_next = sym_arc(alpha, false, 1);
  const std::array<SymPoint, 8> pts{a0[0], a0[1], b0[0], b0[1], b_prev[0], b_prev[1], a_next[0], a_next[1]};
  const auto fails = [&](const ParamRange& where, auto pred) {
    return !ranges_where(pts, where, [&](std::span<const Point> p) { return !pred(p); }).empty();
  };
  if (fails(index, [](auto p) { return share_endpoint(p[0], p[1], p[2], p[3]); })) {
    throw DomainError("alpha_i is not incident with beta_i");
  }
  if (fails(intersect(index, shifted(index, 1)), [](auto p) { return share_endpoint(p[0], p[1], p[4], p[5]); })) {
    throw DomainError("alpha_i is not incident with beta_{i-1}");
  }
  if (fails(intersect(index, shifted(index, -1)), [](auto p) { return share_endpoint(p[2], p[3], p[6], p[7]); })) {
    throw DomainError("beta_i is not incident with alpha_{i+1}");
  }

  std::vector<ArcGenerator> gens{alpha, beta};
  gens.insert(gens.end(), closing.begin(), closing.end());
  Triangulation draft(s, gens, Unverified{});
  if (const auto report = validate_non_crossing(draft); !report.ok) {
    throw DomainError("leapfrog arcs are not pairwise distinct and non-crossing: " + report.problem + " " +
                      to_string(*report.first) + " / " + to_string(*report.second));
  }
  if (!detect_leapfrog(draft)) throw DomainError("no curve crosses every arc of the strands");

  Index reach = 0;
  for (const Family* f : {&alpha, &beta}) {
    for (const AffineEndpoint* e : {&f->e0, &f->e1}) {
      if (const auto* m = std::get_if<Moving>(e)) reach = std::max(reach, m->base < 0 ? -m->base : m->base);
    }
  }
  const Window check{s, reach + 6};
  if (!window_maximal(draft, check)) return draft;
  return Triangulation(s, std::move(gens), CertifiedMaximal{});
}

std::vector<std::vector<Arc>> window_brute_force(const Window& w) {
  if (w.points().size() > kWindowPointLimit) {
    throw ResourceError("window has " + std::to_string(w.points().size()) + " points; the limit is " +
                        std::to_string(kWindowPointLimit));
  }
  using Mask = std::bitset<128>;
  const std::vector<Arc> arcs = w.arcs();
  const std::size_t n = arcs.size();
  std::vector<Mask> compatible(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && !cross_transverse(arcs[i], arcs[j])) compatible[i].set(j);
    }
  }
  std::vector<std::vector<Arc>> out;
  // Bron-Kerbosch with pivoting over the compatibility graph.
  const auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p.none() && x.none()) {
      std::vector<Arc> set;
      for (std::size_t i = 0; i < n; ++i) {
        if (r.test(i)) set.push_back(arcs[i]);
      }
      out.push_back(std::move(set));
      return;
    }
    std::size_t pivot = 0;
    std::size_t best = 0;
    const Mask px = p | x;
    for (std::size_t u = 0; u < n; ++u) {
      if (!px.test(u)) continue;
      const std::size_t c = (p & compatible[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
    const Mask candidates = p & ~compatible[pivot];
    for (std::size_t v = 0; v < n; ++v) {
      if (!candidates.test(v)) continue;
      Mask rv = r;
      rv.set(v);
      self(self, rv, p & compatible[v], x & compatible[v]);
      p.reset(v);
      x.set(v);
    }
  };
  Mask all;
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  expand(expand, Mask{}, all, Mask{});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<LeapfrogWitness> detect_leapfrog(const Triangulation& t) {
  const Surface& s = t.surface();
  const auto& gens = t.generators();
  const auto strand = [&](std::size_t k) -> const Family* {
    const auto* f = std::get_if<Family>(&gens[k]);
    if (!f || f->is_fan() || f->domain.bounded()) return nullptr;
    return f;
  };
  for (std::size_t x = 0; x < gens.size(); ++x) {
    const Family* alpha = strand(x);
    if (!alpha) continue;
    for (std::size_t y = 0; y < gens.size(); ++y) {
      const Family* beta = strand(y);
      if (!beta || x == y) continue;
      std::set<Index> offsets;
      for (const AffineEndpoint* ea : {&alpha->e0, &alpha->e1}) {
        for (const AffineEndpoint* eb : {&beta->e0, &beta->e1}) {
          const Moving& ma = std::get<Moving>(*ea);
          const Moving& mb = std::get<Moving>(*eb);
          if (ma.interval != mb.interval || ma.stride != mb.stride) continue;
          for (Index lead : {Index{0}, ma.stride}) {
            if ((ma.base + lead - mb.base) % mb.stride == 0) offsets.insert((ma.base + lead - mb.base) / mb.stride);
          }
        }
      }
      for (Index offset : offsets) {
        const auto a_i = sym_arc(gens[x], false);
        const auto b_i = sym_arc(gens[y], false, offset);
        const auto a_n = sym_arc(gens[x], false, 1);
        const auto b_n = sym_arc(gens[y], false, offset + 1);
        const std::array<SymPoint, 8> pts{a_i[0], a_i[1], b_i[0], b_i[1], a_n[0], a_n[1], b_n[0], b_n[1]};
        ParamRange where = intersect(alpha->domain, shifted(alpha->domain, -1));
        where = intersect(where, shifted(beta->domain, -offset));
        where = intersect(where, shifted(beta->domain, -offset - 1));
        // beta_i meets alpha_i and alpha_{i+1} at different endpoints, and
        // alpha_{i+1} meets beta_i and beta_{i+1} at different endpoints.
        const auto zigzag = [](std::span<const Point> p) {
          const auto shared = [&](int u, int v) -> std::optional<Point> {
            for (int a : {u, u + 1}) {
              for (int b : {v, v + 1}) {
                if (p[a] == p[b]) return p[a];
              }
            }
            return std::nullopt;
          };
          if (same_pair(p[0], p[1], p[2], p[3]) || same_pair(p[2], p[3], p[4], p[5])) return false;
          const auto ab = shared(0, 2);
          const auto ba = shared(2, 4);
          const auto ab2 = shared(4, 6);
          return ab && ba && ab2 && *ab != *ba && *ba != *ab2;
        };
        const auto chains = ranges_where(pts, where, zigzag);
        const auto infinite = std::find_if(chains.begin(), chains.end(), [](const ParamRange& r) { return !r.bounded(); });
        if (infinite == chains.end()) continue;
        const ParamRange chain = *infinite;

        // Crossing curve: an arc between points near the start of the chain and the limits.
        std::vector<Point> candidates;
        const Index start = chain.lo ? *chain.lo : *chain.hi;
        for (const Arc& a : {alpha->at(s, start), beta->at(s, start + offset)}) {
          for (const Point& p : {a.first(), a.second()}) {
            for (int d : {-1, 0, 1}) candidates.push_back(step(p, d));
          }
        }
        if (s.is_completed()) {
          for (int k = 1; k <= s.intervals(); ++k) candidates.push_back(Point::limit(k));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        const auto crosses_all = [&](const Arc& curve) {
          for (int strand_id = 0; strand_id < 2; ++strand_id) {
            const auto e = strand_id == 0 ? sym_arc(gens[x], false) : sym_arc(gens[y], false, offset);
            const std::array<SymPoint, 4> q{e[0], e[1], SymPoint::fixed(curve.first()), SymPoint::fixed(curve.second())};
            const auto missed = ranges_where(q, chain, [&](std::span<const Point> p) {
              return !points_cross(s, p[0], p[1], p[2], p[3]);
            });
            if (!missed.empty()) return false;
          }
          return true;
        };
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (!is_arc(s, candidates[i], candidates[j])) continue;
            const Arc curve(s, candidates[i], candidates[j]);
            if (crosses_all(curve)) return LeapfrogWitness{x, y, offset, chain, curve};
          }
        }
      }
    }
  }
  return std::nullopt;
}

Point limit_point(const Surface& s, const Moving& m, ParamEnd end) {
  if (!s.is_completed()) throw DomainError("limits of families need a completed surface");
  const Index direction = m.stride * (end == ParamEnd::kUpper ? 1 : -1);
  if (direction > 0) return Point::limit(m.interval);
  return Point::limit(m.interval == 1 ? s.intervals() : m.interval - 1);
}

LimitResult limit_of_family(const Surface& s, const Family& f, std::optional<ParamEnd> end) {
  if (!s.is_completed()) throw DomainError("limits of families need a completed surface");
  if (f.domain.bounded()) throw DomainError("family has a bounded domain");
  if (!end) {
    if (!f.domain.hi && !f.domain.lo) throw DomainError("both ends of the domain are open; choose one");
    end = f.domain.hi ? ParamEnd::kLower : ParamEnd::kUpper;
  }
  if ((*end == ParamEnd::kUpper && f.domain.hi) || (*end == ParamEnd::kLower && f.domain.lo)) {
    throw DomainError("the requested end of the domain is bounded");
  }
  const auto endpoint_limit = [&](const AffineEndpoint& e) {
    if (const auto* p = std::get_if<Point>(&e)) return *p;
    return limit_point(s, std::get<Moving>(e), *end);
  };
  const Point p = endpoint_limit(f.e0);
  const Point q = endpoint_limit(f.e1);
  if (p == q) return ConvergesToAccumulationPoint{p};
  if (adjacent(p, q)) return ConvergesToBoundarySegment{};
  return ConvergesToArc{Arc(s, p, q)};
}

std::string to_string(Side side) { return side == Side::kLeft ? "left" : "right"; }

bool Progression::empty() const {
  if (!lo || !hi) return false;
  const auto f = first();
  return !f || *f > *hi;
}

std::optional<Index> Progression::first() const {
  if (!lo) return std::nullopt;
  const Index r = ((anchor - *lo) % stride + stride) % stride;
  return *lo + r;
}

std::optional<Index> Progression::last() const {
  if (!hi) return std::nullopt;
  const Index r = ((*hi - anchor) % stride + stride) % stride;
  return *hi - r;
}

NeighborScan neighbor_scan(const Triangulation& t, const Arc& a, const Point& endpoint, Side side) {
  if (!contains(t, a)) throw DomainError("arc " + to_string(a) + " is not in the triangulation");
  if (!a.has_endpoint(endpoint)) throw DomainError(to_string(endpoint) + " is not an endpoint of " + to_string(a));
  if (side == Side::kRight) return right_scan(t, a, endpoint);
  // Left scans are right scans of the mirror image.
  const Surface& s = t.surface();
  const NeighborScan mirrored = right_scan(reversed(t), reversed(a), reversed(s, endpoint));
  NeighborScan scan{endpoint, Side::kLeft, {}, std::nullopt};
  for (const ScanPiece& piece : mirrored.points) scan.points.push_back(reversed_piece(s, piece));
  if (mirrored.extremum) scan.extremum = reversed(s, *mirrored.extremum);
  return scan;
}

Family reversed(const Surface& s, const Family& f) {
  const auto flip = [&](const AffineEndpoint& e) -> AffineEndpoint {
    if (const auto* p = std::get_if<Point>(&e)) return reversed(s, *p);
    const Moving& m = std::get<Moving>(e);
    return Moving{s.intervals() + 1 - m.interval, -m.base, -m.stride};
  };
  return {flip(f.e0), flip(f.e1), f.domain};
}

Triangulation reversed(const Triangulation& t) {
  std::vector<ArcGenerator> gens;
  for (const ArcGenerator& g : t.generators()) {
    if (const auto* a = std::get_if<Arc>(&g)) {
      gens.emplace_back(reversed(*a));
    } else {
      gens.emplace_back(reversed(t.surface(), std::get<Family>(g)));
    }
  }
  return Triangulation(t.surface(), std::move(gens), t.certificate());
}

}  // namespace infgon
