#include "infgon/mutation.hpp"

#include <algorithm>
#include <array>

namespace infgon {

namespace {

std::optional<Point> frame_entry(const Triangulation& t, const Arc& a, const Point& at, Side side) {
  const NeighborScan scan = neighbor_scan(t, a, at, side);
  if (scan.empty()) return step(at, side == Side::kLeft ? 1 : -1);
  return scan.extremum;
}

std::optional<NeighborScan> unbounded_scan(const Triangulation& t, const Arc& a) {
  for (const Point& at : {a.first(), a.second()}) {
    for (Side side : {Side::kLeft, Side::kRight}) {
      NeighborScan scan = neighbor_scan(t, a, at, side);
      if (!scan.empty() && !scan.extremum) return scan;
    }
  }
  return std::nullopt;
}

std::vector<Arc> present(std::initializer_list<std::optional<Arc>> sides) {
  std::vector<Arc> out;
  for (const auto& side : sides) {
    if (side) out.push_back(*side);
  }
  return out;
}

std::string reason_text(const Mutability& m) {
  return "arc " + to_string(m.frame.arc) + " is not mutable: " + to_string(m.reason);
}

}  // namespace

QuadFrame quad_frame(const Triangulation& t, const Arc& a) {
  if (!t.verified()) throw DomainError("quadrilateral frames need a verified triangulation");
  const Point& u = a.first();
  const Point& v = a.second();
  return {a, frame_entry(t, a, u, Side::kLeft), frame_entry(t, a, u, Side::kRight), frame_entry(t, a, v, Side::kLeft),
          frame_entry(t, a, v, Side::kRight)};
}

ApproxResult approximate(const Triangulation& t, const Arc& a, Side side) {
  ApproxExists result;
  for (const Point& at : {a.first(), a.second()}) {
    NeighborScan scan = neighbor_scan(t, a, at, side);
    if (scan.empty()) continue;
    if (!scan.extremum) return ApproxFails{std::move(scan)};
    result.summands.emplace_back(t.surface(), at, *scan.extremum);
  }
  return result;
}

std::string to_string(MutabilityReason r) {
  switch (r) {
    case MutabilityReason::kMutable:
      return "Mutable";
    case MutabilityReason::kNoExtremum:
      return "NoExtremum";
    case MutabilityReason::kFrameMismatch:
      return "FrameMismatch";
  }
  return "Mutable";
}

Mutability check_mutability(const Triangulation& t, const Arc& a) {
  Mutability m{false, MutabilityReason::kNoExtremum, quad_frame(t, a)};
  if (!m.frame.defined()) return m;
  const QuadFrame& f = m.frame;
  if (*f.u_left != *f.v_right || *f.u_right != *f.v_left || !is_arc(t.surface(), *f.u_right, *f.v_right)) {
    m.reason = MutabilityReason::kFrameMismatch;
    return m;
  }
  m.mutable_arc = true;
  m.reason = MutabilityReason::kMutable;
  return m;
}

bool is_mutable(const Triangulation& t, const Arc& a) { return check_mutability(t, a).mutable_arc; }

MutabilityError::MutabilityError(Mutability why, std::optional<NeighborScan> scan)
    : std::runtime_error(reason_text(why)), why_(std::move(why)), scan_(std::move(scan)) {}

Triangulation without(const Triangulation& t, const Arc& a) {
  const auto where = locate(t, a);
  if (!where) throw DomainError("arc " + to_string(a) + " is not in the triangulation");
  std::vector<ArcGenerator> gens;
  for (std::size_t k = 0; k < t.generators().size(); ++k) {
    const ArcGenerator& g = t.generators()[k];
    if (k != where->generator) {
      gens.push_back(g);
      continue;
    }
    if (std::holds_alternative<Arc>(g)) continue;
    const Family& f = std::get<Family>(g);
    const Family below{f.e0, f.e1, {f.domain.lo, where->param - 1}};
    const Family above{f.e0, f.e1, {where->param + 1, f.domain.hi}};
    if (!below.domain.empty()) gens.emplace_back(below);
    if (!above.domain.empty()) gens.emplace_back(above);
  }
  return Triangulation(t.surface(), std::move(gens), Unverified{});
}

MutationResult flip(const Triangulation& t, const Arc& a) {
  Mutability m = check_mutability(t, a);
  if (!m.mutable_arc) throw MutabilityError(m, unbounded_scan(t, a));
  const Arc new_arc(t.surface(), *m.frame.u_right, *m.frame.v_right);
  std::vector<ArcGenerator> gens = without(t, a).generators();
  gens.emplace_back(new_arc);
  const ExchangeTriangles sides = exchange_triangles(a, new_arc);
  return {new_arc,
          Triangulation(t.surface(), std::move(gens), t.certificate()),
          {{new_arc, present({sides.alpha1, sides.alpha2}), a}, {a, present({sides.beta1, sides.beta2}), new_arc}}};
}

ModuleGenerators right_module_generators(const Triangulation& t, const Arc& g) {
  const Surface& s = t.surface();
  if (!s.is_completed()) throw DomainError("module generators need a completed surface");
  if (!std::holds_alternative<CertifiedMaximal>(t.certificate())) {
    throw DomainError("module generators need a certified maximal triangulation");
  }
  if (g.surface() != s) throw DomainError("arc " + to_string(g) + " is on another surface");
  const Arc target = shift_arc(g, 1);
  // hom(b, target) is nonzero exactly when some extension of b by g exists.
  const auto in_support = [&](const Arc& b) { return ext_case(b, g) != ExtCase::kNoExt; };

  std::vector<Arc> candidates;
  for (std::size_t k = 0; k < t.generators().size(); ++k) {
    const ArcGenerator& gen = t.generators()[k];
    if (const auto* b = std::get_if<Arc>(&gen)) {
      if (in_support(*b)) candidates.push_back(*b);
      continue;
    }
    const Family& f = std::get<Family>(gen);
    const auto sym = [](const AffineEndpoint& e) {
      if (const auto* p = std::get_if<Point>(&e)) return SymPoint::fixed(*p);
      const Moving& m = std::get<Moving>(e);
      return SymPoint{m.interval, false, {m.base, m.stride, 0}};
    };
    const std::array<SymPoint, 4> pts{sym(f.e0), sym(f.e1), SymPoint::fixed(g.first()), SymPoint::fixed(g.second())};
    const auto pieces = ranges_where(pts, f.domain, [&](std::span<const Point> p) {
      return ext_case(Arc(s, p[0], p[1]), Arc(s, p[2], p[3])) != ExtCase::kNoExt;
    });
    for (const ParamRange& piece : pieces) {
      const auto take_all = [&] {
        for (Index i = *piece.lo; i <= *piece.hi; ++i) candidates.push_back(f.at(s, i));
      };
      if (!f.is_fan()) {
        if (!piece.bounded()) return NotFinitelyGenerated{k, piece, "infinitely many zigzag arcs in the support"};
        take_all();
        continue;
      }
      if (piece.bounded() && *piece.lo == *piece.hi) {
        candidates.push_back(f.at(s, *piece.lo));
        continue;
      }
      const Index i0 = piece.lo ? *piece.lo : (piece.hi ? *piece.hi - 1 : 0);
      const Arc b0 = f.at(s, i0);
      const Arc b1 = f.at(s, i0 + 1);
      const bool up = composite_nonzero(b0, b1, target);
      const bool down = composite_nonzero(b1, b0, target);
      if (up == down) {
        if (!piece.bounded()) return NotFinitelyGenerated{k, piece, "fan arcs in the support form no chain"};
        take_all();
        continue;
      }
      const std::optional<Index> end = up ? piece.hi : piece.lo;
      if (end) {
        candidates.push_back(f.at(s, *end));
        continue;
      }
      const LimitResult limit = limit_of_family(s, f, up ? ParamEnd::kUpper : ParamEnd::kLower);
      const auto* arc = std::get_if<ConvergesToArc>(&limit);
      if (!arc || !contains(t, arc->limit) || !in_support(arc->limit) ||
          !composite_nonzero(b0, arc->limit, target) || !composite_nonzero(b1, arc->limit, target)) {
        return NotFinitelyGenerated{k, piece, "fan unbounded at its generating end"};
      }
      candidates.push_back(arc->limit);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  // Greedy cover: x covers y when y -> x -> target is nonzero.
  const std::size_t n = candidates.size();
  std::vector<std::vector<bool>> covers(n, std::vector<bool>(n, false));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      covers[x][y] = x == y || composite_nonzero(candidates[y], candidates[x], target);
    }
  }
  std::vector<bool> covered(n, false);
  std::vector<Arc> chosen;
  while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
    std::size_t best = 0;
    std::size_t best_gain = 0;
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t gain = 0;
      for (std::size_t y = 0; y < n; ++y) gain += (!covered[y] && covers[x][y]) ? 1 : 0;
      if (gain > best_gain) {
        best = x;
        best_gain = gain;
      }
    }
    chosen.push_back(candidates[best]);
    for (std::size_t y = 0; y < n; ++y) covered[y] = covered[y] || covers[best][y];
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace infgon
