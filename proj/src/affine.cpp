#include "infgon/affine.hpp"

#include <algorithm>
#include <numeric>

namespace infgon {

namespace {

struct Bound {
  Index slope = 0;
  Index offset = 0;
  Index at(Index t) const { return offset + slope * t; }
};

struct SamePair {
  std::size_t p = 0;
  std::size_t q = 0;
  Form diff;
};

std::vector<SamePair> varying_pairs(std::span<const SymPoint> points) {
  std::vector<SamePair> out;
  for (std::size_t p = 0; p < points.size(); ++p) {
    for (std::size_t q = p + 1; q < points.size(); ++q) {
      const SymPoint& x = points[p];
      const SymPoint& y = points[q];
      if (x.accumulation || y.accumulation || x.interval != y.interval) continue;
      const Form diff = x.pos - y.pos;
      if (!diff.constant()) out.push_back({p, q, diff});
    }
  }
  return out;
}

/// Constraints pinning diff into one class.
std::vector<std::vector<Form>> classes_of(const Form& diff, bool gap_sensitive) {
  const Form neg{-diff.c, -diff.a, -diff.b};
  auto equal_to = [&](Index k) { return std::vector<Form>{diff + (-k), neg + k}; };
  if (!gap_sensitive) return {{neg + -1}, equal_to(0), {diff + -1}};
  return {{neg + -2}, equal_to(-1), equal_to(0), equal_to(1), {diff + -2}};
}

std::optional<std::pair<Index, Index>> search(std::span<const SymPoint> points,
                                              const std::vector<SamePair>& pairs, std::size_t k,
                                              std::vector<Form>& constraints,
                                              const ConcretePredicate& pred, bool gap_sensitive) {
  const auto solution = solve_constraints(constraints);
  if (!solution) return std::nullopt;
  if (k == pairs.size()) {
    std::vector<Point> concrete;
    concrete.reserve(points.size());
    for (const SymPoint& p : points) concrete.push_back(p.at(solution->first, solution->second));
    if (pred(concrete)) return solution;
    return std::nullopt;
  }
  for (const auto& cls : classes_of(pairs[k].diff, gap_sensitive)) {
    const std::size_t mark = constraints.size();
    constraints.insert(constraints.end(), cls.begin(), cls.end());
    auto found = search(points, pairs, k + 1, constraints, pred, gap_sensitive);
    constraints.resize(mark);
    if (found) return found;
  }
  return std::nullopt;
}

}  // namespace

Index floor_div(Index num, Index den) {
  Index q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Index ceil_div(Index num, Index den) { return -floor_div(-num, den); }

ParamRange intersect(const ParamRange& x, const ParamRange& y) {
  ParamRange out = x;
  if (y.lo) out.lo = out.lo ? std::max(*out.lo, *y.lo) : *y.lo;
  if (y.hi) out.hi = out.hi ? std::min(*out.hi, *y.hi) : *y.hi;
  return out;
}

std::vector<Form> range_constraints(const ParamRange& r, bool second_param) {
  std::vector<Form> out;
  const Index a = second_param ? 0 : 1;
  const Index b = second_param ? 1 : 0;
  if (r.lo) out.push_back({-*r.lo, a, b});
  if (r.hi) out.push_back({*r.hi, -a, -b});
  return out;
}

std::optional<std::pair<Index, Index>> solve_constraints(std::span<const Form> nonneg) {
  // Split i by residue modulo the lcm of the j-coefficients; every bound on j
  // is then exactly affine in the quotient t, and feasibility is an interval test.
  Index period = 1;
  for (const Form& f : nonneg) {
    if (f.b != 0) period = std::lcm(period, f.b < 0 ? -f.b : f.b);
  }
  for (Index r = 0; r < period; ++r) {
    std::vector<std::pair<Index, Index>> t_constraints;  // slope * t + offset >= 0
    std::vector<Bound> lowers;
    std::vector<Bound> uppers;
    for (const Form& f : nonneg) {
      const Index offset = f.c + f.a * r;
      const Index slope = f.a * period;
      if (f.b == 0) {
        t_constraints.emplace_back(slope, offset);
      } else if (f.b > 0) {
        lowers.push_back({-(slope / f.b), ceil_div(-offset, f.b)});
      } else {
        uppers.push_back({slope / -f.b, floor_div(offset, -f.b)});
      }
    }
    for (const Bound& lo : lowers) {
      for (const Bound& up : uppers) t_constraints.emplace_back(up.slope - lo.slope, up.offset - lo.offset);
    }
    std::optional<Index> t_lo;
    std::optional<Index> t_hi;
    bool feasible = true;
    for (const auto& [slope, offset] : t_constraints) {
      if (slope == 0) {
        if (offset < 0) feasible = false;
      } else if (slope > 0) {
        const Index v = ceil_div(-offset, slope);
        t_lo = t_lo ? std::max(*t_lo, v) : v;
      } else {
        const Index v = floor_div(offset, -slope);
        t_hi = t_hi ? std::min(*t_hi, v) : v;
      }
    }
    if (!feasible || (t_lo && t_hi && *t_lo > *t_hi)) continue;
    const Index t = t_lo ? *t_lo : (t_hi ? *t_hi : 0);
    const Index i = r + period * t;
    Index j = 0;
    if (!lowers.empty()) {
      j = lowers.front().at(t);
      for (const Bound& lo : lowers) j = std::max(j, lo.at(t));
    } else if (!uppers.empty()) {
      j = uppers.front().at(t);
      for (const Bound& up : uppers) j = std::min(j, up.at(t));
    }
    return std::pair{i, j};
  }
  return std::nullopt;
}

std::optional<std::pair<Index, Index>> find_witness(std::span<const SymPoint> points, std::vector<Form> base,
                                                    const ConcretePredicate& pred, bool gap_sensitive) {
  const std::vector<SamePair> pairs = varying_pairs(points);
  return search(points, pairs, 0, base, pred, gap_sensitive);
}

std::vector<ParamRange> ranges_where(std::span<const SymPoint> points, const ParamRange& domain,
                                     const ConcretePredicate& pred) {
  if (domain.empty()) return {};
  std::vector<Index> critical;
  for (const SamePair& pair : varying_pairs(points)) {
    if (pair.diff.b != 0) throw DomainError("ranges_where takes one parameter");
    for (Index t : {-1, 0, 1}) {
      critical.push_back(floor_div(t - pair.diff.c, pair.diff.a));
      critical.push_back(ceil_div(t - pair.diff.c, pair.diff.a));
    }
  }
  std::erase_if(critical, [&](Index c) { return !domain.contains(c); });
  std::sort(critical.begin(), critical.end());
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  std::vector<ParamRange> pieces;
  std::optional<Index> cursor = domain.lo;
  for (Index c : critical) {
    if (!cursor || *cursor <= c - 1) pieces.push_back({cursor, c - 1});
    pieces.push_back({c, c});
    cursor = c + 1;
  }
  if (critical.empty() || !domain.hi || *cursor <= *domain.hi) pieces.push_back({cursor, domain.hi});

  std::vector<ParamRange> out;
  bool extend = false;
  for (const ParamRange& piece : pieces) {
    if (piece.empty()) continue;
    const Index rep = piece.lo ? *piece.lo : (piece.hi ? *piece.hi : 0);
    std::vector<Point> concrete;
    concrete.reserve(points.size());
    for (const SymPoint& p : points) concrete.push_back(p.at(rep, 0));
    if (pred(concrete)) {
      if (extend) {
        out.back().hi = piece.hi;
      } else {
        out.push_back(piece);
      }
      extend = true;
    } else {
      extend = false;
    }
  }
  return out;
}

}  // namespace infgon
