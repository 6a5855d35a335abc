#include "infgon/verify.hpp"

#include <algorithm>
#include <bitset>
#include <chrono>
#include <functional>
#include <random>
#include <set>

#include "infgon/hom_ext.hpp"
#include "infgon/mutation.hpp"
#include "infgon/triangulation.hpp"

namespace infgon {

namespace {

/// Counts checks and keeps the first failure message.
class Tally {
 public:
  void check(bool ok, const std::function<std::string()>& describe) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = describe();
  }
  CriterionResult finish(int id, std::string name, std::string summary) const {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.checked = checked_;
    r.failures = failures_;
    r.pass = failures_ == 0 && checked_ > 0;
    r.detail = failures_ == 0 ? std::move(summary) : first_;
    return r;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

std::string pair_text(const Arc& g, const Arc& d) {
  return to_string(g.surface()) + " " + to_string(g) + " / " + to_string(d);
}

std::vector<Surface> completed_surfaces() {
  return {Surface::completed(1), Surface::completed(2), Surface::completed(3)};
}

Index pair_bound(SuiteLevel level) { return level == SuiteLevel::kDesk ? 6 : 2; }

void for_each_pair(SuiteLevel level, const std::function<void(const Arc&, const Arc&)>& visit) {
  for (const Surface& s : completed_surfaces()) {
    const std::vector<Arc> arcs = Window{s, pair_bound(level)}.arcs();
    for (const Arc& g : arcs) {
      for (const Arc& d : arcs) visit(g, d);
    }
  }
}

std::size_t point_count(const Surface& s, Index bound) {
  return static_cast<std::size_t>(s.intervals()) * static_cast<std::size_t>(2 * bound + 1 + (s.is_completed() ? 1 : 0));
}

std::vector<Window> windows_up_to(std::size_t max_points) {
  std::vector<Window> out;
  for (int n = 1; n <= 12; ++n) {
    for (Index b = 0; b <= 5; ++b) {
      for (const Surface& s : {Surface::uncompleted(n), Surface::completed(n)}) {
        const std::size_t p = point_count(s, b);
        if (p >= 4 && p <= max_points) out.push_back({s, b});
      }
    }
  }
  return out;
}

/// Extension between window arcs: the quotient extension on completed
/// surfaces via its factorisation oracle, Hom(X, Sigma Y) otherwise.
bool extension(const Arc& x, const Arc& y) {
  if (x.surface().is_completed()) return ext_perp_d_oracle(x, y) == HomDim::kOne;
  return hom_c(x, shift_arc(y, 1)) == HomDim::kOne;
}

bool crossing_ext(const Arc& x, const Arc& y) {
  if (x.surface().is_completed()) return ext_perp_d(x, y) == HomDim::kOne;
  return hom_c(x, shift_arc(y, 1)) == HomDim::kOne;
}

using Mask = std::bitset<64>;

/// Every T with T = {X : E(X,T)=0} = {X : E(T,X)=0} among the window arcs.
std::vector<std::vector<Arc>> weak_cluster_tilting_sets(const std::vector<Arc>& arcs) {
  const std::size_t n = arcs.size();
  std::vector<Mask> out_ext(n);
  std::vector<Mask> in_ext(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (extension(arcs[i], arcs[j])) {
        out_ext[i].set(j);
        in_ext[j].set(i);
      }
    }
  }
  Mask free;
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (out_ext[i].none() && in_ext[i].none()) {
      free.set(i);
    } else {
      order.push_back(i);
    }
  }
  std::vector<std::vector<Arc>> found;
  const auto leaf = [&](const Mask& t) {
    for (std::size_t x = 0; x < n; ++x) {
      const bool left_perp = (out_ext[x] & t).none();
      const bool right_perp = (in_ext[x] & t).none();
      if (left_perp != t.test(x) || right_perp != t.test(x)) return;
    }
    std::vector<Arc> set;
    for (std::size_t x = 0; x < n; ++x) {
      if (t.test(x)) set.push_back(arcs[x]);
    }
    found.push_back(std::move(set));
  };
  const auto descend = [&](auto&& self, std::size_t k, Mask t) -> void {
    if (k == order.size()) {
      leaf(t);
      return;
    }
    const std::size_t i = order[k];
    self(self, k + 1, t);
    Mask with = t;
    with.set(i);
    if ((out_ext[i] & with).none() && (in_ext[i] & with).none()) self(self, k + 1, with);
  };
  descend(descend, 0, free);
  std::sort(found.begin(), found.end());
  return found;
}

Triangulation window_triangulation(const Window& w, const std::vector<Arc>& arcs) {
  return Triangulation(w.surface, {arcs.begin(), arcs.end()}, WindowChecked{w.bound});
}

/// Number of window arcs other than a completing t minus a to a maximal set.
std::size_t replacements(const std::vector<Arc>& window_arcs, const std::vector<Arc>& t, const Arc& a) {
  std::vector<Arc> candidates;
  for (const Arc& c : window_arcs) {
    if (c == a || std::find(t.begin(), t.end(), c) != t.end()) continue;
    const bool free = std::none_of(t.begin(), t.end(), [&](const Arc& x) { return x != a && cross_transverse(x, c); });
    if (free) candidates.push_back(c);
  }
  std::size_t count = 0;
  for (const Arc& c : candidates) {
    const bool maximal =
        std::all_of(candidates.begin(), candidates.end(), [&](const Arc& o) { return o == c || cross_transverse(o, c); });
    if (maximal) ++count;
  }
  return count;
}

/// Replacement count for an infinite triangulation, searched over window arcs.
std::size_t replacements(const Triangulation& t, const Arc& a, Index bound) {
  const Triangulation rest = without(t, a);
  std::vector<Arc> candidates;
  for (const Arc& c : Window{t.surface(), bound}.arcs()) {
    if (c != a && !contains(t, c) && !crossing_instance(rest, c)) candidates.push_back(c);
  }
  std::size_t count = 0;
  for (const Arc& c : candidates) {
    const bool maximal =
        std::all_of(candidates.begin(), candidates.end(), [&](const Arc& o) { return o == c || cross_transverse(o, c); });
    if (maximal) ++count;
  }
  return count;
}

/// Approximations on both sides exist and their far endpoints close up a quadrilateral.
bool approximations_close(const Triangulation& t, const Arc& a) {
  const ApproxResult left = approximate(t, a, Side::kLeft);
  const ApproxResult right = approximate(t, a, Side::kRight);
  if (!std::holds_alternative<ApproxExists>(left) || !std::holds_alternative<ApproxExists>(right)) return false;
  const auto far_end = [&](const ApproxResult& r, const Point& at, int fallback) {
    for (const Arc& s : std::get<ApproxExists>(r).summands) {
      if (s.has_endpoint(at)) return s.other(at);
    }
    return step(at, fallback);
  };
  const Point& u = a.first();
  const Point& v = a.second();
  const Point ul = far_end(left, u, 1);
  const Point vl = far_end(left, v, 1);
  const Point ur = far_end(right, u, -1);
  const Point vr = far_end(right, v, -1);
  return ul == vr && ur == vl && is_arc(t.surface(), ur, vr);
}

std::vector<Triangulation> fountains_c1() {
  const Surface c1 = Surface::completed(1);
  return {build_fountain(c1, Point::regular(1, 0)), build_fountain(c1, Point::limit(1))};
}

Triangulation zigzag_c1() {
  return build_zigzag_leapfrog(Surface::completed(1), {Moving{1, 0, 1}, Moving{1, 0, -1}, {1, std::nullopt}},
                               {Moving{1, 1, 1}, Moving{1, 0, -1}, {1, std::nullopt}}, {});
}

CriterionResult oracle_equivalence(SuiteLevel level) {
  Tally tally;
  for_each_pair(level, [&](const Arc& g, const Arc& d) {
    tally.check(ext_perp_d(g, d) == ext_perp_d_oracle(g, d), [&] { return "oracle disagrees on " + pair_text(g, d); });
  });
  return tally.finish(1, "Ext-cross oracle equivalence", "all pairs agree");
}

CriterionResult weak_2cy(SuiteLevel level) {
  Tally tally;
  for_each_pair(level, [&](const Arc& g, const Arc& d) {
    tally.check(ext_perp_d(g, d) == ext_perp_d(d, g), [&] { return "asymmetric extension on " + pair_text(g, d); });
  });
  return tally.finish(2, "weak 2-Calabi-Yau symmetry", "extensions symmetric");
}

CriterionResult hom_asymmetry(SuiteLevel) {
  Tally tally;
  const Surface c2 = Surface::completed(2);
  const Arc g = parse_arc(c2, "1:0-a1");
  const Arc d = parse_arc(c2, "a1-2:5");
  tally.check(hom_cbar(g, shift_arc(d, 1)) == HomDim::kOne, [] { return "Hom(g, Sigma d) should be 1"; });
  tally.check(hom_cbar(d, shift_arc(g, 1)) == HomDim::kZero, [] { return "Hom(d, Sigma g) should be 0"; });
  tally.check(ext_case(g, d) == ExtCase::kClockwiseAtAccumulation, [] { return "case should be clockwise"; });
  tally.check(ext_case(d, g) == ExtCase::kNoExt, [] { return "reverse case should be NoExt"; });
  return tally.finish(3, "Hom asymmetry at an accumulation point", "dimensions 1 and 0");
}

CriterionResult substructure(SuiteLevel level) {
  Tally tally;
  std::size_t drops = 0;
  for_each_pair(level, [&](const Arc& g, const Arc& d) {
    const int e = as_int(ext_perp_d(g, d));
    const int h = as_int(hom_cbar(g, shift_arc(d, 1)));
    const ExtCase c = ext_case(g, d);
    const bool expected_drop = c == ExtCase::kClockwiseAtAccumulation || c == ExtCase::kDoubleAccumulationSelf;
    drops += e < h ? 1 : 0;
    tally.check(e <= h && (e < h) == expected_drop, [&] {
      return "containment fails on " + pair_text(g, d) + " case " + to_string(c);
    });
  });
  return tally.finish(4, "substructure containment", std::to_string(drops) + " strict drops, all accumulation cases");
}

CriterionResult weak_ct_bijection(SuiteLevel level) {
  Tally tally;
  const std::size_t limit = level == SuiteLevel::kDesk ? 10 : 8;
  std::size_t windows = 0;
  for (const Window& w : windows_up_to(limit)) {
    ++windows;
    const auto maximal = window_brute_force(w);
    const auto wct = weak_cluster_tilting_sets(w.arcs());
    tally.check(maximal == wct, [&] {
      return to_string(w.surface) + " bound " + std::to_string(w.bound) + ": " + std::to_string(maximal.size()) +
             " maximal sets vs " + std::to_string(wct.size()) + " weak cluster-tilting sets";
    });
  }
  const std::size_t hexagon = window_brute_force({Surface::uncompleted(2), 1}).size();
  tally.check(hexagon == 14, [&] { return "hexagon gives " + std::to_string(hexagon) + " triangulations"; });
  return tally.finish(5, "window weak cluster-tilting bijection",
                      std::to_string(windows) + " windows, hexagon count 14");
}

CriterionResult mutability_trichotomy(SuiteLevel level) {
  Tally tally;
  const std::size_t limit = level == SuiteLevel::kDesk ? 8 : 6;
  for (const Window& w : windows_up_to(limit)) {
    const auto window_arcs = w.arcs();
    for (const auto& set : window_brute_force(w)) {
      const Triangulation t = window_triangulation(w, set);
      for (const Arc& a : set) {
        const bool frame = is_mutable(t, a);
        const bool approx = approximations_close(t, a);
        const bool brute = replacements(window_arcs, set, a) == 1;
        tally.check(frame == approx && approx == brute, [&] {
          return to_string(w.surface) + " arc " + to_string(a) + ": frame " + std::to_string(frame) + " approx " +
                 std::to_string(approx) + " brute " + std::to_string(brute);
        });
      }
    }
  }
  const Index radius = level == SuiteLevel::kDesk ? 6 : 3;
  for (const Triangulation& t : fountains_c1()) {
    for (const Arc& a : arcs_in_window(t, {t.surface(), radius})) {
      const bool frame = is_mutable(t, a);
      const bool approx = approximations_close(t, a);
      const bool brute = replacements(t, a, radius + 3) == 1;
      tally.check(frame == approx && approx == brute, [&] {
        return "fountain arc " + to_string(a) + ": frame " + std::to_string(frame) + " approx " +
               std::to_string(approx) + " brute " + std::to_string(brute);
      });
    }
  }
  return tally.finish(6, "mutability trichotomy", "all three conditions agree");
}

CriterionResult fountain_behaviour(SuiteLevel) {
  Tally tally;
  const Surface c1 = Surface::completed(1);
  const Point b = Point::regular(1, 0);
  const Triangulation t = build_fountain(c1, b);
  const Arc limit(c1, b, Point::limit(1));
  tally.check(!is_mutable(t, limit), [] { return "base-to-limit arc reported mutable"; });
  tally.check(check_mutability(t, limit).reason == MutabilityReason::kNoExtremum, [] { return "wrong reason"; });
  for (Side side : {Side::kLeft, Side::kRight}) {
    tally.check(std::holds_alternative<ApproxFails>(approximate(t, limit, side)),
                [&] { return to_string(side) + " approximation of the limit arc should fail"; });
  }
  for (Index i = -12; i <= 12; ++i) {
    if (i >= -1 && i <= 1) continue;
    const Point v = Point::regular(1, i);
    const Arc a(c1, b, v);
    tally.check(is_mutable(t, a), [&] { return to_string(a) + " should be mutable"; });
    if (!is_mutable(t, a)) continue;
    const Arc expected(c1, step(v, -1), step(v, 1));
    const Arc got = flip(t, a).new_arc;
    tally.check(got == expected, [&] { return to_string(a) + " flips to " + to_string(got); });
  }
  return tally.finish(7, "fountain behaviour", "limit arc rigid, regular arcs flip to neighbours of v");
}

CriterionResult fan_finiteness(SuiteLevel level) {
  Tally tally;
  std::mt19937 rng(20241015);
  const Surface c1 = Surface::completed(1);
  const Surface c2 = Surface::completed(2);
  const std::vector<Triangulation> fans{build_fountain(c1, Point::regular(1, 0)), build_fountain(c1, Point::limit(1)),
                                        build_fountain(c2, Point::regular(2, 3)), build_fountain(c2, Point::limit(2))};
  const Index check_radius = level == SuiteLevel::kDesk ? 12 : 8;
  const int queries = level == SuiteLevel::kDesk ? 50 : 12;
  for (int q = 0; q < queries; ++q) {
    const Triangulation& t = fans[static_cast<std::size_t>(q) % fans.size()];
    const std::vector<Arc> pool = Window{t.surface(), 10}.arcs();
    const Arc g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    const ModuleGenerators gens = right_module_generators(t, g);
    const auto* list = std::get_if<std::vector<Arc>>(&gens);
    tally.check(list != nullptr, [&] { return "fan reported infinitely generated for " + to_string(g); });
    if (!list) continue;
    const Arc target = shift_arc(g, 1);
    for (const Arc& beta : arcs_in_window(t, {t.surface(), check_radius})) {
      if (hom_cbar(beta, target) == HomDim::kZero) continue;
      const bool through = std::any_of(list->begin(), list->end(), [&](const Arc& r) {
        return r == beta || composite_nonzero(beta, r, target);
      });
      tally.check(through, [&] { return to_string(beta) + " -> Sigma " + to_string(g) + " misses the generators"; });
    }
  }
  const Triangulation ladder = zigzag_c1();
  for (Index k = -5; k <= 4; ++k) {
    const Arc g(c1, Point::regular(1, k), Point::limit(1));
    tally.check(std::holds_alternative<NotFinitelyGenerated>(right_module_generators(ladder, g)),
                [&] { return "leapfrog finitely generated for " + to_string(g); });
  }
  return tally.finish(8, "fan iff functorially finite", "fans finite, leapfrog infinite");
}

/// The accumulation point first reached from x moving in the given direction.
Point first_limit_ahead(const Surface& s, const Point& x, bool forward) {
  std::vector<Point> limits;
  for (int k = 1; k <= s.intervals(); ++k) limits.push_back(Point::limit(k));
  for (const Point& a : limits) {
    const bool first = std::all_of(limits.begin(), limits.end(), [&](const Point& b) {
      return a == b || (forward ? strictly_ordered(s, x, {a, b}) : strictly_ordered(s, x, {b, a}));
    });
    if (first) return a;
  }
  return limits.front();
}

CriterionResult limit_arcs(SuiteLevel) {
  Tally tally;
  std::vector<std::pair<Surface, Family>> families;
  for (int n = 1; n <= 3 && families.size() < 20; ++n) {
    const Surface s = Surface::completed(n);
    std::vector<Point> apexes{Point::regular(1, 0), Point::limit(1)};
    if (n >= 2) apexes.push_back(Point::limit(2));
    if (n >= 3) apexes.push_back(Point::regular(3, 4));
    for (const Point& p : apexes) {
      for (int k = 1; k <= n; ++k) {
        for (Index stride : {Index{1}, Index{-2}}) {
          const Index base = (p.is_regular() && p.interval == k) ? p.pos + 2 * stride : 0;
          const bool lower_open = (families.size() % 3) == 2;
          families.push_back({s, Family{p, Moving{k, base, lower_open ? -stride : stride},
                                        lower_open ? ParamRange{std::nullopt, 0} : ParamRange{0, std::nullopt}}});
        }
      }
    }
  }
  if (families.size() > 20) families.erase(families.begin() + 20, families.end());
  for (const auto& [s, f] : families) {
    const Point p = std::get<Point>(f.e0);
    const Moving m = std::get<Moving>(f.e1);
    const Index i = f.domain.lo ? 1'000'000 : -1'000'000;
    const Point far = f.endpoint_at(1, i);
    const Point further = f.endpoint_at(1, f.domain.lo ? i + 1 : i - 1);
    const Point q = first_limit_ahead(s, far, further.pos > far.pos);
    const LimitResult got = limit_of_family(s, f);
    const std::string label = to_string(s) + " apex " + to_string(p) + " moving " + std::to_string(m.interval) + ":" +
                              std::to_string(m.base) + "+" + std::to_string(m.stride) + "i";
    if (p == q) {
      const auto* r = std::get_if<ConvergesToAccumulationPoint>(&got);
      tally.check(r && r->point == q, [&] { return label + " should converge to " + to_string(q); });
    } else if (adjacent(p, q)) {
      tally.check(std::holds_alternative<ConvergesToBoundarySegment>(got), [&] { return label + " boundary"; });
    } else {
      const auto* r = std::get_if<ConvergesToArc>(&got);
      tally.check(r && r->limit == Arc(s, p, q), [&] { return label + " should converge to arc " + to_string(p) + "-" + to_string(q); });
      if (r) {
        const Triangulation with(s, {f, r->limit}, Unverified{});
        tally.check(validate_non_crossing(with).ok, [&] { return label + ": limit arc crosses the family"; });
      }
    }
  }
  return tally.finish(9, "limit arcs", std::to_string(families.size()) + " families");
}

void check_flip(Tally& tally, const Triangulation& t, const Arc& a, const std::vector<Arc>& window_set,
                const Window& w) {
  const MutationResult r = flip(t, a);
  const MutationResult back = flip(r.new_triangulation, r.new_arc);
  tally.check(back.new_arc == a, [&] { return "flip of " + to_string(a) + " does not return"; });
  tally.check(arcs_in_window(back.new_triangulation, w) == window_set,
              [&] { return "double flip of " + to_string(a) + " changes the triangulation"; });
  tally.check(crossing_ext(a, r.new_arc) && crossing_ext(r.new_arc, a),
              [&] { return "diagonals " + to_string(a) + " and " + to_string(r.new_arc) + " have no extension"; });
  for (const Conflation& c : r.conflations) {
    for (const Arc& m : c.middle) {
      const bool rigid = !crossing_ext(m, a) && !crossing_ext(a, m) && !crossing_ext(m, r.new_arc) &&
                         !crossing_ext(r.new_arc, m);
      tally.check(rigid, [&] { return "middle term " + to_string(m) + " meets a diagonal"; });
    }
  }
}

CriterionResult flip_involution(SuiteLevel level) {
  Tally tally;
  const std::size_t limit = level == SuiteLevel::kDesk ? 8 : 6;
  for (const Window& w : windows_up_to(limit)) {
    for (const auto& set : window_brute_force(w)) {
      const Triangulation t = window_triangulation(w, set);
      for (const Arc& a : set) {
        if (is_mutable(t, a)) check_flip(tally, t, a, set, w);
      }
    }
  }
  for (const Triangulation& t : fountains_c1()) {
    const Window w{t.surface(), 8};
    const auto visible = arcs_in_window(t, w);
    for (const Arc& a : arcs_in_window(t, {t.surface(), 5})) {
      if (is_mutable(t, a)) check_flip(tally, t, a, visible, w);
    }
  }
  return tally.finish(10, "flip involution and exchange rigidity", "all flips return and sides stay rigid");
}

CriterionResult lift_independence(SuiteLevel level) {
  Tally tally;
  std::mt19937 rng(7);
  std::vector<Arc> pool;
  for (const Surface& s : completed_surfaces()) {
    for (const Arc& a : Window{s, 6}.arcs()) {
      if (a.first().accumulation || a.second().accumulation) pool.push_back(a);
    }
  }
  const int pairs = level == SuiteLevel::kDesk ? 200 : 40;
  const int lifts = level == SuiteLevel::kDesk ? 100 : 20;
  std::uniform_int_distribution<Index> position(-25, 25);
  int made = 0;
  while (made < pairs) {
    const Arc g = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    std::vector<Arc> partners;
    for (const Arc& d : pool) {
      if (d.surface() == g.surface()) partners.push_back(d);
    }
    const Arc d = partners[std::uniform_int_distribution<std::size_t>(0, partners.size() - 1)(rng)];
    ++made;
    const HomDim canonical = ext_perp_d_oracle(g, d);
    for (int l = 0; l < lifts; ++l) {
      const LiftChoice choice{position(rng), position(rng), position(rng), position(rng)};
      tally.check(ext_perp_d_oracle(g, d, choice) == canonical, [&] {
        return pair_text(g, d) + " changes with lift (" + std::to_string(choice.g_first) + "," +
               std::to_string(choice.g_second) + "," + std::to_string(choice.d_first) + "," +
               std::to_string(choice.d_second) + ")";
      });
    }
  }
  return tally.finish(11, "oracle lift independence", std::to_string(pairs) + " pairs");
}

}  // namespace

CriterionResult run_criterion(int id, SuiteLevel level) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  switch (id) {
    case 1: r = oracle_equivalence(level); break;
    case 2: r = weak_2cy(level); break;
    case 3: r = hom_asymmetry(level); break;
    case 4: r = substructure(level); break;
    case 5: r = weak_ct_bijection(level); break;
    case 6: r = mutability_trichotomy(level); break;
    case 7: r = fountain_behaviour(level); break;
    case 8: r = fan_finiteness(level); break;
    case 9: r = limit_arcs(level); break;
    case 10: r = flip_involution(level); break;
    case 11: r = lift_independence(level); break;
    default: throw DomainError("no acceptance criterion " + std::to_string(id));
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<CriterionResult> run_acceptance(SuiteLevel level) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, level));
  return out;
}

}  // namespace infgon
