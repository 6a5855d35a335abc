#include "doctest.h"
#include "infgon/triangulation.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {
const Surface c1 = Surface::completed(1);
const Surface c2 = Surface::completed(2);
Arc A(const Surface& s, const char* text) { return parse_arc(s, text); }
Point P(const char* s) { return parse_point(s); }

Triangulation zigzag(std::optional<Index> top = std::nullopt) {
  const Family alpha{Moving{1, 0, 1}, Moving{1, 0, -1}, {1, top}};
  const Family beta{Moving{1, 1, 1}, Moving{1, 0, -1}, {1, top}};
  return build_zigzag_leapfrog(c1, alpha, beta, {});
}

std::vector<Point> scan_points(const NeighborScan& scan) {
  std::vector<Point> out;
  for (const ScanPiece& p : scan.points) {
    if (const auto* pt = std::get_if<Point>(&p)) out.push_back(*pt);
  }
  return out;
}
}  // namespace

TEST_CASE("families must instantiate to arcs") {
  CHECK_THROWS_AS(Triangulation(c1, {Family{P("1:0"), Moving{1, 1, 1}, {0, std::nullopt}}}, Unverified{}),
                  DomainError);
  CHECK_NOTHROW(Triangulation(c1, {Family{P("1:0"), Moving{1, 2, 1}, {0, std::nullopt}}}, Unverified{}));
  CHECK_THROWS_AS(Triangulation(c1, {Family{P("1:0"), Moving{1, 2, 0}, {}}}, Unverified{}), DomainError);
  CHECK_THROWS_AS(Triangulation(c1, {Family{P("1:0"), Moving{1, 2, 1}, {3, 2}}}, Unverified{}), DomainError);
}

TEST_CASE("fountain") {
  const Triangulation t = build_fountain(c1, P("1:0"));
  CHECK(std::holds_alternative<CertifiedMaximal>(t.certificate()));
  CHECK(validate_non_crossing(t).ok);
  CHECK(contains(t, A(c1, "1:0-a1")));
  CHECK(contains(t, A(c1, "1:0-1:2")));
  CHECK(contains(t, A(c1, "1:0-1:-40")));
  CHECK_FALSE(contains(t, A(c1, "1:1-1:3")));
  CHECK(arcs_in_window(t, {c1, 3}).size() == 5);

  const Triangulation at_limit = build_fountain(c2, P("a1"));
  CHECK(validate_non_crossing(at_limit).ok);
  CHECK(contains(at_limit, A(c2, "a1-a2")));
  CHECK(contains(at_limit, A(c2, "a1-1:7")));
  CHECK(contains(at_limit, A(c2, "a1-2:-7")));
  CHECK_FALSE(contains(at_limit, A(c2, "1:0-2:0")));
}

TEST_CASE("fountains are maximal on windows") {
  for (const Surface& s : {c1, c2}) {
    for (const Point& base : {P("1:0"), P("a1")}) {
      const Triangulation t = build_fountain(s, base);
      for (const Arc& a : Window{s, 4}.arcs()) CHECK((contains(t, a) != crossing_instance(t, a).has_value()));
    }
  }
}

TEST_CASE("non-crossing validation") {
  const Triangulation bad(c1, {Family{P("1:0"), Moving{1, 2, 1}, {0, std::nullopt}}, A(c1, "1:1-1:3")},
                          Unverified{});
  const ValidationReport report = validate_non_crossing(bad);
  CHECK_FALSE(report.ok);
  CHECK(report.problem == "crossing");
  CHECK(report.first == A(c1, "1:0-1:2"));
  CHECK(report.second == A(c1, "1:1-1:3"));

  const Triangulation parallel(c2, {Family{P("1:0"), Moving{2, 0, 1}, {0, std::nullopt}},
                                    Family{P("1:1"), Moving{2, 0, 1}, {std::nullopt, 0}}},
                               Unverified{});
  CHECK(validate_non_crossing(parallel).ok);

  const Triangulation self_crossing(c2, {Family{Moving{1, 0, 1}, Moving{2, 0, 1}, {}}}, Unverified{});
  CHECK_FALSE(validate_non_crossing(self_crossing).ok);

  const Triangulation duplicate(c1, {Family{P("1:0"), Moving{1, 2, 1}, {0, std::nullopt}}, A(c1, "1:0-1:9")},
                               Unverified{});
  const ValidationReport dup = validate_non_crossing(duplicate);
  CHECK_FALSE(dup.ok);
  CHECK(dup.problem == "duplicate");
}

TEST_CASE("window enumeration") {
  CHECK(window_brute_force({Surface::uncompleted(2), 1}).size() == 14);
  CHECK(window_brute_force({Surface::uncompleted(4), 0}).size() == 2);
  CHECK(window_brute_force({c1, 1}).size() == 2);
  CHECK_THROWS_AS(window_brute_force({c1, 6}), ResourceError);
}

TEST_CASE("window sets are pairwise non-crossing and maximal") {
  const Window w{Surface::uncompleted(3), 1};
  const auto all = w.arcs();
  for (const auto& set : window_brute_force(w)) {
    for (const Arc& a : set) {
      for (const Arc& b : set) CHECK_FALSE(oracle::crosses(a, b, 1));
    }
    for (const Arc& a : all) {
      if (std::find(set.begin(), set.end(), a) != set.end()) continue;
      bool blocked = false;
      for (const Arc& b : set) blocked = blocked || oracle::crosses(a, b, 1);
      CHECK(blocked);
    }
  }
}

TEST_CASE("leapfrog construction and detection") {
  const Triangulation t = zigzag();
  CHECK(std::holds_alternative<CertifiedMaximal>(t.certificate()));
  const auto witness = detect_leapfrog(t);
  REQUIRE(witness);
  CHECK(witness->chain.lo == 1);
  CHECK_FALSE(witness->chain.hi);
  CHECK(cross_transverse(witness->curve, A(c1, "1:-30-1:30")));
  CHECK_THROWS_AS(zigzag(5), DomainError);
  const Family alpha{Moving{1, 0, 1}, Moving{1, 0, -1}, {1, std::nullopt}};
  const Family loose{Moving{1, 3, 1}, Moving{1, 0, -1}, {1, std::nullopt}};
  CHECK_THROWS_AS(build_zigzag_leapfrog(c1, alpha, loose, {}), DomainError);
}

TEST_CASE("fans have no leapfrog") {
  CHECK_FALSE(detect_leapfrog(build_fountain(c1, P("1:0"))));
  CHECK_FALSE(detect_leapfrog(build_fountain(c2, P("a2"))));
  // A finite zigzag closing a region of the fountain on completed:2.
  std::vector<ArcGenerator> gens = build_fountain(c2, P("a1")).generators();
  (void)gens;
  const Triangulation finite(c2,
                             {Family{P("1:0"), Moving{2, 0, 1}, {0, std::nullopt}},
                              A(c2, "1:0-a2"), A(c2, "1:0-2:-1"), A(c2, "1:0-2:-3"), A(c2, "1:1-2:-3"),
                              A(c2, "1:1-2:-5"), A(c2, "1:2-2:-5")},
                             Unverified{});
  REQUIRE(validate_non_crossing(finite).ok);
  CHECK_FALSE(detect_leapfrog(finite));
}

TEST_CASE("limits of families") {
  const auto arc = limit_of_family(c2, {P("1:0"), Moving{1, 2, 1}, {0, std::nullopt}});
  CHECK(std::get<ConvergesToArc>(arc).limit == A(c2, "1:0-a1"));
  const auto both = limit_of_family(c2, {P("a1"), Moving{2, 1, 1}, {0, std::nullopt}});
  CHECK(std::get<ConvergesToArc>(both).limit == A(c2, "a1-a2"));
  const auto point = limit_of_family(c1, {P("a1"), Moving{1, -1, -1}, {0, std::nullopt}});
  CHECK(std::get<ConvergesToAccumulationPoint>(point).point == P("a1"));
  CHECK_THROWS_AS(limit_of_family(c1, {P("a1"), Moving{1, 0, 1}, {0, 4}}), DomainError);
  CHECK_THROWS_AS(limit_of_family(c1, {P("1:0"), Moving{1, 5, 1}, {}}), DomainError);
  const auto down = limit_of_family(c2, {P("1:0"), Moving{2, 0, 1}, {}}, ParamEnd::kLower);
  CHECK(std::get<ConvergesToArc>(down).limit == A(c2, "1:0-a1"));
}

TEST_CASE("neighbour scans on the fountain") {
  const Triangulation t = build_fountain(c1, P("1:0"));
  const NeighborScan open = neighbor_scan(t, A(c1, "1:0-a1"), P("1:0"), Side::kLeft);
  CHECK_FALSE(open.extremum);
  REQUIRE(open.points.size() == 1);
  const auto& prog = std::get<Progression>(open.points[0]);
  CHECK(prog.first() == 2);
  CHECK_FALSE(prog.hi);

  const NeighborScan finite = neighbor_scan(t, A(c1, "1:0-1:5"), P("1:0"), Side::kLeft);
  CHECK(finite.extremum == P("1:4"));
  std::vector<Index> seen;
  for (const ScanPiece& p : finite.points) {
    if (const auto* pt = std::get_if<Point>(&p)) {
      seen.push_back(pt->pos);
    } else {
      const auto& pr = std::get<Progression>(p);
      for (Index v = *pr.first(); v <= *pr.last(); v += pr.stride) seen.push_back(v);
    }
  }
  CHECK(seen == std::vector<Index>{2, 3, 4});

  const NeighborScan none = neighbor_scan(t, A(c1, "1:0-1:5"), P("1:5"), Side::kLeft);
  CHECK(none.empty());
  CHECK_FALSE(none.extremum);

  const NeighborScan right = neighbor_scan(t, A(c1, "1:0-1:5"), P("1:0"), Side::kRight);
  CHECK(right.extremum == P("1:6"));
  CHECK_THROWS_AS(neighbor_scan(t, A(c1, "1:1-1:5"), P("1:1"), Side::kLeft), DomainError);
  CHECK_THROWS_AS(neighbor_scan(t, A(c1, "1:0-1:5"), P("1:3"), Side::kLeft), DomainError);
}

TEST_CASE("scan extremum is a partner in the triangulation") {
  const Triangulation t = build_fountain(c2, P("a1"));
  for (const Arc& a : arcs_in_window(t, {c2, 3})) {
    for (const Point& u : {a.first(), a.second()}) {
      for (Side side : {Side::kLeft, Side::kRight}) {
        const NeighborScan scan = neighbor_scan(t, a, u, side);
        if (scan.extremum) CHECK(contains(t, Arc(c2, u, *scan.extremum)));
        for (const Point& w : scan_points(scan)) CHECK(contains(t, Arc(c2, u, w)));
      }
    }
  }
}

TEST_CASE("reversal maps the triangulation onto its mirror image") {
  const Triangulation t = build_fountain(c2, P("1:0"));
  const Triangulation r = reversed(t);
  CHECK(validate_non_crossing(r).ok);
  for (const Arc& a : Window{c2, 3}.arcs()) CHECK(contains(t, a) == contains(r, reversed(a)));
}
