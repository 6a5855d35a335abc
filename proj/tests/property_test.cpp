// Invariants checked exhaustively over small windows.
#include <random>
#include <set>

#include "doctest.h"
#include "infgon/hom_ext.hpp"
#include "infgon/mutation.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {
const std::vector<Surface> completed{Surface::completed(1), Surface::completed(2), Surface::completed(3)};
const std::vector<Surface> uncompleted{Surface::uncompleted(1), Surface::uncompleted(2), Surface::uncompleted(4)};
}  // namespace

TEST_CASE("crossing agrees with the rank oracle and is symmetric") {
  for (const auto& group : {completed, uncompleted}) {
    for (const Surface& s : group) {
      const auto arcs = oracle::arcs(s, 3);
      for (const Arc& g : arcs) {
        for (const Arc& d : arcs) {
          REQUIRE(cross_transverse(g, d) == oracle::crosses(g, d, 3));
          REQUIRE(cross_transverse(g, d) == cross_transverse(d, g));
        }
      }
    }
  }
}

TEST_CASE("shift is an automorphism of every relation") {
  for (const Surface& s : completed) {
    const auto arcs = oracle::arcs(s, 3);
    for (const Arc& g : arcs) {
      REQUIRE(shift_arc(shift_arc(g, 3), -3) == g);
      for (const Arc& d : arcs) {
        const Arc sg = shift_arc(g, 1);
        const Arc sd = shift_arc(d, 1);
        REQUIRE(ext_case(sg, sd) == ext_case(g, d));
        REQUIRE(hom_cbar(sg, sd) == hom_cbar(g, d));
        REQUIRE(ext_perp_d(sg, sd) == ext_perp_d(g, d));
      }
    }
  }
  for (const Surface& s : uncompleted) {
    const auto arcs = oracle::arcs(s, 3);
    for (const Arc& g : arcs) {
      for (const Arc& d : arcs) REQUIRE(hom_c(shift_arc(g, 2), shift_arc(d, 2)) == hom_c(g, d));
    }
  }
}

TEST_CASE("reversal is an involution preserving crossing") {
  for (const Surface& s : completed) {
    const auto arcs = oracle::arcs(s, 2);
    for (const Arc& g : arcs) {
      REQUIRE(reversed(reversed(g)) == g);
      for (const Arc& d : arcs) REQUIRE(cross_transverse(reversed(g), reversed(d)) == cross_transverse(g, d));
    }
  }
}

TEST_CASE("hom in the completed category matches the lift search") {
  for (const Surface& s : {Surface::completed(1), Surface::completed(2)}) {
    const auto arcs = oracle::arcs(s, 2);
    for (const Arc& g : arcs) {
      for (const Arc& d : arcs) REQUIRE(hom_cbar(g, d) == hom_cbar_by_lifts(g, d));
    }
  }
}

TEST_CASE("maximal window sets share one size and validate") {
  for (const Window& w : {Window{Surface::uncompleted(2), 1}, Window{Surface::completed(1), 2},
                          Window{Surface::completed(2), 1}, Window{Surface::uncompleted(7), 0}}) {
    const auto sets = window_brute_force(w);
    REQUIRE(!sets.empty());
    std::set<std::size_t> sizes;
    for (const auto& set : sets) {
      sizes.insert(set.size());
      const Triangulation t(w.surface, {set.begin(), set.end()}, WindowChecked{w.bound});
      REQUIRE(validate_non_crossing(t).ok);
    }
    CHECK(sizes.size() == 1);
  }
}

TEST_CASE("flips keep triangulations non-crossing") {
  const Window w{Surface::uncompleted(2), 1};
  for (const auto& set : window_brute_force(w)) {
    const Triangulation t(w.surface, {set.begin(), set.end()}, WindowChecked{w.bound});
    for (const Arc& a : set) {
      if (!is_mutable(t, a)) continue;
      const MutationResult r = flip(t, a);
      REQUIRE(validate_non_crossing(r.new_triangulation).ok);
      REQUIRE(cross_transverse(a, r.new_arc));
      REQUIRE(!contains(r.new_triangulation, a));
    }
  }
}

TEST_CASE("fountain instances never cross") {
  std::mt19937 rng(11);
  for (const Surface& s : completed) {
    for (const Point& base : {Point::regular(1, 0), Point::limit(s.intervals())}) {
      const Triangulation t = build_fountain(s, base);
      REQUIRE(validate_non_crossing(t).ok);
      const auto visible = arcs_in_window(t, {s, 5});
      for (int k = 0; k < 200; ++k) {
        const Arc& g = visible[rng() % visible.size()];
        const Arc& d = visible[rng() % visible.size()];
        REQUIRE(!oracle::crosses(g, d, 5));
      }
    }
  }
}
