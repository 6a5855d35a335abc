#include "doctest.h"
#include "infgon/arc.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {
const Surface c1 = Surface::completed(1);
const Surface c2 = Surface::completed(2);
const Surface u1 = Surface::uncompleted(1);
const Surface u2 = Surface::uncompleted(2);
const Surface u4 = Surface::uncompleted(4);
Arc A(const Surface& s, const char* text) { return parse_arc(s, text); }
}  // namespace

TEST_CASE("arcs need distinct non-adjacent endpoints") {
  CHECK_THROWS_AS(Arc(c1, Point::regular(1, 0), Point::regular(1, 1)), DomainError);
  CHECK_THROWS_AS(Arc(c1, Point::regular(1, 0), Point::regular(1, 0)), DomainError);
  CHECK_THROWS_AS(Arc(c1, Point::regular(1, 0), Point::regular(2, 0)), DomainError);
  CHECK(A(c1, "1:0-a1") == A(c1, "a1-1:0"));
  CHECK(A(c1, "1:0-a1").first() == Point::regular(1, 0));
  CHECK(A(c2, "a2-a1").first() == Point::limit(1));
  CHECK(to_string(A(c2, "2:3-1:0")) == "1:0-2:3");
  CHECK_THROWS_AS(parse_arc(c1, "1:0-"), ParseError);
  CHECK_THROWS_AS(parse_arc(c1, "1:0-1:1"), ParseError);
}

TEST_CASE("transverse crossing") {
  CHECK(cross_transverse(A(c2, "1:0-2:0"), A(c2, "1:1-2:1")));
  CHECK_FALSE(cross_transverse(A(u1, "1:0-1:5"), A(u1, "1:1-1:3")));
  CHECK(cross_transverse(A(c2, "1:0-a1"), A(c2, "1:2-2:0")));
  CHECK_FALSE(cross_transverse(A(c2, "1:0-a1"), A(c2, "a1-2:0")));
  CHECK_FALSE(cross_transverse(A(c2, "1:0-2:0"), A(c2, "1:0-2:0")));
}

TEST_CASE("crossing agrees with the window ranking oracle") {
  for (const Surface& s : {c1, c2, Surface::uncompleted(3)}) {
    const auto arcs = oracle::arcs(s, 2);
    for (const Arc& g : arcs) {
      for (const Arc& d : arcs) CHECK(cross_transverse(g, d) == oracle::crosses(g, d, 2));
    }
  }
}

TEST_CASE("shift") {
  CHECK(shift_arc(A(u1, "1:0-1:5"), 1) == A(u1, "1:1-1:6"));
  CHECK(shift_arc(A(c1, "1:0-a1"), 1) == A(c1, "1:1-a1"));
  CHECK(shift_arc(A(c2, "a1-a2"), 1) == A(c2, "a1-a2"));
  CHECK(shift_arc(A(c2, "1:0-2:7"), -3) == A(c2, "1:-3-2:4"));
}

TEST_CASE("squeeze and canonical lift") {
  CHECK(std::get<Arc>(squeeze(A(u4, "1:5-3:2"))) == A(c2, "1:5-2:2"));
  CHECK(std::get<Arc>(squeeze(A(u2, "1:0-2:7"))) == A(c1, "1:0-a1"));
  CHECK(std::holds_alternative<Collapsed>(squeeze(A(u4, "2:0-2:9"))));
  CHECK_THROWS_AS(squeeze(A(u1, "1:0-1:5")), DomainError);
  CHECK(canonical_lift(A(c2, "1:5-2:2")) == A(u4, "1:5-3:2"));
  CHECK(canonical_lift(A(c1, "1:0-a1")) == A(u2, "1:0-2:0"));
  CHECK(canonical_lift(A(c2, "a1-a2")) == A(u4, "2:0-4:0"));
  for (const Surface& s : {c1, c2}) {
    for (const Arc& g : oracle::arcs(s, 3)) CHECK(std::get<Arc>(squeeze(canonical_lift(g))) == g);
  }
}

TEST_CASE("classification by interval parity") {
  CHECK(classify(A(u4, "2:0-2:5")) == ArcClass::kInD);
  CHECK(classify(A(u4, "1:0-3:2")) == ArcClass::kInPerpD);
  CHECK(classify(A(u4, "2:0-4:1")) == ArcClass::kNeither);
  CHECK(classify(A(u4, "1:0-1:9")) == ArcClass::kInPerpD);
  CHECK_THROWS_AS(classify(A(Surface::uncompleted(3), "1:0-2:0")), DomainError);
  for (const Arc& g : oracle::arcs(u4, 2)) {
    CHECK((classify(g) == ArcClass::kInD) == std::holds_alternative<Collapsed>(squeeze(g)));
  }
}

TEST_CASE("crossing against odd-interval arcs does not depend on the lift") {
  for (const Arc& g : oracle::arcs(c1, 2)) {
    const Arc base = canonical_lift(g);
    for (Index shift : {-3, 2, 5}) {
      const Arc other = lift_with(g, shift, -shift);
      CHECK(std::get<Arc>(squeeze(other)) == g);
      for (const Arc& alpha : oracle::arcs(u2, 3)) {
        if (classify(alpha) != ArcClass::kInPerpD) continue;
        CHECK(cross_transverse(base, alpha) == cross_transverse(other, alpha));
      }
    }
  }
}

TEST_CASE("reversal") {
  CHECK(reversed(A(c2, "1:0-a1")) == A(c2, "2:0-a1"));
  CHECK(reversed(reversed(A(c2, "1:3-2:-4"))) == A(c2, "1:3-2:-4"));
}
