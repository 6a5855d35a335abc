#include "doctest.h"
#include "infgon/surface.hpp"

using namespace infgon;

namespace {
const Surface c1 = Surface::completed(1);
const Surface c2 = Surface::completed(2);
Point P(const char* s) { return parse_point(s); }
}  // namespace

TEST_CASE("cyclic order on a completed surface") {
  CHECK(cyclic_ordered(c2, P("1:0"), {P("1:3"), P("a1"), P("2:-5")}));
  CHECK_FALSE(cyclic_ordered(c2, P("1:0"), {P("2:0"), P("1:3")}));
  CHECK(cyclic_ordered(c2, P("1:0"), {P("1:0"), P("1:0")}));
  CHECK(cyclic_ordered(c2, P("2:4"), {P("a2"), P("1:-100"), P("a1"), P("2:3")}));
  CHECK_FALSE(cyclic_ordered(c2, P("2:4"), {P("2:3"), P("a2")}));
}

TEST_CASE("strict order rejects repeated points") {
  CHECK(strictly_ordered(c1, P("1:0"), {P("1:1"), P("a1"), P("1:-1")}));
  CHECK_FALSE(strictly_ordered(c1, P("1:0"), {P("1:1"), P("1:1")}));
  CHECK_FALSE(strictly_ordered(c1, P("1:0"), {P("1:0"), P("1:1")}));
}

TEST_CASE("mixed surfaces are rejected") {
  CHECK_THROWS_AS(cyclic_ordered(c1, P("1:0"), {P("2:0")}), DomainError);
}

TEST_CASE("step and adjacency") {
  CHECK(step(P("1:4"), 1) == P("1:5"));
  CHECK(step(P("a1"), 1) == P("a1"));
  CHECK(step(step(P("1:4"), 1), -1) == P("1:4"));
  CHECK(step_by(P("2:-3"), 5) == P("2:2"));
  CHECK(adjacent(P("1:4"), P("1:5")));
  CHECK(adjacent(P("1:5"), P("1:4")));
  CHECK_FALSE(adjacent(P("1:4"), P("a1")));
  CHECK_FALSE(adjacent(P("1:4"), P("1:4")));
  CHECK_FALSE(adjacent(P("a1"), P("a1")));
}

TEST_CASE("reversal mirrors the circuit") {
  CHECK(reversed(c2, P("1:3")) == P("2:-3"));
  CHECK(reversed(c2, P("a1")) == P("a1"));
  CHECK(reversed(c2, P("a2")) == P("a2"));
  const Surface c3 = Surface::completed(3);
  CHECK(reversed(c3, P("a1")) == P("a2"));
  CHECK(reversed(c3, P("a3")) == P("a3"));
  const Surface u3 = Surface::uncompleted(3);
  CHECK(reversed(u3, P("1:4")) == P("3:-4"));
  // Reversal turns anticlockwise chains into clockwise ones.
  CHECK(cyclic_ordered(c3, reversed(c3, P("1:0")),
                       {reversed(c3, P("a3")), reversed(c3, P("3:1")), reversed(c3, P("a1"))}));
}

TEST_CASE("boundary spans") {
  const Span s = boundary_span(c2, P("1:0"), P("2:0"), false, true);
  CHECK_FALSE(span_contains(s, P("1:0")));
  CHECK(span_contains(s, P("1:1")));
  CHECK(span_contains(s, P("a1")));
  CHECK(span_contains(s, P("2:-9")));
  CHECK(span_contains(s, P("2:0")));
  CHECK_FALSE(span_contains(s, P("2:1")));
  CHECK_FALSE(span_contains(s, P("a2")));
  const Span around = boundary_span(c1, P("1:0"), P("1:0"), false, false);
  CHECK(span_contains(around, P("a1")));
  CHECK(span_contains(around, P("1:-1")));
  CHECK_FALSE(span_contains(around, P("1:0")));
  const Span single = boundary_span(c1, P("1:0"), P("1:0"), true, true);
  CHECK(span_contains(single, P("1:0")));
  CHECK_FALSE(span_contains(single, P("1:1")));
}

TEST_CASE("lifts are totally ordered from a common base") {
  const Lift a = lift_point(c2, P("1:0"), P("a1"), 0);
  const Lift b = lift_point(c2, P("1:0"), P("1:-1"), 0);
  const Lift c = lift_point(c2, P("1:0"), P("1:1"), 1);
  CHECK(compare_lifts(c2, a, b) == std::strong_ordering::less);
  CHECK(compare_lifts(c2, b, c) == std::strong_ordering::less);
  CHECK(compare_lifts(c2, a, a) == std::strong_ordering::equal);
}

TEST_CASE("text syntax") {
  CHECK(parse_surface("completed:3") == Surface::completed(3));
  CHECK(parse_surface("uncompleted:4") == Surface::uncompleted(4));
  CHECK(parse_point("2:-7") == Point::regular(2, -7));
  CHECK(parse_point("a3") == Point::limit(3));
  CHECK(to_string(P("1:-4")) == "1:-4");
  CHECK(to_string(P("a2")) == "a2");
  CHECK(to_string(Surface::completed(2)) == "completed:2");
  CHECK_THROWS_AS(parse_point("2:x"), ParseError);
  CHECK_THROWS_AS(parse_point("b1"), ParseError);
  CHECK_THROWS_AS(parse_surface("completed:0"), ParseError);
  try {
    parse_point("1:4q");
  } catch (const ParseError& e) {
    CHECK(e.token() == "1:4q");
  }
}
