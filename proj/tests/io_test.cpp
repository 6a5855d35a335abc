#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "infgon/io.hpp"
#include "infgon/mutation.hpp"
#include "oracles.hpp"

using namespace infgon;

namespace {
const Surface c1 = Surface::completed(1);
const Surface c2 = Surface::completed(2);
const Surface u3 = Surface::uncompleted(3);

std::filesystem::path data_file(const char* name) { return std::filesystem::path(INFGON_DATA_DIR) / name; }

Triangulation round_trip(const Triangulation& t) { return parse_triangulation(to_json(t).dump()); }
}  // namespace

TEST_CASE("points and arcs print and parse back") {
  for (const Surface& s : {c2, u3}) {
    for (const Point& p : oracle::points(s, 4)) CHECK(parse_point(to_string(p)) == p);
    for (const Arc& a : oracle::arcs(s, 3)) CHECK(parse_arc(s, to_string(a)) == a);
    CHECK(parse_surface(to_string(s)) == s);
  }
}

TEST_CASE("triangulations round-trip through json") {
  CHECK(round_trip(build_fountain(c1, Point::regular(1, 0))) == build_fountain(c1, Point::regular(1, 0)));
  CHECK(round_trip(build_fountain(c2, Point::limit(2))) == build_fountain(c2, Point::limit(2)));
  const Triangulation zigzag = read_triangulation(data_file("zigzag_c1.json"));
  CHECK(round_trip(zigzag) == zigzag);
  for (const auto& set : window_brute_force({u3, 1})) {
    const Triangulation t(u3, {set.begin(), set.end()}, WindowChecked{1});
    CHECK(round_trip(t) == t);
  }
  const Triangulation flipped = flip(build_fountain(c1, Point::regular(1, 0)), parse_arc(c1, "1:0-1:4")).new_triangulation;
  CHECK(round_trip(flipped) == flipped);
  const Triangulation loose(c1, {parse_arc(c1, "1:0-1:2")}, Unverified{});
  CHECK(round_trip(loose) == loose);
}

TEST_CASE("bundled triangulations load") {
  const Triangulation fountain = read_triangulation(data_file("fountain_c1.json"));
  CHECK(fountain == build_fountain(c1, Point::regular(1, 0)));
  const Triangulation zigzag = read_triangulation(data_file("zigzag_c1.json"));
  CHECK(std::holds_alternative<CertifiedMaximal>(zigzag.certificate()));
  CHECK(validate_non_crossing(zigzag).ok);
  CHECK(detect_leapfrog(zigzag).has_value());
}

TEST_CASE("certificate defaults to unverified") {
  const Triangulation t = parse_triangulation(R"({"surface":"completed:1","generators":[{"single":"1:0-a1"}]})");
  CHECK(std::holds_alternative<Unverified>(t.certificate()));
  CHECK(to_json(Certificate{WindowChecked{3}}).dump() == R"({"window-checked":3})");
}

TEST_CASE("malformed documents name the offending token") {
  const auto message = [](const std::string& text) {
    try {
      parse_triangulation(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  CHECK(message(R"({"surface":"completed:x","generators":[]})").find("completed:x") != std::string::npos);
  CHECK(message(R"({"surface":"completed:1","generators":[{"single":"1:0-1:1"}]})").find("1:0-1:1") !=
        std::string::npos);
  CHECK(message(R"({"surface":"completed:1","generators":[{"single":"1:0-a1"}],"certificate":"sure"})")
            .find("sure") != std::string::npos);
  CHECK(message("{not json") != "accepted");
  CHECK_THROWS_AS(parse_triangulation(R"({"surface":"completed:1","generators":[{"family":{"e0":"1:0","e1":{"interval":1,"base":1,"stride":1},"domain":[0,null]}}]})"),
                  ParseError);
}

TEST_CASE("missing files are reported") {
  CHECK_THROWS_AS(read_triangulation("/nonexistent/t.json"), std::runtime_error);
  CHECK_THROWS_AS(write_text("/nonexistent/dir/out.svg", "x"), std::runtime_error);
}
