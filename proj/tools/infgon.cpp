// infgon: command-line front end for the arc, triangulation and mutation engines.
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "infgon/hom_ext.hpp"
#include "infgon/io.hpp"
#include "infgon/mutation.hpp"
#include "infgon/render.hpp"
#include "infgon/verify.hpp"

namespace {

using infgon::Arc;
using infgon::Json;
using infgon::Point;
using infgon::Surface;
using infgon::Triangulation;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

/// Outcome of one verb: its JSON document and exit status.
struct Outcome {
  Json doc;
  int status = kOk;
};

Json point_json(const Point& p) { return infgon::to_string(p); }
Json arc_json(const Arc& a) { return infgon::to_string(a); }
Json opt_point_json(const std::optional<Point>& p) { return p ? point_json(*p) : Json(nullptr); }

Json arcs_json(const std::vector<Arc>& arcs) {
  Json out = Json::array();
  for (const Arc& a : arcs) out.push_back(arc_json(a));
  return out;
}

std::vector<Arc> parse_arc_list(const Surface& s, const std::string& text) {
  std::vector<Arc> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (!item.empty()) out.push_back(infgon::parse_arc(s, item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

infgon::Side parse_side(const std::string& text) {
  if (text == "left") return infgon::Side::kLeft;
  if (text == "right") return infgon::Side::kRight;
  throw infgon::ParseError(text, "side must be left or right");
}

Json scan_json(const infgon::NeighborScan& scan) {
  Json pieces = Json::array();
  for (const infgon::ScanPiece& piece : scan.points) {
    if (const auto* p = std::get_if<Point>(&piece)) {
      pieces.push_back(point_json(*p));
      continue;
    }
    const auto& run = std::get<infgon::Progression>(piece);
    Json r;
    r["interval"] = run.interval;
    r["anchor"] = run.anchor;
    r["stride"] = run.stride;
    r["range"] = infgon::to_json(infgon::ParamRange{run.lo, run.hi});
    pieces.push_back(std::move(r));
  }
  Json out;
  out["endpoint"] = point_json(scan.at_endpoint);
  out["side"] = infgon::to_string(scan.side);
  out["partners"] = std::move(pieces);
  out["extremum"] = opt_point_json(scan.extremum);
  return out;
}

Json frame_json(const infgon::QuadFrame& f) {
  Json out;
  out["arc"] = arc_json(f.arc);
  out["u_left"] = opt_point_json(f.u_left);
  out["u_right"] = opt_point_json(f.u_right);
  out["v_left"] = opt_point_json(f.v_left);
  out["v_right"] = opt_point_json(f.v_right);
  out["defined"] = f.defined();
  return out;
}

Json limit_json(const infgon::LimitResult& r) {
  Json out;
  if (const auto* arc = std::get_if<infgon::ConvergesToArc>(&r)) {
    out["kind"] = "arc";
    out["arc"] = arc_json(arc->limit);
  } else if (const auto* point = std::get_if<infgon::ConvergesToAccumulationPoint>(&r)) {
    out["kind"] = "accumulation-point";
    out["point"] = point_json(point->point);
  } else {
    out["kind"] = "boundary-segment";
  }
  return out;
}

/// Human-readable rendering for --pretty: one row per top-level key.
void print_pretty(const Json& doc) {
  if (doc.contains("criteria")) {
    for (const Json& c : doc["criteria"]) {
      std::printf("%s  C%-2d %-42s %8zu checks  %s\n", c["pass"].get<bool>() ? "PASS" : "FAIL", c["id"].get<int>(),
                  c["name"].get<std::string>().c_str(), c["checked"].get<std::size_t>(),
                  c["detail"].get<std::string>().c_str());
    }
    std::printf("passed %d, failed %d\n", doc["passed"].get<int>(), doc["failed"].get<int>());
    return;
  }
  if (!doc.is_object()) {
    std::printf("%s\n", doc.dump().c_str());
    return;
  }
  std::size_t width = 0;
  for (const auto& [key, value] : doc.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : doc.items()) {
    const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
    std::printf("%-*s  %s\n", static_cast<int>(width), key.c_str(), text.c_str());
  }
}

struct Operands {
  std::string surface;
  std::string from;
  std::string to;
  std::string arc;
  std::string arcs;
  std::string triangulation;
  std::string side = "right";
  std::string through = "all";
  std::string end;
  std::string out;
  std::string highlight;
  std::string level = "desk";
  std::int64_t bound = 2;
  std::int64_t radius = 6;
  int generator = -1;
};

Surface surface_of(const Operands& o) { return infgon::parse_surface(o.surface); }
Triangulation triangulation_of(const Operands& o) { return infgon::read_triangulation(o.triangulation); }

Outcome run_hom(const Operands& o) {
  const Surface s = surface_of(o);
  const Arc g = infgon::parse_arc(s, o.from);
  const Arc d = infgon::parse_arc(s, o.to);
  Json out;
  out["dim"] = infgon::as_int(s.is_completed() ? infgon::hom_cbar(g, d) : infgon::hom_c(g, d));
  return {out};
}

Outcome run_ext(const Operands& o) {
  const Surface s = surface_of(o);
  const Arc g = infgon::parse_arc(s, o.from);
  const Arc d = infgon::parse_arc(s, o.to);
  Json out;
  if (s.is_completed()) {
    out["dim"] = infgon::as_int(infgon::ext_perp_d(g, d));
    out["case"] = infgon::to_string(infgon::ext_case(g, d));
  } else {
    out["dim"] = infgon::as_int(infgon::hom_c(g, infgon::shift_arc(d, 1)));
  }
  return {out};
}

Outcome run_ext_oracle(const Operands& o) {
  const Surface s = surface_of(o);
  Json out;
  out["dim"] = infgon::as_int(infgon::ext_perp_d_oracle(infgon::parse_arc(s, o.from), infgon::parse_arc(s, o.to)));
  return {out};
}

Outcome run_cross(const Operands& o) {
  const Surface s = surface_of(o);
  Json out;
  out["cross"] = infgon::cross_transverse(infgon::parse_arc(s, o.from), infgon::parse_arc(s, o.to));
  return {out};
}

Outcome run_factor(const Operands& o) {
  const Surface s = surface_of(o);
  const Arc g = infgon::parse_arc(s, o.from);
  const Arc d = infgon::parse_arc(s, o.to);
  infgon::ArcSelector selector = infgon::ArcSelector::all();
  if (o.through == "in-d") {
    selector = infgon::ArcSelector::in_d();
  } else if (o.through == "in-perp-d") {
    selector = infgon::ArcSelector::in_perp_d();
  } else if (o.through != "all") {
    selector = infgon::ArcSelector::of(parse_arc_list(s, o.through));
  }
  const infgon::Hourglass h = infgon::hourglass(g, d);
  const auto witness = infgon::arc_across(s, h.i0, h.i1, selector);
  Json out;
  out["factors"] = witness.has_value();
  out["witness"] = witness ? arc_json(*witness) : Json(nullptr);
  return {out};
}

Outcome run_classify(const Operands& o) {
  const Surface s = surface_of(o);
  Json out;
  out["class"] = infgon::to_string(infgon::classify(infgon::parse_arc(s, o.arc)));
  return {out};
}

Outcome run_validate(const Operands& o) {
  const infgon::ValidationReport r = infgon::validate_non_crossing(triangulation_of(o));
  Json out;
  out["ok"] = r.ok;
  if (!r.ok) {
    out["problem"] = r.problem;
    out["first"] = r.first ? arc_json(*r.first) : Json(nullptr);
    out["second"] = r.second ? arc_json(*r.second) : Json(nullptr);
  }
  return {out, r.ok ? kOk : kVerificationFailed};
}

Outcome run_window_ct(const Operands& o) {
  const infgon::Window w{surface_of(o), o.bound};
  const auto sets = infgon::window_brute_force(w);
  Json list = Json::array();
  for (const auto& set : sets) list.push_back(arcs_json(set));
  Json out;
  out["count"] = sets.size();
  out["triangulations"] = std::move(list);
  return {out};
}

Outcome run_leapfrog(const Operands& o) {
  const auto w = infgon::detect_leapfrog(triangulation_of(o));
  Json out;
  out["leapfrog"] = w.has_value();
  if (w) {
    out["alpha"] = w->alpha;
    out["beta"] = w->beta;
    out["offset"] = w->offset;
    out["chain"] = infgon::to_json(w->chain);
    out["curve"] = arc_json(w->curve);
  }
  return {out};
}

Outcome run_limit(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  std::optional<infgon::ParamEnd> end;
  if (o.end == "upper") {
    end = infgon::ParamEnd::kUpper;
  } else if (o.end == "lower") {
    end = infgon::ParamEnd::kLower;
  } else if (!o.end.empty()) {
    throw infgon::ParseError(o.end, "end must be upper or lower");
  }
  Json out = Json::array();
  for (std::size_t k = 0; k < t.generators().size(); ++k) {
    if (o.generator >= 0 && static_cast<std::size_t>(o.generator) != k) continue;
    const auto* f = std::get_if<infgon::Family>(&t.generators()[k]);
    if (!f) continue;
    Json entry;
    entry["generator"] = k;
    entry["limit"] = limit_json(infgon::limit_of_family(t.surface(), *f, end));
    out.push_back(std::move(entry));
  }
  if (o.generator >= 0 && out.empty()) {
    throw infgon::ParseError(std::to_string(o.generator), "no family generator with this index");
  }
  return {out};
}

Outcome run_frame(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  return {frame_json(infgon::quad_frame(t, infgon::parse_arc(t.surface(), o.arc)))};
}

Outcome run_approx(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  const auto r = infgon::approximate(t, infgon::parse_arc(t.surface(), o.arc), parse_side(o.side));
  Json out;
  if (const auto* ok = std::get_if<infgon::ApproxExists>(&r)) {
    out["exists"] = true;
    out["summands"] = arcs_json(ok->summands);
  } else {
    out["exists"] = false;
    out["witness"] = scan_json(std::get<infgon::ApproxFails>(r).witness);
  }
  return {out};
}

Outcome run_mutable(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  const infgon::Mutability m = infgon::check_mutability(t, infgon::parse_arc(t.surface(), o.arc));
  Json out;
  out["mutable"] = m.mutable_arc;
  out["reason"] = infgon::to_string(m.reason);
  return {out};
}

Outcome run_flip(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  const Arc a = infgon::parse_arc(t.surface(), o.arc);
  try {
    const infgon::MutationResult r = infgon::flip(t, a);
    Json conflations = Json::array();
    for (const infgon::Conflation& c : r.conflations) {
      Json entry;
      entry["from"] = arc_json(c.from);
      entry["middle"] = arcs_json(c.middle);
      entry["to"] = arc_json(c.to);
      conflations.push_back(std::move(entry));
    }
    Json out;
    out["new_arc"] = arc_json(r.new_arc);
    out["conflations"] = std::move(conflations);
    out["triangulation"] = infgon::to_json(r.new_triangulation);
    if (!o.out.empty()) infgon::write_text(o.out, infgon::to_json(r.new_triangulation).dump(2) + "\n");
    return {out};
  } catch (const infgon::MutabilityError& e) {
    Json out;
    out["error"] = "not-mutable";
    out["reason"] = infgon::to_string(e.why().reason);
    out["frame"] = frame_json(e.why().frame);
    out["witness"] = e.scan() ? scan_json(*e.scan()) : Json(nullptr);
    return {out, kVerificationFailed};
  }
}

Outcome run_approx_object(const Operands& o) {
  const Triangulation t = triangulation_of(o);
  const auto r = infgon::right_module_generators(t, infgon::parse_arc(t.surface(), o.arc));
  Json out;
  if (const auto* gens = std::get_if<std::vector<Arc>>(&r)) {
    out["finite"] = true;
    out["generators"] = arcs_json(*gens);
  } else {
    const auto& nfg = std::get<infgon::NotFinitelyGenerated>(r);
    out["finite"] = false;
    out["generator"] = nfg.generator;
    out["range"] = infgon::to_json(nfg.range);
    out["reason"] = nfg.reason;
  }
  return {out};
}

Outcome run_render(const Operands& o) {
  infgon::RenderSpec spec;
  spec.radius = o.radius;
  std::string svg;
  if (!o.triangulation.empty()) {
    const Triangulation t = triangulation_of(o);
    spec.highlight = parse_arc_list(t.surface(), o.highlight);
    svg = infgon::render_svg(t, spec);
  } else {
    const Surface s = surface_of(o);
    spec.highlight = parse_arc_list(s, o.highlight);
    svg = infgon::render_svg(s, parse_arc_list(s, o.arcs), spec);
  }
  Json out;
  if (o.out.empty()) {
    out["svg"] = svg;
  } else {
    infgon::write_text(o.out, svg);
    out["written"] = o.out;
  }
  return {out};
}

Outcome run_verify_suite(const Operands& o) {
  if (o.level != "desk" && o.level != "quick") throw infgon::ParseError(o.level, "level must be quick or desk");
  const auto level = o.level == "desk" ? infgon::SuiteLevel::kDesk : infgon::SuiteLevel::kQuick;
  Json criteria = Json::array();
  int passed = 0;
  int failed = 0;
  for (const infgon::CriterionResult& r : infgon::run_acceptance(level)) {
    (r.pass ? passed : failed) += 1;
    Json c;
    c["id"] = r.id;
    c["name"] = r.name;
    c["pass"] = r.pass;
    c["checked"] = r.checked;
    c["failures"] = r.failures;
    c["detail"] = r.detail;
    criteria.push_back(std::move(c));
  }
  Json out;
  out["passed"] = passed;
  out["failed"] = failed;
  out["criteria"] = std::move(criteria);
  return {out, failed == 0 ? kOk : kVerificationFailed};
}

using Handler = Outcome (*)(const Operands&);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arcs, triangulations and mutation on infinity-gons"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "human-readable table instead of JSON");
  Operands o;

  std::vector<std::pair<CLI::App*, Handler>> verbs;
  const auto verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    verbs.emplace_back(sub, h);
    return sub;
  };
  const auto pair_verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = verb(name, help, h);
    sub->add_option("--surface", o.surface, "completed:n or uncompleted:m")->required();
    sub->add_option("--from", o.from, "first arc")->required();
    sub->add_option("--to", o.to, "second arc")->required();
    return sub;
  };
  const auto tri_verb = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = verb(name, help, h);
    sub->add_option("--triangulation", o.triangulation, "triangulation JSON file")->required();
    return sub;
  };

  pair_verb("hom", "dimension of Hom(from, to)", run_hom);
  pair_verb("ext", "extension dimension and case", run_ext);
  pair_verb("ext-oracle", "extension dimension from factorisations of lifts", run_ext_oracle);
  pair_verb("cross", "whether two arcs cross", run_cross);
  pair_verb("factor", "whether the morphism factors through selected arcs", run_factor)
      ->add_option("--through", o.through, "all, in-d, in-perp-d or a comma-separated arc list");
  CLI::App* classify = verb("classify", "class of an arc", run_classify);
  classify->add_option("--surface", o.surface, "surface")->required();
  classify->add_option("--arc", o.arc, "arc")->required();
  tri_verb("validate", "check that no two arcs cross", run_validate);
  CLI::App* window = verb("window-ct", "maximal non-crossing sets of a finite window", run_window_ct);
  window->add_option("--surface", o.surface, "surface")->required();
  window->add_option("--bound", o.bound, "largest |position| kept")->check(CLI::NonNegativeNumber);
  tri_verb("leapfrog", "find a leapfrog pattern", run_leapfrog);
  CLI::App* limit = tri_verb("limit", "limits of family generators", run_limit);
  limit->add_option("--generator", o.generator, "generator index");
  limit->add_option("--end", o.end, "upper or lower");
  tri_verb("frame", "quadrilateral frame of an arc", run_frame)->add_option("--arc", o.arc, "arc")->required();
  CLI::App* approx = tri_verb("approx", "left or right approximation of an arc", run_approx);
  approx->add_option("--arc", o.arc, "arc")->required();
  approx->add_option("--side", o.side, "left or right");
  tri_verb("mutable", "whether an arc can be flipped", run_mutable)->add_option("--arc", o.arc, "arc")->required();
  CLI::App* flip = tri_verb("flip", "flip an arc", run_flip);
  flip->add_option("--arc", o.arc, "arc")->required();
  flip->add_option("--out", o.out, "write the new triangulation here");
  tri_verb("approx-object", "generators of the restricted Hom functor into Sigma arc", run_approx_object)
      ->add_option("--arc", o.arc, "arc")
      ->required();
  CLI::App* render = verb("render", "SVG chord diagram", run_render);
  render->add_option("--triangulation", o.triangulation, "triangulation JSON file");
  render->add_option("--surface", o.surface, "surface for --arcs");
  render->add_option("--arcs", o.arcs, "comma-separated arcs");
  render->add_option("--highlight", o.highlight, "comma-separated arcs drawn highlighted");
  render->add_option("--radius", o.radius, "window radius");
  render->add_option("--out", o.out, "SVG output path");
  verb("verify-suite", "run the acceptance batteries", run_verify_suite)
      ->add_option("--level", o.level, "quick or desk");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  for (const auto& [sub, handler] : verbs) {
    if (!sub->parsed()) continue;
    try {
      const Outcome r = handler(o);
      if (pretty) {
        print_pretty(r.doc);
      } else {
        std::printf("%s\n", r.doc.dump().c_str());
      }
      return r.status;
    } catch (const infgon::ParseError& e) {
      std::fprintf(stderr, "infgon: %s\n", e.what());
    } catch (const infgon::DomainError& e) {
      std::fprintf(stderr, "infgon: %s\n", e.what());
    } catch (const std::runtime_error& e) {
      std::fprintf(stderr, "infgon: %s\n", e.what());
    }
    return kUsage;
  }
  return kUsage;
}
