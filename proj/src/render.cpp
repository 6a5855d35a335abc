#include "infgon/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace infgon {

namespace {

constexpr double kSize = 400.0;
constexpr double kCentre = kSize / 2;
constexpr double kRadius = 180.0;

struct Xy {
  double x = 0;
  double y = 0;
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", std::abs(v) < 0.005 ? 0.0 : v);
  return buf;
}

/// Slots per interval: exit gap below, 2R+1 points, exit gap above, accumulation.
class Layout {
 public:
  Layout(const Surface& s, Index radius) : surface_(s), radius_(radius), per_interval_(2 * radius + 4) {}

  Xy at_slot(int interval, Index slot) const {
    const double total = static_cast<double>(surface_.intervals() * per_interval_);
    const double index = static_cast<double>((interval - 1) * per_interval_ + slot);
    const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * index / total;
    return {kCentre + kRadius * std::cos(theta), kCentre - kRadius * std::sin(theta)};
  }
  Xy at(const Point& p) const {
    return p.accumulation ? at_slot(p.interval, per_interval_ - 1) : at_slot(p.interval, p.pos + radius_ + 1);
  }
  Xy exit(int interval, bool upward) const { return at_slot(interval, upward ? per_interval_ - 2 : 0); }
  bool shows(const Point& p) const { return p.accumulation || (p.pos >= -radius_ && p.pos <= radius_); }

 private:
  Surface surface_;
  Index radius_;
  Index per_interval_;
};

std::string chord(const Xy& a, const Xy& b) {
  const Xy mid{(a.x + b.x) / 2, (a.y + b.y) / 2};
  const Xy ctrl{kCentre + (mid.x - kCentre) * 0.4, kCentre + (mid.y - kCentre) * 0.4};
  return "M " + num(a.x) + " " + num(a.y) + " Q " + num(ctrl.x) + " " + num(ctrl.y) + " " + num(b.x) + " " +
         num(b.y);
}

class SvgWriter {
 public:
  SvgWriter(const Surface& s, const RenderSpec& spec) : layout_(s, spec.radius), surface_(s), spec_(spec) {
    if (spec.radius < 2) throw DomainError("render radius must be at least 2");
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(kSize) << "\" height=\""
         << num(kSize) << "\" viewBox=\"0 0 " << num(kSize) << " " << num(kSize) << "\">\n"
         << "<title>" << to_string(s) << " radius " << spec.radius << "</title>\n"
         << "<circle class=\"boundary\" cx=\"" << num(kCentre) << "\" cy=\"" << num(kCentre) << "\" r=\""
         << num(kRadius) << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1\"/>\n";
  }

  void arc(const Arc& a, const char* cls, const char* colour, double width) {
    if (!layout_.shows(a.first()) || !layout_.shows(a.second())) return;
    out_ << "<path class=\"" << cls << "\" d=\"" << chord(layout_.at(a.first()), layout_.at(a.second()))
         << "\" fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"" << num(width) << "\"/>\n";
  }

  void truncation(const Xy& a, const Xy& b) {
    out_ << "<path class=\"truncation\" d=\"" << chord(a, b)
         << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1.00\" stroke-dasharray=\"4 3\"/>\n";
  }

  void family_ends(const Family& f) {
    for (ParamEnd end : {ParamEnd::kLower, ParamEnd::kUpper}) {
      if ((end == ParamEnd::kLower && f.domain.lo) || (end == ParamEnd::kUpper && f.domain.hi)) continue;
      const auto where = [&](const AffineEndpoint& e) {
        if (const auto* p = std::get_if<Point>(&e)) return layout_.at(*p);
        const Moving& m = std::get<Moving>(e);
        return layout_.exit(m.interval, (m.stride > 0) == (end == ParamEnd::kUpper));
      };
      truncation(where(f.e0), where(f.e1));
    }
  }

  std::string finish() {
    for (int k = 1; k <= surface_.intervals(); ++k) {
      for (Index i = -spec_.radius; i <= spec_.radius; ++i) {
        const Xy p = layout_.at(Point::regular(k, i));
        out_ << "<circle class=\"point\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
             << "\" r=\"2.50\" fill=\"black\"/>\n";
      }
      if (surface_.is_completed()) {
        const Xy p = layout_.at(Point::limit(k));
        out_ << "<circle class=\"accumulation\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
             << "\" r=\"4.00\" fill=\"white\" stroke=\"black\" stroke-width=\"1.50\"/>\n";
      }
    }
    for (const Arc& h : spec_.highlight) arc(h, "highlight", "#c0392b", 2.5);
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  Layout layout_;
  Surface surface_;
  RenderSpec spec_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(const Triangulation& t, const RenderSpec& spec) {
  SvgWriter svg(t.surface(), spec);
  for (const Arc& a : arcs_in_window(t, {t.surface(), spec.radius})) svg.arc(a, "arc", "#1f4e79", 1.2);
  for (const ArcGenerator& g : t.generators()) {
    if (const auto* f = std::get_if<Family>(&g)) svg.family_ends(*f);
  }
  return svg.finish();
}

std::string render_svg(const Surface& s, const std::vector<Arc>& arcs, const RenderSpec& spec) {
  SvgWriter svg(s, spec);
  for (const Arc& a : arcs) svg.arc(a, "arc", "#1f4e79", 1.2);
  return svg.finish();
}

}  // namespace infgon
