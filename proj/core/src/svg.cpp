#include "hyperbolica/svg.hpp"

#include <cstdio>
#include <functional>

namespace hyperbolica {

namespace {

constexpr double kCanvas = 512.0;
constexpr double kMargin = 56.0;

std::string px(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

// Affine map from interval coordinates to the canvas, flipping the vertical
// axis (SVG y grows downwards).  Degenerate extents collapse to the centre.
class Frame {
 public:
  explicit Frame(const HInterval& interval) {
    const auto [p1, p2] = interval.projections();
    lo1_ = p1.lo;
    lo2_ = p2.lo;
    span1_ = p1.hi - p1.lo;
    span2_ = p2.hi - p2.lo;
  }

  double x(double a1) const {
    if (span1_ == 0.0) return kCanvas / 2.0;
    return kMargin + (a1 - lo1_) / span1_ * (kCanvas - 2.0 * kMargin);
  }

  double y(double a2) const {
    if (span2_ == 0.0) return kCanvas / 2.0;
    return kCanvas - kMargin - (a2 - lo2_) / span2_ * (kCanvas - 2.0 * kMargin);
  }

 private:
  double lo1_, lo2_, span1_, span2_;
};

void open_document(std::string& out) {
  out +=
      "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 512 512\" "
      "width=\"512\" height=\"512\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"512\" height=\"512\" fill=\"#ffffff\"/>\n";
}

void draw_axes(std::string& out) {
  out += "<line x1=\"28\" y1=\"484\" x2=\"496\" y2=\"484\" stroke=\"#888888\" "
         "stroke-width=\"1\"/>\n";
  out += "<line x1=\"28\" y1=\"484\" x2=\"28\" y2=\"16\" stroke=\"#888888\" "
         "stroke-width=\"1\"/>\n";
  out += "<text x=\"498\" y=\"488\" font-size=\"12\" fill=\"#555555\">e1</text>\n";
  out += "<text x=\"22\" y=\"12\" font-size=\"12\" fill=\"#555555\">e2</text>\n";
}

void draw_box(std::string& out, const Frame& frame, const HInterval& box,
              const char* fill, const char* stroke, const char* extra) {
  const double x0 = frame.x(box.lo().a1);
  const double x1 = frame.x(box.hi().a1);
  const double y0 = frame.y(box.hi().a2);
  const double y1 = frame.y(box.lo().a2);
  if (x1 - x0 < 0.01 && y1 - y0 < 0.01) {
    out += "<circle cx=\"" + px(x0) + "\" cy=\"" + px(y1) + "\" r=\"3\" fill=\"" +
           stroke + "\"/>\n";
    return;
  }
  if (x1 - x0 < 0.01 || y1 - y0 < 0.01) {
    out += "<line x1=\"" + px(x0) + "\" y1=\"" + px(y1) + "\" x2=\"" + px(x1) +
           "\" y2=\"" + px(y0) + "\" stroke=\"" + stroke +
           "\" stroke-width=\"2.5\"/>\n";
    return;
  }
  out += "<rect x=\"" + px(x0) + "\" y=\"" + px(y0) + "\" width=\"" + px(x1 - x0) +
         "\" height=\"" + px(y1 - y0) + "\" fill=\"" + fill + "\" stroke=\"" +
         stroke + "\" " + extra + "/>\n";
}

void close_document(std::string& out) { out += "</svg>\n"; }

std::string document_for(const HInterval& interval,
                         const std::function<void(std::string&, const Frame&)>& body) {
  std::string out;
  open_document(out);
  draw_axes(out);
  const Frame frame(interval);
  draw_box(out, frame, interval, "#eef3fa", "#334466", "stroke-width=\"1.5\"");
  body(out, frame);
  close_document(out);
  return out;
}

}  // namespace

std::string render_svg(const HInterval& interval) {
  return document_for(interval, [](std::string&, const Frame&) {});
}

std::string render_svg(const StrongPartition& partition) {
  return document_for(partition.interval(), [&](std::string& out, const Frame& frame) {
    const auto points = partition.points();
    for (std::size_t j = 0; j + 1 < points.size(); ++j) {
      draw_box(out, frame, HInterval(points[j], points[j + 1]), "#d7e5f5",
               "#6688bb", "stroke-width=\"1\" fill-opacity=\"0.55\"");
    }
    if (points.size() > 1) {
      std::string path = "<polyline points=\"";
      for (std::size_t j = 0; j < points.size(); ++j) {
        if (j > 0) path += ' ';
        path += px(frame.x(points[j].a1)) + "," + px(frame.y(points[j].a2));
      }
      out += path + "\" fill=\"none\" stroke=\"#bb3333\" stroke-width=\"1.2\"/>\n";
    }
    for (const Hyperbolic& p : points) {
      out += "<circle cx=\"" + px(frame.x(p.a1)) + "\" cy=\"" + px(frame.y(p.a2)) +
             "\" r=\"3\" fill=\"#bb3333\"/>\n";
    }
  });
}

std::string render_svg(const WeakPartition& partition) {
  return document_for(partition.interval(), [&](std::string& out, const Frame& frame) {
    for (const HInterval& sub : partition.subintervals()) {
      draw_box(out, frame, sub, "#88aa66", "#447722",
               "stroke-width=\"1\" fill-opacity=\"0.3\"");
    }
  });
}

std::string render_svg(const RegularPartition& partition) {
  return document_for(partition.interval(), [&](std::string& out, const Frame& frame) {
    for (const HInterval& cell : partition.cells()) {
      draw_box(out, frame, cell, "#cc9944", "#885511",
               "stroke-width=\"1\" fill-opacity=\"0.25\"");
    }
  });
}

std::string render_svg(const DiscontinuityLines& lines, const HInterval& frame_box) {
  return document_for(frame_box, [&](std::string& out, const Frame& frame) {
    const auto [p1, p2] = frame_box.projections();
    for (double v : lines.vertical) {
      out += "<line x1=\"" + px(frame.x(v)) + "\" y1=\"" + px(frame.y(p2.lo)) +
             "\" x2=\"" + px(frame.x(v)) + "\" y2=\"" + px(frame.y(p2.hi)) +
             "\" stroke=\"#cc4444\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
    }
    for (double h : lines.horizontal) {
      out += "<line x1=\"" + px(frame.x(p1.lo)) + "\" y1=\"" + px(frame.y(h)) +
             "\" x2=\"" + px(frame.x(p1.hi)) + "\" y2=\"" + px(frame.y(h)) +
             "\" stroke=\"#4444cc\" stroke-width=\"1.5\" stroke-dasharray=\"6 3\"/>\n";
    }
  });
}

}  // namespace hyperbolica
