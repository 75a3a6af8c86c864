#pragma once

#include <string>
#include <utility>
#include <vector>

#include "windsentry/csvutil.hpp"

namespace windsentry::svg {

// Just enough SVG to draw the report figures. Coordinates are pixels;
// Frame maps data space into a plot rectangle.

inline std::string num(double v) { return format_double(v); }

class Canvas {
 public:
  Canvas(double width, double height) : width_(width), height_(height) {
    body_ += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
             num(width) + "\" height=\"" + num(height) +
             "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    body_ += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  }

  void line(double x1, double y1, double x2, double y2,
            const std::string& stroke = "black", double w = 1.0,
            const std::string& dash = "") {
    body_ += "<line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" +
             num(x2) + "\" y2=\"" + num(y2) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(w) + "\"";
    if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
    body_ += "/>\n";
  }

  void polyline(const std::vector<std::pair<double, double>>& pts,
                const std::string& stroke, double w = 1.5,
                const std::string& dash = "") {
    if (pts.size() < 2) return;
    body_ += "<polyline fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"" + num(w) + "\"";
    if (!dash.empty()) body_ += " stroke-dasharray=\"" + dash + "\"";
    body_ += " points=\"";
    for (const auto& [x, y] : pts) {
      body_ += num(x) + "," + num(y) + " ";
    }
    body_ += "\"/>\n";
  }

  void circle(double cx, double cy, double r, const std::string& fill,
              double opacity = 1.0) {
    body_ += "<circle cx=\"" + num(cx) + "\" cy=\"" + num(cy) + "\" r=\"" +
             num(r) + "\" fill=\"" + fill + "\"";
    if (opacity < 1.0) body_ += " fill-opacity=\"" + num(opacity) + "\"";
    body_ += "/>\n";
  }

  void rect(double x, double y, double w, double h, const std::string& fill,
            double opacity = 1.0) {
    body_ += "<rect x=\"" + num(x) + "\" y=\"" + num(y) + "\" width=\"" +
             num(w) + "\" height=\"" + num(h) + "\" fill=\"" + fill + "\"";
    if (opacity < 1.0) body_ += " fill-opacity=\"" + num(opacity) + "\"";
    body_ += "/>\n";
  }

  void text(double x, double y, const std::string& s, double size = 12.0,
            const std::string& anchor = "start") {
    body_ += "<text x=\"" + num(x) + "\" y=\"" + num(y) +
             "\" font-family=\"sans-serif\" font-size=\"" + num(size) +
             "\" text-anchor=\"" + anchor + "\">" + s + "</text>\n";
  }

  std::string str() const { return body_ + "</svg>\n"; }

 private:
  double width_;
  double height_;
  std::string body_;
};

// Plot rectangle with linear data-to-pixel mapping (y grows upward in
// data space, downward in SVG space).
struct Frame {
  double px = 60.0, py = 20.0, pw = 520.0, ph = 320.0;  // pixel rect
  double x0 = 0.0, x1 = 1.0, y0 = 0.0, y1 = 1.0;        // data ranges

  double mx(double x) const { return px + (x - x0) / (x1 - x0) * pw; }
  double my(double y) const { return py + (y1 - y) / (y1 - y0) * ph; }

  void axes(Canvas& c, const std::string& xlabel, const std::string& ylabel,
            int ticks = 5) const {
    c.line(px, py + ph, px + pw, py + ph);
    c.line(px, py, px, py + ph);
    for (int i = 0; i <= ticks; ++i) {
      const double fx = x0 + (x1 - x0) * i / ticks;
      const double fy = y0 + (y1 - y0) * i / ticks;
      const double tx = mx(fx);
      const double ty = my(fy);
      c.line(tx, py + ph, tx, py + ph + 4);
      c.text(tx, py + ph + 16, round3(fx), 10, "middle");
      c.line(px - 4, ty, px, ty);
      c.text(px - 6, ty + 3, round3(fy), 10, "end");
    }
    c.text(px + pw / 2, py + ph + 32, xlabel, 11, "middle");
    c.text(14, py + ph / 2, ylabel, 11, "middle");
  }

  static std::string round3(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3g", v);
    return buf;
  }
};

}  // namespace windsentry::svg
