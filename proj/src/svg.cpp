#include "gridfary/svg.h"

#include <algorithm>
#include <ostream>

namespace gridfary {

void write_svg(const Drawing& d, std::ostream& out) {
  const long long extent = std::max<long long>(
      1, std::max(d.bbox.width(), d.bbox.height()));
  const double scale = 1024.0 / static_cast<double>(extent);
  const double margin = 24.0;
  const double width = d.bbox.width() * scale + 2 * margin;
  const double height = d.bbox.height() * scale + 2 * margin;
  auto sx = [&](long long x) { return (x - d.bbox.xmin) * scale + margin; };
  auto sy = [&](long long y) { return (d.bbox.ymax - y) * scale + margin; };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Grid ruling, thinned when the drawing spans many units.
  const long long step = std::max<long long>(1, (extent + 63) / 64);
  out << "<g stroke=\"#dddddd\" stroke-width=\"0.5\">\n";
  for (long long x = d.bbox.xmin; x <= d.bbox.xmax; x += step) {
    out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(d.bbox.ymin)
        << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(d.bbox.ymax) << "\"/>\n";
  }
  for (long long y = d.bbox.ymin; y <= d.bbox.ymax; y += step) {
    out << "<line x1=\"" << sx(d.bbox.xmin) << "\" y1=\"" << sy(y)
        << "\" x2=\"" << sx(d.bbox.xmax) << "\" y2=\"" << sy(y) << "\"/>\n";
  }
  out << "</g>\n";

  const bool label = d.edges.size() <= 60;
  out << "<g stroke=\"#1f4e8c\" stroke-width=\"1.5\">\n";
  for (const EdgeRecord& e : d.edges) {
    const Point a = d.positions[e.u];
    const Point b = d.positions[e.v];
    out << "<line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\""
        << sx(b.x) << "\" y2=\"" << sy(b.y) << "\"><title>" << e.u << "-"
        << e.v << " length " << e.length << "</title></line>\n";
  }
  out << "</g>\n";
  if (label) {
    out << "<g font-size=\"11\" fill=\"#555555\" text-anchor=\"middle\">\n";
    for (const EdgeRecord& e : d.edges) {
      const Point a = d.positions[e.u];
      const Point b = d.positions[e.v];
      out << "<text x=\"" << (sx(a.x) + sx(b.x)) / 2 << "\" y=\""
          << (sy(a.y) + sy(b.y)) / 2 - 3 << "\">" << e.length << "</text>\n";
    }
    out << "</g>\n";
  }

  out << "<g fill=\"#c03030\">\n";
  for (int v = 0; v < d.vertex_count(); ++v) {
    const Point p = d.positions[v];
    out << "<circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
        << "\" r=\"3\"><title>v" << v << " (" << p.x << "," << p.y
        << ")</title></circle>\n";
  }
  out << "</g>\n";
  if (label) {
    out << "<g font-size=\"10\" fill=\"#c03030\">\n";
    for (int v = 0; v < d.vertex_count(); ++v) {
      const Point p = d.positions[v];
      out << "<text x=\"" << sx(p.x) + 4 << "\" y=\"" << sy(p.y) - 4 << "\">"
          << v << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

}  // namespace gridfary
