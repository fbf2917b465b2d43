#include "filling/svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

namespace filling {

namespace {

constexpr double radius = 70.0;
constexpr double cell = 220.0;
constexpr double height = 260.0;
constexpr double arrow_at = 0.58;
constexpr double label_offset = 16.0;

struct Point
{
  double x, y;
};

Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }

Point unit(Point a)
{
  double len = std::hypot(a.x, a.y);
  return len > 0 ? Point{a.x / len, a.y / len} : Point{0, 0};
}

// Quadratic Bezier; a straight edge uses the chord midpoint as control.
struct Edge
{
  Point from, control, to;

  Point at(double t) const
  {
    double u = 1 - t;
    return u * u * from + 2 * u * t * control + t * t * to;
  }

  Point tangent(double t) const { return 2 * (1 - t) * (control - from) + 2 * t * (to - control); }
};

std::ostream &operator<<(std::ostream &out, Point p)
{
  return out << p.x << ',' << p.y;
}

char const *colour(Curve c)
{
  return c == Curve::alpha ? "#8b0000" : "#0000cd";
}

} // namespace

std::string render_svg(GluedSurface const &surface)
{
  std::ostringstream out;
  out << std::fixed << std::setprecision(2);

  double const width = cell * static_cast<double>(std::max<std::size_t>(surface.faces.size(), 1));
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (std::size_t f = 0; f < surface.faces.size(); ++f) {
    auto const &face = surface.faces[f];
    auto const k = face.word.size();
    Point const centre{cell * (static_cast<double>(f) + 0.5), height / 2};

    // Screen y grows downwards, so increasing angle runs clockwise.
    std::vector<Point> corners;
    for (std::size_t m = 0; m < k; ++m) {
      double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(k);
      if (k > 2)
        angle -= std::numbers::pi / static_cast<double>(k);
      corners.push_back(centre + radius * Point{std::cos(angle), std::sin(angle)});
    }

    out << "<g id=\"F" << f + 1 << "\">\n";
    for (std::size_t m = 0; m < k; ++m) {
      Point const a = corners[m];
      Point const b = corners[(m + 1) % k];
      Point const mid = 0.5 * (a + b);
      Point control = mid;
      if (k == 2)
        control = mid + radius * unit(Point{b.y - a.y, a.x - b.x});

      Edge const edge{a, control, b};
      auto const &label = face.word[m];

      out << "<path d=\"M" << a << " Q" << control << ' ' << b << "\" fill=\"none\" stroke=\""
          << colour(label.curve) << "\" stroke-width=\"2\"/>\n";

      double const t = label.inverted ? 1 - arrow_at : arrow_at;
      Point const tip_dir = unit((label.inverted ? -1.0 : 1.0) * edge.tangent(t));
      Point const normal{-tip_dir.y, tip_dir.x};
      Point const base = edge.at(t);
      Point const tip = base + 6.0 * tip_dir;
      Point const left = base - 5.0 * tip_dir + 4.0 * normal;
      Point const right = base - 5.0 * tip_dir - 4.0 * normal;
      out << "<polygon points=\"" << tip << ' ' << left << ' ' << right << "\" fill=\""
          << colour(label.curve) << "\"/>\n";

      Point const anchor = edge.at(0.5) + label_offset * unit(edge.at(0.5) - centre);
      out << "<text x=\"" << anchor.x << "\" y=\"" << anchor.y
          << "\" font-family=\"serif\" font-size=\"13\" text-anchor=\"middle\" "
             "dominant-baseline=\"middle\">"
          << to_string(label) << "</text>\n";
    }
    if (face.punctured)
      out << "<circle cx=\"" << centre.x << "\" cy=\"" << centre.y << "\" r=\"3\" fill=\"black\"/>\n";
    out << "</g>\n";
  }

  out << "</svg>\n";
  return out.str();
}

} // namespace filling
