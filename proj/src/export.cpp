#include "diskmap/export.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "diskmap/functionals.hpp"

namespace diskmap {

namespace {

std::string num(double x)
{
    std::ostringstream s;
    s << std::setprecision(17) << x;
    return s.str();
}

std::string svg_escape(const std::string& text)
{
    std::string out;
    for (const char ch : text) {
        switch (ch) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        default: out += ch;
        }
    }
    return out;
}

// Maps a box in the plane onto a square panel with y pointing up.
struct Panel {
    double x0, y0, size;
    Complex center;
    double scale;

    [[nodiscard]] std::string xy(Complex z) const
    {
        const Complex u = (z - center) * scale;
        std::ostringstream s;
        s << std::fixed << std::setprecision(3) << x0 + size / 2 + u.real() << ',' << y0 + size / 2 - u.imag();
        return s.str();
    }
};

void polyline(std::ostream& out, const Panel& panel, const std::vector<Complex>& pts, bool closed,
              const char* color)
{
    out << "  <" << (closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    for (const Complex z : pts) out << panel.xy(z) << ' ';
    out << "\"/>\n";
}

} // namespace

void write_level_curve_csv(std::ostream& out, const LevelCurve& curve)
{
    out << kLevelCurveCsvHeader << '\n';
    for (const auto& p : curve.points) {
        out << num(p.s) << ',' << num(p.z.real()) << ',' << num(p.z.imag()) << ',' << num(p.w.real()) << ','
            << num(p.w.imag()) << ',' << num(std::abs(p.p)) << ',' << num(p.k) << ',' << num(p.kappa) << ','
            << num(p.residual) << '\n';
    }
}

std::vector<CurvatureMapRow> curvature_map(const MapSpec& map, const GridSpec& grid)
{
    std::vector<CurvatureMapRow> rows;
    for (const Complex z : grid.points()) {
        const Jet j = jet_of(map, z);
        const Diagnostics d = diagnostics(j);
        CurvatureMapRow row{z, d.slack1(), d.slack3(), d.km, std::nullopt};
        if (std::abs(d.p) > kNormalFloor) row.kappa_proxy = image_curvature(j);
        rows.push_back(row);
    }
    return rows;
}

void write_curvature_map_csv(std::ostream& out, const std::vector<CurvatureMapRow>& rows)
{
    out << kCurvatureMapCsvHeader << '\n';
    for (const auto& r : rows) {
        out << num(r.z.real()) << ',' << num(r.z.imag()) << ',' << num(r.slack1) << ',' << num(r.slack3) << ','
            << num(r.km) << ',' << (r.kappa_proxy ? num(*r.kappa_proxy) : std::string()) << '\n';
    }
}

void write_level_curve_svg(std::ostream& out, const LevelCurve& curve, const std::string& title)
{
    constexpr double kPanel = 400.0;
    constexpr double kMargin = 20.0;
    std::vector<Complex> zs, ws;
    for (const auto& p : curve.points) {
        zs.push_back(p.z);
        ws.push_back(p.w);
    }

    const Panel disk{kMargin, kMargin + 20.0, kPanel, Complex{}, (kPanel / 2 - 10.0)};

    double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
    if (!ws.empty()) {
        xmin = xmax = ws.front().real();
        ymin = ymax = ws.front().imag();
        for (const Complex w : ws) {
            xmin = std::min(xmin, w.real());
            xmax = std::max(xmax, w.real());
            ymin = std::min(ymin, w.imag());
            ymax = std::max(ymax, w.imag());
        }
    }
    const double extent = std::max({xmax - xmin, ymax - ymin, 1e-9});
    const Panel image{2 * kMargin + kPanel, kMargin + 20.0, kPanel, Complex{(xmin + xmax) / 2, (ymin + ymax) / 2},
                      (kPanel - 40.0) / extent};

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << 3 * kMargin + 2 * kPanel << "\" height=\""
        << 2 * kMargin + kPanel + 20.0 << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "  <text x=\"" << kMargin << "\" y=\"" << kMargin + 5 << "\" font-family=\"sans-serif\" font-size=\"13\">"
        << svg_escape(title) << " (c = " << curve.c << ")</text>\n";
    out << "  <circle cx=\"" << disk.x0 + kPanel / 2 << "\" cy=\"" << disk.y0 + kPanel / 2 << "\" r=\""
        << disk.scale << "\" fill=\"none\" stroke=\"gray\"/>\n";
    out << "  <rect x=\"" << image.x0 << "\" y=\"" << image.y0 << "\" width=\"" << kPanel << "\" height=\"" << kPanel
        << "\" fill=\"none\" stroke=\"lightgray\"/>\n";
    polyline(out, disk, zs, curve.closed, "steelblue");
    polyline(out, image, ws, curve.closed, "firebrick");
    out << "</svg>\n";
}

} // namespace diskmap
