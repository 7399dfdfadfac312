#include "mmx/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmx {
namespace {

constexpr double kLeft = 50.0;
constexpr double kRight = 15.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 25.0;
constexpr double kGap = 30.0;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string short_num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Panel {
    double x0, y0, x1, y1;  // plot rectangle, y grows downward
    double lo, hi;          // data range after padding
};

Panel make_panel(double x0, double y0, double x1, double y1, double lo, double hi) {
    const double pad = 0.04 * (hi - lo);
    return Panel{x0, y0, x1, y1, lo - pad, hi + pad};
}

double map_x(const Panel& p, std::size_t i, std::size_t n) {
    return p.x0 + (p.x1 - p.x0) * static_cast<double>(i) / static_cast<double>(n - 1);
}

double map_y(const Panel& p, double v) {
    if (!(p.hi - p.lo > 0.0)) return 0.5 * (p.y0 + p.y1);
    return p.y1 - (v - p.lo) / (p.hi - p.lo) * (p.y1 - p.y0);
}

void append_polyline(std::string& svg, const Panel& p, const std::vector<double>& v,
                     const char* stroke, bool dashed) {
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += stroke;
    svg += "\" stroke-width=\"1.5\"";
    if (dashed) svg += " stroke-dasharray=\"7 4\"";
    svg += " points=\"";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) svg += ' ';
        svg += num(map_x(p, i, v.size()));
        svg += ',';
        svg += num(map_y(p, v[i]));
    }
    svg += "\"/>\n";
}

void append_frame(std::string& svg, const Panel& p, const std::string& title) {
    svg += "<rect x=\"" + num(p.x0) + "\" y=\"" + num(p.y0) + "\" width=\"" + num(p.x1 - p.x0) +
           "\" height=\"" + num(p.y1 - p.y0) + "\" fill=\"none\" stroke=\"#999999\"/>\n";
    svg += "<text x=\"" + num(p.x0) + "\" y=\"" + num(p.y0 - 6.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#333333\">" + title +
           "</text>\n";
    svg += "<text x=\"" + num(p.x0 - 4.0) + "\" y=\"" + num(p.y0 + 10.0) +
           "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#333333\" "
           "text-anchor=\"end\">" +
           short_num(p.hi) + "</text>\n";
    svg += "<text x=\"" + num(p.x0 - 4.0) + "\" y=\"" + num(p.y1) +
           "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#333333\" "
           "text-anchor=\"end\">" +
           short_num(p.lo) + "</text>\n";
}

}  // namespace

std::string render_minimax_svg(const PriceSeries& s, const MiniMaxSeries* up,
                               const MiniMaxSeries* down, const SvgOptions& opt) {
    const std::size_t n = s.values.size();
    if (n < 2) throw std::invalid_argument("series must hold at least 2 samples to draw");
    if (up == nullptr && down == nullptr)
        throw std::invalid_argument("need at least one weight profile to draw");
    for (const MiniMaxSeries* mm : {up, down})
        if (mm != nullptr && mm->weights.size() != n)
            throw std::invalid_argument("profile length " + std::to_string(mm->weights.size()) +
                                        " does not match series length " + std::to_string(n));

    const double w = static_cast<double>(opt.width);
    const double h = static_cast<double>(opt.height);
    const double plot_w = w - kLeft - kRight;
    const double panel_h = (h - kTop - kBottom - kGap) / 2.0;
    if (plot_w < 1.0 || panel_h < 1.0)
        throw std::invalid_argument("canvas " + std::to_string(opt.width) + "x" +
                                    std::to_string(opt.height) + " is too small to draw");

    const auto [price_lo, price_hi] = std::minmax_element(s.values.begin(), s.values.end());
    double w_lo = 0.0;
    double w_hi = 0.0;
    bool first = true;
    for (const MiniMaxSeries* mm : {up, down}) {
        if (mm == nullptr) continue;
        const auto [lo, hi] = std::minmax_element(mm->weights.begin(), mm->weights.end());
        w_lo = first ? *lo : std::min(w_lo, *lo);
        w_hi = first ? *hi : std::max(w_hi, *hi);
        first = false;
    }

    const Panel price_panel = make_panel(kLeft, kTop, w - kRight, kTop + panel_h,
                                         *price_lo, *price_hi);
    const Panel weight_panel = make_panel(kLeft, kTop + panel_h + kGap, w - kRight,
                                          h - kBottom, w_lo, w_hi);

    std::string weight_title = "weight";
    if (up != nullptr && down != nullptr)
        weight_title += " (up solid, down dashed)";
    else
        weight_title += up != nullptr ? " (up)" : " (down)";

    std::string svg;
    svg.reserve(1024 + 16 * n * (1 + (up != nullptr) + (down != nullptr)));
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(opt.width) +
           "\" height=\"" + std::to_string(opt.height) + "\" viewBox=\"0 0 " +
           std::to_string(opt.width) + " " + std::to_string(opt.height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(opt.width) + "\" height=\"" +
           std::to_string(opt.height) + "\" fill=\"#ffffff\"/>\n";

    append_frame(svg, price_panel, "price");
    append_polyline(svg, price_panel, s.values, "#1f77b4", false);

    append_frame(svg, weight_panel, weight_title);
    if (up != nullptr) append_polyline(svg, weight_panel, up->weights, "#d62728", false);
    if (down != nullptr) append_polyline(svg, weight_panel, down->weights, "#2ca02c", true);

    svg += "</svg>\n";
    return svg;
}

}  // namespace mmx
