#include "illiqdep/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace illiqdep {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

std::string render_dependence_svg(const DependenceProfile& profile, const std::string& title) {
    constexpr double width = 720, height = 360;
    constexpr double left = 60, right = 20, top = 40, bottom = 40;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    const double bound = profile.bound();

    double extent = bound;
    for (double c : profile.components) extent = std::max(extent, std::abs(c));
    extent *= 1.1;
    if (!(extent > 0.0)) extent = 1.0;

    const std::size_t m = profile.components.size();
    auto x_of = [&](std::size_t k) {
        return left + plot_w * (static_cast<double>(k) + 0.5) / static_cast<double>(m);
    };
    auto y_of = [&](double v) { return top + plot_h * 0.5 * (1.0 - v / extent); };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(width / 2) + "\" y=\"24\" text-anchor=\"middle\" " +
           "font-family=\"sans-serif\" font-size=\"14\">" + escape(title) + "</text>\n";

    // Axes.
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(top) + "\" x2=\"" + num(left) +
           "\" y2=\"" + num(top + plot_h) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(y_of(0)) + "\" x2=\"" +
           num(left + plot_w) + "\" y2=\"" + num(y_of(0)) + "\" stroke=\"black\"/>\n";
    for (double tick : {-extent / 1.1, 0.0, extent / 1.1}) {
        svg += "<text x=\"" + num(left - 6) + "\" y=\"" + num(y_of(tick) + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">" +
               num(tick) + "</text>\n";
    }

    // Confidence band.
    for (double b : {bound, -bound}) {
        svg += "<line class=\"bound\" x1=\"" + num(left) + "\" y1=\"" + num(y_of(b)) +
               "\" x2=\"" + num(left + plot_w) + "\" y2=\"" + num(y_of(b)) +
               "\" stroke=\"blue\" stroke-dasharray=\"6,4\"/>\n";
    }

    // Bars, in lag order.
    for (std::size_t k = 0; k < m; ++k) {
        const double x = x_of(k);
        const bool outside = std::abs(profile.components[k]) > bound;
        svg += "<line class=\"bar\" x1=\"" + num(x) + "\" y1=\"" + num(y_of(0)) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(y_of(profile.components[k])) + "\" stroke=\"" +
               (outside ? "red" : "black") + "\" stroke-width=\"2\"/>\n";
    }
    for (std::size_t k = 0; k < m; ++k) {
        const std::size_t lag = profile.lags[k];
        if (m > 20 && lag % 10 != 0 && lag != 1) continue;
        svg += "<text x=\"" + num(x_of(k)) + "\" y=\"" + num(top + plot_h + 16) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" +
               std::to_string(lag) + "</text>\n";
    }
    svg += "<text x=\"" + num(left + plot_w / 2) + "\" y=\"" + num(height - 6) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">lag</text>\n";
    svg += "</svg>\n";
    return svg;
}

}  // namespace illiqdep
