#include "walkcent/plot.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <vector>

namespace walkcent {

std::string round_trip(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, ptr);
}

void write_difference_csv(std::ostream& out, std::span<const double> x,
                          std::span<const double> y) {
    out << "parameter,difference\n";
    for (std::size_t k = 0; k < x.size(); ++k)
        out << round_trip(x[k]) << ',' << round_trip(y[k]) << '\n';
}

namespace {

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace

void write_line_chart_svg(std::ostream& out, std::span<const double> x, std::span<const double> y,
                          std::span<const double> crossings, const std::string& title,
                          const std::string& x_label, const std::string& y_label) {
    constexpr double width = 760, height = 480;
    constexpr double ml = 70, mr = 20, mt = 40, mb = 50;  // margins
    const double pw = width - ml - mr, ph = height - mt - mb;

    double xmin = x.empty() ? 0 : *std::min_element(x.begin(), x.end());
    double xmax = x.empty() ? 1 : *std::max_element(x.begin(), x.end());
    double ymin = y.empty() ? 0 : *std::min_element(y.begin(), y.end());
    double ymax = y.empty() ? 1 : *std::max_element(y.begin(), y.end());
    ymin = std::min(ymin, 0.0);
    ymax = std::max(ymax, 0.0);
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;
    double ypad = 0.05 * (ymax - ymin);
    ymin -= ypad;
    ymax += ypad;

    auto px = [&](double v) { return ml + (v - xmin) / (xmax - xmin) * pw; };
    auto py = [&](double v) { return mt + (ymax - v) / (ymax - ymin) * ph; };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">"
        << escape_xml(title) << "</text>\n";

    // axes and ticks
    out << "<g stroke=\"black\" stroke-width=\"1\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt + ph << "\" x2=\"" << ml + pw << "\" y2=\""
        << mt + ph << "\"/>\n";
    out << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << mt + ph
        << "\"/>\n";
    for (int t = 0; t <= 5; ++t) {
        double xv = xmin + (xmax - xmin) * t / 5.0;
        double yv = ymin + (ymax - ymin) * t / 5.0;
        out << "<line x1=\"" << px(xv) << "\" y1=\"" << mt + ph << "\" x2=\"" << px(xv)
            << "\" y2=\"" << mt + ph + 5 << "\"/>\n";
        out << "<text x=\"" << px(xv) << "\" y=\"" << mt + ph + 18
            << "\" text-anchor=\"middle\" stroke=\"none\">" << round_trip(std::round(xv * 1e4) / 1e4)
            << "</text>\n";
        out << "<line x1=\"" << ml - 5 << "\" y1=\"" << py(yv) << "\" x2=\"" << ml << "\" y2=\""
            << py(yv) << "\"/>\n";
        out << "<text x=\"" << ml - 8 << "\" y=\"" << py(yv) + 4
            << "\" text-anchor=\"end\" stroke=\"none\">" << round_trip(std::round(yv * 1e6) / 1e6)
            << "</text>\n";
    }
    out << "</g>\n";

    // zero axis
    out << "<line x1=\"" << ml << "\" y1=\"" << py(0) << "\" x2=\"" << ml + pw << "\" y2=\""
        << py(0) << "\" stroke=\"gray\" stroke-dasharray=\"4 3\"/>\n";

    // data polyline
    out << "<polyline fill=\"none\" stroke=\"#1f6fb2\" stroke-width=\"1.5\" points=\"";
    for (std::size_t k = 0; k < x.size(); ++k) out << px(x[k]) << ',' << py(y[k]) << ' ';
    out << "\"/>\n";

    // crossing markers
    for (double c : crossings)
        out << "<circle cx=\"" << px(c) << "\" cy=\"" << py(0)
            << "\" r=\"4\" fill=\"#d33\" stroke=\"black\"/>\n";

    out << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
        << escape_xml(x_label) << "</text>\n";
    out << "<text x=\"16\" y=\"" << mt + ph / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" transform=\"rotate(-90 16 "
        << mt + ph / 2 << ")\">" << escape_xml(y_label) << "</text>\n";
    out << "</svg>\n";
}

}  // namespace walkcent
