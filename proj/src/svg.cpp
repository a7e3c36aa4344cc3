#include "mwd/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>

namespace mwd {

namespace {

constexpr double kWidth = 800, kHeight = 600;
constexpr double kLeft = 70, kRight = 25, kTop = 25, kBottom = 55;
constexpr double kPlotW = kWidth - kLeft - kRight;
constexpr double kPlotH = kHeight - kTop - kBottom;
constexpr double kMaxCircleArea = 1600.0;
constexpr double kPi = 3.14159265358979323846;

const char* kPalette[] = {"#4878a8", "#e49444", "#6a9f58", "#d1605e"};

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    std::string s(buf);
    return s == "-0.00" ? "0.00" : s;
}

std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out += c;
    }
    return out;
}

void open_canvas(std::string& svg) {
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" "
           "height=\"600\" viewBox=\"0 0 800 600\">\n";
    svg += "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
}

void axis_frame(std::string& svg, const std::string& x_label,
                const std::string& y_label) {
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop + kPlotH) +
           "\" x2=\"" + fmt(kLeft + kPlotW) + "\" y2=\"" +
           fmt(kTop + kPlotH) + "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" +
           fmt(kLeft) + "\" y2=\"" + fmt(kTop + kPlotH) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(kLeft + kPlotW / 2) + "\" y=\"" +
           fmt(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"15\">" +
           xml_escape(x_label) + "</text>\n";
    svg += "<text transform=\"translate(18," + fmt(kTop + kPlotH / 2) +
           ") rotate(-90)\" text-anchor=\"middle\" "
           "font-family=\"sans-serif\" font-size=\"15\">" +
           xml_escape(y_label) + "</text>\n";
}

void x_tick(std::string& svg, double px, const std::string& label) {
    svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kTop + kPlotH) +
           "\" x2=\"" + fmt(px) + "\" y2=\"" + fmt(kTop + kPlotH + 6) +
           "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kTop + kPlotH + 22) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           label + "</text>\n";
}

void y_tick(std::string& svg, double py, const std::string& label) {
    svg += "<line x1=\"" + fmt(kLeft - 6) + "\" y1=\"" + fmt(py) +
           "\" x2=\"" + fmt(kLeft) + "\" y2=\"" + fmt(py) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
           fmt(kLeft + kPlotW) + "\" y2=\"" + fmt(py) +
           "\" stroke=\"#dddddd\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 10) + "\" y=\"" + fmt(py + 4) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           label + "</text>\n";
}

} // namespace

std::string scatter_svg(const std::vector<GroupedCount>& groups,
                        const std::string& x_label,
                        const std::string& y_label) {
    double x0 = 0, x1 = 1;
    double y0 = 0, y1 = 1;
    long long max_count = 1;
    if (!groups.empty()) {
        x0 = x1 = groups.front().d.convert_to<double>();
        y0 = y1 = groups.front().num_minsets;
        for (const auto& g : groups) {
            double x = g.d.convert_to<double>();
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
            y0 = std::min(y0, double(g.num_minsets));
            y1 = std::max(y1, double(g.num_minsets));
            max_count = std::max(max_count, g.count);
        }
    }
    double xpad = x1 > x0 ? (x1 - x0) * 0.08 : 0.5;
    double ypad = y1 > y0 ? (y1 - y0) * 0.1 : 1.0;
    x0 -= xpad, x1 += xpad;
    y0 -= ypad, y1 += ypad;

    auto sx = [&](double v) { return kLeft + (v - x0) / (x1 - x0) * kPlotW; };
    auto sy = [&](double v) {
        return kTop + kPlotH - (v - y0) / (y1 - y0) * kPlotH;
    };

    std::string svg;
    open_canvas(svg);

    for (int i = 0; i <= 6; ++i) {
        double v = x0 + (x1 - x0) * i / 6;
        x_tick(svg, sx(v), fmt(v));
    }
    auto ystep = std::max(1LL, llround(std::ceil((y1 - y0) / 8)));
    for (auto v = static_cast<long long>(std::ceil(y0)); v <= y1; v += ystep)
        y_tick(svg, sy(double(v)), std::to_string(v));
    axis_frame(svg, x_label, y_label);

    for (const auto& g : groups) {
        double area = kMaxCircleArea * double(g.count) / double(max_count);
        double r = std::sqrt(area / kPi);
        svg += "<circle cx=\"" + fmt(sx(g.d.convert_to<double>())) +
               "\" cy=\"" + fmt(sy(g.num_minsets)) + "\" r=\"" + fmt(r) +
               "\" fill=\"#4878a8\" fill-opacity=\"0.75\" "
               "stroke=\"#2b4a66\"/>\n";
    }

    svg += "</svg>\n";
    return svg;
}

HistogramSeries minsets_histogram(const std::vector<TrialRecord>& records) {
    HistogramSeries series;
    if (!records.empty()) series.label = scheme_str(records.front().scheme);
    for (const auto& r : records) ++series.counts[r.num_minsets];
    return series;
}

std::string histogram_svg(const std::vector<HistogramSeries>& series,
                          const std::string& x_label,
                          const std::string& y_label) {
    std::set<int> bin_set;
    long long max_count = 1;
    for (const auto& s : series) {
        for (const auto& [bin, count] : s.counts) {
            bin_set.insert(bin);
            max_count = std::max(max_count, count);
        }
    }
    std::vector<int> bins(bin_set.begin(), bin_set.end());

    std::string svg;
    open_canvas(svg);

    auto ystep = std::max(1LL, (max_count + 4) / 5);
    for (long long v = 0; v <= max_count; v += ystep)
        y_tick(svg, kTop + kPlotH - double(v) / double(max_count) * kPlotH,
               std::to_string(v));
    axis_frame(svg, x_label, y_label);

    if (!bins.empty() && !series.empty()) {
        double slot = kPlotW / double(bins.size());
        double group_w = slot * 0.8;
        double bar_w = group_w / double(series.size());
        for (size_t i = 0; i < bins.size(); ++i) {
            double slot_x = kLeft + double(i) * slot;
            x_tick(svg, slot_x + slot / 2, std::to_string(bins[i]));
            for (size_t j = 0; j < series.size(); ++j) {
                auto it = series[j].counts.find(bins[i]);
                long long count =
                    it == series[j].counts.end() ? 0 : it->second;
                if (count == 0) continue;
                double h = double(count) / double(max_count) * kPlotH;
                svg += "<rect x=\"" +
                       fmt(slot_x + slot * 0.1 + double(j) * bar_w) +
                       "\" y=\"" + fmt(kTop + kPlotH - h) + "\" width=\"" +
                       fmt(bar_w) + "\" height=\"" + fmt(h) + "\" fill=\"" +
                       kPalette[j % 4] + "\"/>\n";
            }
        }
    }

    for (size_t j = 0; j < series.size(); ++j) {
        double ly = kTop + 8 + double(j) * 22;
        svg += "<rect x=\"" + fmt(kLeft + kPlotW - 170) + "\" y=\"" +
               fmt(ly) + "\" width=\"14\" height=\"14\" fill=\"" +
               kPalette[j % 4] + "\"/>\n";
        svg += "<text x=\"" + fmt(kLeft + kPlotW - 150) + "\" y=\"" +
               fmt(ly + 12) +
               "\" font-family=\"sans-serif\" font-size=\"13\">" +
               xml_escape(series[j].label) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace mwd
