#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <string>

#include "mwd/svg.hpp"

using namespace mwd;

namespace {

size_t count_of(const std::string& text, const std::string& needle) {
    size_t n = 0, pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        ++n;
        pos += needle.size();
    }
    return n;
}

// Values of attr="..." in order of appearance.
std::vector<double> attr_values(const std::string& text,
                                const std::string& attr) {
    std::vector<double> vals;
    std::string needle = attr + "=\"";
    size_t pos = 0;
    while ((pos = text.find(needle, pos)) != std::string::npos) {
        pos += needle.size();
        vals.push_back(std::stod(text.substr(pos)));
    }
    return vals;
}

void check_frame(const std::string& svg) {
    CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
    CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
    CHECK(count_of(svg, "<") == count_of(svg, ">"));
    CHECK(svg.find("&") == std::string::npos); // labels below never need escapes
}

} // namespace

TEST_CASE("scatter plot circles scale by count") {
    std::vector<GroupedCount> groups = {
        {Rational(4, 3), 1, 6},
        {Rational(11, 6), 2, 14},
        {Rational(2), 3, 70},
    };
    auto svg = scatter_svg(groups);
    check_frame(svg);
    CHECK(svg == scatter_svg(groups));
    CHECK(count_of(svg, "<circle") == 3);
    CHECK(svg.find("internal distance d(V)") != std::string::npos);
    CHECK(svg.find("number of minsets") != std::string::npos);

    auto radii = attr_values(svg, " r");
    REQUIRE(radii.size() == 3);
    // areas follow the counts, largest group at the fixed maximum
    CHECK(std::abs(radii[0] * radii[0] / (radii[2] * radii[2]) - 6.0 / 70.0) <
          0.01);
    CHECK(std::abs(radii[1] * radii[1] / (radii[2] * radii[2]) - 14.0 / 70.0) <
          0.01);

    check_frame(scatter_svg({}));
}

TEST_CASE("histogram draws grouped bars with a legend") {
    std::vector<HistogramSeries> series = {
        {"random", {{1, 300}, {2, 150}, {4, 20}}},
        {"small-distance", {{1, 420}, {2, 30}}},
    };
    auto svg = histogram_svg(series);
    check_frame(svg);
    CHECK(svg == histogram_svg(series));
    // background + 5 nonzero bars + 2 legend swatches
    CHECK(count_of(svg, "<rect") == 8);
    CHECK(svg.find(">random</text>") != std::string::npos);
    CHECK(svg.find(">small-distance</text>") != std::string::npos);

    auto heights = attr_values(svg, " height");
    std::sort(heights.begin(), heights.end());
    CHECK(heights.back() > 0); // tallest bar present

    check_frame(histogram_svg({}));
}

TEST_CASE("histogram series from trials") {
    const auto& f = table2_catalog()[0];
    auto records = run_trials(f, SchemeKind::Random, 4, 4, 40, 7);
    auto series = minsets_histogram(records);
    CHECK(series.label == "random");
    long long total = 0;
    for (const auto& [bin, count] : series.counts) {
        CHECK(bin >= 1);
        total += count;
    }
    CHECK(total == 40);
    CHECK(minsets_histogram({}).label.empty());
}
