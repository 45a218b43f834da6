#include <array>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "napoleon/records.hpp"
#include "napoleon/svg.hpp"

using napoleon::PlotSelection;
using napoleon::TripleRecord;
using testutil::t2;
using testutil::t3;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& what) {
    std::size_t count = 0;
    for (std::size_t at = text.find(what); at != std::string::npos;
         at = text.find(what, at + what.size())) {
        ++count;
    }
    return count;
}

std::vector<std::string> polygon_points(const std::string& svg) {
    std::vector<std::string> found;
    const std::string open = "<polygon points=\"";
    for (std::size_t at = svg.find(open); at != std::string::npos;
         at = svg.find(open, at + 1)) {
        const std::size_t from = at + open.size();
        found.push_back(svg.substr(from, svg.find('"', from) - from));
    }
    return found;
}

std::array<double, 6> parse_points(const std::string& points) {
    std::istringstream in(points);
    std::array<double, 6> coords{};
    char comma;
    for (int i = 0; i < 3; ++i) {
        in >> coords[2 * i] >> comma >> coords[2 * i + 1];
    }
    return coords;
}

double shoelace(const std::string& points) {
    const auto c = parse_points(points);
    double twice = 0.0;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3;
        twice += c[2 * i] * c[2 * j + 1] - c[2 * j] * c[2 * i + 1];
    }
    return 0.5 * twice;
}

}  // namespace

TEST_CASE("plot selection parses token lists") {
    const PlotSelection both = PlotSelection::parse("napoleon+, napoleon-");
    CHECK(both.napoleon_inner);
    CHECK(both.napoleon_outer);
    CHECK(!both.torricelli_inner);
    CHECK(!both.fermat);
    CHECK(both.any());

    const PlotSelection all = PlotSelection::parse("all");
    CHECK(all.torricelli_inner);
    CHECK(all.torricelli_outer);
    CHECK(all.napoleon_inner);
    CHECK(all.napoleon_outer);
    CHECK(all.double_outer);
    CHECK(all.fermat);

    CHECK(!PlotSelection{}.any());
    CHECK_THROWS_AS(PlotSelection::parse("napoleon"), std::invalid_argument);
}

TEST_CASE("each selected construction adds one polygon") {
    const std::vector<TripleRecord> records = {
        TripleRecord("tri", t2(0, 0, 1, 0, 0, 1), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    const std::size_t drawn = napoleon::render_svg(
        svg, records, PlotSelection::parse("napoleon+, napoleon-"), warnings);
    CHECK(drawn == 1);
    CHECK(warnings.str().empty());

    const std::string text = svg.str();
    CHECK(count_occurrences(text, "<polygon") == 3);  // input + two overlays
    CHECK(count_occurrences(text, "stroke=\"#2ca02c\"") == 1);
    CHECK(count_occurrences(text, "stroke=\"#d62728\"") == 1);
    CHECK(count_occurrences(text, "<g id=\"tri\">") == 1);
    CHECK(count_occurrences(text, "<text") == 3);
    CHECK(count_occurrences(text, "viewBox=") == 1);
}

TEST_CASE("the svg y axis is flipped so orientation is preserved") {
    const std::vector<TripleRecord> records = {
        TripleRecord("ccw", t2(0, 0, 1, 0, 0, 1), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    napoleon::render_svg(svg, records, PlotSelection{}, warnings);

    const auto polygons = polygon_points(svg.str());
    REQUIRE(polygons.size() == 1);
    // Counter-clockwise input must come out clockwise in raw numbers,
    // which the downward svg y axis shows as counter-clockwise again.
    CHECK(polygons[0] == "0,1 1,1 0,0");
    CHECK(shoelace(polygons[0]) < 0.0);
}

TEST_CASE("fermat markers land on the wide angle vertex") {
    const std::vector<TripleRecord> records = {
        TripleRecord("obtuse", t2(-1, 0, 1, 0, 0, 0.2), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    napoleon::render_svg(svg, records, PlotSelection::parse("fermat"),
                         warnings);

    const std::string text = svg.str();
    // Centroid dot plus the minimizer dot, and no locator lines because
    // the minimizer is a vertex, not an interior point.
    CHECK(count_occurrences(text, "<circle") == 2);
    CHECK(count_occurrences(text, "<line") == 0);
    CHECK(text.find("<circle cx=\"0\" cy=\"0\" r=\"0.0432\" "
                    "fill=\"#ff7f0e\"/>") != std::string::npos);
}

TEST_CASE("interior fermat points come with three locator lines") {
    const std::vector<TripleRecord> records = {
        TripleRecord("acute", t2(0, 0, 4, 0, 1, 3), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    napoleon::render_svg(svg, records, PlotSelection::parse("fermat"),
                         warnings);
    CHECK(count_occurrences(svg.str(), "<line") == 3);
    CHECK(count_occurrences(svg.str(), "<circle") == 2);
}

TEST_CASE("double overlay coincides with an equilateral input") {
    const double s3 = 1.7320508075688772;
    const std::vector<TripleRecord> records = {
        TripleRecord("eq", t2(1, s3 / 3, 0, s3 / 3, 0.5, -s3 / 6), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    napoleon::render_svg(svg, records, PlotSelection::parse("double"),
                         warnings);
    const auto polygons = polygon_points(svg.str());
    REQUIRE(polygons.size() == 2);
    const auto a = parse_points(polygons[0]);
    const auto b = parse_points(polygons[1]);
    for (int i = 0; i < 6; ++i) {
        CHECK(a[i] == doctest::Approx(b[i]).epsilon(1e-7).scale(1.0));
    }
}

TEST_CASE("trivial records are skipped with a warning") {
    const std::vector<TripleRecord> records = {
        TripleRecord("dot", t2(1, 1, 1, 1, 1, 1), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    const std::size_t drawn =
        napoleon::render_svg(svg, records, PlotSelection::parse("all"),
                             warnings);
    CHECK(drawn == 0);
    CHECK(warnings.str() == "[plot] skipping trivial record \"dot\"\n");
    CHECK(count_occurrences(svg.str(), "<g") == 0);
    CHECK(count_occurrences(svg.str(), "<svg") == 1);
}

TEST_CASE("higher dimensional records are drawn in frame coordinates") {
    const std::vector<TripleRecord> records = {
        TripleRecord("flat3d", t3(0, 0, 0, 4, 0, 0, 1, 3, 0), {}),
        TripleRecord("tilted", t3(0, 0, 0, 1, 1, 0, 0, 1, 1), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    const std::size_t drawn = napoleon::render_svg(
        svg, records, PlotSelection::parse("napoleon-"), warnings);
    CHECK(drawn == 2);
    CHECK(count_occurrences(svg.str(), "<g") == 2);
    CHECK(count_occurrences(svg.str(), "<polygon") == 4);
    CHECK(svg.str().find("nan") == std::string::npos);
    CHECK(svg.str().find("inf") == std::string::npos);
}

TEST_CASE("ids are escaped in group attributes") {
    const std::vector<TripleRecord> records = {
        TripleRecord("a<b>&\"c\"", t2(0, 0, 1, 0, 0, 1), {}),
    };
    std::ostringstream svg;
    std::ostringstream warnings;
    napoleon::render_svg(svg, records, PlotSelection{}, warnings);
    CHECK(svg.str().find("<g id=\"a&lt;b&gt;&amp;&quot;c&quot;\">") !=
          std::string::npos);
}
