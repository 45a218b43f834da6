#include "napoleon/svg.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "napoleon/alignment.hpp"
#include "napoleon/fermat.hpp"
#include "napoleon/frame.hpp"
#include "napoleon/transforms.hpp"

namespace napoleon {

PlotSelection PlotSelection::parse(const std::string& tokens) {
    PlotSelection sel;
    std::stringstream stream(tokens);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const auto from = token.find_first_not_of(" \t");
        if (from == std::string::npos) continue;
        token = token.substr(from, token.find_last_not_of(" \t") - from + 1);
        if (token == "torricelli+") {
            sel.torricelli_inner = true;
        } else if (token == "torricelli-") {
            sel.torricelli_outer = true;
        } else if (token == "napoleon+") {
            sel.napoleon_inner = true;
        } else if (token == "napoleon-") {
            sel.napoleon_outer = true;
        } else if (token == "double") {
            sel.double_outer = true;
        } else if (token == "fermat") {
            sel.fermat = true;
        } else if (token == "all") {
            sel = {true, true, true, true, true, true};
        } else {
            throw std::invalid_argument("unknown plot selection: " + token);
        }
    }
    return sel;
}

bool PlotSelection::any() const {
    return torricelli_inner || torricelli_outer || napoleon_inner ||
           napoleon_outer || double_outer || fermat;
}

namespace {

using Eigen::Vector2d;

std::string fmt(double value) {
    char buf[32];
    const auto result =
        std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 8);
    return std::string(buf, result.ptr);
}

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (const char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Polygon3 {
    std::array<Vector2d, 3> pts;
    const char* color;
    bool dashed;
};

struct Segment {
    Vector2d a, b;
    const char* color;
};

struct Marker {
    Vector2d at;
    const char* color;
    double radius_factor;  // relative to the global stroke unit
};

struct Label {
    Vector2d at;
    std::string text;
};

struct RecordArt {
    std::string id;
    std::vector<Polygon3> polygons;
    std::vector<Segment> segments;
    std::vector<Marker> markers;
    std::vector<Label> labels;
};

}  // namespace

std::size_t render_svg(std::ostream& out,
                       const std::vector<TripleRecord>& records,
                       const PlotSelection& selection, std::ostream& warnings) {
    std::vector<RecordArt> art;
    double min_x = std::numeric_limits<double>::infinity();
    double max_x = -std::numeric_limits<double>::infinity();
    double min_y = std::numeric_limits<double>::infinity();
    double max_y = -std::numeric_limits<double>::infinity();
    const auto grow = [&](const Vector2d& p) {
        min_x = std::min(min_x, p[0]);
        max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]);
        max_y = std::max(max_y, p[1]);
    };

    for (const TripleRecord& record : records) {
        const Triple& x = record.triple;
        if (x.trivial()) {
            warnings << "[plot] skipping trivial record \"" << record.id
                     << "\"\n";
            continue;
        }

        // Inputs beyond the plane are drawn in their own frame coordinates;
        // planar inputs keep their native coordinates.
        const Point origin = centroid(x);
        PlaneFrame frame{Point(), Point()};
        const bool planar = x.dim() == 2;
        if (!planar) frame = plane_frame(x);
        const auto flatten = [&](const Point& p) {
            if (planar) return Vector2d(p[0], p[1]);
            return Vector2d(frame.n.dot(p - origin), frame.t.dot(p - origin));
        };
        const auto add_triangle = [&](RecordArt& a, const Triple& t,
                                      const char* color, bool dashed) {
            Polygon3 poly{{flatten(t[0]), flatten(t[1]), flatten(t[2])},
                          color,
                          dashed};
            for (const Vector2d& p : poly.pts) grow(p);
            a.polygons.push_back(std::move(poly));
        };

        RecordArt a;
        a.id = record.id;
        add_triangle(a, x, "#333333", false);
        for (int i = 0; i < 3; ++i) {
            a.labels.push_back({flatten(x[i]), std::to_string(i + 1)});
        }
        a.markers.push_back({flatten(centroid(x)), "#777777", 1.0});

        if (selection.torricelli_inner) {
            add_triangle(a, torricelli(x, Kind::inner), "#1f77b4", true);
        }
        if (selection.torricelli_outer) {
            add_triangle(a, torricelli(x, Kind::outer), "#17becf", true);
        }
        if (selection.napoleon_inner) {
            add_triangle(a, napoleon(x, Kind::inner), "#2ca02c", false);
        }
        if (selection.napoleon_outer) {
            add_triangle(a, napoleon(x, Kind::outer), "#d62728", false);
        }
        if (selection.double_outer) {
            add_triangle(a, double_outer_napoleon(x), "#9467bd", false);
        }
        if (selection.fermat) {
            const Point fermat = fermat_point(x);
            a.markers.push_back({flatten(fermat), "#ff7f0e", 1.8});
            grow(a.markers.back().at);
            // When the minimizer is interior, show the three concurrent
            // lines that locate it.
            if (!is_collinear(x) && !wide_angle_vertex(x)) {
                const Triple apex = torricelli(x, Kind::outer);
                for (int i = 0; i < 3; ++i) {
                    Segment seg{flatten(x[i]), flatten(apex[i]), "#ff7f0e"};
                    grow(seg.a);
                    grow(seg.b);
                    a.segments.push_back(std::move(seg));
                }
            }
        }
        art.push_back(std::move(a));
    }

    if (art.empty()) {
        min_x = min_y = 0.0;
        max_x = max_y = 1.0;
    }
    const double span = std::max(max_x - min_x, max_y - min_y);
    const double pad = 0.05 * (span > 0.0 ? span : 1.0);
    const double unit = 0.008 * (span > 0.0 ? span : 1.0);  // stroke width
    // SVG y grows downward; reflect within the box so counter-clockwise
    // stays counter-clockwise on screen.
    const double flip_about = min_y + max_y;
    const auto place = [&](const Vector2d& p) {
        return Vector2d(p[0], flip_about - p[1]);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\""
        << fmt(min_x - pad) << ' ' << fmt(min_y - pad) << ' '
        << fmt(max_x - min_x + 2.0 * pad) << ' '
        << fmt(max_y - min_y + 2.0 * pad) << "\">\n";

    for (const RecordArt& a : art) {
        out << "  <g id=\"" << xml_escape(a.id) << "\">\n";
        for (const Polygon3& poly : a.polygons) {
            out << "    <polygon points=\"";
            for (int i = 0; i < 3; ++i) {
                const Vector2d p = place(poly.pts[i]);
                out << (i ? " " : "") << fmt(p[0]) << ',' << fmt(p[1]);
            }
            out << "\" fill=\"none\" stroke=\"" << poly.color
                << "\" stroke-width=\"" << fmt(unit) << '"';
            if (poly.dashed) {
                out << " stroke-dasharray=\"" << fmt(3.0 * unit) << ' '
                    << fmt(2.0 * unit) << '"';
            }
            out << "/>\n";
        }
        for (const Segment& seg : a.segments) {
            const Vector2d sa = place(seg.a);
            const Vector2d sb = place(seg.b);
            out << "    <line x1=\"" << fmt(sa[0]) << "\" y1=\"" << fmt(sa[1])
                << "\" x2=\"" << fmt(sb[0]) << "\" y2=\"" << fmt(sb[1])
                << "\" stroke=\"" << seg.color << "\" stroke-width=\""
                << fmt(0.5 * unit) << "\"/>\n";
        }
        for (const Marker& mark : a.markers) {
            const Vector2d p = place(mark.at);
            out << "    <circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1])
                << "\" r=\"" << fmt(1.5 * unit * mark.radius_factor)
                << "\" fill=\"" << mark.color << "\"/>\n";
        }
        for (const Label& label : a.labels) {
            const Vector2d p = place(label.at);
            out << "    <text x=\"" << fmt(p[0] + 1.5 * unit) << "\" y=\""
                << fmt(p[1] - 1.5 * unit) << "\" font-size=\"" << fmt(5.0 * unit)
                << "\" fill=\"#333333\">" << xml_escape(label.text)
                << "</text>\n";
        }
        out << "  </g>\n";
    }
    out << "</svg>\n";
    return art.size();
}

std::size_t render_svg(const std::string& path,
                       const std::vector<TripleRecord>& records,
                       const PlotSelection& selection, std::ostream& warnings) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    const std::size_t drawn = render_svg(out, records, selection, warnings);
    out.flush();
    if (!out) throw IoError("failed while writing " + path);
    return drawn;
}

}  // namespace napoleon
