#include "napoleon/records.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace napoleon {

TripleRecord::TripleRecord(std::string id_, Triple triple_,
                           std::vector<std::string> tags_)
    : id(std::move(id_)),
      dimension(triple_.dim()),
      triple(std::move(triple_)),
      tags(std::move(tags_)) {}

std::string format_coordinate(double value) {
    // "-0" would read back as integer zero and lose the sign, so force a
    // fraction onto negative zero.
    if (value == 0.0 && std::signbit(value)) return "-0.0";
    // 17 significant digits pin the double exactly; to_chars is
    // locale-independent and strips trailing zeros like printf %g.
    char buf[32];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                      std::chars_format::general, 17);
    return std::string(buf, result.ptr);
}

namespace {

std::string line_prefix(std::size_t line) {
    return "line " + std::to_string(line) + ": ";
}

TripleRecord parse_record(const std::string& text, std::size_t line) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(line, std::string("malformed record: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(line, "record is not an object");

    const auto id_it = doc.find("id");
    if (id_it == doc.end() || !id_it->is_string()) {
        throw ParseError(line, "record needs a string \"id\"");
    }

    const auto vertices_it = doc.find("vertices");
    if (vertices_it == doc.end() || !vertices_it->is_array()) {
        throw ParseError(line, "record needs a \"vertices\" array");
    }
    if (vertices_it->size() != 3) {
        throw ParseError(line, "expected 3 vertices, got " +
                                   std::to_string(vertices_it->size()));
    }

    std::array<Point, 3> vertices;
    Eigen::Index width = -1;
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& row = (*vertices_it)[i];
        if (!row.is_array()) {
            throw ParseError(line, "vertex " + std::to_string(i + 1) +
                                       " is not a coordinate array");
        }
        if (width < 0) {
            width = static_cast<Eigen::Index>(row.size());
        } else if (static_cast<Eigen::Index>(row.size()) != width) {
            throw DimensionMismatch(line_prefix(line) +
                                    "vertices have mixed widths");
        }
        Point v(static_cast<Eigen::Index>(row.size()));
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (!row[j].is_number()) {
                throw ParseError(line, "coordinate is not a number");
            }
            v[static_cast<Eigen::Index>(j)] = row[j].get<double>();
        }
        vertices[i] = std::move(v);
    }
    if (width < 2) {
        throw DimensionMismatch(line_prefix(line) +
                                "vertex dimension must be at least 2");
    }

    if (const auto dim_it = doc.find("dimension"); dim_it != doc.end()) {
        if (!dim_it->is_number_integer()) {
            throw ParseError(line, "\"dimension\" is not an integer");
        }
        if (dim_it->get<Eigen::Index>() != width) {
            throw DimensionMismatch(line_prefix(line) +
                                    "\"dimension\" does not match the vertices");
        }
    }

    std::vector<std::string> tags;
    if (const auto tags_it = doc.find("tags"); tags_it != doc.end()) {
        if (!tags_it->is_array()) {
            throw ParseError(line, "\"tags\" is not an array");
        }
        for (const auto& tag : *tags_it) {
            if (!tag.is_string()) throw ParseError(line, "tag is not a string");
            tags.push_back(tag.get<std::string>());
        }
    }

    try {
        return TripleRecord(id_it->get<std::string>(),
                            Triple(vertices[0], vertices[1], vertices[2]),
                            std::move(tags));
    } catch (const NonFiniteCoordinate& e) {
        throw ParseError(line, e.what());
    }
}

bool blank(const std::string& text) {
    return text.find_first_not_of(" \t\r") == std::string::npos;
}

template <typename OnRecord, typename OnError>
void scan_lines(std::istream& in, OnRecord&& on_record, OnError&& on_error) {
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (blank(text)) continue;
        try {
            on_record(parse_record(text, line));
        } catch (const Error& e) {
            on_error(line, e);
        }
    }
}

}  // namespace

std::vector<TripleRecord> read_triples(std::istream& in) {
    std::vector<TripleRecord> records;
    scan_lines(
        in, [&](TripleRecord r) { records.push_back(std::move(r)); },
        [](std::size_t, const Error&) -> void { throw; });
    return records;
}

std::vector<TripleRecord> read_triples(std::istream& in,
                                       std::vector<RecordError>& errors) {
    std::vector<TripleRecord> records;
    scan_lines(
        in, [&](TripleRecord r) { records.push_back(std::move(r)); },
        [&](std::size_t line, const Error& e) {
            errors.push_back({line, e.what()});
        });
    return records;
}

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path + " for reading");
    return in;
}

}  // namespace

std::vector<TripleRecord> read_triples(const std::string& path) {
    std::ifstream in = open_input(path);
    return read_triples(in);
}

std::vector<TripleRecord> read_triples(const std::string& path,
                                       std::vector<RecordError>& errors) {
    std::ifstream in = open_input(path);
    return read_triples(in, errors);
}

void write_triples(std::ostream& out, const std::vector<TripleRecord>& records) {
    for (const TripleRecord& record : records) {
        // Fixed key order and a fixed number format keep the output
        // byte-deterministic; nlohmann handles string escaping only.
        out << "{\"id\":" << nlohmann::json(record.id).dump()
            << ",\"dimension\":" << record.triple.dim() << ",\"vertices\":[";
        for (int i = 0; i < 3; ++i) {
            if (i > 0) out << ',';
            out << '[';
            const Point& v = record.triple[i];
            for (Eigen::Index j = 0; j < v.size(); ++j) {
                if (j > 0) out << ',';
                out << format_coordinate(v[j]);
            }
            out << ']';
        }
        out << ']';
        if (!record.tags.empty()) {
            out << ",\"tags\":" << nlohmann::json(record.tags).dump();
        }
        out << "}\n";
    }
}

void write_triples(const std::string& path,
                   const std::vector<TripleRecord>& records) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_triples(out, records);
    out.flush();
    if (!out) throw IoError("failed while writing " + path);
}

}  // namespace napoleon
