#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "napoleon/types.hpp"

namespace napoleon {

// One line of the line-delimited input/output format:
//   {"id":"t1","dimension":2,"vertices":[[0,0],[1,0],[0,1]],"tags":["a"]}
// "dimension" and "tags" are optional on input; "dimension", when present,
// must match the vertex width.
struct TripleRecord {
    std::string id;
    Eigen::Index dimension = 0;
    Triple triple;
    std::vector<std::string> tags;

    TripleRecord(std::string id_, Triple triple_,
                 std::vector<std::string> tags_ = {});
};

// A record that could not be read, with its 1-based line number.
struct RecordError {
    std::size_t line = 0;
    std::string message;
};

// Strict readers: throw ParseError (malformed line, wrong vertex count,
// missing fields) or DimensionMismatch (ragged vertex rows, mismatched
// "dimension" field, d < 2) on the first bad record. Blank lines are
// skipped. The path overload throws IoError if the file cannot be opened.
std::vector<TripleRecord> read_triples(std::istream& in);
std::vector<TripleRecord> read_triples(const std::string& path);

// Lenient readers: bad records are collected into `errors` with their line
// numbers and the rest of the batch is still returned.
std::vector<TripleRecord> read_triples(std::istream& in,
                                       std::vector<RecordError>& errors);
std::vector<TripleRecord> read_triples(const std::string& path,
                                       std::vector<RecordError>& errors);

// Writes one record per line. Coordinates are printed with 17 significant
// digits so reading the output reproduces every double bit-exactly; output
// is byte-deterministic for a given record list. The path overload throws
// IoError on failure to open or write.
void write_triples(std::ostream& out, const std::vector<TripleRecord>& records);
void write_triples(const std::string& path,
                   const std::vector<TripleRecord>& records);

// Shortest-width 17-significant-digit decimal for a finite double; the
// common number formatter for all deterministic text output.
std::string format_coordinate(double value);

}  // namespace napoleon
