#ifndef QDKERR_CSV_HPP
#define QDKERR_CSV_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qdkerr {

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shortest decimal representation that round-trips the double exactly;
// locale-independent ('.' decimal point always).
std::string format_double(double value);

// Parsed numeric table. An optional leading header row (any field that does
// not parse as a number) is kept in `header` and skipped.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};

// Reads a comma-separated numeric file. Throws CsvError naming the line
// number for malformed rows, column-count mismatches, or an empty file.
CsvTable read_csv(const std::string& path, std::size_t min_columns, std::size_t max_columns);

// Joins fields with commas and writes lines with '\n' terminators.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

} // namespace qdkerr

#endif
