#include "qdkerr/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace qdkerr {

std::string format_double(double value) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(',', start);
        if (pos == std::string::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, pos - start));
        start = pos + 1;
    }
    return out;
}

bool parse_field(std::string field, double& value) {
    // trim surrounding whitespace
    const auto b = field.find_first_not_of(" \t\r");
    if (b == std::string::npos) return false;
    const auto e = field.find_last_not_of(" \t\r");
    field = field.substr(b, e - b + 1);
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, value);
    return res.ec == std::errc() && res.ptr == last;
}

} // namespace

CsvTable read_csv(const std::string& path, std::size_t min_columns, std::size_t max_columns) {
    std::ifstream in(path);
    if (!in) throw CsvError("cannot open " + path);

    CsvTable table;
    std::string line;
    std::size_t line_no = 0;
    std::size_t ncols = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto fields = split_fields(line);

        std::vector<double> row(fields.size());
        bool numeric = true;
        for (std::size_t i = 0; i < fields.size(); ++i)
            if (!parse_field(fields[i], row[i])) {
                numeric = false;
                break;
            }

        if (!numeric) {
            if (table.rows.empty() && table.header.empty()) {
                table.header = fields;
                continue;
            }
            throw CsvError(path + ":" + std::to_string(line_no) + ": malformed numeric row");
        }
        if (fields.size() < min_columns || fields.size() > max_columns)
            throw CsvError(path + ":" + std::to_string(line_no) + ": expected " +
                           std::to_string(min_columns) +
                           (max_columns > min_columns ? ".." + std::to_string(max_columns) : "") +
                           " columns, got " + std::to_string(fields.size()));
        if (ncols == 0)
            ncols = fields.size();
        else if (fields.size() != ncols)
            throw CsvError(path + ":" + std::to_string(line_no) + ": inconsistent column count");
        table.rows.push_back(std::move(row));
    }
    if (table.rows.empty()) throw CsvError(path + ": no data rows");
    return table;
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path, std::ios::binary);  // binary: byte-identical output everywhere
    if (!out) throw CsvError("cannot write " + path);
    out << header << '\n';
    std::ostringstream line;
    for (const auto& row : rows) {
        line.str({});
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line << ',';
            line << format_double(row[i]);
        }
        out << line.str() << '\n';
    }
    if (!out) throw CsvError("write failed for " + path);
}

} // namespace qdkerr
