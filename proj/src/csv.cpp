#include "treeharm/csv.hpp"

#include <cstdio>
#include <fstream>

#include "treeharm/errors.hpp"

namespace treeharm {

std::string format_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {
std::string join(const std::vector<std::string>& cells) {
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) line += ',';
        line += cells[i];
    }
    return line;
}
} // namespace

CsvWriter::CsvWriter(std::vector<std::string> header) : n_cols_(header.size()) {
    header_ = join(header);
}

void CsvWriter::comment(const std::string& line) { comments_.push_back("# " + line); }

void CsvWriter::footer(const std::string& line) { footers_.push_back("# " + line); }

void CsvWriter::row(const std::vector<std::string>& cells) {
    if (cells.size() != n_cols_) {
        throw invalid_input_error("CsvWriter: row has " + std::to_string(cells.size()) +
                                  " cells, header has " + std::to_string(n_cols_));
    }
    rows_.push_back(join(cells));
}

std::string CsvWriter::str() const {
    std::string out;
    for (const auto& c : comments_) out += c + "\n";
    out += header_ + "\n";
    for (const auto& r : rows_) out += r + "\n";
    for (const auto& f : footers_) out += f + "\n";
    return out;
}

void CsvWriter::write(const std::string& path) const {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw invalid_input_error("CsvWriter: cannot open '" + path + "' for writing");
    file << str();
    if (!file) throw invalid_input_error("CsvWriter: write failed for '" + path + "'");
}

} // namespace treeharm
