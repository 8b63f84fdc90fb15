#pragma once

#include <string>
#include <vector>

namespace treeharm {

// Shortest round-trip decimal formatting, 17 significant digits.
std::string format_g17(double v);

// Deterministic CSV assembly: optional '#' comment block, a header row, data
// rows, and optional '#' footer lines (used for runtime stamps, which are
// excluded from byte-identity comparisons). Files are written with LF line
// endings regardless of platform.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);

    void comment(const std::string& line);
    void footer(const std::string& line);
    void row(const std::vector<std::string>& cells);

    std::string str() const;
    void write(const std::string& path) const;

private:
    std::vector<std::string> comments_;
    std::vector<std::string> footers_;
    std::string header_;
    std::vector<std::string> rows_;
    std::size_t n_cols_ = 0;
};

} // namespace treeharm
