#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace greenchain {

/// Formats a number with 12 significant digits; non-finite values become an
/// empty cell.
std::string format_number(double x);

/// Comma separated table with a header row. Every row must have as many
/// cells as the header.
class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    std::size_t rows() const { return rows_.size(); }
    const std::vector<std::string>& header() const { return header_; }

    void write(std::ostream& os) const;
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace greenchain
