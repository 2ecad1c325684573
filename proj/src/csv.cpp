#include "greenchain/csv.hpp"

#include "greenchain/errors.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace greenchain {

std::string format_number(double x)
{
    if (!std::isfinite(x)) {
        return {};
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells)
{
    if (cells.size() != header_.size()) {
        throw ContractError("csv: row has " + std::to_string(cells.size()) + " cells, header has " +
                            std::to_string(header_.size()));
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::write(std::ostream& os) const
{
    const auto line = [&os](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            os << cells[i];
        }
        os << '\n';
    };
    line(header_);
    for (const auto& row : rows_) {
        line(row);
    }
}

std::string CsvTable::str() const
{
    std::ostringstream os;
    write(os);
    return os.str();
}

} // namespace greenchain
