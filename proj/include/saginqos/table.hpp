// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <charconv>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace saginqos {

// CSV number formatting: '.' decimal separator, shortest round-trip digits,
// scientific notation below 1e-3 in magnitude. std::to_chars keeps the
// output locale-free and byte-stable.
inline std::string format_double(double x) {
    if (x == 0.0) return "0";
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    const auto fmt = std::abs(x) < 1e-3 ? std::chars_format::scientific
                                        : std::chars_format::general;
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, fmt);
    return std::string(buf, res.ptr);
}

// Rectangular numeric result set with scenario metadata carried as comment
// lines ahead of the header row.
class ResultTable {
public:
    explicit ResultTable(std::vector<std::string> columns) : columns_(std::move(columns)) {}

    void set_meta(const std::string& key, const std::string& value) { meta_[key] = value; }

    void add_row(const std::vector<double>& row) {
        if (row.size() != columns_.size()) {
            throw std::invalid_argument("ResultTable: row width does not match header");
        }
        rows_.push_back(row);
    }

    const std::vector<std::string>& columns() const { return columns_; }
    const std::vector<std::vector<double>>& rows() const { return rows_; }
    const std::map<std::string, std::string>& meta() const { return meta_; }

    double at(std::size_t row, const std::string& column) const {
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (columns_[c] == column) return rows_.at(row).at(c);
        }
        throw std::out_of_range("ResultTable: no column " + column);
    }

    std::vector<double> column(const std::string& name) const {
        std::vector<double> out;
        out.reserve(rows_.size());
        for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(at(r, name));
        return out;
    }

    void write_csv(std::ostream& os) const {
        for (const auto& [k, v] : meta_) os << "# " << k << "=" << v << "\n";
        for (std::size_t c = 0; c < columns_.size(); ++c) {
            os << columns_[c] << (c + 1 < columns_.size() ? "," : "\n");
        }
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) {
                os << format_double(row[c]) << (c + 1 < row.size() ? "," : "\n");
            }
        }
    }

    std::string to_csv() const {
        std::ostringstream oss;
        write_csv(oss);
        return oss.str();
    }

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<double>> rows_;
    std::map<std::string, std::string> meta_;
};

}  // namespace saginqos
