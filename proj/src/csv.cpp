#include "magphon/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace magphon {

std::string format_sci9(double x) {
    if (x == 0.0) return "0.000000000e0";
    if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9e", x);
    std::string s(buf);
    const auto e = s.find('e');
    const int exp = std::atoi(s.c_str() + e + 1);
    return s.substr(0, e) + "e" + std::to_string(exp);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& header)
    : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw IoError("cannot open for writing: " + path);
    out_ << header << '\n';
}

void CsvWriter::row(std::span<const double> values) {
    std::string line;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) line += ',';
        line += format_sci9(values[i]);
    }
    line += '\n';
    out_ << line;
    if (!out_) throw IoError("write failed: " + path_);
}

void CsvWriter::close() {
    if (closed_) return;
    closed_ = true;
    out_.flush();
    if (!out_) throw IoError("write failed: " + path_);
    out_.close();
}

CsvWriter::~CsvWriter() {
    try {
        close();
    } catch (...) {
        // destructor must not throw; close() explicitly to observe errors
    }
}

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
    CsvWriter w(path, header);
    for (const auto& r : rows) w.row(r);
    w.close();
}

} // namespace magphon
