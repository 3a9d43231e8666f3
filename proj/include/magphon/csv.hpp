#pragma once

#include <fstream>
#include <span>
#include <string>
#include <vector>

namespace magphon {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "5.000000000e-1" style: mantissa with nine fractional digits, exponent
// without sign padding or leading zeros. Zero (either sign) formats as
// "0.000000000e0". Byte-identical for identical inputs.
std::string format_sci9(double x);

// RFC-4180-style comma-separated output, '.' decimal point, LF line endings,
// header always present. Throws IoError with the path on failure.
class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& header);
    void row(std::span<const double> values);
    void close(); // flushes and checks the stream; called by the destructor
    ~CsvWriter();

    CsvWriter(const CsvWriter&) = delete;
    CsvWriter& operator=(const CsvWriter&) = delete;

private:
    std::string path_;
    std::ofstream out_;
    bool closed_ = false;
};

void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<double>>& rows);

} // namespace magphon
