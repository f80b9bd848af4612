#include "lpl/csv.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include "lpl/errors.hpp"

namespace lpl {

std::string format_csv_value(double v) {
    char buf[64];
    const std::to_chars_result res =
        std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (res.ec != std::errc()) throw NumericError("format_csv_value: conversion failed");
    return std::string(buf, res.ptr);
}

void append_csv(const std::string& path, const std::string& header,
                const std::vector<double>& row) {
    std::string existing_header;
    bool has_header = false;
    {
        std::ifstream is(path);
        if (is && std::getline(is, existing_header) && !existing_header.empty()) {
            has_header = true;
        }
    }
    if (has_header && existing_header != header) {
        throw IoError("append_csv: header mismatch in " + path + ": file has \"" +
                      existing_header + "\", expected \"" + header + "\"");
    }

    std::string line;
    if (!has_header) {
        line += header;
        line += '\n';
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i > 0) line += ',';
        line += format_csv_value(row[i]);
    }
    line += '\n';

    std::ofstream os(path, std::ios::app);
    if (!os) throw IoError("append_csv: cannot open " + path);
    os.write(line.data(), static_cast<std::streamsize>(line.size()));
    if (!os) throw IoError("append_csv: write failed for " + path);
}

} // namespace lpl
