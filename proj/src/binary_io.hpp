#pragma once

// Little-endian binary primitives shared by the checkpoint and code-set
// readers/writers. Doubles travel as their IEEE-754 bit patterns, so
// round-trips are bitwise.

#include <cstdint>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "lpl/errors.hpp"
#include "lpl/matrix.hpp"

namespace lpl::bin {

inline void put_u8(std::ostream& os, std::uint8_t v) {
    os.put(static_cast<char>(v));
}

inline void put_u32(std::ostream& os, std::uint32_t v) {
    char b[4];
    for (int i = 0; i < 4; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
    os.write(b, 4);
}

inline void put_u64(std::ostream& os, std::uint64_t v) {
    char b[8];
    for (int i = 0; i < 8; ++i) b[i] = static_cast<char>((v >> (8 * i)) & 0xFFU);
    os.write(b, 8);
}

inline void put_f64(std::ostream& os, double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    put_u64(os, bits);
}

inline void put_string(std::ostream& os, const std::string& s) {
    put_u32(os, static_cast<std::uint32_t>(s.size()));
    os.write(s.data(), static_cast<std::streamsize>(s.size()));
}

inline void put_doubles(std::ostream& os, const double* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) put_f64(os, p[i]);
}

class Reader {
public:
    Reader(std::istream& is, std::string path) : is_(is), path_(std::move(path)) {}

    std::uint8_t u8() {
        int c = is_.get();
        if (c == EOF) fail("unexpected end of file");
        ++offset_;
        return static_cast<std::uint8_t>(c);
    }

    std::uint32_t u32() {
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(u8()) << (8 * i);
        return v;
    }

    std::uint64_t u64() {
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(u8()) << (8 * i);
        return v;
    }

    double f64() {
        std::uint64_t bits = u64();
        double v;
        std::memcpy(&v, &bits, sizeof v);
        return v;
    }

    std::string string(std::size_t max_len = 1 << 20) {
        std::uint32_t n = u32();
        if (n > max_len) fail("string length " + std::to_string(n) + " is implausible");
        std::string s(n, '\0');
        read_raw(s.data(), n);
        return s;
    }

    void doubles(double* p, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) p[i] = f64();
    }

    void expect_magic(const char* magic, std::size_t n, const char* what) {
        std::string got(n, '\0');
        read_raw(got.data(), n);
        if (got != std::string(magic, n)) {
            throw ParseError(path_ + ": bad magic for " + std::string(what) + ", got \"" + got +
                                 "\"",
                             offset_ - n);
        }
    }

    std::size_t offset() const { return offset_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(path_ + ": " + msg, offset_);
    }

private:
    void read_raw(char* dst, std::size_t n) {
        is_.read(dst, static_cast<std::streamsize>(n));
        if (static_cast<std::size_t>(is_.gcount()) != n) {
            fail("truncated: wanted " + std::to_string(n) + " bytes, got " +
                 std::to_string(is_.gcount()));
        }
        offset_ += n;
    }

    std::istream& is_;
    std::string path_;
    std::size_t offset_ = 0;
};

} // namespace lpl::bin
