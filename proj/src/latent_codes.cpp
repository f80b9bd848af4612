#include "lpl/latent_codes.hpp"

#include <fstream>

#include "binary_io.hpp"
#include "lpl/errors.hpp"

namespace lpl {

namespace {
constexpr char kMagic[] = "LPLC";
constexpr std::uint32_t kVersion = 1;
} // namespace

void write_codes(const LatentCodeSet& set, const std::string& path) {
    if (set.reversal_losses.size() != set.codes.rows()) {
        throw ShapeError("write_codes: loss count does not match code rows");
    }
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw IoError("write_codes: cannot open " + path);
    os.write(kMagic, 4);
    bin::put_u32(os, kVersion);
    bin::put_string(os, set.source);
    bin::put_u32(os, static_cast<std::uint32_t>(set.codes.rows()));
    bin::put_u32(os, static_cast<std::uint32_t>(set.codes.cols()));
    bin::put_doubles(os, set.codes.data(), set.codes.size());
    bin::put_doubles(os, set.reversal_losses.data(), set.reversal_losses.size());
    if (!os) throw IoError("write_codes: write failed for " + path);
}

LatentCodeSet read_codes(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("read_codes: cannot open " + path);
    bin::Reader r(is, path);
    r.expect_magic(kMagic, 4, "code set");
    std::uint32_t version = r.u32();
    if (version != kVersion) {
        r.fail("unsupported code-set version " + std::to_string(version));
    }
    LatentCodeSet set;
    set.source = r.string();
    std::uint32_t n = r.u32();
    std::uint32_t d = r.u32();
    set.codes = Matrix(n, d);
    r.doubles(set.codes.data(), set.codes.size());
    set.reversal_losses.resize(n);
    r.doubles(set.reversal_losses.data(), n);
    return set;
}

} // namespace lpl
