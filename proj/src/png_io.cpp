#include "chartex/png_io.hpp"

#include <zlib.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <vector>

#include "chartex/errors.hpp"

namespace chartex {

namespace {

constexpr std::array<uint8_t, 8> kPngSignature = {137, 80, 78, 71, 13, 10, 26, 10};

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
    out.push_back(static_cast<uint8_t>(v >> 24));
    out.push_back(static_cast<uint8_t>(v >> 16));
    out.push_back(static_cast<uint8_t>(v >> 8));
    out.push_back(static_cast<uint8_t>(v));
}

uint32_t get_u32(const uint8_t* p) {
    return (static_cast<uint32_t>(p[0]) << 24) | (static_cast<uint32_t>(p[1]) << 16) |
           (static_cast<uint32_t>(p[2]) << 8) | static_cast<uint32_t>(p[3]);
}

void write_chunk(std::vector<uint8_t>& out, const char type[4], const std::vector<uint8_t>& data) {
    put_u32(out, static_cast<uint32_t>(data.size()));
    size_t crc_start = out.size();
    out.insert(out.end(), type, type + 4);
    out.insert(out.end(), data.begin(), data.end());
    uint32_t crc = crc32(0L, out.data() + crc_start, static_cast<uInt>(out.size() - crc_start));
    put_u32(out, crc);
}

std::vector<uint8_t> zlib_deflate(const std::vector<uint8_t>& data) {
    uLongf bound = compressBound(static_cast<uLong>(data.size()));
    std::vector<uint8_t> out(bound);
    if (compress2(out.data(), &bound, data.data(), static_cast<uLong>(data.size()), 6) != Z_OK)
        throw io_error("png: deflate failed");
    out.resize(bound);
    return out;
}

std::vector<uint8_t> zlib_inflate(const std::vector<uint8_t>& data, size_t expected) {
    std::vector<uint8_t> out(expected);
    z_stream zs{};
    if (inflateInit(&zs) != Z_OK) throw io_error("png: inflate init failed");
    zs.next_in = const_cast<Bytef*>(data.data());
    zs.avail_in = static_cast<uInt>(data.size());
    zs.next_out = out.data();
    zs.avail_out = static_cast<uInt>(out.size());
    int rc = inflate(&zs, Z_FINISH);
    inflateEnd(&zs);
    if (rc != Z_STREAM_END || zs.total_out != expected)
        throw io_error("png: corrupt compressed stream");
    return out;
}

void write_png(const std::string& path, int width, int height, int channels,
               std::span<const uint8_t> data) {
    if (width <= 0 || height <= 0 ||
        data.size() != static_cast<size_t>(width) * height * channels)
        throw io_error("png: bad buffer size for " + path);

    std::vector<uint8_t> ihdr;
    put_u32(ihdr, static_cast<uint32_t>(width));
    put_u32(ihdr, static_cast<uint32_t>(height));
    ihdr.push_back(8);                                    // bit depth
    ihdr.push_back(channels == 1 ? 0 : 2);                // gray or truecolor
    ihdr.push_back(0);                                    // compression
    ihdr.push_back(0);                                    // filter method
    ihdr.push_back(0);                                    // no interlace

    size_t stride = static_cast<size_t>(width) * channels;
    std::vector<uint8_t> raw;
    raw.reserve((stride + 1) * height);
    for (int y = 0; y < height; ++y) {
        raw.push_back(0);  // filter type None on every row, keeps output reproducible
        raw.insert(raw.end(), data.begin() + y * stride, data.begin() + (y + 1) * stride);
    }

    std::vector<uint8_t> out(kPngSignature.begin(), kPngSignature.end());
    write_chunk(out, "IHDR", ihdr);
    write_chunk(out, "IDAT", zlib_deflate(raw));
    write_chunk(out, "IEND", {});

    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw io_error("png: cannot open " + path + " for writing");
    f.write(reinterpret_cast<const char*>(out.data()), static_cast<std::streamsize>(out.size()));
    if (!f) throw io_error("png: short write to " + path);
}

int paeth(int a, int b, int c) {
    int p = a + b - c;
    int pa = std::abs(p - a), pb = std::abs(p - b), pc = std::abs(p - c);
    if (pa <= pb && pa <= pc) return a;
    if (pb <= pc) return b;
    return c;
}

void unfilter(std::vector<uint8_t>& raw, int height, size_t stride, int bpp) {
    for (int y = 0; y < height; ++y) {
        uint8_t* row = raw.data() + y * (stride + 1);
        uint8_t filter = row[0];
        uint8_t* cur = row + 1;
        const uint8_t* prev = y > 0 ? raw.data() + (y - 1) * (stride + 1) + 1 : nullptr;
        for (size_t x = 0; x < stride; ++x) {
            int a = x >= static_cast<size_t>(bpp) ? cur[x - bpp] : 0;
            int b = prev ? prev[x] : 0;
            int c = (prev && x >= static_cast<size_t>(bpp)) ? prev[x - bpp] : 0;
            int v = cur[x];
            switch (filter) {
                case 0: break;
                case 1: v += a; break;
                case 2: v += b; break;
                case 3: v += (a + b) / 2; break;
                case 4: v += paeth(a, b, c); break;
                default: throw io_error("png: unknown filter type");
            }
            cur[x] = static_cast<uint8_t>(v & 0xff);
        }
    }
}

uint8_t luminance(uint8_t r, uint8_t g, uint8_t b) {
    return static_cast<uint8_t>(std::lround(0.299 * r + 0.587 * g + 0.114 * b));
}

}  // namespace

void write_png_gray(const std::string& path, const Image& img) {
    write_png(path, img.width, img.height, 1, img.pixels);
}

void write_png_rgb(const std::string& path, int width, int height, std::span<const uint8_t> rgb) {
    write_png(path, width, height, 3, rgb);
}

Image read_png_gray(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io_error("png: cannot open " + path);
    std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(f)),
                               std::istreambuf_iterator<char>());
    if (bytes.size() < 8 || std::memcmp(bytes.data(), kPngSignature.data(), 8) != 0)
        throw io_error("png: bad signature in " + path);

    int width = 0, height = 0, bit_depth = 0, color_type = 0, interlace = 0;
    std::vector<uint8_t> idat;
    std::vector<uint8_t> palette;
    size_t pos = 8;
    while (pos + 12 <= bytes.size()) {
        uint32_t len = get_u32(&bytes[pos]);
        if (pos + 12 + len > bytes.size()) throw io_error("png: truncated chunk");
        const char* type = reinterpret_cast<const char*>(&bytes[pos + 4]);
        const uint8_t* data = &bytes[pos + 8];
        if (std::memcmp(type, "IHDR", 4) == 0) {
            if (len != 13) throw io_error("png: bad IHDR");
            width = static_cast<int>(get_u32(data));
            height = static_cast<int>(get_u32(data + 4));
            bit_depth = data[8];
            color_type = data[9];
            interlace = data[12];
        } else if (std::memcmp(type, "PLTE", 4) == 0) {
            palette.assign(data, data + len);
        } else if (std::memcmp(type, "IDAT", 4) == 0) {
            idat.insert(idat.end(), data, data + len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            break;
        }
        pos += 12 + len;
    }
    if (width <= 0 || height <= 0 || idat.empty()) throw io_error("png: missing image data");
    if (bit_depth != 8) throw io_error("png: only 8-bit depth supported");
    if (interlace != 0) throw io_error("png: interlaced files not supported");

    int channels;
    switch (color_type) {
        case 0: channels = 1; break;  // gray
        case 2: channels = 3; break;  // rgb
        case 3: channels = 1; break;  // palette indices
        case 4: channels = 2; break;  // gray + alpha
        case 6: channels = 4; break;  // rgba
        default: throw io_error("png: unsupported color type");
    }

    size_t stride = static_cast<size_t>(width) * channels;
    std::vector<uint8_t> raw = zlib_inflate(idat, (stride + 1) * height);
    unfilter(raw, height, stride, channels);

    Image out(width, height, 255);
    for (int y = 0; y < height; ++y) {
        const uint8_t* row = raw.data() + y * (stride + 1) + 1;
        for (int x = 0; x < width; ++x) {
            const uint8_t* px = row + static_cast<size_t>(x) * channels;
            uint8_t g;
            switch (color_type) {
                case 0: g = px[0]; break;
                case 2: g = luminance(px[0], px[1], px[2]); break;
                case 3: {
                    size_t idx = static_cast<size_t>(px[0]) * 3;
                    if (idx + 2 >= palette.size()) throw io_error("png: palette index out of range");
                    g = luminance(palette[idx], palette[idx + 1], palette[idx + 2]);
                    break;
                }
                case 4: g = px[0]; break;
                default: g = luminance(px[0], px[1], px[2]); break;
            }
            out.at(x, y) = g;
        }
    }
    return out;
}

}  // namespace chartex
