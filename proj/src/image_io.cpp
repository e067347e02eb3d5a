#include "seud/image_io.hpp"

#include <png.h>

#include <cmath>
#include <cstdio>
#include <cstring>
#include <memory>
#include <stdexcept>
#include <vector>

namespace seud {

namespace {

constexpr char kRawMagic[8] = {'S', 'E', 'U', 'D', 'R', 'A', 'W', '1'};

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f)
            std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::string& path, const char* mode) {
    FilePtr f(std::fopen(path.c_str(), mode));
    if (!f)
        throw std::runtime_error("cannot open " + path);
    return f;
}

void write_u32le(std::FILE* f, uint32_t v) {
    const uint8_t b[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                          static_cast<uint8_t>(v >> 16), static_cast<uint8_t>(v >> 24)};
    std::fwrite(b, 1, 4, f);
}

uint32_t read_u32le(std::FILE* f, const std::string& path, long offset) {
    uint8_t b[4];
    if (std::fread(b, 1, 4, f) != 4)
        throw std::runtime_error("malformed raw file " + path + ": truncated at byte " +
                                 std::to_string(offset));
    return static_cast<uint32_t>(b[0]) | (static_cast<uint32_t>(b[1]) << 8) |
           (static_cast<uint32_t>(b[2]) << 16) | (static_cast<uint32_t>(b[3]) << 24);
}

struct PngWriter {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngWriter() { png_destroy_write_struct(&png, &info); }
};

struct PngReader {
    png_structp png = nullptr;
    png_infop info = nullptr;
    ~PngReader() { png_destroy_read_struct(&png, &info, nullptr); }
};

void write_png_generic(const std::string& path, int w, int h, int bit_depth,
                       int color_type, const std::vector<png_bytep>& rows) {
    FilePtr f = open_file(path, "wb");
    PngWriter ctx;
    ctx.png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png || !(ctx.info = png_create_info_struct(ctx.png)))
        throw std::runtime_error("libpng init failed");
    if (setjmp(png_jmpbuf(ctx.png)))
        throw std::runtime_error("libpng write error for " + path);
    png_init_io(ctx.png, f.get());
    png_set_IHDR(ctx.png, ctx.info, w, h, bit_depth, color_type,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
                 PNG_FILTER_TYPE_DEFAULT);
    png_write_info(ctx.png, ctx.info);
    if (bit_depth == 16)
        png_set_swap(ctx.png); // rows are little-endian in memory
    png_write_image(ctx.png, const_cast<png_bytepp>(rows.data()));
    png_write_end(ctx.png, nullptr);
}

} // namespace

void write_frame_png(const std::string& path, const Frame& f) {
    std::vector<uint8_t> bytes(f.data.size());
    for (size_t i = 0; i < f.data.size(); ++i)
        bytes[i] = float_to_u8(f.data[i]);
    std::vector<png_bytep> rows(f.height);
    for (int y = 0; y < f.height; ++y)
        rows[y] = bytes.data() + static_cast<size_t>(y) * f.width * 3;
    write_png_generic(path, f.width, f.height, 8, PNG_COLOR_TYPE_RGB, rows);
}

Frame read_frame_png(const std::string& path) {
    FilePtr file = open_file(path, "rb");
    PngReader ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png || !(ctx.info = png_create_info_struct(ctx.png)))
        throw std::runtime_error("libpng init failed");
    if (setjmp(png_jmpbuf(ctx.png)))
        throw std::runtime_error("malformed PNG " + path);
    png_init_io(ctx.png, file.get());
    png_read_info(ctx.png, ctx.info);
    // normalize anything to 8-bit RGB
    png_set_expand(ctx.png);
    png_set_strip_16(ctx.png);
    png_set_strip_alpha(ctx.png);
    png_set_gray_to_rgb(ctx.png);
    png_read_update_info(ctx.png, ctx.info);
    const int w = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    const int h = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    std::vector<uint8_t> bytes(static_cast<size_t>(w) * h * 3);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = bytes.data() + static_cast<size_t>(y) * w * 3;
    png_read_image(ctx.png, rows.data());
    Frame out(w, h);
    for (size_t i = 0; i < bytes.size(); ++i)
        out.data[i] = u8_to_float(bytes[i]);
    return out;
}

void write_frame_raw(const std::string& path, const Frame& f) {
    FilePtr file = open_file(path, "wb");
    std::fwrite(kRawMagic, 1, 8, file.get());
    write_u32le(file.get(), static_cast<uint32_t>(f.width));
    write_u32le(file.get(), static_cast<uint32_t>(f.height));
    write_u32le(file.get(), 3);
    static_assert(sizeof(float) == 4);
    std::fwrite(f.data.data(), sizeof(float), f.data.size(), file.get());
}

namespace {

void read_raw_header(std::FILE* f, const std::string& path, uint32_t& w,
                     uint32_t& h, uint32_t& c) {
    char magic[8];
    if (std::fread(magic, 1, 8, f) != 8 || std::memcmp(magic, kRawMagic, 8) != 0)
        throw std::runtime_error("malformed raw file " + path + ": bad magic at byte 0");
    w = read_u32le(f, path, 8);
    h = read_u32le(f, path, 12);
    c = read_u32le(f, path, 16);
}

} // namespace

Frame read_frame_raw(const std::string& path) {
    FilePtr file = open_file(path, "rb");
    uint32_t w, h, c;
    read_raw_header(file.get(), path, w, h, c);
    if (c != 3)
        throw std::runtime_error("raw file " + path + " has " + std::to_string(c) +
                                 " channels, expected 3");
    Frame out(static_cast<int>(w), static_cast<int>(h));
    if (std::fread(out.data.data(), sizeof(float), out.data.size(), file.get()) !=
        out.data.size())
        throw std::runtime_error("malformed raw file " + path + ": truncated pixel data");
    return out;
}

void write_frame(const std::string& path, const Frame& f, FrameFormat fmt) {
    fmt == FrameFormat::Png ? write_frame_png(path, f) : write_frame_raw(path, f);
}

Frame read_frame(const std::string& path, FrameFormat fmt) {
    return fmt == FrameFormat::Png ? read_frame_png(path) : read_frame_raw(path);
}

void write_depth_png(const std::string& path, const DepthMap& d, double scale) {
    if (!(scale > 0.0))
        throw std::invalid_argument("write_depth_png: scale must be > 0");
    std::vector<uint16_t> px(d.data.size());
    for (size_t i = 0; i < d.data.size(); ++i) {
        const double v = std::clamp(d.data[i] / scale, 0.0, 1.0);
        px[i] = static_cast<uint16_t>(std::lround(v * 65535.0));
    }
    std::vector<png_bytep> rows(d.height);
    for (int y = 0; y < d.height; ++y)
        rows[y] = reinterpret_cast<png_bytep>(px.data() + static_cast<size_t>(y) * d.width);
    write_png_generic(path, d.width, d.height, 16, PNG_COLOR_TYPE_GRAY, rows);
}

DepthMap read_depth_png(const std::string& path, double scale) {
    FilePtr file = open_file(path, "rb");
    PngReader ctx;
    ctx.png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!ctx.png || !(ctx.info = png_create_info_struct(ctx.png)))
        throw std::runtime_error("libpng init failed");
    if (setjmp(png_jmpbuf(ctx.png)))
        throw std::runtime_error("malformed PNG " + path);
    png_init_io(ctx.png, file.get());
    png_read_info(ctx.png, ctx.info);
    if (png_get_color_type(ctx.png, ctx.info) != PNG_COLOR_TYPE_GRAY)
        throw std::runtime_error("depth PNG " + path + " must be grayscale");
    if (png_get_bit_depth(ctx.png, ctx.info) < 16)
        png_set_expand_16(ctx.png);
    png_set_swap(ctx.png);
    png_read_update_info(ctx.png, ctx.info);
    const int w = static_cast<int>(png_get_image_width(ctx.png, ctx.info));
    const int h = static_cast<int>(png_get_image_height(ctx.png, ctx.info));
    std::vector<uint16_t> px(static_cast<size_t>(w) * h);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y)
        rows[y] = reinterpret_cast<png_bytep>(px.data() + static_cast<size_t>(y) * w);
    png_read_image(ctx.png, rows.data());
    DepthMap out(w, h);
    for (size_t i = 0; i < px.size(); ++i)
        out.data[i] = static_cast<float>(px[i] / 65535.0 * scale);
    return out;
}

void write_depth_raw(const std::string& path, const DepthMap& d) {
    FilePtr file = open_file(path, "wb");
    std::fwrite(kRawMagic, 1, 8, file.get());
    write_u32le(file.get(), static_cast<uint32_t>(d.width));
    write_u32le(file.get(), static_cast<uint32_t>(d.height));
    write_u32le(file.get(), 1);
    std::fwrite(d.data.data(), sizeof(float), d.data.size(), file.get());
}

DepthMap read_depth_raw(const std::string& path) {
    FilePtr file = open_file(path, "rb");
    uint32_t w, h, c;
    read_raw_header(file.get(), path, w, h, c);
    if (c != 1)
        throw std::runtime_error("raw depth " + path + " has " + std::to_string(c) +
                                 " channels, expected 1");
    DepthMap out(static_cast<int>(w), static_cast<int>(h));
    if (std::fread(out.data.data(), sizeof(float), out.data.size(), file.get()) !=
        out.data.size())
        throw std::runtime_error("malformed raw file " + path + ": truncated pixel data");
    return out;
}

DepthMap read_depth_any(const std::string& path, double scale) {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".f32") == 0)
        return read_depth_raw(path);
    return read_depth_png(path, scale);
}

} // namespace seud
