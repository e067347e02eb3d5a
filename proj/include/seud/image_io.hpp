// Frame and depth codecs: 8-bit RGB PNG, 16-bit grayscale depth PNG, and a
// raw little-endian float32 format for lossless pipelines.
//
// Raw layout: magic "SEUDRAW1", u32 width, u32 height, u32 channels,
// then width*height*channels IEEE float32, all little-endian.

#pragma once

#include "seud/frame.hpp"

#include <string>

namespace seud {

enum class FrameFormat { Png, RawFloat };

inline const char* frame_extension(FrameFormat f) {
    return f == FrameFormat::Png ? ".png" : ".f32";
}

void write_frame_png(const std::string& path, const Frame& f);
Frame read_frame_png(const std::string& path);

void write_frame_raw(const std::string& path, const Frame& f);
Frame read_frame_raw(const std::string& path);

void write_frame(const std::string& path, const Frame& f, FrameFormat fmt);
Frame read_frame(const std::string& path, FrameFormat fmt);

// Depth stored as 16-bit gray: pixel = round(depth / scale * 65535).
void write_depth_png(const std::string& path, const DepthMap& d, double scale);
DepthMap read_depth_png(const std::string& path, double scale);

void write_depth_raw(const std::string& path, const DepthMap& d);
DepthMap read_depth_raw(const std::string& path);

// Reads depth by extension: .png (with scale) or .f32.
DepthMap read_depth_any(const std::string& path, double scale);

} // namespace seud
