#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corefine/grid.hpp"

namespace corefine::io {

// Interleaved 8-bit RGB image, row-major.
struct ImageU8 {
    int height = 0;
    int width = 0;
    std::vector<std::uint8_t> rgb;  // size = 3*height*width

    std::uint8_t& at(int r, int c, int ch) { return rgb[(static_cast<size_t>(r) * width + c) * 3 + ch]; }
    std::uint8_t at(int r, int c, int ch) const { return rgb[(static_cast<size_t>(r) * width + c) * 3 + ch]; }
};

// Binary PPM (P6) / PGM (P5). Prob maps are quantized to 16-bit with
// p = value / 65535 and stored big-endian per the PGM spec.
void write_ppm(const std::string& path, const ImageU8& img);
ImageU8 read_ppm(const std::string& path);

void write_mask_pgm(const std::string& path, const Mask& mask);  // 0 / 255
Mask read_mask_pgm(const std::string& path);

void write_prob_pgm16(const std::string& path, const ProbMap& p);
ProbMap read_prob_pgm16(const std::string& path);

std::uint32_t crc32_file(const std::string& path);
std::uint32_t crc32_bytes(const void* data, size_t n);

// Bilinear resize for real-valued maps; images resized per channel.
ProbMap resize_bilinear(const ProbMap& src, int out_h, int out_w);
ImageU8 resize_bilinear(const ImageU8& src, int out_h, int out_w);
Mask resize_mask(const Mask& src, int out_h, int out_w);  // bilinear on {0,1}, threshold 0.5

}  // namespace corefine::io
