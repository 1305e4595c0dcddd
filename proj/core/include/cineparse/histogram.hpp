#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cineparse/errors.hpp"

namespace cineparse {

// Row-major interleaved RGB, 8 bits per channel.
struct Image {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;

  std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

Image read_ppm(std::istream& in);
Image read_ppm_file(const std::string& path);
void write_ppm(const Image& img, std::ostream& out);
void write_ppm_file(const Image& img, const std::string& path);

// RGB color histogram with b uniform bins per channel, b*b*b counters total.
// Bin index is (qr * b + qg) * b + qb with q = channel * b / 256.
struct Histogram {
  int bins_per_channel = 0;
  std::vector<std::uint32_t> bins;

  std::uint64_t total() const;
  bool operator==(const Histogram&) const = default;
};

Histogram compute_histogram(const Image& img, int bins_per_channel);

// Swain-Ballard intersection: sum of per-bin minima.
std::uint64_t intersection(const Histogram& a, const Histogram& b);

// Normalized by the second histogram's pixel count; asymmetric on purpose.
double similarity(const Histogram& a, const Histogram& b);

double dissimilarity(const Histogram& a, const Histogram& b);

}  // namespace cineparse
