#include "cineparse/histogram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>

namespace cineparse {

namespace {

// PPM headers allow '#' comments anywhere between tokens.
int next_header_value(std::istream& in, const char* what) {
  int c;
  while ((c = in.get()) != EOF) {
    if (c == '#') {
      while ((c = in.get()) != EOF && c != '\n') {
      }
    } else if (!std::isspace(c)) {
      in.unget();
      break;
    }
  }
  int value;
  if (!(in >> value)) fail(Errc::bad_input, std::string("truncated PPM header: missing ") + what);
  return value;
}

}  // namespace

Image read_ppm(std::istream& in) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (magic[0] != 'P' || magic[1] != '6') fail(Errc::bad_input, "not a binary PPM (P6) stream");
  const int width = next_header_value(in, "width");
  const int height = next_header_value(in, "height");
  const int maxval = next_header_value(in, "maxval");
  if (width < 1 || height < 1) fail(Errc::bad_input, "PPM dimensions must be positive");
  if (maxval != 255) fail(Errc::bad_input, "only 8-bit PPM images are supported");
  in.get();  // single whitespace byte before the raster

  Image img;
  img.width = width;
  img.height = height;
  img.pixels.resize(img.pixel_count() * 3);
  in.read(reinterpret_cast<char*>(img.pixels.data()), static_cast<std::streamsize>(img.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != img.pixels.size())
    fail(Errc::bad_input, "truncated PPM raster");
  return img;
}

Image read_ppm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::bad_input, "cannot open image: " + path);
  return read_ppm(in);
}

void write_ppm(const Image& img, std::ostream& out) {
  if (img.width < 1 || img.height < 1 || img.pixels.size() != img.pixel_count() * 3)
    fail(Errc::bad_input, "malformed image buffer");
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.pixels.data()),
            static_cast<std::streamsize>(img.pixels.size()));
}

void write_ppm_file(const Image& img, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::bad_input, "cannot write image: " + path);
  write_ppm(img, out);
}

std::uint64_t Histogram::total() const {
  return std::accumulate(bins.begin(), bins.end(), std::uint64_t{0});
}

Histogram compute_histogram(const Image& img, int bins_per_channel) {
  if (bins_per_channel < 2 || bins_per_channel > 256)
    fail(Errc::invalid_bin_count,
         "bins per channel must lie in [2, 256], got " + std::to_string(bins_per_channel));
  if (img.pixels.size() != img.pixel_count() * 3 || img.pixel_count() == 0)
    fail(Errc::bad_input, "malformed image buffer");

  const std::size_t b = static_cast<std::size_t>(bins_per_channel);
  Histogram h;
  h.bins_per_channel = bins_per_channel;
  h.bins.assign(b * b * b, 0);
  for (std::size_t i = 0; i < img.pixels.size(); i += 3) {
    const std::size_t qr = img.pixels[i] * b / 256;
    const std::size_t qg = img.pixels[i + 1] * b / 256;
    const std::size_t qb = img.pixels[i + 2] * b / 256;
    ++h.bins[(qr * b + qg) * b + qb];
  }
  return h;
}

std::uint64_t intersection(const Histogram& a, const Histogram& b) {
  if (a.bins_per_channel != b.bins_per_channel || a.bins.size() != b.bins.size())
    fail(Errc::layout_mismatch, "histograms use different bin layouts");
  std::uint64_t sum = 0;
  for (std::size_t k = 0; k < a.bins.size(); ++k) sum += std::min(a.bins[k], b.bins[k]);
  return sum;
}

double similarity(const Histogram& a, const Histogram& b) {
  const std::uint64_t inter = intersection(a, b);
  const std::uint64_t denom = b.total();
  if (denom == 0) fail(Errc::empty_reference_histogram, "reference histogram has no pixels");
  return static_cast<double>(inter) / static_cast<double>(denom);
}

double dissimilarity(const Histogram& a, const Histogram& b) { return 1.0 - similarity(a, b); }

}  // namespace cineparse
