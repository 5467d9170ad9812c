#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace posegen {

/// 8-bit image, row-major, `channels` interleaved samples per pixel (1 or 3).
struct Image {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<std::uint8_t> data;

  Image() = default;
  Image(int w, int h, int c) : width(w), height(h), channels(c), data(static_cast<std::size_t>(w) * h * c, 0) {}

  std::uint8_t* pixel(int x, int y) { return &data[(static_cast<std::size_t>(y) * width + x) * channels]; }
  const std::uint8_t* pixel(int x, int y) const {
    return &data[(static_cast<std::size_t>(y) * width + x) * channels];
  }
  bool operator==(const Image&) const = default;
};

/// Lossless PNG. Throws DataError on I/O or codec failure.
void write_png(const std::filesystem::path& path, const Image& image);
Image read_png(const std::filesystem::path& path);

}  // namespace posegen
