#ifndef JDEBLOCK_IMAGE_IO_H_
#define JDEBLOCK_IMAGE_IO_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace jdeblock {

// 8-bit grayscale plane, row-major. Dimensions are always positive and the
// raster always holds exactly width * height samples.
class GrayImage {
 public:
  // Zero-filled image. Throws DomainError on a zero dimension.
  GrayImage(int width, int height);
  // Takes ownership of an existing raster. Throws DomainError if the size
  // does not match.
  GrayImage(int width, int height, std::vector<uint8_t> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  std::size_t size() const { return pixels_.size(); }

  uint8_t at(int x, int y) const { return pixels_[Index(x, y)]; }
  uint8_t& at(int x, int y) { return pixels_[Index(x, y)]; }

  std::span<const uint8_t> pixels() const { return pixels_; }
  std::span<uint8_t> pixels() { return pixels_; }

  std::span<const uint8_t> row(int y) const {
    return std::span<const uint8_t>(pixels_).subspan(Index(0, y), width_);
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t Index(int x, int y) const {
    return static_cast<std::size_t>(y) * width_ + x;
  }

  int width_;
  int height_;
  std::vector<uint8_t> pixels_;
};

// Decodes a binary PGM (P5, maxval 255). '#' comments are allowed anywhere
// whitespace is allowed in the header.
// Throws FormatError, UnsupportedError (maxval != 255) or TruncatedError.
GrayImage read_pgm(std::span<const uint8_t> bytes);

// Emits "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<uint8_t> write_pgm(const GrayImage& image);

// File helpers. Throw Error when the file cannot be opened or written.
GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& image);

}  // namespace jdeblock

#endif  // JDEBLOCK_IMAGE_IO_H_
