#include "jdeblock/image_io.h"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>
#include <utility>

#include "jdeblock/errors.h"

namespace jdeblock {

GrayImage::GrayImage(int width, int height)
    : GrayImage(width, height,
                std::vector<uint8_t>(width > 0 && height > 0
                                         ? static_cast<std::size_t>(width) * height
                                         : 0)) {}

GrayImage::GrayImage(int width, int height, std::vector<uint8_t> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width <= 0 || height <= 0) {
    throw DomainError("image dimensions must be positive");
  }
  if (pixels_.size() != static_cast<std::size_t>(width) * height) {
    throw DomainError("raster size does not match image dimensions");
  }
}

namespace {

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  void ExpectMagic() {
    if (bytes_.size() < 2 || bytes_[0] != 'P' || bytes_[1] != '5') {
      throw FormatError("not a binary PGM: missing P5 magic");
    }
    pos_ = 2;
    // The magic must be followed by whitespace (or a comment).
    if (pos_ < bytes_.size() && !IsSpace(bytes_[pos_]) && bytes_[pos_] != '#') {
      throw FormatError("not a binary PGM: bad magic");
    }
  }

  // Skips whitespace and comments, then parses a decimal field.
  long long ReadNumber(const char* what) {
    SkipSeparators();
    if (pos_ >= bytes_.size()) {
      throw TruncatedError(std::string("PGM header ends before ") + what);
    }
    if (!std::isdigit(bytes_[pos_])) {
      throw FormatError(std::string("PGM header: expected ") + what);
    }
    long long value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + (bytes_[pos_] - '0');
      if (value > std::numeric_limits<int>::max()) {
        throw FormatError(std::string("PGM header: ") + what + " too large");
      }
      ++pos_;
    }
    return value;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t ConsumeRasterSeparator() {
    if (pos_ >= bytes_.size()) {
      throw TruncatedError("PGM header ends before raster");
    }
    if (!IsSpace(bytes_[pos_])) {
      throw FormatError("PGM header: maxval not followed by whitespace");
    }
    return pos_ + 1;
  }

 private:
  static bool IsSpace(uint8_t c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  }

  void SkipSeparators() {
    while (pos_ < bytes_.size()) {
      if (IsSpace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' &&
               bytes_[pos_] != '\r') {
          ++pos_;
        }
      } else {
        break;
      }
    }
  }

  std::span<const uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

GrayImage read_pgm(std::span<const uint8_t> bytes) {
  HeaderReader reader(bytes);
  reader.ExpectMagic();
  const long long width = reader.ReadNumber("width");
  const long long height = reader.ReadNumber("height");
  const long long maxval = reader.ReadNumber("maxval");
  if (width == 0 || height == 0) {
    throw FormatError("PGM header: zero dimension");
  }
  if (maxval != 255) {
    throw UnsupportedError("only maxval 255 is supported, got " +
                           std::to_string(maxval));
  }
  const std::size_t offset = reader.ConsumeRasterSeparator();
  const std::size_t count = static_cast<std::size_t>(width) * height;
  if (bytes.size() - offset < count) {
    throw TruncatedError("PGM raster has " + std::to_string(bytes.size() - offset) +
                         " bytes, expected " + std::to_string(count));
  }
  auto raster = bytes.subspan(offset, count);
  return GrayImage(static_cast<int>(width), static_cast<int>(height),
                   std::vector<uint8_t>(raster.begin(), raster.end()));
}

std::vector<uint8_t> write_pgm(const GrayImage& image) {
  const std::string header = "P5\n" + std::to_string(image.width()) + " " +
                             std::to_string(image.height()) + "\n255\n";
  std::vector<uint8_t> out;
  out.reserve(header.size() + image.size());
  out.insert(out.end(), header.begin(), header.end());
  out.insert(out.end(), image.pixels().begin(), image.pixels().end());
  return out;
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                             std::istreambuf_iterator<char>());
  return read_pgm(bytes);
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& image) {
  const auto bytes = write_pgm(image);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace jdeblock
