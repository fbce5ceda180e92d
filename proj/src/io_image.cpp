#include <png.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <csetjmp>
#include <cstring>
#include <string>

#include "fbcs/io.hpp"

namespace fbcs {
namespace {

constexpr std::uint8_t kPngSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

std::uint32_t read_be32(std::span<const std::uint8_t> bytes, std::size_t offset) {
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

struct PngMemory {
  std::span<const std::uint8_t> input;
  std::size_t offset = 0;
  Bytes* output = nullptr;
  char error[256] = {};
};

void on_png_error(png_structp png, png_const_charp message) {
  auto* mem = static_cast<PngMemory*>(png_get_error_ptr(png));
  std::snprintf(mem->error, sizeof mem->error, "%s", message);
  png_longjmp(png, 1);
}

void on_png_warning(png_structp, png_const_charp) {}

void on_png_read(png_structp png, png_bytep out, png_size_t length) {
  auto* mem = static_cast<PngMemory*>(png_get_io_ptr(png));
  if (mem->input.size() - mem->offset < length) {
    png_error(png, "IDAT: unexpected end of file");
  }
  std::memcpy(out, mem->input.data() + mem->offset, length);
  mem->offset += length;
}

void on_png_write(png_structp png, png_bytep data, png_size_t length) {
  auto* mem = static_cast<PngMemory*>(png_get_io_ptr(png));
  mem->output->insert(mem->output->end(), data, data + length);
}

void on_png_flush(png_structp) {}

// The IHDR fields are checked here, before libpng sees the file, so unsupported layouts are
// reported precisely instead of being silently converted.
void check_png_header(std::span<const std::uint8_t> bytes, std::uint32_t& width,
                      std::uint32_t& height) {
  if (bytes.size() < 8 || std::memcmp(bytes.data(), kPngSignature, 8) != 0) {
    throw FormatError("PNG offset 0: missing PNG signature");
  }
  if (bytes.size() < 33) {
    throw FormatError("PNG offset 8: truncated before end of IHDR chunk");
  }
  if (read_be32(bytes, 8) != 13 || std::memcmp(bytes.data() + 12, "IHDR", 4) != 0) {
    throw FormatError("PNG offset 8: first chunk is not a 13-byte IHDR");
  }
  width = read_be32(bytes, 16);
  height = read_be32(bytes, 20);
  const unsigned depth = bytes[24];
  const unsigned color = bytes[25];
  if (depth != 8) {
    throw FormatError("PNG IHDR: unsupported bit depth " + std::to_string(depth) +
                      " (only 8-bit images are supported)");
  }
  if (color != PNG_COLOR_TYPE_GRAY && color != PNG_COLOR_TYPE_RGB &&
      color != PNG_COLOR_TYPE_GRAY_ALPHA && color != PNG_COLOR_TYPE_RGB_ALPHA) {
    throw FormatError("PNG IHDR: unsupported color type " + std::to_string(color) +
                      " (expected gray, gray+alpha, RGB or RGBA)");
  }
  if (width == 0 || height == 0) {
    throw FormatError("PNG IHDR: zero image dimension");
  }
}

// Decodes to packed 8-bit RGB. Returns false with mem.error set on failure.
bool png_decode_rgb(PngMemory& mem, png_bytep* rows) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, &mem, on_png_error, on_png_warning);
  if (png == nullptr) {
    std::snprintf(mem.error, sizeof mem.error, "out of memory");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    std::snprintf(mem.error, sizeof mem.error, "out of memory");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    return false;
  }
  png_set_read_fn(png, &mem, on_png_read);
  png_read_info(png, info);
  const png_byte color = png_get_color_type(png, info);
  if (color & PNG_COLOR_MASK_ALPHA) {
    png_set_strip_alpha(png);
  }
  if (color == PNG_COLOR_TYPE_GRAY || color == PNG_COLOR_TYPE_GRAY_ALPHA) {
    png_set_gray_to_rgb(png);
  }
  png_set_interlace_handling(png);
  png_read_update_info(png, info);
  if (png_get_rowbytes(png, info) != std::size_t{png_get_image_width(png, info)} * 3) {
    png_error(png, "IHDR: unexpected row layout after conversion to RGB");
  }
  png_read_image(png, rows);
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return true;
}

bool png_encode(PngMemory& mem, std::uint32_t width, std::uint32_t height, int color_type,
                png_bytep* rows) {
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, &mem, on_png_error, on_png_warning);
  if (png == nullptr) {
    std::snprintf(mem.error, sizeof mem.error, "out of memory");
    return false;
  }
  png_infop info = png_create_info_struct(png);
  if (info == nullptr) {
    png_destroy_write_struct(&png, nullptr);
    std::snprintf(mem.error, sizeof mem.error, "out of memory");
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    return false;
  }
  png_set_write_fn(png, &mem, on_png_write, on_png_flush);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, width, height, 8, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  png_write_image(png, rows);
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return true;
}

Bytes encode_png_raw(std::uint32_t width, std::uint32_t height, int color_type,
                     std::size_t channels, std::vector<std::uint8_t>& raw) {
  std::vector<png_bytep> rows(height);
  for (std::uint32_t y = 0; y < height; ++y) {
    rows[y] = raw.data() + std::size_t{y} * width * channels;
  }
  Bytes out;
  PngMemory mem;
  mem.output = &out;
  if (!png_encode(mem, width, height, color_type, rows.data())) {
    throw FormatError(std::string("PNG encoder: ") + mem.error);
  }
  return out;
}

// --- PPM ---------------------------------------------------------------------------------

class PpmHeaderReader {
 public:
  explicit PpmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t offset() const { return offset_; }

  unsigned long next_number(const char* what) {
    skip_space_and_comments();
    const std::size_t start = offset_;
    unsigned long value = 0;
    while (offset_ < bytes_.size() && std::isdigit(bytes_[offset_])) {
      value = value * 10 + (bytes_[offset_] - '0');
      if (value > 0xFFFFFFFFul) {
        throw FormatError("PPM offset " + std::to_string(start) + ": " + what + " too large");
      }
      ++offset_;
    }
    if (offset_ == start) {
      throw FormatError("PPM offset " + std::to_string(start) + ": expected " + what);
    }
    return value;
  }

  void single_whitespace() {
    if (offset_ >= bytes_.size() || !std::isspace(bytes_[offset_])) {
      throw FormatError("PPM offset " + std::to_string(offset_) +
                        ": expected whitespace after maxval");
    }
    ++offset_;
  }

 private:
  void skip_space_and_comments() {
    while (offset_ < bytes_.size()) {
      if (std::isspace(bytes_[offset_])) {
        ++offset_;
      } else if (bytes_[offset_] == '#') {
        while (offset_ < bytes_.size() && bytes_[offset_] != '\n') ++offset_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t offset_ = 2;
};

Bytes ppm_header(std::size_t width, std::size_t height) {
  const std::string header =
      "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
  return Bytes(header.begin(), header.end());
}

}  // namespace

std::uint8_t quantize(double intensity) noexcept {
  if (!(intensity > 0.0)) return 0;
  if (intensity >= 1.0) return 255;
  return static_cast<std::uint8_t>(std::round(intensity * 255.0));
}

ImageGrid decode_png(std::span<const std::uint8_t> bytes) {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  check_png_header(bytes, width, height);
  std::vector<std::uint8_t> pixels(std::size_t{width} * height * 3);
  std::vector<png_bytep> rows(height);
  for (std::uint32_t y = 0; y < height; ++y) {
    rows[y] = pixels.data() + std::size_t{y} * width * 3;
  }
  PngMemory mem;
  mem.input = bytes;
  if (!png_decode_rgb(mem, rows.data())) {
    throw FormatError(std::string("PNG ") + mem.error);
  }
  ImageGrid img(width, height);
  for (std::size_t i = 0; i < img.size(); ++i) {
    img.data()[i] = {dequantize(pixels[3 * i]), dequantize(pixels[3 * i + 1]),
                     dequantize(pixels[3 * i + 2])};
  }
  return img;
}

Bytes encode_png(const ImageGrid& img) {
  std::vector<std::uint8_t> raw(img.size() * 3);
  for (std::size_t i = 0; i < img.size(); ++i) {
    const RgbIntensity& px = img.data()[i];
    raw[3 * i] = quantize(px.i_r);
    raw[3 * i + 1] = quantize(px.i_g);
    raw[3 * i + 2] = quantize(px.i_b);
  }
  return encode_png_raw(static_cast<std::uint32_t>(img.width()),
                        static_cast<std::uint32_t>(img.height()), PNG_COLOR_TYPE_RGB, 3, raw);
}

Bytes encode_png(const GrayImage& img) {
  std::vector<std::uint8_t> raw(img.cells().begin(), img.cells().end());
  return encode_png_raw(static_cast<std::uint32_t>(img.width()),
                        static_cast<std::uint32_t>(img.height()), PNG_COLOR_TYPE_GRAY, 1, raw);
}

ImageGrid decode_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '6') {
    throw FormatError("PPM offset 0: expected magic 'P6'");
  }
  PpmHeaderReader header(bytes);
  const unsigned long width = header.next_number("width");
  const unsigned long height = header.next_number("height");
  const std::size_t maxval_offset = header.offset();
  const unsigned long maxval = header.next_number("maxval");
  if (width == 0 || height == 0) {
    throw FormatError("PPM offset 2: zero image dimension");
  }
  if (maxval != 255) {
    throw FormatError("PPM offset " + std::to_string(maxval_offset) + ": maxval " +
                      std::to_string(maxval) + " unsupported (only 255)");
  }
  header.single_whitespace();
  const std::size_t start = header.offset();
  const std::size_t expected = width * height * 3;
  if (bytes.size() - start < expected) {
    throw FormatError("PPM offset " + std::to_string(start) + ": truncated pixel data, expected " +
                      std::to_string(expected) + " bytes, found " +
                      std::to_string(bytes.size() - start));
  }
  ImageGrid img(width, height);
  const std::uint8_t* px = bytes.data() + start;
  for (std::size_t i = 0; i < img.size(); ++i) {
    img.data()[i] = {dequantize(px[3 * i]), dequantize(px[3 * i + 1]), dequantize(px[3 * i + 2])};
  }
  return img;
}

Bytes encode_ppm(const ImageGrid& img) {
  Bytes out = ppm_header(img.width(), img.height());
  out.reserve(out.size() + img.size() * 3);
  for (const RgbIntensity& px : img.cells()) {
    out.push_back(quantize(px.i_r));
    out.push_back(quantize(px.i_g));
    out.push_back(quantize(px.i_b));
  }
  return out;
}

Bytes encode_ppm(const GrayImage& img) {
  Bytes out = ppm_header(img.width(), img.height());
  out.reserve(out.size() + img.size() * 3);
  for (const std::uint8_t v : img.cells()) {
    out.insert(out.end(), {v, v, v});
  }
  return out;
}

ImageGrid decode_image(std::span<const std::uint8_t> bytes) {
  if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSignature, 8) == 0) {
    return decode_png(bytes);
  }
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '6') {
    return decode_ppm(bytes);
  }
  throw FormatError("offset 0: unrecognized image format (expected PNG or binary PPM)");
}

ImageGrid read_image(const std::filesystem::path& path) {
  try {
    return decode_image(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_image(const ImageGrid& img, const std::filesystem::path& path) {
  const std::string ext = extension_of(path);
  if (ext == ".png") {
    write_file_atomic(path, encode_png(img));
  } else if (ext == ".ppm") {
    write_file_atomic(path, encode_ppm(img));
  } else {
    throw FormatError(path.string() + ": unsupported image extension '" + ext +
                      "' (use .png or .ppm)");
  }
}

void write_image(const GrayImage& img, const std::filesystem::path& path) {
  const std::string ext = extension_of(path);
  if (ext == ".png") {
    write_file_atomic(path, encode_png(img));
  } else if (ext == ".ppm") {
    write_file_atomic(path, encode_ppm(img));
  } else {
    throw FormatError(path.string() + ": unsupported image extension '" + ext +
                      "' (use .png or .ppm)");
  }
}

}  // namespace fbcs
