#include <bit>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "fbcs/io.hpp"

namespace fbcs {
namespace {

constexpr char kVectorMagic[4] = {'V', 'F', '2', 'D'};
constexpr char kScalarMagic[4] = {'S', 'F', '2', 'D'};

void put_u32(Bytes& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_f64(Bytes& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int shift = 0; shift < 64; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(bits >> shift));
  }
}

std::uint32_t get_u32(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) {
    v = (v << 8) | bytes[offset + static_cast<std::size_t>(i)];
  }
  return v;
}

double get_f64(std::span<const std::uint8_t> bytes, std::size_t offset) {
  std::uint64_t bits = 0;
  for (int i = 7; i >= 0; --i) {
    bits = (bits << 8) | bytes[offset + static_cast<std::size_t>(i)];
  }
  return std::bit_cast<double>(bits);
}

std::string printable(std::span<const std::uint8_t> magic) {
  std::string out;
  for (const std::uint8_t c : magic) {
    if (std::isprint(c)) {
      out.push_back(static_cast<char>(c));
    } else {
      char hex[8];
      std::snprintf(hex, sizeof hex, "\\x%02x", c);
      out += hex;
    }
  }
  return out;
}

Bytes header(const char (&magic)[4], std::size_t width, std::size_t height) {
  if (width > 0xFFFFFFFFu || height > 0xFFFFFFFFu) {
    throw DimensionError("field dimensions exceed the 32-bit limit of the file format");
  }
  Bytes out(magic, magic + 4);
  out.push_back(kFieldFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(width));
  put_u32(out, static_cast<std::uint32_t>(height));
  return out;
}

std::string expected_bytes(std::size_t width, std::size_t height, std::size_t cell_bytes) {
  char text[32];
  std::snprintf(text, sizeof text, "%.0f",
                static_cast<double>(width) * static_cast<double>(height) * cell_bytes);
  return text;
}

struct Shape {
  std::size_t width;
  std::size_t height;
};

Shape check_header(std::span<const std::uint8_t> bytes, const char (&magic)[4],
                   std::size_t values_per_cell) {
  if (bytes.size() < kFieldHeaderSize) {
    throw FormatError("truncated header: expected " + std::to_string(kFieldHeaderSize) +
                      " bytes, found " + std::to_string(bytes.size()));
  }
  if (std::memcmp(bytes.data(), magic, 4) != 0) {
    throw FormatError("bad magic: expected '" + std::string(magic, 4) + "', found '" +
                      printable(bytes.first(4)) + "'");
  }
  if (bytes[4] != kFieldFormatVersion) {
    throw FormatError("unsupported version: expected " + std::to_string(kFieldFormatVersion) +
                      ", found " + std::to_string(bytes[4]));
  }
  const std::size_t width = get_u32(bytes, 5);
  const std::size_t height = get_u32(bytes, 9);
  if (width == 0 || height == 0) {
    throw FormatError("bad dimensions: expected positive width and height, found " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  const std::size_t cell_bytes = 8 * values_per_cell;
  const std::size_t payload = bytes.size() - kFieldHeaderSize;
  // Compare through division first so huge headers cannot overflow the product.
  if (payload / cell_bytes / width < height || payload != width * height * cell_bytes) {
    throw FormatError("payload size mismatch for " + std::to_string(width) + "x" +
                      std::to_string(height) + ": expected " +
                      expected_bytes(width, height, cell_bytes) +
                      " bytes, found " + std::to_string(payload));
  }
  return {width, height};
}

void check_finite_value(double v, std::size_t index, std::size_t width, const char* what) {
  if (!std::isfinite(v)) {
    throw DomainError(std::string(what) + " cell (" + std::to_string(index % width) + ", " +
                      std::to_string(index / width) + ") is not finite");
  }
}

}  // namespace

Bytes encode_field(const VectorField2D& f) {
  Bytes out = header(kVectorMagic, f.width(), f.height());
  out.reserve(kFieldHeaderSize + f.size() * 16);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const PlanarVector& v = f.data()[i];
    check_finite_value(v.p, i, f.width(), "vector field");
    check_finite_value(v.q, i, f.width(), "vector field");
    put_f64(out, v.p);
    put_f64(out, v.q);
  }
  return out;
}

Bytes encode_field(const ScalarField2D& f) {
  Bytes out = header(kScalarMagic, f.width(), f.height());
  out.reserve(kFieldHeaderSize + f.size() * 8);
  for (std::size_t i = 0; i < f.size(); ++i) {
    check_finite_value(f.data()[i], i, f.width(), "scalar field");
    put_f64(out, f.data()[i]);
  }
  return out;
}

VectorField2D decode_vector_field(std::span<const std::uint8_t> bytes) {
  const Shape shape = check_header(bytes, kVectorMagic, 2);
  VectorField2D f(shape.width, shape.height);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t offset = kFieldHeaderSize + 16 * i;
    const PlanarVector v{get_f64(bytes, offset), get_f64(bytes, offset + 8)};
    if (!std::isfinite(v.p) || !std::isfinite(v.q)) {
      throw FormatError("non-finite value at byte offset " + std::to_string(offset));
    }
    f.data()[i] = v;
  }
  return f;
}

ScalarField2D decode_scalar_field(std::span<const std::uint8_t> bytes) {
  const Shape shape = check_header(bytes, kScalarMagic, 1);
  ScalarField2D f(shape.width, shape.height);
  for (std::size_t i = 0; i < f.size(); ++i) {
    const std::size_t offset = kFieldHeaderSize + 8 * i;
    const double v = get_f64(bytes, offset);
    if (!std::isfinite(v)) {
      throw FormatError("non-finite value at byte offset " + std::to_string(offset));
    }
    f.data()[i] = v;
  }
  return f;
}

VectorField2D read_field(const std::filesystem::path& path) {
  try {
    return decode_vector_field(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

ScalarField2D read_scalar_field(const std::filesystem::path& path) {
  try {
    return decode_scalar_field(read_file(path));
  } catch (const FormatError& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_field(const VectorField2D& f, const std::filesystem::path& path) {
  write_file_atomic(path, encode_field(f));
}

void write_field(const ScalarField2D& f, const std::filesystem::path& path) {
  write_file_atomic(path, encode_field(f));
}

}  // namespace fbcs
