#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "fbcs/fieldops.hpp"
#include "fbcs/mapping.hpp"

namespace fbcs {

using Bytes = std::vector<std::uint8_t>;
using GrayImage = Grid<std::uint8_t>;

// 8-bit images. A stored channel value V reads as intensity V / 255; an intensity I writes as
// round(I * 255) with halves rounded away from zero. PNG (8-bit gray, gray+alpha, RGB, RGBA;
// alpha is dropped) and binary PPM (P6, maxval 255) are supported.

std::uint8_t quantize(double intensity) noexcept;
inline double dequantize(std::uint8_t value) noexcept { return value / 255.0; }

ImageGrid decode_png(std::span<const std::uint8_t> bytes);
Bytes encode_png(const ImageGrid& img);
Bytes encode_png(const GrayImage& img);

ImageGrid decode_ppm(std::span<const std::uint8_t> bytes);
Bytes encode_ppm(const ImageGrid& img);
Bytes encode_ppm(const GrayImage& img);

/// Detects PNG or PPM from the leading bytes.
ImageGrid decode_image(std::span<const std::uint8_t> bytes);

ImageGrid read_image(const std::filesystem::path& path);
/// Format chosen by extension: .png or .ppm. Throws FormatError for anything else.
void write_image(const ImageGrid& img, const std::filesystem::path& path);
void write_image(const GrayImage& img, const std::filesystem::path& path);

// Field files: magic "VF2D" (vector) or "SF2D" (scalar), version byte 0x01, width and height as
// little-endian uint32, then height x width cells row-major from the top row. Vector cells are
// p then q, scalar cells a single value, all IEEE-754 binary64 little-endian.

inline constexpr std::size_t kFieldHeaderSize = 13;
inline constexpr std::uint8_t kFieldFormatVersion = 0x01;

Bytes encode_field(const VectorField2D& f);
Bytes encode_field(const ScalarField2D& f);
VectorField2D decode_vector_field(std::span<const std::uint8_t> bytes);
ScalarField2D decode_scalar_field(std::span<const std::uint8_t> bytes);

VectorField2D read_field(const std::filesystem::path& path);
ScalarField2D read_scalar_field(const std::filesystem::path& path);
void write_field(const VectorField2D& f, const std::filesystem::path& path);
void write_field(const ScalarField2D& f, const std::filesystem::path& path);

Bytes read_file(const std::filesystem::path& path);

/// Writes through a temporary file in the destination directory and renames it into place, so
/// the destination is either untouched or complete.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

/// Lower-cased extension including the dot, e.g. ".png".
std::string extension_of(const std::filesystem::path& path);

}  // namespace fbcs
