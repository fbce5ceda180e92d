#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fbcs/error.hpp"

namespace fbcs {

/// Dense row-major 2D grid. Row 0 is the top raster row; x grows rightward.
template <typename T>
class Grid {
 public:
  using value_type = T;

  Grid(std::size_t width, std::size_t height, const T& fill = T{})
      : width_(width), height_(height) {
    if (width == 0 || height == 0) {
      throw DimensionError("grid dimensions must be positive, got " + std::to_string(width) +
                           "x" + std::to_string(height));
    }
    cells_.assign(width * height, fill);
  }

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t size() const noexcept { return cells_.size(); }

  T& operator()(std::size_t x, std::size_t y) noexcept { return cells_[y * width_ + x]; }
  const T& operator()(std::size_t x, std::size_t y) const noexcept {
    return cells_[y * width_ + x];
  }

  T* data() noexcept { return cells_.data(); }
  const T* data() const noexcept { return cells_.data(); }

  std::span<T> cells() & noexcept { return cells_; }
  std::span<const T> cells() const& noexcept { return cells_; }
  std::span<const T> cells() const&& = delete;

  template <typename U>
  bool same_shape(const Grid<U>& other) const noexcept {
    return width_ == other.width() && height_ == other.height();
  }

  bool operator==(const Grid&) const = default;

 private:
  std::size_t width_;
  std::size_t height_;
  std::vector<T> cells_;
};

}  // namespace fbcs
