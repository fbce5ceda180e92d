#include "fbcs/mflgen.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <string>

#include "fbcs/error.hpp"
#include "kernels.hpp"

namespace fbcs {
namespace {

void check_pit(const PitSpec& pit) {
  const bool ok = std::isfinite(pit.x) && std::isfinite(pit.y) && std::isfinite(pit.depth) &&
                  std::isfinite(pit.radius) && pit.depth > 0.0 && pit.radius > 0.0;
  if (!ok) {
    throw DomainError("pit at (" + std::to_string(pit.x) + ", " + std::to_string(pit.y) +
                      ") needs finite position and positive depth and radius");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view token, std::string_view entry) {
  token = trim(token);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw DomainError("bad number '" + std::string(token) + "' in pit '" + std::string(entry) +
                      "'");
  }
  return value;
}

}  // namespace

PlanarVector pit_contribution(const PitSpec& pit, double x, double y) noexcept {
  return kernels::pit_field(pit, x, y);
}

VectorField2D generate_mfl(const std::vector<PitSpec>& pits, std::size_t width,
                           std::size_t height, const PlanarVector& background) {
  for (const PitSpec& pit : pits) {
    check_pit(pit);
  }
  if (!std::isfinite(background.p) || !std::isfinite(background.q)) {
    throw DomainError("background field must be finite");
  }
  VectorField2D out(width, height);
  const auto rows = static_cast<std::ptrdiff_t>(height);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t yi = 0; yi < rows; ++yi) {
    const auto y = static_cast<std::size_t>(yi);
    for (std::size_t x = 0; x < width; ++x) {
      PlanarVector sum{};
      for (const PitSpec& pit : pits) {
        const PlanarVector c =
            kernels::pit_field(pit, static_cast<double>(x), static_cast<double>(y));
        sum.p += c.p;
        sum.q += c.q;
      }
      out(x, y) = {sum.p + background.p, sum.q + background.q};
    }
  }
  return out;
}

std::vector<PitSpec> parse_pits(std::string_view text) {
  std::vector<PitSpec> pits;
  if (trim(text).empty()) {
    return pits;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = std::min(text.find(';', start), text.size());
    const std::string_view entry = trim(text.substr(start, end - start));
    start = end + 1;
    if (entry.empty()) {
      continue;  // tolerate a trailing separator
    }
    double values[4];
    std::size_t field = 0;
    std::size_t pos = 0;
    while (true) {
      const auto comma = entry.find(',', pos);
      if (field == 4) {
        throw DomainError("pit '" + std::string(entry) + "' needs exactly x,y,depth,radius");
      }
      values[field++] = parse_number(entry.substr(pos, comma - pos), entry);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (field != 4) {
      throw DomainError("pit '" + std::string(entry) + "' needs exactly x,y,depth,radius");
    }
    PitSpec pit{values[0], values[1], values[2], values[3]};
    check_pit(pit);
    pits.push_back(pit);
  }
  return pits;
}

}  // namespace fbcs
