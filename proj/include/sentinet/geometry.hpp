#pragma once

#include <cmath>

namespace sentinet {

struct Position {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Position&, const Position&) = default;
};

inline double distance(const Position& a, const Position& b) noexcept {
  return std::hypot(a.x - b.x, a.y - b.y);
}

struct Field {
  double width = 100.0;
  double height = 100.0;
};

}  // namespace sentinet
