// vec3.hpp: minimal 3D point type for positions in meters

#pragma once

#include <cmath>

namespace tauclock {

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double norm(const Vec3& v) {
  return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z);
}

inline double distance(const Vec3& a, const Vec3& b) {
  return norm(Vec3{a.x - b.x, a.y - b.y, a.z - b.z});
}

}  // namespace tauclock
