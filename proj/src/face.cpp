#include "facering/face.hpp"

#include <algorithm>
#include <sstream>

#include "facering/errors.hpp"

namespace facering {

std::vector<int> vertices_of(Face f) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(face_size(f)));
  while (f) {
    out.push_back(std::countr_zero(f) + 1);
    f &= f - 1;
  }
  return out;
}

Face face_from_vertices(std::span<const int> vertices, int n) {
  Face f = 0;
  for (int v : vertices) {
    if (v < 1 || v > n) {
      throw PreconditionError("vertex " + std::to_string(v) + " outside [1," +
                              std::to_string(n) + "]");
    }
    f |= vertex_bit(v);
  }
  return f;
}

bool face_precedes(Face a, Face b) {
  const int sa = face_size(a);
  const int sb = face_size(b);
  if (sa != sb) return sa < sb;
  if (a == b) return false;
  // Equal sizes: the increasing lists first differ at the smallest element of
  // the symmetric difference, and the set holding it comes first.
  const Face lowest = (a ^ b) & -(a ^ b);
  return (a & lowest) != 0;
}

void sort_canonical(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end(), face_precedes);
}

std::vector<Face> maximal_faces(std::vector<Face> faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    const int sa = face_size(a);
    const int sb = face_size(b);
    return sa != sb ? sa > sb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Face> kept;
  for (Face f : faces) {
    const bool covered = std::any_of(kept.begin(), kept.end(),
                                     [f](Face g) { return is_subset(f, g); });
    if (!covered) kept.push_back(f);
  }
  sort_canonical(kept);
  return kept;
}

std::string face_to_string(Face f) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int v : vertices_of(f)) {
    if (!first) os << ',';
    os << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace facering
