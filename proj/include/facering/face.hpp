#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace facering {

/// A subset of the ground set [n], vertex v stored at bit v-1.
using Face = std::uint64_t;

inline constexpr int kMaxVertices = 63;

constexpr Face vertex_bit(int v) { return Face{1} << (v - 1); }

/// The full ground set [n].
constexpr Face ground_face(int n) {
  return n >= 64 ? ~Face{0} : (Face{1} << n) - 1;
}

inline int face_size(Face f) { return std::popcount(f); }

constexpr bool is_subset(Face a, Face b) { return (a & ~b) == 0; }

/// 1-based, increasing.
std::vector<int> vertices_of(Face f);

/// Throws PreconditionError when a vertex lies outside [1, n].
Face face_from_vertices(std::span<const int> vertices, int n);

/// Canonical order: by size, then lexicographically on the increasing vertex
/// lists.
bool face_precedes(Face a, Face b);

void sort_canonical(std::vector<Face>& faces);

/// Inclusion-maximal members of `faces`, deduplicated, canonical order.
std::vector<Face> maximal_faces(std::vector<Face> faces);

std::string face_to_string(Face f);

}  // namespace facering
