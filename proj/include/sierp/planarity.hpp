#pragma once

#include <string>
#include <vector>

#include "sierp/graph.hpp"

namespace sierp {

/// Cyclic order of neighbors around each vertex of a simple graph.
struct RotationSystem {
  std::vector<std::vector<Vertex>> around;
};

enum class KuratowskiKind { None, K5, K33 };

struct PlanarityVerdict {
  bool planar = false;
  RotationSystem embedding;          // set when planar
  std::vector<Edge> kuratowski;      // set when not planar
  KuratowskiKind kuratowski_kind = KuratowskiKind::None;
};

/// Faces traced from a rotation system; every isolated vertex counts as one face.
int count_faces(const Graph& g, const RotationSystem& rotation);

/// Each vertex lists every neighbor exactly once and the face count meets
/// Euler's formula for the sphere: V - E + F = 2 * (number of components).
bool is_planar_rotation(const Graph& g, const RotationSystem& rotation);

/// Boyer–Myrvold planarity test. A planar verdict carries a rotation system
/// that passes is_planar_rotation; a non-planar one carries the edge set of a
/// subdivision of K5 or K3,3.
PlanarityVerdict is_planar(const Graph& g);

/// Smooths the edge set to its branch vertices and tells K5 from K3,3.
KuratowskiKind classify_kuratowski(const Graph& g, const std::vector<Edge>& edges);

/// g plus one apex vertex adjacent to all of g is planar.
bool is_outerplanar(const Graph& g);

const char* to_string(KuratowskiKind kind) noexcept;

}  // namespace sierp
