#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace cyclotri {

using Vertex = std::int32_t;

/// An abstract simplex: a strictly increasing list of vertex ids.
class Simplex {
 public:
  Simplex() = default;
  Simplex(std::initializer_list<Vertex> vertices);
  explicit Simplex(std::vector<Vertex> vertices);

  /// Sorts the input; throws on repeated or negative vertices.
  static Simplex from_unsorted(std::vector<Vertex> vertices);

  std::span<const Vertex> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_face_of(const Simplex& other) const;
  bool intersects(const Simplex& other) const;

  /// The codimension-one face obtained by dropping position `i`.
  Simplex without_index(std::size_t i) const;
  Simplex minus(const Simplex& other) const;
  Simplex join(const Simplex& other) const;

  std::string to_string() const;

  friend auto operator<=>(const Simplex&, const Simplex&) = default;
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept;
};

}  // namespace cyclotri
