#include "cyclotri/simplex.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "cyclotri/error.hpp"

namespace cyclotri {

namespace {

void check_strictly_increasing(const std::vector<Vertex>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) throw Error("negative vertex id " + std::to_string(v[i]));
    if (i > 0 && v[i - 1] >= v[i]) {
      throw Error("simplex vertices must be strictly increasing");
    }
  }
}

}  // namespace

Simplex::Simplex(std::initializer_list<Vertex> vertices) : vertices_(vertices) {
  check_strictly_increasing(vertices_);
}

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  check_strictly_increasing(vertices_);
}

Simplex Simplex::from_unsorted(std::vector<Vertex> vertices) {
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw Error("repeated vertex in simplex");
  }
  return Simplex(std::move(vertices));
}

bool Simplex::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

Simplex Simplex::without_index(std::size_t i) const {
  Simplex s;
  s.vertices_.reserve(vertices_.size() - 1);
  for (std::size_t j = 0; j < vertices_.size(); ++j) {
    if (j != i) s.vertices_.push_back(vertices_[j]);
  }
  return s;
}

Simplex Simplex::minus(const Simplex& other) const {
  Simplex s;
  std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                      other.vertices_.end(), std::back_inserter(s.vertices_));
  return s;
}

Simplex Simplex::join(const Simplex& other) const {
  if (intersects(other)) throw Error("join of intersecting simplices");
  Simplex s;
  std::merge(vertices_.begin(), vertices_.end(), other.vertices_.begin(), other.vertices_.end(),
             std::back_inserter(s.vertices_));
  return s;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << '>';
  return os.str();
}

std::size_t SimplexHash::operator()(const Simplex& s) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Vertex v : s) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace cyclotri
