#include "cyclotri/collapse.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace cyclotri {

SimplicialComplex greedy_collapse(const SimplicialComplex& c) {
  std::vector<Simplex> faces;
  for (int d = 0; d <= c.dimension(); ++d) {
    const auto& fd = c.faces(d);
    faces.insert(faces.end(), fd.begin(), fd.end());
  }
  std::unordered_map<Simplex, int, SimplexHash> id;
  id.reserve(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) id.emplace(faces[i], static_cast<int>(i));

  std::vector<std::vector<int>> cofaces(faces.size());
  std::vector<std::vector<int>> boundary(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (faces[i].size() < 2) continue;
    for (std::size_t j = 0; j < faces[i].size(); ++j) {
      const int b = id.at(faces[i].without_index(j));
      boundary[i].push_back(b);
      cofaces[static_cast<std::size_t>(b)].push_back(static_cast<int>(i));
    }
  }
  std::vector<char> alive(faces.size(), 1);

  auto is_free = [&](int f) {
    const auto& co = cofaces[static_cast<std::size_t>(f)];
    return alive[f] && co.size() == 1 && cofaces[static_cast<std::size_t>(co[0])].empty();
  };
  // Ordered by the simplices themselves, so begin() is the lexicographically
  // smallest free face.
  auto by_simplex = [&](int a, int b) { return faces[a] < faces[b]; };
  std::set<int, decltype(by_simplex)> free_faces(by_simplex);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (is_free(static_cast<int>(i))) free_faces.insert(static_cast<int>(i));
  }

  auto recheck = [&](int f) {
    if (is_free(f)) free_faces.insert(f); else free_faces.erase(f);
  };
  auto remove = [&](int f) {
    alive[f] = 0;
    free_faces.erase(f);
    for (int b : boundary[static_cast<std::size_t>(f)]) {
      auto& co = cofaces[static_cast<std::size_t>(b)];
      co.erase(std::find(co.begin(), co.end(), f));
    }
  };

  while (!free_faces.empty()) {
    const int sigma = *free_faces.begin();
    const int tau = cofaces[static_cast<std::size_t>(sigma)][0];
    remove(tau);
    remove(sigma);
    // Faces whose coface structure changed: the boundary of tau, and their
    // boundaries (a face of a newly maximal face may have become free).
    for (int b : boundary[static_cast<std::size_t>(tau)]) {
      if (!alive[b]) continue;
      recheck(b);
      for (int bb : boundary[static_cast<std::size_t>(b)]) recheck(bb);
    }
    for (int b : boundary[static_cast<std::size_t>(sigma)]) {
      recheck(b);
      for (int bb : boundary[static_cast<std::size_t>(b)]) recheck(bb);
    }
  }

  std::vector<Simplex> residual;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (alive[i] && cofaces[i].empty()) residual.push_back(faces[i]);
  }
  return SimplicialComplex(c.label_bound(), std::move(residual));
}

}  // namespace cyclotri
