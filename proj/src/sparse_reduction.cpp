#include "cyclotri/sparse_reduction.hpp"

#include <algorithm>
#include <limits>

#include "cyclotri/error.hpp"

namespace cyclotri {

namespace {

// a + f * b for sparse rows sorted by column.
SparseRow axpy(const SparseRow& a, const Integer& f, const SparseRow& b) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, f * b[j].second);
      ++j;
    } else {
      Integer v = a[i].second + f * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

const Integer* coefficient(const SparseRow& row, int col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

PresentationReduction::PresentationReduction(int generators, std::vector<SparseRow> relations,
                                             bool track_classes)
    : generators_(generators), track_(track_classes) {
  for (auto& row : relations) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [c, v] : row) {
      if (c < 0 || c >= generators) throw Error("relation refers to a missing generator");
    }
  }
  std::vector<char> row_alive(relations.size(), 1);
  std::vector<std::vector<std::size_t>> col_rows(static_cast<std::size_t>(generators));
  std::vector<std::size_t> col_count(static_cast<std::size_t>(generators), 0);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].empty()) row_alive[r] = 0;
    for (const auto& [c, v] : relations[r]) {
      col_rows[static_cast<std::size_t>(c)].push_back(r);
      ++col_count[static_cast<std::size_t>(c)];
    }
  }
  std::vector<char> gen_alive(static_cast<std::size_t>(generators), 1);

  // Unit-pivot elimination with a Markowitz cost (row length - 1) * (column
  // count - 1) to limit fill-in.
  while (true) {
    std::size_t best_row = relations.size();
    int best_col = -1;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t r = 0; r < relations.size() && best_cost > 0; ++r) {
      if (!row_alive[r]) continue;
      const std::size_t len = relations[r].size();
      for (const auto& [c, v] : relations[r]) {
        if (v != 1 && v != -1) continue;
        const std::size_t cost = (len - 1) * (col_count[static_cast<std::size_t>(c)] - 1);
        if (cost < best_cost) {
          best_cost = cost;
          best_row = r;
          best_col = c;
          if (cost == 0) break;
        }
      }
    }
    if (best_row == relations.size()) break;

    const SparseRow pivot = relations[best_row];
    const Integer unit = *coefficient(pivot, best_col);  // +-1
    row_alive[best_row] = 0;
    for (const auto& [c, v] : pivot) --col_count[static_cast<std::size_t>(c)];

    for (std::size_t r : col_rows[static_cast<std::size_t>(best_col)]) {
      if (!row_alive[r]) continue;
      const Integer* g = coefficient(relations[r], best_col);
      if (!g) continue;  // stale entry
      const Integer f = -(*g) * unit;
      for (const auto& [c, v] : relations[r]) --col_count[static_cast<std::size_t>(c)];
      relations[r] = axpy(relations[r], f, pivot);
      for (const auto& [c, v] : relations[r]) {
        ++col_count[static_cast<std::size_t>(c)];
        col_rows[static_cast<std::size_t>(c)].push_back(r);
      }
      if (relations[r].empty()) row_alive[r] = 0;
    }

    Substitution sub{best_col, {}};
    if (track_) {
      // unit * g + sum c_h h = 0, so g = -unit * sum c_h h.
      for (const auto& [c, v] : pivot) {
        if (c != best_col) sub.expression.emplace_back(c, -unit * v);
      }
    }
    eliminated_.push_back(std::move(sub));
    gen_alive[static_cast<std::size_t>(best_col)] = 0;
    // Compact the column lists now and then.
    for (const auto& [c, v] : pivot) {
      auto& list = col_rows[static_cast<std::size_t>(c)];
      if (list.size() > 4 * (col_count[static_cast<std::size_t>(c)] + 4)) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.erase(std::remove_if(list.begin(), list.end(),
                                  [&](std::size_t r) {
                                    return !row_alive[r] || !coefficient(relations[r], c);
                                  }),
                   list.end());
      }
    }
  }

  // Residual relations on the surviving generators.
  std::vector<std::size_t> residual;
  std::vector<char> active(static_cast<std::size_t>(generators), 0);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (!row_alive[r]) continue;
    residual.push_back(r);
    for (const auto& [c, v] : relations[r]) active[static_cast<std::size_t>(c)] = 1;
  }
  position_.assign(static_cast<std::size_t>(generators), -1);
  for (int g = 0; g < generators; ++g) {
    if (gen_alive[static_cast<std::size_t>(g)] && active[static_cast<std::size_t>(g)]) {
      position_[static_cast<std::size_t>(g)] = static_cast<int>(remaining_.size());
      remaining_.push_back(g);
    }
  }
  active_ = remaining_.size();
  for (int g = 0; g < generators; ++g) {
    if (gen_alive[static_cast<std::size_t>(g)] && !active[static_cast<std::size_t>(g)]) {
      position_[static_cast<std::size_t>(g)] = static_cast<int>(remaining_.size());
      remaining_.push_back(g);
    }
  }

  IntMatrix dense(residual.size(), active_);
  for (std::size_t i = 0; i < residual.size(); ++i) {
    for (const auto& [c, v] : relations[residual[i]]) {
      dense(i, static_cast<std::size_t>(position_[static_cast<std::size_t>(c)])) = v;
    }
  }
  smith_ = smith_normal_form(dense);
  for (std::size_t i = 0; i < smith_.factors.size(); ++i) {
    if (smith_.factors[i] != 1) torsion_index_.push_back(i);
  }
  for (std::size_t p = smith_.rank(); p < remaining_.size(); ++p) free_index_.push_back(p);
}

std::vector<Integer> PresentationReduction::invariant_factors() const {
  std::vector<Integer> out(eliminated_.size(), Integer(1));
  out.insert(out.end(), smith_.factors.begin(), smith_.factors.end());
  return out;
}

std::vector<Integer> PresentationReduction::torsion() const {
  std::vector<Integer> out;
  for (std::size_t i : torsion_index_) out.push_back(smith_.factors[i]);
  return out;
}

std::vector<Integer> PresentationReduction::coordinates(std::vector<Integer> w) const {
  if (!track_) throw Error("class tracking was not requested");
  if (w.size() != static_cast<std::size_t>(generators_)) throw Error("wrong vector length");
  for (const auto& sub : eliminated_) {
    const Integer x = w[static_cast<std::size_t>(sub.generator)];
    if (x == 0) continue;
    for (const auto& [c, v] : sub.expression) w[static_cast<std::size_t>(c)] += x * v;
    w[static_cast<std::size_t>(sub.generator)] = 0;
  }
  auto y = [&](std::size_t p) -> Integer {
    if (p >= active_) return w[static_cast<std::size_t>(remaining_[p])];
    Integer s = 0;
    for (std::size_t j = 0; j < active_; ++j) {
      const Integer& x = w[static_cast<std::size_t>(remaining_[j])];
      if (x != 0) s += x * smith_.v(j, p);
    }
    return s;
  };
  std::vector<Integer> out;
  out.reserve(coordinate_count());
  for (std::size_t p : torsion_index_) {
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), y(p).get_mpz_t(), smith_.factors[p].get_mpz_t());
    out.push_back(r);
  }
  for (std::size_t p : free_index_) out.push_back(y(p));
  return out;
}

std::vector<Integer> PresentationReduction::representative(std::size_t coordinate) const {
  if (coordinate >= coordinate_count()) throw Error("coordinate index out of range");
  const std::size_t p = coordinate < torsion_index_.size()
                            ? torsion_index_[coordinate]
                            : free_index_[coordinate - torsion_index_.size()];
  std::vector<Integer> w(static_cast<std::size_t>(generators_));
  if (p >= active_) {
    w[static_cast<std::size_t>(remaining_[p])] = 1;
  } else {
    for (std::size_t j = 0; j < active_; ++j) {
      w[static_cast<std::size_t>(remaining_[j])] = smith_.v_inverse(p, j);
    }
  }
  return w;
}

}  // namespace cyclotri
