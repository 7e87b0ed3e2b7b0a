#include "slee/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "slee/errors.hpp"

namespace slee {
namespace {

using Cells = std::vector<std::vector<Vertex>>;

// Splits every cell by the number of neighbors each vertex has in every cell,
// until stable. Sub-cells are ordered by that count vector, so the result only
// depends on the ordered input partition and the graph structure.
void refine(const std::vector<std::uint64_t>& rows, Cells& cells) {
  const int n = static_cast<int>(rows.size());
  std::vector<std::uint8_t> signature;
  std::vector<int> order;
  bool changed = true;
  while (changed) {
    changed = false;
    const int k = static_cast<int>(cells.size());
    if (k == n) return;
    std::vector<std::uint64_t> masks(k, 0);
    for (int c = 0; c < k; ++c) {
      for (Vertex v : cells[c]) masks[c] |= std::uint64_t{1} << v;
    }
    Cells next;
    next.reserve(n);
    for (const auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      const int m = static_cast<int>(cell.size());
      signature.assign(static_cast<std::size_t>(m) * k, 0);
      for (int i = 0; i < m; ++i) {
        for (int c = 0; c < k; ++c) {
          signature[static_cast<std::size_t>(i) * k + c] =
              static_cast<std::uint8_t>(std::popcount(rows[cell[i]] & masks[c]));
        }
      }
      auto sig = [&](int i) { return signature.begin() + static_cast<std::ptrdiff_t>(i) * k; };
      auto less = [&](int a, int b) { return std::lexicographical_compare(sig(a), sig(a) + k, sig(b), sig(b) + k); };
      order.resize(m);
      std::iota(order.begin(), order.end(), 0);
      std::stable_sort(order.begin(), order.end(), less);
      std::vector<Vertex> group{cell[order[0]]};
      for (int i = 1; i < m; ++i) {
        if (less(order[i - 1], order[i])) {
          next.push_back(std::move(group));
          group.clear();
          changed = true;
        }
        group.push_back(cell[order[i]]);
      }
      next.push_back(std::move(group));
    }
    cells = std::move(next);
  }
}

class Search {
 public:
  explicit Search(const Graph& g) : n_(g.order()), rows_(n_), orbit_(n_) {
    for (Vertex v = 0; v < n_; ++v) rows_[v] = g.neighbor_mask(v);
    std::iota(orbit_.begin(), orbit_.end(), 0);
  }

  CanonicalLabeling run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(n_);
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    explore(std::move(cells), 0);
    CanonicalLabeling out;
    out.labels = best_labels_;
    out.form.n = n_;
    for (int i = 0; i < n_; ++i) {
      for (std::uint64_t r = best_rows_[i] >> (i + 1); r != 0; r &= r - 1) {
        out.form.edges.push_back({i, i + 1 + std::countr_zero(r)});
      }
    }
    return out;
  }

 private:
  bool twins(Vertex a, Vertex b) const {
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    return (rows_[a] & ~bb) == (rows_[b] & ~ba);
  }

  Vertex find(Vertex v) {
    while (orbit_[v] != v) v = orbit_[v] = orbit_[orbit_[v]];
    return v;
  }

  void leaf(const Cells& cells) {
    std::vector<Vertex> labels(n_);
    for (int i = 0; i < n_; ++i) labels[cells[i][0]] = i;
    std::vector<std::uint64_t> rows(n_, 0);
    for (Vertex v = 0; v < n_; ++v) {
      for (std::uint64_t r = rows_[v]; r != 0; r &= r - 1) {
        rows[labels[v]] |= std::uint64_t{1} << labels[std::countr_zero(r)];
      }
    }
    if (best_rows_.empty() || rows < best_rows_) {
      best_rows_ = std::move(rows);
      best_labels_ = std::move(labels);
    } else if (rows == best_rows_) {
      // best_labels_^-1 o labels is an automorphism; merge its orbits.
      std::vector<Vertex> inverse(n_);
      for (Vertex v = 0; v < n_; ++v) inverse[best_labels_[v]] = v;
      for (Vertex v = 0; v < n_; ++v) {
        Vertex a = find(v);
        Vertex b = find(inverse[labels[v]]);
        if (a != b) orbit_[std::max(a, b)] = std::min(a, b);
      }
    }
  }

  void explore(Cells cells, int depth) {
    refine(rows_, cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    const std::vector<Vertex> candidates = cells[target];
    std::vector<Vertex> tried;
    for (Vertex v : candidates) {
      // Swapping twins fixes everything else, so both branches give the same leaves.
      bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(v, t); });
      if (!redundant && depth == 0) {
        redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return find(t) == find(v); });
      }
      if (redundant) continue;
      tried.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      explore(std::move(child), depth + 1);
    }
  }

  int n_;
  std::vector<std::uint64_t> rows_;
  std::vector<Vertex> orbit_;
  std::vector<std::uint64_t> best_rows_;
  std::vector<Vertex> best_labels_;
};

}  // namespace

std::vector<std::uint8_t> CanonicalForm::bytes() const {
  std::vector<std::uint8_t> out;
  out.reserve(1 + 2 * edges.size());
  out.push_back(static_cast<std::uint8_t>(n));
  for (const auto& e : edges) {
    out.push_back(static_cast<std::uint8_t>(e.u));
    out.push_back(static_cast<std::uint8_t>(e.v));
  }
  return out;
}

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw LimitError("canonical_form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(g.order()));
  }
  return Search(g).run();
}

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.n) * 0x9E3779B97F4A7C15ULL;
  for (const auto& e : f.edges) {
    h ^= static_cast<std::size_t>(e.u * 64 + e.v) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace slee
