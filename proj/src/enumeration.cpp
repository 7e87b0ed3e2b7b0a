#include "slee/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <set>
#include <string>
#include <unordered_set>

#include "slee/errors.hpp"

namespace slee {
namespace {

void check_order(int n) {
  if (n < kMinUnicyclicOrder || n > kMaxUnicyclicOrder) {
    throw LimitError("unicyclic enumeration supports n in " + std::to_string(kMinUnicyclicOrder) + ".." +
                     std::to_string(kMaxUnicyclicOrder) + ", got " + std::to_string(n));
  }
}

class TreeCatalog {
 public:
  explicit TreeCatalog(int max_size) : by_size_(max_size + 1) {
    for (int s = 1; s <= max_size; ++s) {
      std::vector<std::pair<int, int>> picked;
      build(s, s - 1, {s - 1, std::numeric_limits<int>::max()}, picked);
    }
  }

  const std::vector<RootedTree>& of_size(int s) const { return by_size_.at(s); }

 private:
  // Children are a nonincreasing sequence of (size, index) pairs, one per multiset.
  void build(int s, int remaining, std::pair<int, int> bound, std::vector<std::pair<int, int>>& picked) {
    if (remaining == 0) {
      RootedTree tree{{-1}};
      for (auto [size, index] : picked) {
        const auto& child = by_size_[size][index];
        const int offset = static_cast<int>(tree.parent.size());
        for (int p : child.parent) tree.parent.push_back(p < 0 ? 0 : p + offset);
      }
      by_size_[s].push_back(std::move(tree));
      return;
    }
    for (int size = std::min(remaining, bound.first); size >= 1; --size) {
      const int count = static_cast<int>(by_size_[size].size());
      const int top = size == bound.first ? std::min(bound.second, count - 1) : count - 1;
      for (int index = top; index >= 0; --index) {
        picked.emplace_back(size, index);
        build(s, remaining - size, {size, index}, picked);
        picked.pop_back();
      }
    }
  }

  std::vector<std::vector<RootedTree>> by_size_;
};

// Cycle 0..q-1 with trees[i] hung from cycle vertex i (its root is the cycle vertex).
Graph assemble(int q, const std::vector<const RootedTree*>& trees) {
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(i, (i + 1) % q));
  int next = q;
  for (int i = 0; i < q; ++i) {
    const auto& parent = trees[i]->parent;
    std::vector<int> id(parent.size());
    id[0] = i;
    for (std::size_t j = 1; j < parent.size(); ++j) {
      id[j] = next++;
      edges.push_back(make_edge(id[parent[j]], id[j]));
    }
  }
  return Graph(next, std::move(edges));
}

template <class Visit>
void for_each_candidate(int n, const TreeCatalog& catalog, Visit&& visit) {
  for (int q = 3; q <= n; ++q) {
    std::vector<int> sizes(q, 1);
    sizes[0] = n - q + 1;
    // Compositions of n into q positive parts, then every tree choice per part.
    std::function<void(int, int)> compose = [&](int pos, int left) {
      if (pos == q - 1) {
        sizes[pos] = left;
        std::vector<const RootedTree*> chosen(q);
        std::function<void(int)> pick = [&](int i) {
          if (i == q) {
            visit(assemble(q, chosen));
            return;
          }
          for (const auto& t : catalog.of_size(sizes[i])) {
            chosen[i] = &t;
            pick(i + 1);
          }
        };
        pick(0);
        return;
      }
      for (int s = 1; s <= left - (q - 1 - pos); ++s) {
        sizes[pos] = s;
        compose(pos + 1, left - s);
      }
    };
    compose(0, n);
  }
}

EnumerationResult finish(int n, std::vector<CanonicalForm> forms) {
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());
  EnumerationResult out;
  out.n = n;
  out.graphs.reserve(forms.size());
  for (const auto& f : forms) out.graphs.push_back(f.graph());
  out.forms = std::move(forms);
  return out;
}

}  // namespace

bool EnumerationResult::contains(const CanonicalForm& form) const {
  return std::binary_search(forms.begin(), forms.end(), form);
}

std::vector<RootedTree> rooted_trees(int size) {
  if (size < 1 || size > kMaxOrder) throw ArgumentError("rooted tree size out of range");
  return TreeCatalog(size).of_size(size);
}

EnumerationResult enumerate_unicyclic(int n, const ParallelOptions& options) {
  check_order(n);
  const TreeCatalog catalog(n - 2);
  std::vector<Graph> candidates;
  for_each_candidate(n, catalog, [&](Graph g) { candidates.push_back(std::move(g)); });
  return finish(n, canonical_batch(candidates, options));
}

EnumerationResult enumerate_unicyclic_serial(int n) {
  check_order(n);
  const TreeCatalog catalog(n - 2);
  std::set<CanonicalForm> seen;
  for_each_candidate(n, catalog, [&](const Graph& g) { seen.insert(canonical_form(g)); });
  return finish(n, {seen.begin(), seen.end()});
}

std::size_t enumerate_unicyclic_labeled_oracle(int n) {
  if (n < kMinUnicyclicOrder || n > kMaxOracleOrder) {
    throw LimitError("labeled oracle supports n in " + std::to_string(kMinUnicyclicOrder) + ".." +
                     std::to_string(kMaxOracleOrder) + ", got " + std::to_string(n));
  }
  std::vector<Edge> all;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) all.push_back({i, j});
  }
  const int m = static_cast<int>(all.size());
  std::unordered_set<CanonicalForm, CanonicalFormHash> classes;
  std::vector<std::uint32_t> rows(n);
  // Gosper's hack over all n-element subsets of the m possible edges.
  const std::uint32_t limit = std::uint32_t{1} << m;
  for (std::uint32_t subset = (std::uint32_t{1} << n) - 1; subset < limit;) {
    std::fill(rows.begin(), rows.end(), 0);
    for (std::uint32_t s = subset; s != 0; s &= s - 1) {
      const Edge& e = all[std::countr_zero(s)];
      rows[e.u] |= 1U << e.v;
      rows[e.v] |= 1U << e.u;
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      frontier = next & ~seen;
      seen |= next;
    }
    if (std::popcount(seen) == n) {
      std::vector<Edge> edges;
      edges.reserve(n);
      for (std::uint32_t s = subset; s != 0; s &= s - 1) edges.push_back(all[std::countr_zero(s)]);
      classes.insert(canonical_form(Graph(n, std::move(edges))));
    }
    const std::uint32_t low = subset & -subset;
    const std::uint32_t ripple = subset + low;
    subset = (((ripple ^ subset) >> 2) / low) | ripple;
  }
  return classes.size();
}

EnumerationResult filter_by_diameter(const EnumerationResult& result, int d) {
  EnumerationResult out;
  out.n = result.n;
  out.diameter = d;
  for (std::size_t i = 0; i < result.graphs.size(); ++i) {
    if (diameter(result.graphs[i]) == d) {
      out.graphs.push_back(result.graphs[i]);
      out.forms.push_back(result.forms[i]);
    }
  }
  return out;
}

}  // namespace slee
