#include "slee/families.hpp"

#include <cctype>
#include <numeric>

#include "slee/errors.hpp"

namespace slee {
namespace {

std::string kind_token(const FamilySpec& spec) {
  switch (spec.kind) {
    case FamilyKind::Cycle: return "C";
    case FamilyKind::Path: return "P";
    case FamilyKind::Star: return "S";
    case FamilyKind::CqS: return "C" + std::to_string(spec.params.at(0)) + "S";
    case FamilyKind::CqP: return "C" + std::to_string(spec.params.at(0)) + "P";
    case FamilyKind::G1: return "G1";
    case FamilyKind::G2: return "G2";
    case FamilyKind::Gmin2: return "Gmin2";
    case FamilyKind::Gd: return "Gd";
  }
  return "?";
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ArgumentError(message);
}

void require_order(int n, int minimum, const std::string& name) {
  require(n >= minimum, name + " needs n >= " + std::to_string(minimum) + ", got " + std::to_string(n));
  require(n <= kMaxOrder, name + " needs n <= " + std::to_string(kMaxOrder) + ", got " + std::to_string(n));
}

void check_attachments(int q, const std::vector<int>& counts, const std::string& name) {
  require(q >= 3, name + " needs q >= 3, got " + std::to_string(q));
  require(static_cast<int>(counts.size()) == q, name + " with q=" + std::to_string(q) + " needs " +
                                                    std::to_string(q) + " counts, got " +
                                                    std::to_string(counts.size()));
  for (int c : counts) require(c >= 0, name + " counts must be nonnegative");
  const long total = std::accumulate(counts.begin(), counts.end(), static_cast<long>(q));
  require(total <= kMaxOrder, name + " would have " + std::to_string(total) + " vertices, more than " +
                                  std::to_string(kMaxOrder));
}

std::vector<Edge> cycle_edges(int q) {
  std::vector<Edge> edges;
  for (int i = 0; i < q; ++i) edges.push_back(make_edge(i, (i + 1) % q));
  return edges;
}

std::string label(char prefix, int i) { return std::string(1, prefix) + std::to_string(i); }

FamilyInstance build_cqs(int q, const std::vector<int>& pendants, bool named_g) {
  check_attachments(q, pendants, "C_qS");
  auto edges = cycle_edges(q);
  FamilyInstance out;
  for (int i = 0; i < q; ++i) out.roles.emplace_back(label('v', i + 1), i);
  int next = q;
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < pendants[i]; ++j, ++next) {
      edges.push_back({i, next});
      out.roles.emplace_back("v" + std::to_string(i + 1) + ".x" + std::to_string(j + 1), next);
    }
  }
  if (named_g) {
    // G^(1)/G^(2) naming: x_1.. on v_1, y on v_2.
    int x = 0;
    for (auto& [name, v] : out.roles) {
      if (v < q) continue;
      name = v < q + pendants[0] ? label('x', ++x) : "y";
    }
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

FamilyInstance build_cqp(int q, const std::vector<int>& lengths) {
  check_attachments(q, lengths, "C_qP");
  auto edges = cycle_edges(q);
  FamilyInstance out;
  for (int i = 0; i < q; ++i) out.roles.emplace_back(label('v', i + 1), i);
  int next = q;
  for (int i = 0; i < q; ++i) {
    Vertex prev = i;
    for (int j = 0; j < lengths[i]; ++j, ++next) {
      edges.push_back({prev, next});
      out.roles.emplace_back("v" + std::to_string(i + 1) + ".u" + std::to_string(j + 1), next);
      prev = next;
    }
  }
  out.graph = Graph(next, std::move(edges));
  return out;
}

FamilyInstance build_gd(int n, int d) {
  require(d >= 2 && d <= n - 2, "G^d needs 2 <= d <= n-2, got n=" + std::to_string(n) + ", d=" + std::to_string(d));
  require(n <= kMaxOrder, "G^d order exceeds " + std::to_string(kMaxOrder));
  const int a = d / 2;
  std::vector<Edge> edges;
  FamilyInstance out;
  for (int i = 0; i < d; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i <= d; ++i) out.roles.emplace_back(label('v', i), i);
  const Vertex u = d + 1;
  edges.push_back({a, u});
  edges.push_back({a + 1, u});
  out.roles.emplace_back("u", u);
  for (Vertex x = d + 2; x < n; ++x) {
    edges.push_back({a, x});
    out.roles.emplace_back(label('x', x - d - 1), x);
  }
  out.graph = Graph(n, std::move(edges));
  return out;
}

void validate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, kind_token(spec) + " takes " + std::to_string(k) + " parameter(s), got " +
                               std::to_string(p.size()));
  };
  switch (spec.kind) {
    case FamilyKind::Cycle: arity(1); require_order(p[0], 3, "cycle"); break;
    case FamilyKind::Path: arity(1); require_order(p[0], 1, "path"); break;
    case FamilyKind::Star: arity(1); require_order(p[0], 2, "star"); break;
    case FamilyKind::G1: arity(1); require_order(p[0], 4, "G1"); break;
    case FamilyKind::G2: arity(1); require_order(p[0], 5, "G2"); break;
    case FamilyKind::Gmin2: arity(1); require_order(p[0], 4, "Gmin2"); break;
    case FamilyKind::Gd:
      arity(2);
      require(p[1] >= 2 && p[1] <= p[0] - 2,
              "Gd needs 2 <= d <= n-2, got n=" + std::to_string(p[0]) + ", d=" + std::to_string(p[1]));
      require(p[0] <= kMaxOrder, "Gd order exceeds " + std::to_string(kMaxOrder));
      break;
    case FamilyKind::CqS:
    case FamilyKind::CqP:
      require(!p.empty(), "missing q");
      check_attachments(p[0], std::vector<int>(p.begin() + 1, p.end()), kind_token(spec));
      break;
  }
}

}  // namespace

Graph make_cycle(int n) {
  require_order(n, 3, "cycle");
  return Graph(n, cycle_edges(n));
}

Graph make_path(int n) {
  require_order(n, 1, "path");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, std::move(edges));
}

Graph make_star(int n) {
  require_order(n, 2, "star");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, std::move(edges));
}

Graph make_cqs(int q, const std::vector<int>& pendants) { return build_cqs(q, pendants, false).graph; }
Graph make_cqp(int q, const std::vector<int>& path_lengths) { return build_cqp(q, path_lengths).graph; }

Graph make_g1(int n) { return make_graph({FamilyKind::G1, {n}}); }
Graph make_g2(int n) { return make_graph({FamilyKind::G2, {n}}); }
Graph make_gmin2(int n) { return make_graph({FamilyKind::Gmin2, {n}}); }
Graph make_gd(int n, int d) { return build_gd(n, d).graph; }

FamilyInstance make_family(const FamilySpec& spec) {
  validate(spec);
  const auto& p = spec.params;
  FamilyInstance out;
  switch (spec.kind) {
    case FamilyKind::Cycle:
      out.graph = make_cycle(p[0]);
      for (int i = 0; i < p[0]; ++i) out.roles.emplace_back(label('v', i + 1), i);
      return out;
    case FamilyKind::Path:
      out.graph = make_path(p[0]);
      for (int i = 0; i < p[0]; ++i) out.roles.emplace_back(label('v', i), i);
      return out;
    case FamilyKind::Star:
      out.graph = make_star(p[0]);
      out.roles.emplace_back("center", 0);
      for (int i = 1; i < p[0]; ++i) out.roles.emplace_back(label('x', i), i);
      return out;
    case FamilyKind::CqS: return build_cqs(p[0], {p.begin() + 1, p.end()}, false);
    case FamilyKind::CqP: return build_cqp(p[0], {p.begin() + 1, p.end()});
    case FamilyKind::G1: return build_cqs(3, {p[0] - 3, 0, 0}, true);
    case FamilyKind::G2: return build_cqs(3, {p[0] - 4, 1, 0}, true);
    case FamilyKind::Gmin2: {
      std::vector<int> lengths(p[0] - 1, 0);
      lengths[0] = 1;
      out = build_cqp(p[0] - 1, lengths);
      out.roles.back().first = "u";
      return out;
    }
    case FamilyKind::Gd: return build_gd(p[0], p[1]);
  }
  throw ArgumentError("unknown family kind");
}

FamilySpec parse_family_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec: expected KIND:params", text.size());
  const std::string_view kind = text.substr(0, colon);
  FamilySpec spec;
  std::vector<int> params;
  int q = -1;
  if (kind == "C") {
    spec.kind = FamilyKind::Cycle;
  } else if (kind == "P") {
    spec.kind = FamilyKind::Path;
  } else if (kind == "S") {
    spec.kind = FamilyKind::Star;
  } else if (kind == "G1") {
    spec.kind = FamilyKind::G1;
  } else if (kind == "G2") {
    spec.kind = FamilyKind::G2;
  } else if (kind == "Gmin2") {
    spec.kind = FamilyKind::Gmin2;
  } else if (kind == "Gd") {
    spec.kind = FamilyKind::Gd;
  } else if (kind.size() >= 3 && kind.front() == 'C' && (kind.back() == 'S' || kind.back() == 'P')) {
    spec.kind = kind.back() == 'S' ? FamilyKind::CqS : FamilyKind::CqP;
    q = 0;
    for (std::size_t i = 1; i + 1 < kind.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(kind[i]))) throw ParseError("family spec: expected cycle length", i);
      q = q * 10 + (kind[i] - '0');
      if (q > 1000) throw ParseError("family spec: cycle length too large", i);
    }
    params.push_back(q);
  } else {
    throw ParseError("family spec: unknown kind '" + std::string(kind) + "'", 0);
  }

  std::size_t pos = colon + 1;
  while (true) {
    const std::size_t start = pos;
    bool negative = false;
    if (pos < text.size() && text[pos] == '-') {
      negative = true;
      ++pos;
    }
    long value = 0;
    const std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 100000) throw ParseError("family spec: number too large", start);
      ++pos;
    }
    if (pos == digits_start) throw ParseError("family spec: expected integer", pos);
    params.push_back(static_cast<int>(negative ? -value : value));
    if (pos == text.size()) break;
    if (text[pos] != ',') throw ParseError("family spec: expected ',' between parameters", pos);
    ++pos;
  }
  spec.params = std::move(params);
  validate(spec);
  return spec;
}

std::string format_family_spec(const FamilySpec& spec) {
  std::string out = kind_token(spec) + ":";
  const std::size_t first = (spec.kind == FamilyKind::CqS || spec.kind == FamilyKind::CqP) ? 1 : 0;
  for (std::size_t i = first; i < spec.params.size(); ++i) {
    if (i > first) out += ",";
    out += std::to_string(spec.params[i]);
  }
  return out;
}

}  // namespace slee
