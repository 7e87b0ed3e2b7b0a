#include "slee/graph6.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "slee/errors.hpp"

namespace slee {
namespace {

constexpr int kBias = 63;

void encode_order(int n, std::string& out) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 0x3F) + kBias));
  }
}

}  // namespace

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  encode_order(n, out);
  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph graph6_decode(std::string_view text) {
  auto value_at = [&](std::size_t pos) {
    if (pos >= text.size()) throw ParseError("graph6: unexpected end of input", pos);
    const auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos);
    return static_cast<int>(c) - kBias;
  };
  std::size_t pos = 0;
  int n = value_at(pos++);
  if (n == 63) {
    if (value_at(pos) == 63) throw ParseError("graph6: orders above 258047 are not supported", pos);
    n = 0;
    for (int i = 0; i < 3; ++i) n = (n << 6) | value_at(pos++);
    if (n <= 62) throw ParseError("graph6: non-minimal order encoding", 1);
  }
  if (n > kMaxOrder) {
    throw ParseError("graph6: order " + std::to_string(n) + " exceeds the supported maximum of " +
                         std::to_string(kMaxOrder),
                     0);
  }
  const std::size_t total_bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t body = (total_bits + 5) / 6;
  if (text.size() != pos + body) {
    throw ParseError("graph6: expected " + std::to_string(pos + body) + " bytes for order " + std::to_string(n) +
                         ", got " + std::to_string(text.size()),
                     std::min(text.size(), pos + body));
  }
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int chunk = value_at(pos + bit / 6);
      if ((chunk >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bit % 6 != 0) {
    const int chunk = value_at(pos + bit / 6);
    if ((chunk & ((1 << (6 - bit % 6)) - 1)) != 0) throw ParseError("graph6: nonzero padding bits", pos + bit / 6);
  }
  return Graph(n, std::move(edges));
}

std::vector<Graph> read_graph6_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      graphs.push_back(graph6_decode(line));
    } catch (const ParseError& e) {
      throw ParseError(path.string() + ":" + std::to_string(line_no) + ": " + e.message(), e.offset());
    }
  }
  return graphs;
}

void write_graph6_file(const std::filesystem::path& path, const std::vector<Graph>& graphs) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& g : graphs) out << graph6_encode(g) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const auto& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace slee
