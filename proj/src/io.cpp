#include "ecindex/io.hpp"

#include <cstdint>
#include <sstream>

#include "ecindex/error.hpp"

namespace ecindex {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kGraph6Prefix = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string_view strip_prefix(std::string_view s) {
  if (s.substr(0, kGraph6Prefix.size()) == kGraph6Prefix) {
    s.remove_prefix(kGraph6Prefix.size());
  }
  return s;
}

void append_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
    return;
  }
  int groups = 3;
  out.push_back('~');
  if (n > 258047) {
    out.push_back('~');
    groups = 6;
  }
  for (int g = groups - 1; g >= 0; --g) {
    out.push_back(static_cast<char>(((n >> (6 * g)) & 0x3F) + kBias));
  }
}

struct Header {
  std::uint64_t order = 0;
  std::size_t length = 0;  // bytes consumed
};

// Returns false on a malformed header.
bool parse_order(std::string_view s, Header& h) {
  auto sextet = [&](std::size_t i, std::uint64_t& out) {
    if (i >= s.size() || s[i] < kBias || s[i] > 126) return false;
    out = static_cast<std::uint64_t>(s[i] - kBias);
    return true;
  };
  std::uint64_t x = 0;
  if (s.empty()) return false;
  if (s[0] != '~') {
    if (!sextet(0, x)) return false;
    h = {x, 1};
    return true;
  }
  std::size_t start = 1;
  int groups = 3;
  if (s.size() > 1 && s[1] == '~') {
    start = 2;
    groups = 6;
  }
  std::uint64_t n = 0;
  for (int g = 0; g < groups; ++g) {
    if (!sextet(start + g, x)) return false;
    n = (n << 6) | x;
  }
  h = {n, start + groups};
  return true;
}

std::size_t body_length(std::uint64_t n) {
  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  return static_cast<std::size_t>((bits + 5) / 6);
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  append_order(out, n);
  std::string body(body_length(n), 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      if (g.adjacent(i, j)) body[k / 6] |= static_cast<char>(0x20 >> (k % 6));
    }
  }
  for (char& c : body) c = static_cast<char>(c + kBias);
  return out + body;
}

bool looks_like_graph6(std::string_view line) {
  line = strip_prefix(trim(line));
  Header h;
  if (!parse_order(line, h)) return false;
  if (h.order > 100000) return false;
  const std::string_view body = line.substr(h.length);
  if (body.size() != body_length(h.order)) return false;
  for (char c : body) {
    if (c < kBias || c > 126) return false;
  }
  return true;
}

Graph decode_graph6(std::string_view text) {
  text = strip_prefix(trim(text));
  Header h;
  if (!parse_order(text, h)) throw ParseError("graph6: malformed order header");
  if (h.order == 0) throw ParseError("graph6: empty graph not supported");
  if (h.order > 100000) throw ParseError("graph6: order too large");
  const std::string_view body = text.substr(h.length);
  const std::size_t expected = body_length(h.order);
  if (body.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) +
                     " data bytes, got " + std::to_string(body.size()));
  }
  const int n = static_cast<int>(h.order);
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const char c = body[k / 6];
      if (c < kBias || c > 126) throw ParseError("graph6: byte out of range");
      if ((c - kBias) & (0x20 >> (k % 6))) edges.push_back({i, j});
    }
  }
  for (std::size_t b = k; b < body.size() * 6; ++b) {
    const char c = body[b / 6];
    if (c < kBias || c > 126) throw ParseError("graph6: byte out of range");
    if ((c - kBias) & (0x20 >> (b % 6))) {
      throw ParseError("graph6: nonzero padding bits");
    }
  }
  return Graph(n, edges);
}

std::string encode_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph decode_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("edge list: empty input");

  auto read_pair = [](const std::string& s, long long& a, long long& b) {
    std::istringstream row(s);
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) {
      throw ParseError("edge list: expected two integers, got \"" +
                       std::string(trim(s)) + "\"");
    }
  };
  long long n = 0;
  long long m = 0;
  read_pair(lines[0], n, m);
  if (n < 1 || n > 1000000) throw ParseError("edge list: bad vertex count");
  if (m < 0) throw ParseError("edge list: bad edge count");
  if (static_cast<long long>(lines.size()) - 1 != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) +
                     " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    long long u = 0;
    long long v = 0;
    read_pair(lines[i], u, v);
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: vertex out of range in \"" +
                       std::string(trim(lines[i])) + "\"");
    }
    edges.push_back({static_cast<Vertex>(std::min(u, v)),
                     static_cast<Vertex>(std::max(u, v))});
  }
  try {
    return Graph(static_cast<int>(n), edges);
  } catch (const InputError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

Graph read_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    std::istringstream in{std::string(text)};
    std::string line;
    format = GraphFormat::kEdgeList;
    while (std::getline(in, line)) {
      if (trim(line).empty()) continue;
      if (looks_like_graph6(line)) format = GraphFormat::kGraph6;
      break;
    }
  }
  if (format == GraphFormat::kGraph6) {
    const std::string_view body = trim(text);
    const auto eol = body.find('\n');
    if (eol != std::string_view::npos && !trim(body.substr(eol)).empty()) {
      throw ParseError("graph6: expected a single graph");
    }
    return decode_graph6(body);
  }
  return decode_edge_list(text);
}

}  // namespace ecindex
