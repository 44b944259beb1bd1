#include "hgx/io.hpp"

#include <fstream>
#include <sstream>

namespace hgx {

namespace {

// Next non-comment, non-blank line; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void fail(const std::string& source, int lineno, const std::string& what) {
  throw Error(ErrorCode::ParseError, source + ":" + std::to_string(lineno) + ": " + what);
}

}  // namespace

Hypergraph read_hg(std::istream& in, const std::string& source) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) fail(source, lineno, "missing header `r n m`");
  long long r = 0, n = 0, m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> r >> n >> m) || (hs >> extra)) fail(source, lineno, "header must be `r n m`");
  }
  if (r < 1 || n < 0 || m < 0) fail(source, lineno, "header values out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) fail(source, lineno, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    std::istringstream es(line);
    Edge e;
    long long v = 0;
    while (es >> v) e.push_back(static_cast<Vertex>(v));
    if (!es.eof()) fail(source, lineno, "non-numeric vertex label");
    for (std::size_t j = 1; j < e.size(); ++j) {
      if (e[j - 1] >= e[j]) fail(source, lineno, "edge labels must be strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  if (next_line(in, line, lineno)) fail(source, lineno, "trailing data after " + std::to_string(m) + " edges");
  try {
    return Hypergraph(static_cast<int>(r), static_cast<int>(n), edges);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    throw Error(e.code(), source + ": " + e.what());
  }
}

Hypergraph read_hg_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  return read_hg(in, path.string());
}

void write_hg(std::ostream& out, const Hypergraph& h) {
  out << h.uniformity() << ' ' << h.order() << ' ' << h.size() << '\n';
  for (VertexMask e : h.edge_masks()) {
    bool first = true;
    for (Vertex v : vertices_of(e)) {
      out << (first ? "" : " ") << v;
      first = false;
    }
    out << '\n';
  }
}

void write_hg_file(const std::filesystem::path& path, const Hypergraph& h) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path.string());
  write_hg(out, h);
}

std::string to_hg_string(const Hypergraph& h) {
  std::ostringstream os;
  write_hg(os, h);
  return os.str();
}

Hypergraph from_hg_string(const std::string& text) {
  std::istringstream is(text);
  return read_hg(is);
}

}  // namespace hgx
