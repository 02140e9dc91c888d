#include "wlx/io.hpp"

#include <sstream>

#include "wlx/errors.hpp"

namespace wlx {

Graph read_graph(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw ParseError("expected header line 'n m'");
  if (n < 0 || m < 0) throw ParseError("negative n or m");
  Graph g(n);
  for (int i = 0; i < m; ++i) {
    int a, b;
    if (!(in >> a >> b)) throw ParseError("expected edge line 'a b'");
    g.add_edge(a, b);
  }
  std::string tok;
  while (in >> tok) {
    if (tok != "c") throw ParseError("unexpected token '" + tok + "'");
    int v, c;
    if (!(in >> v >> c)) throw ParseError("expected 'c v color'");
    if (v < 0 || v >= n) throw ParseError("color line: node out of range");
    g.set_color(v, c);
  }
  return g;
}

Graph read_graph_string(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

std::string write_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [a, b] : g.sorted_edges()) out << a << ' ' << b << '\n';
  for (int v = 0; v < g.n(); ++v)
    if (g.color(v) != 0) out << "c " << v << ' ' << g.color(v) << '\n';
  return out.str();
}

std::string to_dot(const Graph& g, const std::string& name, int root) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (int v = 0; v < g.n(); ++v) {
    out << "  " << v;
    bool is_root = v == root;
    if (is_root || g.color(v) != 0) {
      out << " [";
      if (is_root) out << "shape=doublecircle";
      if (g.color(v) != 0) out << (is_root ? " " : "") << "label=\"" << v << ":"
                               << g.color(v) << "\"";
      out << "]";
    }
    out << ";\n";
  }
  for (auto [a, b] : g.sorted_edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace wlx
