#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include "lexhyp/error.hpp"
#include "lexhyp/graph.hpp"
#include "lexhyp/product.hpp"

namespace lexhyp {

/// Reads an edge-list (or generator) file.
inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

/// Graph spec of the command line:
///   gspec := generator | @file | lex(gspec,gspec) | cart(gspec,gspec) | strong(gspec,gspec)
inline Graph parse_gspec(std::string_view spec, std::size_t product_cap = kDefaultProductCap) {
  spec = detail::trim(spec);
  if (spec.empty()) throw ParseError("empty graph spec");
  if (spec.front() == '@') return read_graph_file(std::string(spec.substr(1)));

  const auto open = spec.find('(');
  if (open != std::string_view::npos) {
    const auto head = detail::trim(spec.substr(0, open));
    ProductKind kind;
    if (head == "lex") kind = ProductKind::lexicographic;
    else if (head == "cart") kind = ProductKind::cartesian;
    else if (head == "strong") kind = ProductKind::strong;
    else throw ParseError("unknown product '" + std::string(head) + "'");
    if (spec.back() != ')') throw ParseError("missing ')' in '" + std::string(spec) + "'");
    const auto body = spec.substr(open + 1, spec.size() - open - 2);
    // Split at the comma at nesting depth 0.
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < body.size(); ++i) {
      if (body[i] == '(') ++depth;
      else if (body[i] == ')' && --depth < 0) throw ParseError("unbalanced ')' in '" + std::string(spec) + "'");
      else if (body[i] == ',' && depth == 0) {
        if (split != std::string_view::npos) throw ParseError("products take exactly two factors");
        split = i;
      }
    }
    if (depth != 0 || split == std::string_view::npos) {
      throw ParseError("expected " + std::string(head) + "(<gspec>,<gspec>)");
    }
    const Graph g1 = parse_gspec(body.substr(0, split), product_cap);
    const Graph g2 = parse_gspec(body.substr(split + 1), product_cap);
    return product(g1, g2, kind, product_cap).graph();
  }

  if (auto g = parse_generator(spec)) return *std::move(g);
  throw ParseError("unrecognised graph spec '" + std::string(spec) + "'");
}

}  // namespace lexhyp
