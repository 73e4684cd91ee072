// Walks through the library on a few graphs: delta of a graph file, a lex
// product with its closed form, and membership in F.

#include <iostream>
#include <string>

#include "lexhyp/delta.hpp"
#include "lexhyp/family.hpp"
#include "lexhyp/gspec.hpp"
#include "lexhyp/product.hpp"
#include "lexhyp/tree_lex.hpp"

int main(int argc, char** argv) {
  using namespace lexhyp;
  const std::string dir = argc > 1 ? argv[1] : "samples";

  const Graph petersen = read_graph_file(dir + "/petersen.edges");
  const auto r = delta_exact(petersen);
  std::cout << "petersen: " << petersen.vertex_count() << " vertices, delta " << r.value << "\n";

  const Graph chorded = read_graph_file(dir + "/c7_chord.edges");
  const auto m = in_family_F(chorded);
  std::cout << "c7_chord in F: " << (m.member ? "yes" : "no") << "\n";

  const Graph star2 = gen::star(2);
  const auto lex = product(star2, chorded, ProductKind::lexicographic);
  const auto closed = tree_lex_delta(star2, chorded);
  const auto exact = delta_exact(lex.graph());
  std::cout << "star:2 o c7_chord: closed form " << closed.value << " (" << closed.label << "), exact "
            << exact.value << "\n";

  if (closed.value != exact.value) return 1;
  return 0;
}
