// Command-line front end: delta, dist, product, classify, tree-delta, catalog, verify.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lexhyp/delta.hpp"
#include "lexhyp/family.hpp"
#include "lexhyp/gspec.hpp"
#include "lexhyp/harness.hpp"
#include "lexhyp/json_io.hpp"
#include "lexhyp/product.hpp"
#include "lexhyp/tree_lex.hpp"

namespace {

using namespace lexhyp;

constexpr int kExitInput = 1;
constexpr int kExitCap = 2;
constexpr int kExitSuite = 3;

std::pair<Vertex, Vertex> parse_coords(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected a vertex pair 'u,v', got '" + text + "'");
  auto num = [&](std::string_view s) {
    const auto v = detail::parse_size(detail::trim(s));
    if (!v) throw ParseError("bad vertex id in '" + text + "'");
    return static_cast<Vertex>(*v);
  };
  return {num(std::string_view(text).substr(0, comma)), num(std::string_view(text).substr(comma + 1))};
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto t = detail::trim(item);
    if (!t.empty()) out.emplace_back(t);
  }
  return out;
}

std::string edge_list_text(const Graph& g) {
  std::ostringstream out;
  out << "# vertices: " << g.vertex_count() << "\n";
  for (auto [a, b] : g.edges()) out << a << " " << b << "\n";
  return out.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact hyperbolicity constants of graphs and lexicographic products"};
  app.require_subcommand(1);

  std::size_t product_cap = kDefaultProductCap;
  app.add_option("--size-cap", product_cap, "Vertex cap for products built from graph specs")->capture_default_str();

  // delta
  auto* delta_cmd = app.add_subcommand("delta", "Print the hyperbolicity constant of a graph");
  std::string delta_spec;
  bool delta_json = false, delta_no_cycle = false, delta_parallel = false, delta_timing = false;
  int delta_grid = 4;
  std::size_t delta_cap = kDefaultGeodesicCap;
  delta_cmd->add_option("gspec", delta_spec, "Graph spec")->required();
  auto* json_flag = delta_cmd->add_flag("--json", delta_json, "Print the result with its witness as JSON");
  delta_cmd->add_option("--grid", delta_grid, "Subdivision grid factor")->check(CLI::IsMember({4, 8}))->capture_default_str();
  delta_cmd->add_option("--cap", delta_cap, "Maximum geodesics per endpoint pair")->check(CLI::PositiveNumber)->capture_default_str();
  delta_cmd->add_flag("--no-cycle-only", delta_no_cycle, "Maximise over all triangles, not only cycles");
  delta_cmd->add_flag("--parallel", delta_parallel, "Use all hardware threads");
  delta_cmd->add_flag("--timing", delta_timing, "Include wall time in the JSON stats")->needs(json_flag);

  // dist
  auto* dist_cmd = app.add_subcommand("dist", "Closed-form distance between two vertices of G1 o G2");
  std::string dist_g1, dist_g2, dist_a, dist_b;
  dist_cmd->add_option("gspec1", dist_g1, "First factor")->required();
  dist_cmd->add_option("gspec2", dist_g2, "Second factor")->required();
  dist_cmd->add_option("from", dist_a, "Vertex u,v")->required();
  dist_cmd->add_option("to", dist_b, "Vertex u',v'")->required();

  // product
  auto* prod_cmd = app.add_subcommand("product", "Write the edge list of a product");
  std::string prod_kind, prod_g1, prod_g2, prod_out;
  prod_cmd->add_option("kind", prod_kind, "lex, cart or strong")->required()->check(CLI::IsMember({"lex", "cart", "strong"}));
  prod_cmd->add_option("gspec1", prod_g1, "First factor")->required();
  prod_cmd->add_option("gspec2", prod_g2, "Second factor")->required();
  prod_cmd->add_option("--out", prod_out, "Output file (default: stdout)");

  // classify
  auto* cls_cmd = app.add_subcommand("classify", "Decide membership in the family F");
  std::string cls_spec;
  bool cls_json = false;
  cls_cmd->add_option("gspec", cls_spec, "Graph spec")->required();
  cls_cmd->add_flag("--json", cls_json, "Print the membership witness as JSON");

  // tree-delta
  auto* td_cmd = app.add_subcommand("tree-delta", "Closed-form constant of tree o graph");
  std::string td_tree, td_graph;
  bool td_json = false;
  td_cmd->add_option("treespec", td_tree, "Tree spec (first factor)")->required();
  td_cmd->add_option("gspec", td_graph, "Second factor")->required();
  td_cmd->add_flag("--json", td_json, "Print the case and inputs as JSON");

  // catalog
  auto* cat_cmd = app.add_subcommand("catalog", "Export the chord-cycle catalog");
  bool cat_dedup = false;
  std::string cat_out;
  cat_cmd->add_flag("--dedup", cat_dedup, "Drop isomorphic duplicates");
  cat_cmd->add_option("--out", cat_out, "Output directory")->required();

  // verify
  auto* ver_cmd = app.add_subcommand("verify", "Run the property suite on a generated corpus");
  CorpusSpec ver_spec;
  std::string ver_checks, ver_skip, ver_families;
  bool ver_json = false, ver_list = false, ver_timing = false;
  ver_cmd->add_option("--seed", ver_spec.seed, "Corpus seed")->capture_default_str();
  ver_cmd->add_option("--pairs", ver_spec.pair_count, "Number of factor pairs")->capture_default_str();
  ver_cmd->add_option("--min-vertices", ver_spec.min_vertices, "Smallest factor size")->capture_default_str();
  ver_cmd->add_option("--max-vertices", ver_spec.max_vertices, "Largest factor size")->capture_default_str();
  ver_cmd->add_option("--per-size", ver_spec.random_per_size, "Random graphs per size and family")->capture_default_str();
  ver_cmd->add_option("--product-cap", ver_spec.product_cap, "Largest product for engine checks")->capture_default_str();
  ver_cmd->add_option("--pair-cap", ver_spec.pair_vertex_cap, "Largest product a pair may have")->capture_default_str();
  ver_cmd->add_option("--families", ver_families, "Comma-separated corpus families");
  auto* checks_opt = ver_cmd->add_option("--checks", ver_checks, "Comma-separated check ids (default: all)");
  ver_cmd->add_option("--skip", ver_skip, "Comma-separated check ids to leave out")->excludes(checks_opt);
  auto* ver_json_flag = ver_cmd->add_flag("--json", ver_json, "Print the report as JSON");
  ver_cmd->add_flag("--timing", ver_timing, "Report wall time per check (otherwise 0)")->needs(ver_json_flag);
  ver_cmd->add_flag("--list", ver_list, "List check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (*delta_cmd) {
      const Graph g = parse_gspec(delta_spec, product_cap);
      DeltaConfig cfg;
      cfg.grid_factor = delta_grid;
      cfg.geodesic_cap = delta_cap;
      cfg.cycle_only = !delta_no_cycle;
      cfg.parallel = delta_parallel;
      const auto r = delta_exact(g, cfg);
      if (delta_json) std::cout << to_json(g, r, delta_timing).dump(2) << "\n";
      else std::cout << r.value << "\n";
    } else if (*dist_cmd) {
      const Graph g1 = parse_gspec(dist_g1, product_cap);
      const Graph g2 = parse_gspec(dist_g2, product_cap);
      std::cout << lex_distance(g1, g2, parse_coords(dist_a), parse_coords(dist_b)) << "\n";
    } else if (*prod_cmd) {
      const ProductKind kind = prod_kind == "lex" ? ProductKind::lexicographic
                               : prod_kind == "cart" ? ProductKind::cartesian
                                                     : ProductKind::strong;
      const auto p = product(parse_gspec(prod_g1, product_cap), parse_gspec(prod_g2, product_cap), kind, product_cap);
      const auto text = edge_list_text(p.graph());
      if (prod_out.empty()) std::cout << text;
      else write_file(prod_out, text);
    } else if (*cls_cmd) {
      const Graph g = parse_gspec(cls_spec, product_cap);
      const auto m = in_family_F(g);
      if (cls_json) {
        std::cout << to_json(m).dump(2) << "\n";
      } else if (!m.member) {
        std::cout << "not in F\n";
      } else {
        const auto& mem = default_catalog().members[m.member_index];
        std::cout << "in F (member " << m.member_index << ", " << mem.family_tag << ", vertices";
        for (Vertex v : m.subset) std::cout << " " << v;
        std::cout << ")\n";
      }
    } else if (*td_cmd) {
      const auto c = tree_lex_delta(parse_gspec(td_tree, product_cap), parse_gspec(td_graph, product_cap));
      if (td_json) {
        Json j{{"case", c.case_id}, {"label", c.label}, {"quarters", c.value.quarters()}, {"value", c.value.to_string()},
               {"diam_g1", c.inputs.diam_g1.to_string()}, {"diam_g2", c.inputs.diam_g2.to_string()}};
        j["g2_in_F"] = c.inputs.g2_in_F ? Json(*c.inputs.g2_in_F) : Json(nullptr);
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << c.value << " (case: " << c.label << ")\n";
      }
    } else if (*cat_cmd) {
      const auto cat = build_catalog(cat_dedup);
      std::filesystem::create_directories(cat_out);
      for (std::size_t i = 0; i < cat.members.size(); ++i) {
        write_file(std::filesystem::path(cat_out) / ("member_" + std::to_string(i) + ".edges"),
                   edge_list_text(cat.members[i].graph));
      }
      write_file(std::filesystem::path(cat_out) / "index.json", catalog_index(cat).dump(2) + "\n");
      std::cout << cat.members.size() << " members written to " << cat_out << "\n";
    } else if (*ver_cmd) {
      if (ver_list) {
        for (const auto& id : check_ids()) std::cout << id << "\n";
        return 0;
      }
      if (!ver_families.empty()) {
        ver_spec.families.clear();
        for (const auto& f : split_list(ver_families)) ver_spec.families.push_back(parse_corpus_family(f));
      }
      std::vector<std::string> selected = split_list(ver_checks);
      if (!ver_skip.empty()) {
        const auto skip = split_list(ver_skip);
        for (const auto& id : skip) {
          const auto all = check_ids();
          if (std::find(all.begin(), all.end(), id) == all.end()) throw ValidationError("unknown check id '" + id + "'");
        }
        for (const auto& id : check_ids())
          if (std::find(skip.begin(), skip.end(), id) == skip.end()) selected.push_back(id);
        if (selected.empty()) throw ValidationError("--skip leaves no checks to run");
      }
      const auto corpus = generate_corpus(ver_spec);
      const auto report = run_suite(corpus, selected);
      if (ver_json) {
        std::cout << report.to_json(ver_timing).dump(2) << "\n";
      } else {
        for (const auto& [id, r] : report.results) {
          std::cout << (r.passed() ? "pass " : "FAIL ") << id << " (" << r.instances << " instances";
          if (!r.passed()) std::cout << ", " << r.failures.size() << " failures";
          std::cout << ")\n";
        }
      }
      return report.all_passed() ? 0 : kExitSuite;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what();
    if (e.lower_bound_quarters() >= 0) std::cerr << " (delta >= " << QDist::from_quarters(e.lower_bound_quarters()) << ")";
    std::cerr << "\n";
    return kExitCap;
  } catch (const SizeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return 0;
}
