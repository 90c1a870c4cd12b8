#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "envymin/connected.hpp"
#include "envymin/dispatch.hpp"
#include "envymin/oracle.hpp"
#include "envymin/random.hpp"
#include "envymin/reductions.hpp"
#include "envymin/render.hpp"
#include "envymin/separability.hpp"
#include "envymin/trees.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace envymin;

struct Options {
  std::string format = "text";
  std::string file;
  std::string solver = "auto";
  long long budget = kDefaultBudget;
  long long ordering_budget = kDefaultOrderingBudget;
  long long state_budget = kDefaultStateBudget;
  long long window_budget = kDefaultWindowBudget;
  std::vector<int> allocation;
  std::string canon = "auto";
  bool list = false;
  std::size_t max_optima = kDefaultOptimaCap;
  int width = 57;
  std::string kind;
  std::string param;
  std::uint64_t seed = 0;
  int n = 6;
  int r = 3;
  int s = 2;
  int edge_num = 1;
  int edge_den = 2;
  std::string figure;
  std::string values;
  std::string eps;
  std::string gap;
  std::string items;
  int capacity = 3;
  int bins = 2;
  std::string family = "paths";
  std::string output;
  std::string experiment;
  int count = 50;
  int min_n = 3;
  int max_n = 9;

  bool structured() const { return format == "structured"; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (const std::string& part : split_commas(text)) {
    std::size_t used = 0;
    int x = std::stoi(part, &used);
    if (used != part.size()) throw input_error("bad integer list entry: " + part);
    out.push_back(x);
  }
  return out;
}

std::vector<Rational> parse_value_list(const std::string& text) {
  std::vector<Rational> out;
  for (const std::string& part : split_commas(text)) out.push_back(parse_rational(part));
  return out;
}

// CLI allocations are 1-based house positions in the input value list;
// internal allocations hold 0-based sorted ranks (matrix columns stay put).
std::vector<int> to_external(const Instance& inst, const Allocation& alloc) {
  std::vector<int> ext(alloc.size());
  if (inst.matrix) {
    for (std::size_t v = 0; v < alloc.size(); ++v) ext[v] = alloc[v] + 1;
  } else {
    ValueProfile p = inst.profile();
    for (std::size_t v = 0; v < alloc.size(); ++v) ext[v] = p.input_index[alloc[v]] + 1;
  }
  return ext;
}

Allocation from_external(const Instance& inst, const std::vector<int>& ext) {
  const int n = inst.graph.n;
  if (static_cast<int>(ext.size()) != n)
    throw input_error("the allocation needs exactly one house per vertex");
  std::vector<int> ranks;
  if (!inst.matrix) ranks = inst.profile().rank_of_input();
  Allocation alloc(n);
  for (int v = 0; v < n; ++v) {
    if (ext[v] < 1 || ext[v] > n) throw input_error("house indices run from 1 to n");
    alloc[v] = inst.matrix ? ext[v] - 1 : ranks[ext[v] - 1];
  }
  require_allocation(alloc, n);
  return alloc;
}

void print_houses(const char* label, const std::vector<int>& ext) {
  std::cout << label;
  for (int h : ext) std::cout << ' ' << h;
  std::cout << "\n";
}

// The rational is authoritative; the 6-place decimal is for readability.
void print_envy_text(const Rational& envy) {
  std::cout << "envy " << format_rational(envy) << "\n"
            << "envy_decimal " << format_decimal6(envy) << "\n";
}

void put_envy(json& j, const Rational& envy) {
  j["envy"] = format_rational(envy);
  j["envy_decimal"] = format_decimal6(envy);
}

void emit_result(const Options& o, const Instance& inst, const SolveResult& res) {
  std::vector<int> ext = to_external(inst, res.assignment);
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.result/1";
    put_envy(j, res.envy);
    j["solver"] = res.solver;
    j["guarantee"] = to_string(res.guarantee);
    j["allocation"] = ext;
    std::cout << j.dump() << "\n";
  } else {
    print_envy_text(res.envy);
    std::cout << "solver " << res.solver << "\n"
              << "guarantee " << to_string(res.guarantee) << "\n";
    print_houses("allocation", ext);
  }
}

SolveOptions solve_options(const Options& o) {
  SolveOptions so;
  so.budget = o.budget;
  so.ordering_budget = o.ordering_budget;
  so.state_budget = o.state_budget;
  so.window_budget = o.window_budget;
  so.solver = o.solver;
  return so;
}

void run_evaluate(const Options& o) {
  Instance inst = load_instance(o.file);
  Allocation alloc = from_external(inst, o.allocation);
  Rational envy = inst.identical() ? total_envy(inst.graph, inst.profile(), alloc)
                                   : total_envy_general(inst.graph, *inst.matrix, alloc);
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.result/1";
    put_envy(j, envy);
    j["allocation"] = o.allocation;
    std::cout << j.dump() << "\n";
  } else {
    print_envy_text(envy);
    print_houses("allocation", o.allocation);
  }
}

void run_solve(const Options& o) {
  if (!o.allocation.empty()) return run_evaluate(o);  // --evaluate mode
  Instance inst = load_instance(o.file);
  emit_result(o, inst, solve_instance(inst, solve_options(o)));
}

void run_oracle(const Options& o) {
  Instance inst = load_instance(o.file);
  if (!inst.identical()) throw input_error("the oracle needs identical valuations");
  emit_result(o, inst, brute_force(inst.graph, inst.profile(), o.budget));
}

Symmetry resolve_canon(const Graph& g, const std::string& canon) {
  if (canon == "none") return Symmetry::none();
  int r = 0, s = 0;
  if (canon == "cycle") {
    if (!is_cycle(g)) throw input_error("cycle canonicalization needs a cycle graph");
    return Symmetry::cycle_dihedral();
  }
  if (canon == "bipartite") {
    if (!is_complete_bipartite(g, &r, &s))
      throw input_error("bipartite canonicalization needs a complete bipartite graph");
    return Symmetry::bipartite_sides(r, s);
  }
  if (is_cycle(g)) return Symmetry::cycle_dihedral();
  if (is_complete_bipartite(g, &r, &s)) return Symmetry::bipartite_sides(r, s);
  return Symmetry::none();
}

void run_enumerate(const Options& o) {
  Instance inst = load_instance(o.file);
  if (!inst.identical()) throw input_error("enumeration needs identical valuations");
  OptimalSet set = enumerate_optima(inst.graph, inst.profile(), o.budget, o.max_optima);
  Symmetry sym = resolve_canon(inst.graph, o.canon);
  std::optional<std::vector<Allocation>> classes;
  if (sym.kind != SymmetryKind::None) classes = canonical_classes(set.optima, sym);
  const std::vector<Allocation>& listing = classes ? *classes : set.optima;
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = "enumerate";
    put_envy(j, set.envy);
    j["count"] = set.optima.size();
    j["truncated"] = set.truncated;
    if (classes) j["classes"] = classes->size();
    if (o.list) {
      json arr = json::array();
      for (const Allocation& a : listing) arr.push_back(to_external(inst, a));
      j["optima"] = arr;
    }
    std::cout << j.dump() << "\n";
  } else {
    print_envy_text(set.envy);
    std::cout << "count " << set.optima.size() << "\n"
              << "truncated " << (set.truncated ? "yes" : "no") << "\n";
    if (classes) std::cout << "classes " << classes->size() << "\n";
    if (o.list)
      for (const Allocation& a : listing) print_houses("optimum", to_external(inst, a));
  }
}

void run_classify(const Options& o) {
  Instance inst = load_instance(o.file);
  std::vector<Component> comps = connected_components(inst.graph);
  std::vector<ComponentClass> classes;
  for (const Component& comp : comps)
    classes.push_back(
        classify_component(comp.graph, comps.size() == 1 ? inst.root : std::nullopt));
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = "classify";
    json arr = json::array();
    for (std::size_t i = 0; i < comps.size(); ++i) {
      json c;
      c["class"] = to_string(classes[i]);
      json verts = json::array();
      for (int v : comps[i].vertices) verts.push_back(v + 1);
      c["vertices"] = verts;
      arr.push_back(c);
    }
    j["components"] = arr;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "components " << comps.size() << "\n";
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::cout << "component " << i + 1 << " " << to_string(classes[i]) << " vertices";
      for (int v : comps[i].vertices) std::cout << ' ' << v + 1;
      std::cout << "\n";
    }
  }
}

void write_instance_out(const Instance& inst, const std::string& output) {
  std::string text = serialize_instance(inst);
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw input_error("cannot write " + output);
  out << text;
}

Instance with_values(Graph g, Rng& rng, const std::string& values) {
  Instance inst;
  inst.graph = std::move(g);
  if (values.empty()) {
    inst.values = random_profile(rng, inst.graph.n).values;
  } else {
    inst.values = parse_value_list(values);
    if (static_cast<int>(inst.values.size()) != inst.graph.n)
      throw input_error("need exactly one value per vertex");
  }
  return inst;
}

ItemFamily parse_family(const std::string& name) {
  if (name == "paths") return ItemFamily::Paths;
  if (name == "cycles") return ItemFamily::Cycles;
  if (name == "stars") return ItemFamily::Stars;
  if (name == "cliques") return ItemFamily::Cliques;
  throw input_error("unknown item family: " + name);
}

FigureId parse_figure(const std::string& name) {
  if (name == "fig1") return FigureId::Fig1;
  if (name == "fig3-top") return FigureId::Fig3Top;
  if (name == "fig3-bottom") return FigureId::Fig3Bottom;
  if (name == "fig4") return FigureId::Fig4;
  if (name == "fig5") return FigureId::Fig5;
  throw input_error("unknown figure: " + name);
}

Graph family_graph(const std::string& family, int n, int r, int s) {
  if (family == "path") return path_graph(n);
  if (family == "cycle") return cycle_graph(n);
  if (family == "star") return star_graph(n - 1);
  if (family == "clique") return clique_graph(n);
  if (family == "complete_bipartite") return complete_bipartite_graph(r, s);
  throw input_error("unknown family: " + family);
}

void run_generate(const Options& o) {
  if (o.kind == "figure") {
    std::string id = !o.param.empty() ? o.param : o.figure;
    if (id.empty()) throw input_error("the figure kind needs a figure id");
    write_instance_out(make_figure_instance(parse_figure(id)), o.output);
    return;
  }
  if (o.kind == "bisection") {
    Rng rng(o.seed);
    Graph g = random_graph(rng, o.n, o.edge_num, o.edge_den);
    std::optional<Rational> eps;
    if (!o.eps.empty()) eps = parse_rational(o.eps);
    Instance inst = gen_from_bisection(g, eps);
    inst.metadata["seed"] = std::to_string(o.seed);
    write_instance_out(inst, o.output);
    return;
  }
  if (o.kind == "binpacking") {
    if (o.items.empty()) throw input_error("binpacking needs --items");
    BinPackingInput input;
    input.items = parse_int_list(o.items);
    input.bin_capacity = o.capacity;
    input.bins = o.bins;
    std::optional<Rational> gap, eps;
    if (!o.gap.empty()) gap = parse_rational(o.gap);
    if (!o.eps.empty()) eps = parse_rational(o.eps);
    std::string fam = !o.param.empty() ? o.param : o.family;
    Instance inst = gen_from_binpacking(input, parse_family(fam), gap, eps);
    inst.metadata["family"] = fam;
    inst.metadata["items"] = o.items;
    write_instance_out(inst, o.output);
    return;
  }

  Rng rng(o.seed);
  Instance inst;
  if (o.kind == "random-graph" || o.kind == "random") {
    inst = with_values(random_graph(rng, o.n, o.edge_num, o.edge_den), rng, o.values);
  } else if (o.kind == "disconnected") {
    inst = with_values(random_disconnected_graph(rng, o.n, o.edge_num, o.edge_den), rng,
                       o.values);
  } else if (o.kind == "tree") {
    inst = with_values(random_tree(rng, o.n), rng, o.values);
  } else if (o.kind == "binary-tree") {
    auto [g, root] = random_binary_tree(rng, o.n);
    inst = with_values(std::move(g), rng, o.values);
    inst.root = root;
  } else if (o.kind == "family") {
    std::string fam = !o.param.empty() ? o.param : o.family;
    inst = with_values(family_graph(fam, o.n, o.r, o.s), rng, o.values);
    inst.metadata["family"] = fam;
  } else {
    throw input_error("unknown kind: " + o.kind);
  }
  inst.metadata["generator"] = o.kind;
  inst.metadata["seed"] = std::to_string(o.seed);
  write_instance_out(inst, o.output);
}

void emit_fraction_report(const Options& o, const char* kind, int holds, json per_case,
                          const std::string& text_lines) {
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = kind;
    j["count"] = o.count;
    j["holds"] = holds;
    j["cases"] = std::move(per_case);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text_lines << "holds " << holds << "/" << o.count << "\n";
  }
}

void run_tree_extremes(const Options& o) {
  Rng rng(o.seed);
  if (o.min_n < 2 || o.max_n < o.min_n) throw input_error("need 2 <= min-n <= max-n");
  int holds = 0;
  json cases = json::array();
  std::ostringstream lines;
  for (int i = 0; i < o.count; ++i) {
    int n = static_cast<int>(rng.between(o.min_n, o.max_n));
    Graph tree = random_tree(rng, n);
    ValueProfile p = random_profile(rng, n);
    TreeExtremesRecord rec = experiment_tree_extremes(tree, p, o.budget);
    if (rec.holds) ++holds;
    if (o.structured()) {
      json t;
      t["n"] = n;
      t["optima"] = rec.optima_count;
      t["extremes_on_leaves"] = rec.extremes_on_leaves;
      t["holds"] = rec.holds;
      cases.push_back(t);
    } else {
      lines << "tree " << i + 1 << " n " << n << " holds " << (rec.holds ? "yes" : "no");
      if (!rec.holds) {
        lines << " edges";
        for (auto [u, v] : tree.edges) lines << ' ' << u + 1 << '-' << v + 1;
        lines << " values";
        for (const Rational& x : p.values) lines << ' ' << format_rational(x);
      }
      lines << "\n";
    }
  }
  emit_fraction_report(o, "tree-extremes", holds, std::move(cases), lines.str());
}

void run_local_median(const Options& o) {
  Rng rng(o.seed);
  if (o.max_n < 3) throw input_error("binary trees need at least 3 vertices");
  int holds = 0;
  json cases = json::array();
  std::ostringstream lines;
  for (int i = 0; i < o.count; ++i) {
    int n = 3 + 2 * static_cast<int>(rng.between(0, (o.max_n - 3) / 2));
    auto [g, root] = random_binary_tree(rng, n);
    ValueProfile p = random_profile(rng, n);
    RootedTree t(g, root);
    OptimalSet set = enumerate_optima(g, p, o.budget);
    bool any = false;
    for (const Allocation& a : set.optima)
      if (check_local_median(t, p, a)) {
        any = true;
        break;
      }
    if (any) ++holds;
    if (o.structured()) {
      json c;
      c["n"] = n;
      c["optima"] = set.optima.size();
      c["holds"] = any;
      cases.push_back(c);
    } else {
      lines << "tree " << i + 1 << " n " << n << " local_median " << (any ? "yes" : "no")
            << "\n";
    }
  }
  emit_fraction_report(o, "local-median", holds, std::move(cases), lines.str());
}

void run_mla_experiment(const Options& o) {
  Rng rng(o.seed);
  if (o.max_n < 2) throw input_error("disconnected graphs need at least 2 vertices");
  int holds = 0;
  json cases = json::array();
  std::ostringstream lines;
  for (int i = 0; i < o.count; ++i) {
    int n = static_cast<int>(rng.between(2, o.max_n));
    Graph g = random_disconnected_graph(rng, n, o.edge_num, o.edge_den);
    bool ok = check_mla_contiguity(g, evenly_spaced_profile(n, 1, 1), o.budget);
    if (ok) ++holds;
    if (o.structured()) {
      json c;
      c["n"] = n;
      c["holds"] = ok;
      cases.push_back(c);
    } else {
      lines << "graph " << i + 1 << " n " << n << " contiguous " << (ok ? "yes" : "no") << "\n";
    }
  }
  emit_fraction_report(o, "mla-contiguity", holds, std::move(cases), lines.str());
}

void run_separability(const Options& o) {
  Instance inst;
  if (!o.figure.empty()) {
    inst = make_figure_instance(parse_figure(o.figure));
  } else if (!o.file.empty()) {
    inst = load_instance(o.file);
  } else {
    throw input_error("the separability experiment needs a file or --figure");
  }
  if (!inst.identical()) throw input_error("separability needs identical valuations");
  SeparabilityReport rep = classify_separability_empirical(inst.graph, inst.profile(), o.budget);
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = "separability";
    put_envy(j, rep.envy);
    j["optima"] = rep.optima_count;
    j["truncated"] = rep.truncated;
    j["strongly_separable"] = rep.strongly_separable;
    j["separable"] = rep.separable;
    if (rep.separable_order) {
      json order = json::array();
      for (int c : *rep.separable_order) order.push_back(c + 1);
      j["order"] = order;
    }
    if (rep.interleaving) {
      json quad = json::array();
      for (int rank : *rep.interleaving) quad.push_back(rank + 1);
      j["interleaving"] = quad;
    }
    std::cout << j.dump() << "\n";
  } else {
    print_envy_text(rep.envy);
    std::cout << "optima " << rep.optima_count << "\n"
              << "truncated " << (rep.truncated ? "yes" : "no") << "\n"
              << "strongly_separable " << (rep.strongly_separable ? "yes" : "no") << "\n"
              << "separable " << (rep.separable ? "yes" : "no") << "\n";
    if (rep.separable_order) {
      std::cout << "order";
      for (int c : *rep.separable_order) std::cout << ' ' << c + 1;
      std::cout << "\n";
    }
    if (rep.interleaving) {
      std::cout << "interleaving";
      for (int rank : *rep.interleaving) std::cout << ' ' << rank + 1;
      std::cout << "\n";
    }
  }
}

void run_fig5(const Options& o) {
  Fig5Check check = check_fig5_structure();
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = "fig5";
    j["interleaved"] = format_rational(check.interleaved);
    j["contiguous"] = format_rational(check.best_contiguous);
    j["interleaved_wins"] = check.interleaved_wins;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "interleaved " << format_rational(check.interleaved) << "\n"
              << "contiguous " << format_rational(check.best_contiguous) << "\n"
              << "interleaved_wins " << (check.interleaved_wins ? "yes" : "no") << "\n";
  }
}

void run_experiment(const Options& o) {
  if (o.experiment == "tree-extremes") return run_tree_extremes(o);
  if (o.experiment == "local-median") return run_local_median(o);
  if (o.experiment == "mla-contiguity") return run_mla_experiment(o);
  if (o.experiment == "separability") return run_separability(o);
  if (o.experiment == "fig5") return run_fig5(o);
  throw input_error("unknown experiment: " + o.experiment);
}

void run_render(const Options& o) {
  Instance inst = load_instance(o.file);
  if (!inst.identical()) throw input_error("render needs identical valuations");
  Allocation alloc = o.allocation.empty()
                         ? solve_instance(inst, solve_options(o)).assignment
                         : from_external(inst, o.allocation);
  std::string text = render_allocation(inst.graph, inst.profile(), alloc, o.width);
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.report/1";
    j["kind"] = "render";
    j["text"] = text;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text;
  }
}

void emit_error(const Options& o, const char* kind, const std::string& message) {
  if (o.structured()) {
    json j;
    j["schema"] = "envymin.error/1";
    j["kind"] = kind;
    j["message"] = message;
    std::cerr << j.dump() << "\n";
  } else {
    std::cerr << "error: " << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"envy minimization for house allocation on graphs"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "text or structured")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  auto add_budget = [&o](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "largest permutation count brute force may visit")
        ->envname("ENVYMIN_BUDGET")
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "minimize envy for an instance");
  solve->add_option("file", o.file, "instance JSON file")->required();
  solve->add_option("--solver", o.solver, "force a solver")
      ->check(CLI::IsMember(solver_names()))
      ->capture_default_str();
  add_budget(solve);
  solve->add_option("--ordering-budget", o.ordering_budget, "distinct block orderings cap")
      ->capture_default_str();
  solve->add_option("--state-budget", o.state_budget, "paths DP state cap")
      ->capture_default_str();
  solve->add_option("--window-budget", o.window_budget, "clique window product cap")
      ->capture_default_str();
  solve->add_option("--evaluate", o.allocation,
                    "score this 1-based allocation instead of solving");
  solve->callback([&o] { run_solve(o); });

  CLI::App* evaluate = app.add_subcommand("evaluate", "envy of a given allocation");
  evaluate->add_option("file", o.file, "instance JSON file")->required();
  evaluate->add_option("--allocation", o.allocation, "1-based house per vertex")->required();
  evaluate->callback([&o] { run_evaluate(o); });

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive minimum by brute force");
  oracle->add_option("file", o.file, "instance JSON file")->required();
  add_budget(oracle);
  oracle->callback([&o] { run_oracle(o); });

  CLI::App* enumerate = app.add_subcommand("enumerate", "all optimal allocations");
  enumerate->add_option("file", o.file, "instance JSON file")->required();
  add_budget(enumerate);
  enumerate->add_option("--max", o.max_optima, "stop after this many optima")
      ->capture_default_str();
  enumerate->add_option("--canon", o.canon, "collapse symmetric optima")
      ->check(CLI::IsMember({"auto", "none", "cycle", "bipartite"}))
      ->capture_default_str();
  enumerate->add_flag("--list", o.list, "print the allocations");
  enumerate->callback([&o] { run_enumerate(o); });

  CLI::App* classify = app.add_subcommand("classify", "graph class per component");
  classify->add_option("file", o.file, "instance JSON file")->required();
  classify->callback([&o] { run_classify(o); });

  CLI::App* generate = app.add_subcommand("generate", "write an instance file");
  generate
      ->add_option("kind", o.kind,
                   "random-graph|disconnected|tree|binary-tree|family|figure|bisection|"
                   "binpacking")
      ->required();
  generate->add_option("param", o.param, "figure id or family name");
  generate->add_option("--seed", o.seed, "random seed")->capture_default_str();
  generate->add_option("--n", o.n, "vertex count")->capture_default_str();
  generate->add_option("--r", o.r, "larger bipartite side")->capture_default_str();
  generate->add_option("--s", o.s, "smaller bipartite side")->capture_default_str();
  generate->add_option("--edge-num", o.edge_num, "edge probability numerator")
      ->capture_default_str();
  generate->add_option("--edge-den", o.edge_den, "edge probability denominator")
      ->capture_default_str();
  generate->add_option("--figure", o.figure, "fig1|fig3-top|fig3-bottom|fig4|fig5");
  generate->add_option("--values", o.values, "comma-separated house values");
  generate->add_option("--eps", o.eps, "reduction eps as a rational");
  generate->add_option("--gap", o.gap, "bin packing cluster gap as a rational");
  generate->add_option("--items", o.items, "comma-separated bin packing item sizes");
  generate->add_option("--bin,--capacity", o.capacity, "bin capacity")->capture_default_str();
  generate->add_option("--bins", o.bins, "bin count")->capture_default_str();
  generate->add_option("--family", o.family, "item family for binpacking")
      ->capture_default_str();
  generate->add_option("-o,--output", o.output, "output file (stdout if absent)");
  generate->callback([&o] { run_generate(o); });

  CLI::App* experiment = app.add_subcommand("experiment", "empirical checks");
  experiment
      ->add_option("name", o.experiment,
                   "tree-extremes|local-median|mla-contiguity|separability|fig5")
      ->required();
  experiment->add_option("file", o.file, "instance JSON file (separability)");
  experiment->add_option("--figure", o.figure, "figure id (separability)");
  experiment->add_option("--seed", o.seed, "random seed")->capture_default_str();
  experiment->add_option("--count,--trees", o.count, "sample count")->capture_default_str();
  experiment->add_option("--min-n", o.min_n, "smallest instance")->capture_default_str();
  experiment->add_option("--max-n,--n", o.max_n, "largest instance")->capture_default_str();
  experiment->add_option("--edge-num", o.edge_num, "edge probability numerator")
      ->capture_default_str();
  experiment->add_option("--edge-den", o.edge_den, "edge probability denominator")
      ->capture_default_str();
  add_budget(experiment);
  experiment->callback([&o] { run_experiment(o); });

  CLI::App* render = app.add_subcommand("render", "draw an allocation on the value line");
  render->add_option("file", o.file, "instance JSON file")->required();
  render->add_option("--allocation", o.allocation, "1-based house per vertex");
  render->add_option("--width", o.width, "picture width in columns")->capture_default_str();
  render->add_option("--solver", o.solver, "force a solver")
      ->check(CLI::IsMember(solver_names()))
      ->capture_default_str();
  add_budget(render);
  render->callback([&o] { run_render(o); });

  // Parent flags like --format may come after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  int status = 0;
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    status = app.exit(e);
  } catch (const budget_error& e) {
    emit_error(o, "budget", e.what());
    status = 2;
  } catch (const input_error& e) {
    emit_error(o, "input", e.what());
    status = 1;
  } catch (const std::exception& e) {
    emit_error(o, "internal", e.what());
    status = 1;
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  std::cerr << "time_ms "
            << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count() << "\n";
  return status;
}
