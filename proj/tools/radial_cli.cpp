// radial: generate graphs, build and check decompositions and obstruction certificates.
//
// Exit codes: 0 decomposed / valid, 10 obstructed / witness found, 1 invalid certificate,
// 2 bad input, 3 internal invariant failure.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "radial/constructors.hpp"
#include "radial/exact_oracle.hpp"
#include "radial/generators.hpp"
#include "radial/io.hpp"

namespace {

using namespace radial;

constexpr int kDecomposed = 0;
constexpr int kObstructed = 10;
constexpr int kInvalid = 1;
constexpr int kBadInput = 2;
constexpr int kInternal = 3;

template <class F>
auto with_input(const std::string& path, F&& f) {
  if (path == "-") return f(std::cin, std::string("<stdin>"));
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open for reading");
  return f(in, path);
}

Graph load_graph(const std::string& path) {
  return with_input(path, [](std::istream& in, const std::string& name) { return io::read_graph(in, name); });
}

// Writes to a file, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw InputError(path + ": cannot open for writing");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

GraphClass class_arg(const std::string& s) {
  auto c = parse_class(s);
  if (!c) throw InputError("unknown class '" + s + "'");
  return *c;
}

int cmd_generate(const std::string& family, const std::vector<int>& params, int subdivide,
                 const std::string& out_path) {
  Graph g;
  if (family == "tree-of-wheels") {
    if (params.size() != 2) throw InputError("tree-of-wheels takes n d");
    g = gen::tree_of_wheels(params[0], params[1]).graph;
  } else if (family == "spider") {
    if (params.size() != 2) throw InputError("spider takes legs length");
    g = gen::subdivide(gen::star(params[0]), params[1]);
  } else if (family == "split") {
    if (params.size() != 2) throw InputError("split takes n R (splits vertex 0 of K_n)");
    g = gen::split_subdivide(gen::complete(params[0]), params[1], 0);
  } else {
    g = gen::basic(family, params);
  }
  if (subdivide > 1) g = gen::subdivide(g, subdivide);
  Output out(out_path);
  io::write_graph(out.stream(), g);
  return 0;
}

int cmd_decompose(const std::string& cls, int k, const std::string& in_path, const std::string& out_path) {
  const Graph g = load_graph(in_path);
  DecomposeOutcome res;
  switch (class_arg(cls)) {
    case GraphClass::path: res = decompose_path(g, k); break;
    case GraphClass::cycle: res = decompose_cycle(g, k); break;
    case GraphClass::star: res = decompose_star(g, k); break;
    default: throw InputError("decompose supports path, cycle and star");
  }
  Output out(out_path);
  if (auto* d = std::get_if<Decomposed>(&res)) {
    io::write_decomposition(out.stream(), d->dec);
    std::cerr << "decomposed: claimed bound " << d->claimed_bound << '\n';
    return kDecomposed;
  }
  const auto& w = std::get<Obstructed>(res).witness;
  io::write_witness(out.stream(), w);
  std::cerr << "obstructed: " << pattern_name(w.pattern) << " k=" << w.k << " c=" << w.c << '\n';
  return kObstructed;
}

int cmd_verify(const std::string& in_path, const std::string& cert_path, const std::string& cls) {
  const Graph g = load_graph(in_path);
  auto cert = with_input(cert_path, [](std::istream& in, const std::string& name) {
    return io::read_certificate(in, name);
  });
  if (auto* w = std::get_if<SubdivisionWitness>(&cert)) {
    auto rep = verify_witness(g, *w);
    for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
    if (!rep.ok) return kInvalid;
    auto lb = lower_bounds(g, *w);
    std::cout << "witness " << pattern_name(w->pattern) << " k=" << w->k << " c=" << w->c << " valid\n"
              << "lower bound (subgraph): " << to_string(lb.standalone) << '\n'
              << "lower bound (host): " << to_string(lb.host) << '\n';
    return kDecomposed;
  }
  const auto& dec = std::get<GraphDecomposition>(cert);
  auto rep = verify(g, dec);
  for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
  if (!rep.ok()) return kInvalid;
  auto m = metrics(g, dec);
  std::cout << "radial width: " << m.radial_width.to_string() << '\n'
            << "outer radial width: " << m.outer_radial_width.to_string() << '\n'
            << "radial spread: " << m.radial_spread.to_string() << '\n'
            << "honest: " << (m.honest ? "yes" : "no") << '\n';
  if (!cls.empty()) {
    const bool in_class = belongs_to(dec.decomposition_graph, class_arg(cls));
    std::cout << "class " << cls << ": " << (in_class ? "yes" : "no") << '\n';
    if (!in_class) return kInvalid;
  }
  return kDecomposed;
}

int cmd_obstruct(const std::string& pattern, std::int64_t k, std::int64_t c, std::int64_t cap,
                 const std::string& in_path, const std::string& out_path) {
  const Graph g = load_graph(in_path);
  auto p = parse_pattern(pattern);
  if (!p) throw InputError("unknown pattern '" + pattern + "'");
  auto res = find_subdivision(g, *p, k, c, SearchCaps{cap});
  Output out(out_path);
  switch (res.status) {
    case SearchResult::Status::found:
      io::write_witness(out.stream(), *res.witness);
      return kObstructed;
    case SearchResult::Status::exhausted:
      out.stream() << "none(exhausted)\n";
      return 0;
    case SearchResult::Status::cap_hit:
      out.stream() << "none(cap)\n";
      return 0;
  }
  return 0;
}

int cmd_qi_from_dec(const std::string& g_path, const std::string& dec_path, const std::string& out_path) {
  const Graph g = load_graph(g_path);
  auto dec = with_input(dec_path, [](std::istream& in, const std::string& name) {
    return io::read_decomposition(in, name);
  });
  auto qi = dec_to_qi(g, dec);
  Output out(out_path);
  io::write_qi(out.stream(), qi);
  return 0;
}

int cmd_qi_to_dec(const std::string& g_path, const std::string& h_path, const std::string& qi_path,
                  const std::string& out_path) {
  const Graph g = load_graph(g_path);
  const Graph h = load_graph(h_path);
  auto qi = with_input(qi_path, [](std::istream& in, const std::string& name) { return io::read_qi(in, name); });
  Output out(out_path);
  io::write_decomposition(out.stream(), qi_to_dec(g, h, qi));
  return 0;
}

int cmd_qi_check(const std::string& g_path, const std::string& h_path, const std::string& qi_path) {
  const Graph g = load_graph(g_path);
  const Graph h = load_graph(h_path);
  auto qi = with_input(qi_path, [](std::istream& in, const std::string& name) { return io::read_qi(in, name); });
  auto rep = verify_quasi_isometry(g, h, qi);
  for (const auto& v : rep.violations) std::cout << "violation: " << v << '\n';
  std::cout << (rep.ok() ? "valid\n" : "invalid\n");
  return rep.ok() ? 0 : kInvalid;
}

int cmd_exact(const std::string& cls, int at_most, int max_size, std::int64_t steps, const std::string& in_path,
              const std::string& out_path) {
  const Graph g = load_graph(in_path);
  ExactCaps caps{max_size, steps};
  const GraphClass c = class_arg(cls);
  Output out(out_path);
  if (at_most >= 0) {
    auto res = exact_width_at_most(g, c, at_most, caps);
    switch (res.kind) {
      case ExactResult::Kind::at_most:
        io::write_decomposition(out.stream(), *res.dec);
        return 0;
      case ExactResult::Kind::exceeds_all:
        out.stream() << "exceeds_all\n";
        return 0;
      case ExactResult::Kind::inconclusive:
        out.stream() << "inconclusive: " << res.caps_hit << '\n';
        return 0;
    }
  }
  auto w = exact_width(g, c, caps);
  if (w.conclusive) {
    out.stream() << "width " << w.value << '\n';
  } else {
    out.stream() << "inconclusive: width >= " << w.lower_bound << " (" << w.caps_hit << ")\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"radial-width decompositions and obstruction certificates"};
  app.require_subcommand(1);

  std::string family, out_path = "-", in_path, cert_path, cls, pattern, h_path, qi_path, dec_path;
  std::vector<int> params;
  int subdivide = 1, k = 0, at_most = -1, max_size = ExactCaps{}.max_vertices;
  std::int64_t c = 1, cap = SearchCaps{}.max_candidates, steps = ExactCaps{}.max_steps;

  auto* gen_cmd = app.add_subcommand("generate", "write a generated graph");
  gen_cmd->add_option("family", family,
                      "path|cycle|complete|star|grid|triangle|claw|wrench|tree-of-wheels|spider|split")
      ->required();
  gen_cmd->add_option("params", params, "integer parameters of the family");
  gen_cmd->add_option("--subdivide", subdivide, "replace every edge by a path of this length")->check(CLI::PositiveNumber);
  gen_cmd->add_option("-o,--output", out_path, "output file, - for stdout");

  auto* dec_cmd = app.add_subcommand("decompose", "decompose or find an obstruction");
  dec_cmd->add_option("--class", cls, "path|cycle|star")->required();
  dec_cmd->add_option("-k", k, "subdivision parameter")->required()->check(CLI::NonNegativeNumber);
  dec_cmd->add_option("input", in_path, "graph file, - for stdin")->required();
  dec_cmd->add_option("-o,--output", out_path, "certificate file, - for stdout");

  auto* ver_cmd = app.add_subcommand("verify", "check a certificate and print its metrics");
  ver_cmd->add_option("input", in_path, "graph file")->required();
  ver_cmd->add_option("certificate", cert_path, "decomposition or witness file")->required();
  ver_cmd->add_option("--class", cls, "also require the decomposition graph to be in this class");

  auto* obs_cmd = app.add_subcommand("obstruct", "search for a quasi-geodesic subdivision");
  obs_cmd->add_option("--pattern", pattern, "K3|K13|W")->required();
  obs_cmd->add_option("-k", k, "subdivision parameter")->required()->check(CLI::NonNegativeNumber);
  obs_cmd->add_option("-c", c, "quasi-geodesic constant")->required()->check(CLI::PositiveNumber);
  obs_cmd->add_option("--cap", cap, "candidate budget")->check(CLI::PositiveNumber);
  obs_cmd->add_option("input", in_path, "graph file")->required();
  obs_cmd->add_option("-o,--output", out_path, "witness file, - for stdout");

  auto* qi_cmd = app.add_subcommand("qi", "quasi-isometry conversions");
  qi_cmd->require_subcommand(1);
  auto* from_dec = qi_cmd->add_subcommand("from-dec", "quasi-isometry from an honest decomposition");
  from_dec->add_option("input", in_path, "graph file")->required();
  from_dec->add_option("decomposition", dec_path, "decomposition file")->required();
  from_dec->add_option("-o,--output", out_path, "qi file");
  auto* to_dec = qi_cmd->add_subcommand("to-dec", "decomposition from a quasi-isometry");
  to_dec->add_option("input", in_path, "graph file")->required();
  to_dec->add_option("model", h_path, "graph file of H")->required();
  to_dec->add_option("qi", qi_path, "qi file")->required();
  to_dec->add_option("-o,--output", out_path, "decomposition file");
  auto* qi_check = qi_cmd->add_subcommand("check", "verify a quasi-isometry");
  qi_check->add_option("input", in_path, "graph file")->required();
  qi_check->add_option("model", h_path, "graph file of H")->required();
  qi_check->add_option("qi", qi_path, "qi file")->required();

  auto* ex_cmd = app.add_subcommand("exact", "exhaustive radial width on small graphs");
  ex_cmd->add_option("--class", cls, "path|cycle|star|tree")->required();
  ex_cmd->add_option("--at-most", at_most, "only decide width <= R")->check(CLI::NonNegativeNumber);
  ex_cmd->add_option("--max-size", max_size, "largest graph searched")->check(CLI::PositiveNumber);
  ex_cmd->add_option("--max-steps", steps, "search budget per radius")->check(CLI::PositiveNumber);
  ex_cmd->add_option("input", in_path, "graph file")->required();
  ex_cmd->add_option("-o,--output", out_path, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadInput;
  }

  try {
    if (*gen_cmd) return cmd_generate(family, params, subdivide, out_path);
    if (*dec_cmd) return cmd_decompose(cls, k, in_path, out_path);
    if (*ver_cmd) return cmd_verify(in_path, cert_path, cls);
    if (*obs_cmd) return cmd_obstruct(pattern, k, c, cap, in_path, out_path);
    if (*from_dec) return cmd_qi_from_dec(in_path, dec_path, out_path);
    if (*to_dec) return cmd_qi_to_dec(in_path, h_path, qi_path, out_path);
    if (*qi_check) return cmd_qi_check(in_path, h_path, qi_path);
    if (*ex_cmd) return cmd_exact(cls, at_most, max_size, steps, in_path, out_path);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}
