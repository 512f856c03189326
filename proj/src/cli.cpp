#include "kdom/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "kdom/families.hpp"
#include "kdom/io.hpp"
#include "kdom/recognition.hpp"
#include "kdom/satreduce.hpp"
#include "kdom/solvers.hpp"
#include "kdom/verify.hpp"

namespace kdom::cli {

namespace {

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct StrictNo {};  // verdict "no" under --strict

std::string format_vertices(const Graph* g, VertexSet s) {
  std::string out;
  for (int v : s) {
    if (!out.empty()) out += ' ';
    out += g ? g->display_label(v) : std::to_string(v + 1);
  }
  return out;
}

void check_cap(int n, int cap) {
  if (n > cap)
    throw CapExceeded("instance order " + std::to_string(n) +
                      " exceeds the solver cap " + std::to_string(cap) +
                      " (raise it with --n-max)");
}

solvers::SolverPath parse_path(const std::string& name) {
  return name == "reference" ? solvers::SolverPath::reference : solvers::SolverPath::pruned;
}

void cmd_invariant(const std::string& file, const std::string& which, int k,
                   const std::string& path_name, int n_max, std::ostream& out) {
  const auto path = parse_path(path_name);
  const int cap = n_max > 0 ? n_max : (path == solvers::SolverPath::reference ? 26 : 40);
  if (which == "gamma" || which == "gammak") {
    const Graph g = read_graph_file(file);
    check_cap(g.order(), cap);
    if (which == "gamma") {
      const auto res = solvers::gamma(g, path);
      out << "value=" << res.value << '\n';
      out << "witness=" << format_vertices(&g, res.witness) << '\n';
      return;
    }
    if (k < 1) throw ParseError("gammak needs -k >= 1");
    const auto res = solvers::gamma_k(g, k, path);
    out << "value=" << res.value << '\n';
    out << "witness=" << format_vertices(&g, res.witness) << '\n';
    if (k >= 2 && g.max_degree() >= k) {
      const auto base = solvers::gamma(g, path);
      out << "bound=gamma_k(" << res.value << ") >= gamma(" << base.value << ")+k-2 : "
          << (res.value >= base.value + k - 2 ? "ok" : "VIOLATED") << '\n';
    }
    return;
  }
  const Hypergraph h = read_hypergraph_file(file);
  check_cap(h.order(), cap);
  solvers::SolveResult res;
  if (which == "tau")
    res = solvers::transversal_number(h, path);
  else if (which == "alphaw")
    res = solvers::weak_independence_number(h, path);
  else if (which == "rho")
    res = solvers::edge_cover_number(h, path);
  else
    res = solvers::tc_number(h, path);
  out << "value=" << res.value << '\n';
  out << "witness=" << format_vertices(nullptr, res.witness) << '\n';
  if (which == "rho" || which == "tc") {
    out << "witness_edges=";
    for (std::size_t i = 0; i < res.edge_witness.size(); ++i)
      out << (i ? " " : "") << res.edge_witness[i];
    out << '\n';
    out << "witness_edge_sets=";
    for (std::size_t i = 0; i < res.edge_witness.size(); ++i)
      out << (i ? " " : "") << h.edge(res.edge_witness[i]).to_string();
    out << '\n';
  }
}

void cmd_recognize(const std::string& file, int k, bool strict, std::ostream& out) {
  const Graph g = read_graph_file(file);
  const auto rep = recognition::is_gamma_gamma_k_graph_bipartite(g, k);
  out << rep.to_text();
  if (strict && !rep.yes) throw StrictNo{};
}

void cmd_perfect3(const std::string& file, bool strict, std::ostream& out) {
  const Graph g = read_graph_file(file);
  const auto shape = recognition::is_gamma_gamma3_perfect(g);
  if (shape) {
    out << "verdict: yes\n";
    out << "shape: S_3(";
    for (std::size_t i = 0; i < shape->branch_sizes.size(); ++i)
      out << (i ? "," : "") << shape->branch_sizes[i];
    out << ")\n";
  } else {
    out << "verdict: no\n";
    if (strict) throw StrictNo{};
  }
}

void cmd_simplify(const std::string& file, int k, const std::string& output,
                  bool strict, std::ostream& out) {
  const Graph g = read_graph_file(file);
  const auto rep = recognition::membership_Bk(g, k);
  out << rep.to_text();
  if (!rep.yes) {
    if (strict) throw StrictNo{};
    return;
  }
  const Graph simplified = families::double_incidence_graph(*rep.underlying, k);
  write_graph_file(output, simplified);
  out << "wrote: " << output << '\n';
}

void cmd_extract(const std::string& file, int k, const std::string& output,
                 bool strict, std::ostream& out) {
  const Graph g = read_graph_file(file);
  const auto rep = recognition::membership_Bk(g, k);
  out << rep.to_text();
  if (!rep.yes) {
    if (strict) throw StrictNo{};
    return;
  }
  write_hypergraph_file(output, *rep.underlying);
  out << "wrote: " << output << '\n';
}

std::vector<int> parse_size_list(const std::string& csv) {
  std::vector<int> sizes;
  std::istringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) sizes.push_back(std::stoi(item));
  return sizes;
}

Graph blowup_base(const std::string& base) {
  if (base.size() >= 2 && (base[0] == 'c' || base[0] == 'p' || base[0] == 'k') &&
      std::isdigit(static_cast<unsigned char>(base[1]))) {
    const int n = std::stoi(base.substr(1));
    if (base[0] == 'c') return families::cycle_graph(n);
    if (base[0] == 'p') return families::path_graph(n);
    return families::complete_graph(n);
  }
  return read_graph_file(base);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact k-domination and hypergraph covering toolkit"};
  app.require_subcommand(1);

  // ---- invariant ----
  std::string inv_file, inv_which, inv_path = "pruned";
  int inv_k = 0, inv_nmax = 0;
  auto* inv = app.add_subcommand("invariant", "compute an exact invariant with witness");
  inv->add_option("file", inv_file, "input .gr or .hg file")->required();
  inv->add_option("--which", inv_which, "invariant to compute")
      ->required()
      ->check(CLI::IsMember({"gamma", "gammak", "tau", "alphaw", "rho", "tc"}));
  inv->add_option("-k,--k", inv_k, "k for gammak");
  inv->add_option("--path", inv_path, "solver route")
      ->check(CLI::IsMember({"reference", "pruned"}));
  inv->add_option("--n-max", inv_nmax, "override the solver cap");

  // ---- recognize / perfect3 / simplify / extract ----
  std::string rec_file;
  int rec_k = 3;
  bool rec_strict = false;
  auto* rec = app.add_subcommand("recognize", "decide gamma_k = gamma + k - 2 (bipartite)");
  rec->add_option("file", rec_file)->required();
  rec->add_option("-k,--k", rec_k)->required();
  rec->add_flag("--strict", rec_strict, "exit 1 on a no verdict");

  std::string per_file;
  bool per_strict = false;
  auto* per = app.add_subcommand("perfect3", "match the subdivided multi-star family (k=3)");
  per->add_option("file", per_file)->required();
  per->add_flag("--strict", per_strict);

  std::string sim_file, sim_out;
  int sim_k = 3;
  bool sim_strict = false;
  auto* sim = app.add_subcommand("simplify", "write the simplified class member");
  sim->add_option("file", sim_file)->required();
  sim->add_option("-k,--k", sim_k)->required();
  sim->add_option("-o,--output", sim_out)->required();
  sim->add_flag("--strict", sim_strict);

  std::string ext_file, ext_out;
  int ext_k = 3;
  bool ext_strict = false;
  auto* ext = app.add_subcommand("extract", "write the underlying hypergraph");
  ext->add_option("file", ext_file)->required();
  ext->add_option("-k,--k", ext_k)->required();
  ext->add_option("-o,--output", ext_out)->required();
  ext->add_flag("--strict", ext_strict);

  // ---- gen ----
  auto* gen = app.add_subcommand("gen", "write family instances");
  gen->require_subcommand(1);

  std::string sk_sizes, sk_out;
  int sk_k = 3;
  auto* gsk = gen->add_subcommand("sk", "subdivided multi-star");
  gsk->add_option("-k,--k", sk_k)->required();
  gsk->add_option("--sizes", sk_sizes, "comma-separated branch sizes")->required();
  gsk->add_option("-o,--output", sk_out)->required();

  int knk_n = 5, knk_k = 3;
  std::string knk_out;
  auto* gknk = gen->add_subcommand("knk", "complete k-uniform hypergraph");
  gknk->add_option("-n,--n", knk_n)->required();
  gknk->add_option("-k,--k", knk_k)->required();
  gknk->add_option("-o,--output", knk_out)->required();

  int fk_k = 4;
  std::string fk_out;
  auto* gfk = gen->add_subcommand("fk", "even-k extremal hypergraph example");
  gfk->add_option("-k,--k", fk_k)->required();
  gfk->add_option("-o,--output", fk_out)->required();

  std::string bl_base, bl_out;
  int bl_t = 2;
  auto* gbl = gen->add_subcommand("blowup", "independent-set blowup of a base graph");
  gbl->add_option("base", bl_base, "c<n>, p<n>, k<n> or a .gr file")->required();
  gbl->add_option("t", bl_t, "copies per vertex")->required();
  gbl->add_option("-o,--output", bl_out)->required();

  std::string bks_in, bks_out;
  int bks_k = 3;
  auto* gbks = gen->add_subcommand("bkstar", "double incidence graph of a hypergraph");
  gbks->add_option("--input", bks_in, ".hg file")->required();
  gbks->add_option("-k,--k", bks_k)->required();
  gbks->add_option("-o,--output", bks_out)->required();

  int bk_k = 3, bk_forder = 4, bk_fedges = 3, bk_twins = 2, bk_y = 2;
  std::uint64_t bk_seed = 0;
  std::string bk_out;
  auto* gbk = gen->add_subcommand("bk", "random class member");
  gbk->add_option("-k,--k", bk_k)->required();
  gbk->add_option("--f-order", bk_forder);
  gbk->add_option("--f-edges", bk_fedges);
  gbk->add_option("--max-twins", bk_twins);
  gbk->add_option("--max-y", bk_y);
  gbk->add_option("--seed", bk_seed);
  gbk->add_option("-o,--output", bk_out)->required();

  std::string sg_cnf, sg_out;
  int sg_k = 3;
  auto* gsg = gen->add_subcommand("sat-gadget", "reduction graph from a DIMACS CNF");
  gsg->add_option("--cnf", sg_cnf)->required();
  gsg->add_option("-k,--k", sg_k)->required();
  gsg->add_option("-o,--output", sg_out)->required();

  std::string rnd_kind = "graph", rnd_out;
  int rnd_n = 10, rnd_k = 3, rnd_m = 4;
  double rnd_p = 0.3;
  std::uint64_t rnd_seed = 0;
  auto* grnd = gen->add_subcommand("random", "seeded random graph or hypergraph");
  grnd->add_option("--kind", rnd_kind)->check(CLI::IsMember({"graph", "hypergraph"}));
  grnd->add_option("-n,--n", rnd_n)->required();
  grnd->add_option("--prob", rnd_p, "edge probability (graphs)");
  grnd->add_option("-k,--k", rnd_k, "edge size (hypergraphs)");
  grnd->add_option("-m,--m", rnd_m, "edge count (hypergraphs)");
  grnd->add_option("--seed", rnd_seed);
  grnd->add_option("-o,--output", rnd_out)->required();

  // ---- verify ----
  std::string ver_suite;
  std::uint64_t ver_seed = 0;
  int ver_trials = 0, ver_nmax = 0;
  auto* ver = app.add_subcommand("verify", "run a property suite");
  ver->add_option("suite", ver_suite)->required()->check(CLI::IsMember(verify::suite_names()));
  ver->add_option("--seed", ver_seed);
  ver->add_option("--trials", ver_trials);
  ver->add_option("--n-max", ver_nmax);

  std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 pops from the back
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) {
      cmd_invariant(inv_file, inv_which, inv_k, inv_path, inv_nmax, out);
    } else if (rec->parsed()) {
      cmd_recognize(rec_file, rec_k, rec_strict, out);
    } else if (per->parsed()) {
      cmd_perfect3(per_file, per_strict, out);
    } else if (sim->parsed()) {
      cmd_simplify(sim_file, sim_k, sim_out, sim_strict, out);
    } else if (ext->parsed()) {
      cmd_extract(ext_file, ext_k, ext_out, ext_strict, out);
    } else if (gen->parsed()) {
      if (gsk->parsed()) {
        write_graph_file(sk_out, families::build_Sk(families::SkShape(sk_k, parse_size_list(sk_sizes))));
        out << "wrote: " << sk_out << '\n';
      } else if (gknk->parsed()) {
        write_hypergraph_file(knk_out, families::complete_uniform_hypergraph(knk_n, knk_k));
        out << "wrote: " << knk_out << '\n';
      } else if (gfk->parsed()) {
        write_hypergraph_file(fk_out, families::build_Fk_example(fk_k));
        out << "wrote: " << fk_out << '\n';
      } else if (gbl->parsed()) {
        write_graph_file(bl_out, lexicographic_blowup(blowup_base(bl_base), bl_t));
        out << "wrote: " << bl_out << '\n';
      } else if (gbks->parsed()) {
        write_graph_file(bks_out,
                         families::double_incidence_graph(read_hypergraph_file(bks_in), bks_k));
        out << "wrote: " << bks_out << '\n';
      } else if (gbk->parsed()) {
        families::BkSamplerParams params;
        params.f_order = bk_forder;
        params.f_edges = bk_fedges;
        params.max_extra_twins = bk_twins;
        params.max_attachments = bk_y;
        const auto sample = families::random_connected_bipartite_Bk(bk_k, params, bk_seed);
        write_graph_file(bk_out, sample.member.graph);
        out << "d_class=" << format_vertices(nullptr, sample.member.d) << '\n';
        out << "wrote: " << bk_out << '\n';
      } else if (gsg->parsed()) {
        std::ifstream cnf_in(sg_cnf);
        if (!cnf_in) throw ParseError("cannot open file: " + sg_cnf);
        const auto formula = satreduce::parse_dimacs(cnf_in);
        const auto gadget = satreduce::build_gadget(formula, sg_k);
        write_graph_file(sg_out, gadget.graph);
        std::ofstream roles(sg_out + ".roles");
        if (!roles) throw ParseError("cannot write file: " + sg_out + ".roles");
        roles << satreduce::role_map_text(gadget);
        out << "order=" << gadget.graph.order() << '\n';
        out << "wrote: " << sg_out << '\n';
        out << "wrote: " << sg_out << ".roles" << '\n';
      } else if (grnd->parsed()) {
        if (rnd_kind == "graph")
          write_graph_file(rnd_out, families::random_graph(rnd_n, rnd_p, rnd_seed));
        else
          write_hypergraph_file(rnd_out,
                                families::random_uniform_hypergraph(rnd_n, rnd_k, rnd_m, rnd_seed));
        out << "wrote: " << rnd_out << '\n';
      }
    } else if (ver->parsed()) {
      verify::SuiteOptions opts;
      opts.seed = ver_seed;
      opts.trials = ver_trials;
      opts.n_max = ver_nmax;
      const auto rep = verify::run_suite(ver_suite, opts);
      out << "suite=" << rep.name << " seed=" << ver_seed << '\n';
      for (const std::string& line : rep.lines) out << line << '\n';
      out << "result=" << (rep.pass ? "pass" : "fail") << '\n';
      if (!rep.pass) return 1;
    }
  } catch (const StrictNo&) {
    return 1;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace kdom::cli
