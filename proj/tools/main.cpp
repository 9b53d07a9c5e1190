/* revsyn: reversible circuit synthesis toolkit
 * SPDX-License-Identifier: Apache-2.0
 */
#include "revsyn/ancilla.hpp"
#include "revsyn/cost.hpp"
#include "revsyn/eval.hpp"
#include "revsyn/faces.hpp"
#include "revsyn/gf2.hpp"
#include "revsyn/io.hpp"
#include "revsyn/rewrite.hpp"
#include "revsyn/synthesis.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace revsyn;

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw syntax_error("cannot open '" + path + "'", 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw syntax_error("cannot open '" + path + "' for writing", 0);
  out << text;
}

Method parse_method(const std::string& m) {
  if (m == "A") return Method::A;
  if (m == "B") return Method::B;
  if (m == "K") return Method::K;
  if (m == "face") return Method::Face;
  if (m == "lupanov") return Method::Lupanov;
  throw parameter_error("unknown method '" + m + "'");
}

Basis parse_basis(const std::string& b) {
  if (b == "omega2") return Basis::omega2;
  if (b == "omega") return Basis::omega;
  throw parameter_error("unknown basis '" + b + "'");
}

RepresentativeStrategy parse_strategy(const std::string& s) {
  if (s == "kmin" || s == "k_min") return RepresentativeStrategy::k_min;
  if (s == "kmax" || s == "k_max") return RepresentativeStrategy::k_max;
  if (s == "kdist" || s == "k_dist") return RepresentativeStrategy::k_dist;
  if (s == "random") return RepresentativeStrategy::random;
  throw parameter_error("unknown representative strategy '" + s + "'");
}

struct SynthFlags {
  std::string input = "-";
  std::string output = "-";
  std::string method = "B";
  std::string basis = "omega2";
  int K = 2;
  bool no_lift = false;
  bool left_right = false;
  bool reduce_after = false;
  int ancilla = -1;
  int max_passes = 3;
  std::uint64_t seed = 1;
};

Circuit run_synth(const SynthFlags& f, std::string& header) {
  const std::string text = read_input(f.input);
  SynthesisOptions opts;
  opts.method = parse_method(f.method);
  opts.basis = parse_basis(f.basis);
  opts.K = f.K;
  opts.allow_ancilla_lift = !f.no_lift;
  opts.left_right_heuristic = f.left_right;
  opts.seed = f.seed;

  Circuit c(1);
  if (opts.method == Method::Lupanov) {
    std::istringstream in(text);
    BooleanMapping map = parse_table(in);
    AncillaBudget budget;
    if (f.ancilla >= 0) budget.max_lines = map.n_in + map.m_out + f.ancilla;
    c = lupanov_synth(map, std::nullopt, budget);
  } else {
    // bijective tables and cycle lists both describe permutations; other
    // tables go through the cube-cover construction
    bool bijective = true;
    BooleanMapping map;
    if (text.find('(') == std::string::npos) {
      std::istringstream tin(text);
      map = parse_table(tin);
      bijective = map.is_bijection();
    }
    if (bijective) {
      std::istringstream pin(text);
      c = synth_permutation(parse_permutation(pin), opts);
    } else {
      c = mapping_face_synth(map);
    }
  }
  if (f.reduce_after) {
    ReduceStrategy strategy;
    strategy.max_passes = f.max_passes;
    auto r = reduce_circuit(c, strategy);
    c = r.circuit;
  }
  header = "revsyn synth --method " + f.method + " --basis " + f.basis +
           " --seed " + std::to_string(f.seed);
  return c;
}

std::string stats_text(const Circuit& c, bool quantum_costs) {
  const CostReport r = cost_report(c, quantum_costs ? quantum_cost_weights() : Weights{});
  std::ostringstream out;
  out << "L=" << r.complexity << "\n"
      << "D=" << r.depth << "\n"
      << "W=" << r.quantum_weight << "\n"
      << "LC=" << r.gates_not_cnot << "\n"
      << "LT=" << r.gates_toffoli << "\n"
      << "Lwide=" << r.gates_wide << "\n"
      << "Q=" << r.ancilla << "\n"
      << "width=" << c.width() << "\n";
  return out.str();
}

struct BenchTarget {
  std::string name;
  std::string kind; // dlog-log | dlog-pow | dlog-reduced | perm | table | tfc
  std::string arg;  // field spec or path
  std::string strategy = "kmin";
  std::vector<std::string> methods;
};

std::vector<BenchTarget> parse_manifest(const std::string& text) {
  std::vector<BenchTarget> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string name, spec;
    if (!(ls >> name >> spec)) continue;
    BenchTarget t;
    t.name = name;
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw syntax_error("manifest target lacks kind:arg", line_no);
    t.kind = spec.substr(0, colon);
    t.arg = spec.substr(colon + 1);
    std::string extra;
    while (ls >> extra) {
      if (extra.rfind("methods=", 0) == 0) {
        std::istringstream ms(extra.substr(8));
        std::string m;
        while (std::getline(ms, m, ',')) t.methods.push_back(m);
      } else if (extra.rfind("strategy=", 0) == 0) {
        t.strategy = extra.substr(9);
      } else {
        throw syntax_error("unknown manifest option '" + extra + "'", line_no);
      }
    }
    if (t.methods.empty()) t.methods = {"B", "face"};
    out.push_back(std::move(t));
  }
  return out;
}

struct BenchRow {
  std::string name, method;
  int n = 0;
  CostReport report;
  double ms = 0;
  std::string error;
};

BenchRow bench_one(const BenchTarget& t, const std::string& method, std::uint64_t seed) {
  BenchRow row;
  row.name = t.name;
  row.method = method;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    Circuit c(1);
    if (t.kind == "dlog-log" || t.kind == "dlog-pow" || t.kind == "dlog-reduced") {
      Gf2Field field = parse_field_spec(t.arg);
      row.n = field.n();
      if (t.kind == "dlog-reduced") {
        const auto g = reduced_log_table(field, parse_strategy(t.strategy), seed);
        c = mapping_face_synth(g);
      } else {
        const auto f = (t.kind == "dlog-log") ? table_log(field) : table_pow(field);
        if (method == "cover") {
          c = mapping_face_synth(f);
        } else {
          SynthesisOptions opts;
          opts.method = parse_method(method);
          opts.basis = (opts.method == Method::A || opts.method == Method::Face)
                           ? Basis::omega
                           : Basis::omega2;
          opts.seed = seed;
          c = synth_permutation(Permutation::from_dense(f.table), opts);
        }
      }
    } else if (t.kind == "perm" || t.kind == "table") {
      std::istringstream in(read_input(t.arg));
      Permutation h = parse_permutation(in);
      row.n = h.n();
      SynthesisOptions opts;
      opts.method = parse_method(method);
      opts.basis = (opts.method == Method::A || opts.method == Method::Face) ? Basis::omega
                                                                             : Basis::omega2;
      opts.seed = seed;
      c = synth_permutation(h, opts);
    } else if (t.kind == "tfc") {
      std::istringstream in(read_input(t.arg));
      auto file = parse_tfc(in);
      row.n = file.circuit.width();
      if (method == "reduce")
        c = reduce_circuit(file.circuit).circuit;
      else
        c = file.circuit;
    } else {
      throw parameter_error("unknown manifest kind '" + t.kind + "'");
    }
    row.report = cost_report(c, quantum_cost_weights());
  } catch (const error& e) {
    row.error = e.what();
  }
  row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return row;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible circuit synthesis toolkit"};
  app.require_subcommand(1);

  SynthFlags sf;
  auto* synth = app.add_subcommand("synth", "synthesize a circuit from a table or permutation");
  synth->add_option("input", sf.input, "truth table / permutation file ('-' = stdin)");
  synth->add_option("-o,--output", sf.output, "output TFC file ('-' = stdout)");
  synth->add_option("--method", sf.method, "A | B | K | face | lupanov")
      ->check(CLI::IsMember({"A", "B", "K", "face", "lupanov"}));
  synth->add_option("--basis", sf.basis, "omega2 (NOT/CNOT/2-CNOT) | omega (any k-CNOT)")
      ->check(CLI::IsMember({"omega2", "omega"}));
  synth->add_option("--K", sf.K, "group size for the K method");
  synth->add_flag("--no-lift", sf.no_lift, "reject odd permutations instead of lifting");
  synth->add_flag("--left-right", sf.left_right, "evaluate both multiplication orders (face)");
  synth->add_flag("--reduce", sf.reduce_after, "run the rewrite reduction on the result");
  synth->add_option("--ancilla", sf.ancilla, "ancilla budget for lupanov (-1 = unlimited)");
  synth->add_option("--max-passes", sf.max_passes, "exploratory reduction passes");
  synth->add_option("--seed", sf.seed, "seed recorded in the output header");

  std::string rin = "-", rout = "-", rtrace;
  int rpasses = 3;
  std::size_t rwindow = 0;
  auto* reduce = app.add_subcommand("reduce", "apply the replacement-rule reduction to a TFC file");
  reduce->add_option("input", rin, "TFC file ('-' = stdin)");
  reduce->add_option("-o,--output", rout, "output TFC file");
  reduce->add_option("--trace", rtrace, "write the rule trace to a file (default stderr)");
  reduce->add_option("--max-passes", rpasses, "exploratory passes");
  reduce->add_option("--window", rwindow, "gate-motion window (0 = unbounded)");

  std::string vin = "-", vtable, vpi;
  auto* verify = app.add_subcommand("verify", "check that a TFC circuit realizes a truth table");
  verify->add_option("circuit", vin, "TFC file ('-' = stdin)");
  verify->add_option("table", vtable, "truth table file")->required();
  verify->add_option("--pi", vpi, "output projection as comma-separated line indices");

  std::string stin = "-";
  bool unit_weights = false;
  auto* stats = app.add_subcommand("stats", "cost metrics of a TFC circuit");
  stats->add_option("input", stin, "TFC file ('-' = stdin)");
  stats->add_flag("--unit-weights", unit_weights, "price wide gates as 1 instead of 2^{k+1}-3");

  std::vector<std::string> dargs;
  std::string dfield, dstrategy = "kmin", dout = "-";
  std::uint64_t dseed = 1;
  auto* dlog = app.add_subcommand("dlog-gen", "emit a GF(2^n) power/log truth table");
  dlog->add_option("args", dargs, "n=<deg> f=<poly> [alpha=<poly>] pow|log|reduced-log");
  dlog->add_option("--field", dfield, "field spec n:<deg>;f:<poly>;alpha:<poly>");
  dlog->add_option("--strategy", dstrategy, "kmin | kmax | kdist | random");
  dlog->add_option("--seed", dseed, "seed for the random strategy");
  dlog->add_option("-o,--output", dout, "output file");

  std::string bin = "-";
  std::uint64_t bseed = 1;
  int bjobs = 0;
  auto* bench = app.add_subcommand("bench", "run a manifest of targets, print a CSV");
  bench->add_option("manifest", bin, "manifest file ('-' = stdin)");
  bench->add_option("--seed", bseed, "seed");
  bench->add_option("--jobs", bjobs, "worker threads (0 = all)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*synth) {
      std::string header;
      const Circuit c = run_synth(sf, header);
      write_output(sf.output, emit_tfc(c, {}, {header}));
    } else if (*reduce) {
      std::istringstream in(read_input(rin));
      auto file = parse_tfc(in);
      ReduceStrategy strategy;
      strategy.max_passes = rpasses;
      strategy.motion_window = rwindow;
      auto r = reduce_circuit(file.circuit, strategy);
      std::ostringstream trace;
      for (const auto& line : r.trace) trace << line << "\n";
      if (rtrace.empty())
        std::cerr << trace.str();
      else
        write_output(rtrace, trace.str());
      write_output(rout, emit_tfc(r.circuit, file.names,
                                  {"revsyn reduce --max-passes " + std::to_string(rpasses)}));
    } else if (*verify) {
      std::istringstream cin_(read_input(vin));
      auto file = parse_tfc(cin_);
      std::istringstream tin(read_input(vtable));
      auto table = parse_table(tin);
      std::optional<std::vector<line_t>> pi;
      if (!vpi.empty()) {
        std::vector<line_t> lines;
        std::istringstream ps(vpi);
        std::string tok;
        while (std::getline(ps, tok, ',')) lines.push_back(static_cast<line_t>(std::stoul(tok)));
        pi = std::move(lines);
      }
      auto miss = first_mismatch(file.circuit, table, pi);
      if (miss) {
        std::cout << "MISMATCH input=" << *miss << " expected=" << table.table[*miss] << "\n";
        return 1;
      }
      std::cout << "OK\n";
    } else if (*stats) {
      std::istringstream in(read_input(stin));
      auto file = parse_tfc(in);
      std::cout << stats_text(file.circuit, !unit_weights);
    } else if (*dlog) {
      int n = -1;
      std::uint64_t fpoly = 0, alpha = 0;
      std::string kind;
      for (const auto& a : dargs) {
        if (a.rfind("n=", 0) == 0)
          n = std::stoi(a.substr(2));
        else if (a.rfind("f=", 0) == 0)
          fpoly = parse_poly(a.substr(2));
        else if (a.rfind("alpha=", 0) == 0)
          alpha = a.substr(6) == "auto" ? 0 : parse_poly(a.substr(6));
        else
          kind = a;
      }
      Gf2Field field = dfield.empty() ? Gf2Field(n, fpoly, alpha) : parse_field_spec(dfield);
      BooleanMapping table;
      if (kind == "pow")
        table = table_pow(field);
      else if (kind == "log" || kind.empty())
        table = table_log(field);
      else if (kind == "reduced-log")
        table = reduced_log_table(field, parse_strategy(dstrategy), dseed);
      else
        throw parameter_error("unknown dlog table kind '" + kind + "'");
      write_output(dout, emit_table(table, {"revsyn dlog-gen n=" + std::to_string(field.n()) +
                                            " f=" + poly_to_string(field.modulus()) +
                                            " alpha=" + poly_to_string(field.alpha()) +
                                            " seed=" + std::to_string(dseed)}));
    } else if (*bench) {
      const auto targets = parse_manifest(read_input(bin));
      std::vector<std::pair<BenchTarget, std::string>> jobs;
      for (const auto& t : targets)
        for (const auto& m : t.methods) jobs.emplace_back(t, m);
      std::vector<BenchRow> rows(jobs.size());
      if (bjobs > 0) omp_set_num_threads(bjobs);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(jobs.size()); ++i)
        rows[i] = bench_one(jobs[i].first, jobs[i].second, bseed);
      std::cout << "name,method,n,L,D,W,Q,ms,error\n";
      for (const auto& r : rows) {
        std::cout << r.name << "," << r.method << "," << r.n << "," << r.report.complexity << ","
                  << r.report.depth << "," << r.report.quantum_weight << "," << r.report.ancilla
                  << "," << r.ms << "," << r.error << "\n";
      }
    }
  } catch (const error& e) {
    std::cerr << "error kind=" << e.kind_name() << " msg=\"" << e.what() << "\"\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error kind=internal msg=\"" << e.what() << "\"\n";
    return 2;
  }
  return 0;
}
