// gapkit command-line tool.  Talks to the library exclusively through the
// public C API; files are read and written here.
//
// Exit codes: 0 success, 1 usage or input error, 2 gap claim violated.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapkit/gapkit.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitClaimViolated = 2;

struct CliError {
  std::string message;
};

[[noreturn]] void fail(const std::string& message) { throw CliError{message}; }

void check(gapkit_status status) {
  if (status != GAPKIT_OK) fail(gapkit_last_error());
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot open '" + path + "' for writing");
  out << content;
  if (!out) fail("write to '" + path + "' failed");
}

uint64_t budget_from_env() {
  const char* raw = std::getenv("GAPKIT_BUDGET");
  if (!raw || !*raw) return 0;  // library default
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0') fail("GAPKIT_BUDGET must be an unsigned integer");
  return v;
}

std::string owned(char* s) {
  std::string out = s ? s : "";
  gapkit_string_free(s);
  return out;
}

struct CircuitHandle {
  gapkit_circuit* ptr = nullptr;
  ~CircuitHandle() { gapkit_circuit_free(ptr); }
};
struct GraphHandle {
  gapkit_graph* ptr = nullptr;
  ~GraphHandle() { gapkit_graph_free(ptr); }
};
struct FamilyHandle {
  gapkit_hash_family* ptr = nullptr;
  ~FamilyHandle() { gapkit_hash_family_free(ptr); }
};
struct ThresholdHandle {
  gapkit_threshold* ptr = nullptr;
  ~ThresholdHandle() { gapkit_threshold_free(ptr); }
};
struct ReportHandle {
  gapkit_gap_report* ptr = nullptr;
  ~ReportHandle() { gapkit_gap_report_free(ptr); }
};

void load_circuit(const std::string& path, CircuitHandle& c) {
  check(gapkit_circuit_parse(read_file(path).c_str(), &c.ptr));
}

void load_graph(const std::string& path, GraphHandle& g) {
  check(gapkit_graph_parse(read_file(path).c_str(), &g.ptr));
}

const char* class_name(int circuit_class) {
  switch (circuit_class) {
    case GAPKIT_CLASS_MONOTONE: return "monotone";
    case GAPKIT_CLASS_ANTIMONOTONE: return "antimonotone";
    default: return "general";
  }
}

int print_report(gapkit_gap_report* report) {
  char* text = nullptr;
  check(gapkit_gap_report_text(report, &text));
  std::cout << owned(text);
  const bool ok = gapkit_gap_report_claim1(report) && gapkit_gap_report_claim2(report);
  return ok ? kExitOk : kExitClaimViolated;
}

int run(int argc, char** argv) {
  CLI::App app{"reduction toolkit for weighted circuit satisfiability"};
  app.require_subcommand(1);
  const uint64_t budget = budget_from_env();

  // analyze
  std::string an_circuit;
  auto* analyze = app.add_subcommand("analyze", "depth, weft, class and size of a circuit");
  analyze->add_option("--circuit", an_circuit, "circuit file")->required();

  // solve-circuit
  std::string sc_circuit;
  bool sc_min = false, sc_max = false;
  int64_t sc_k = -1;
  auto* solve_circuit = app.add_subcommand("solve-circuit", "exact weighted satisfiability");
  solve_circuit->add_option("--circuit", sc_circuit, "circuit file")->required();
  solve_circuit->add_flag("--min", sc_min, "minimize the satisfying weight");
  solve_circuit->add_flag("--max", sc_max, "maximize the satisfying weight");
  solve_circuit->add_option("--k", sc_k, "search weight-k assignments only");

  // amplify
  std::string am_circuit, am_rho = "1", am_style = "large", am_out;
  uint32_t am_k = 0;
  uint64_t am_seed = 0;
  auto* amplify = app.add_subcommand("amplify", "monotone gap amplification");
  amplify->add_option("--circuit", am_circuit, "monotone circuit file")->required();
  amplify->add_option("--k", am_k, "target weight")->required();
  amplify->add_option("--rho", am_rho, "ratio function, e.g. '1', 'k', '2*k^(1/2)'");
  amplify->add_option("--gate-style", am_style, "large | binary")
      ->check(CLI::IsMember({"large", "binary"}));
  amplify->add_option("--seed", am_seed, "hash family sampling seed");
  amplify->add_option("--out", am_out, "output circuit file")->required();

  // verify-gap-monotone
  std::string vm_circuit, vm_rho = "1";
  uint32_t vm_k = 0;
  uint64_t vm_seed = 0;
  auto* verify_mon = app.add_subcommand("verify-gap-monotone",
                                        "check both amplification claims by brute force");
  verify_mon->add_option("--circuit", vm_circuit, "monotone circuit file")->required();
  verify_mon->add_option("--k", vm_k, "target weight")->required();
  verify_mon->add_option("--rho", vm_rho, "ratio function");
  verify_mon->add_option("--seed", vm_seed, "hash family sampling seed");

  // clique-circuit
  std::string cc_graph, cc_out;
  auto* clique_circuit = app.add_subcommand("clique-circuit",
                                            "weft-1 circuit for multicolored clique");
  clique_circuit->add_option("--graph", cc_graph, "colored graph file")->required();
  clique_circuit->add_option("--out", cc_out, "output circuit file")->required();

  // hitting-set-circuit
  std::string hs_sets, hs_out;
  auto* hitting_set = app.add_subcommand("hitting-set-circuit",
                                         "depth-2 monotone circuit for hitting set");
  hitting_set->add_option("--sets", hs_sets, "set system file")->required();
  hitting_set->add_option("--out", hs_out, "output circuit file")->required();

  // reduce-clique
  std::string rc_graph, rc_rho = "1", rc_out, rc_emit;
  uint32_t rc_k = 0;
  uint64_t rc_seed = 0;
  auto* reduce = app.add_subcommand("reduce-clique", "clique to threshold set reduction");
  reduce->add_option("--graph", rc_graph, "graph file")->required();
  reduce->add_option("--k", rc_k, "clique size")->required();
  reduce->add_option("--rho", rc_rho, "ratio function");
  reduce->add_option("--seed", rc_seed, "seed recorded in the instance header");
  reduce->add_option("--out", rc_out, "output instance file")->required();
  reduce->add_option("--emit-circuit", rc_emit, "also write the antimonotone circuit here");

  // solve-threshold
  std::string st_instance;
  bool st_structured = false, st_generic = false;
  auto* solve_threshold = app.add_subcommand("solve-threshold", "exact maximum feasible subset");
  solve_threshold->add_option("--instance", st_instance, "threshold instance file")->required();
  solve_threshold->add_flag("--structured", st_structured, "group-wise branch and bound");
  solve_threshold->add_flag("--generic", st_generic, "plain subset enumeration");

  // verify-gap-threshold
  std::string vt_graph, vt_rho = "1";
  uint32_t vt_k = 0;
  auto* verify_thr = app.add_subcommand("verify-gap-threshold",
                                        "check both reduction claims exactly");
  verify_thr->add_option("--graph", vt_graph, "graph file")->required();
  verify_thr->add_option("--k", vt_k, "clique size")->required();
  verify_thr->add_option("--rho", vt_rho, "ratio function");

  // hash-family
  uint32_t hf_n = 0, hf_kprime = 0;
  uint64_t hf_seed = 0;
  std::string hf_out, hf_in;
  bool hf_verify = false;
  auto* hash_family = app.add_subcommand("hash-family",
                                         "build or verify a perfect hash family");
  hash_family->add_option("--n", hf_n, "domain size");
  hash_family->add_option("--kprime", hf_kprime, "range size");
  hash_family->add_option("--seed", hf_seed, "sampling seed");
  hash_family->add_option("--out", hf_out, "write the family dump here");
  hash_family->add_option("--in", hf_in, "verify an existing dump instead of building");
  hash_family->add_flag("--verify", hf_verify, "run the exhaustive perfectness check");

  // rs
  uint32_t rs_ell = 0, rs_k = 0, rs_D = 0;
  std::string rs_action;
  std::vector<std::string> rs_args;
  auto* rs = app.add_subcommand("rs", "Reed-Solomon encode / erasure recovery");
  rs->add_option("--ell", rs_ell, "field degree (q = 2^ell)")->required();
  rs->add_option("--k", rs_k, "message length")->required();
  rs->add_option("--D", rs_D, "codeword length")->required();
  rs->add_option("action", rs_action, "encode | recover")->required();
  rs->add_option("args", rs_args, "encode: k symbols; recover: pos:value pairs (1-based)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  if (analyze->parsed()) {
    CircuitHandle c;
    load_circuit(an_circuit, c);
    gapkit_metrics m;
    check(gapkit_circuit_metrics(c.ptr, &m));
    std::cout << "depth=" << m.depth << "\n"
              << "weft=" << m.weft << "\n"
              << "class=" << class_name(m.circuit_class) << "\n"
              << "nodes=" << m.node_count << "\n"
              << "inputs=" << gapkit_circuit_input_count(c.ptr) << "\n"
              << "gates=" << gapkit_circuit_gate_count(c.ptr) << "\n";
    return kExitOk;
  }

  if (solve_circuit->parsed()) {
    if (static_cast<int>(sc_min) + static_cast<int>(sc_max) + static_cast<int>(sc_k >= 0) != 1)
      fail("solve-circuit needs exactly one of --min, --max, --k K");
    CircuitHandle c;
    load_circuit(sc_circuit, c);
    int mode = sc_min ? GAPKIT_SOLVE_MIN : sc_max ? GAPKIT_SOLVE_MAX : GAPKIT_SOLVE_WEIGHT_K;
    int found = 0;
    uint32_t weight = 0;
    char* witness = nullptr;
    check(gapkit_circuit_solve(c.ptr, mode, static_cast<uint32_t>(sc_k < 0 ? 0 : sc_k), budget,
                               &found, &weight, &witness));
    std::string w = owned(witness);
    std::cout << "found=" << (found ? "true" : "false") << "\n";
    if (found) {
      std::cout << "weight=" << weight << "\n"
                << "witness=" << w << "\n";
      if (weight == 0) std::cout << "note=weight-0 solution; the cost domain starts at 1\n";
    }
    return kExitOk;
  }

  if (amplify->parsed()) {
    CircuitHandle c, amplified;
    load_circuit(am_circuit, c);
    const int style = am_style == "binary" ? GAPKIT_GATES_BINARY : GAPKIT_GATES_LARGE;
    check(gapkit_amplify(c.ptr, am_k, am_rho.c_str(), style, am_seed, budget, &amplified.ptr));
    char* text = nullptr;
    check(gapkit_circuit_serialize(amplified.ptr, &text));
    write_file(am_out, owned(text));
    uint64_t k_prime = 0;
    check(gapkit_compute_k_prime(am_k, am_rho.c_str(), &k_prime));
    std::cout << "kprime=" << k_prime << "\n"
              << "inputs=" << gapkit_circuit_input_count(amplified.ptr) << "\n"
              << "gates=" << gapkit_circuit_gate_count(amplified.ptr) << "\n"
              << "out=" << am_out << "\n";
    return kExitOk;
  }

  if (verify_mon->parsed()) {
    CircuitHandle c;
    load_circuit(vm_circuit, c);
    ReportHandle report;
    check(gapkit_verify_gap_monotone(c.ptr, vm_k, vm_rho.c_str(), vm_seed, budget, &report.ptr));
    return print_report(report.ptr);
  }

  if (clique_circuit->parsed()) {
    GraphHandle g;
    load_graph(cc_graph, g);
    CircuitHandle c;
    check(gapkit_clique_circuit(g.ptr, &c.ptr));
    char* text = nullptr;
    check(gapkit_circuit_serialize(c.ptr, &text));
    write_file(cc_out, owned(text));
    std::cout << "inputs=" << gapkit_circuit_input_count(c.ptr) << "\n"
              << "gates=" << gapkit_circuit_gate_count(c.ptr) << "\n"
              << "out=" << cc_out << "\n";
    return kExitOk;
  }

  if (hitting_set->parsed()) {
    CircuitHandle c;
    check(gapkit_hitting_set_circuit(read_file(hs_sets).c_str(), &c.ptr));
    char* text = nullptr;
    check(gapkit_circuit_serialize(c.ptr, &text));
    write_file(hs_out, owned(text));
    std::cout << "inputs=" << gapkit_circuit_input_count(c.ptr) << "\n"
              << "gates=" << gapkit_circuit_gate_count(c.ptr) << "\n"
              << "out=" << hs_out << "\n";
    return kExitOk;
  }

  if (reduce->parsed()) {
    GraphHandle g;
    load_graph(rc_graph, g);
    ThresholdHandle t;
    check(gapkit_reduce_clique(g.ptr, rc_k, rc_rho.c_str(), rc_seed, &t.ptr));
    char* text = nullptr;
    check(gapkit_threshold_serialize(t.ptr, &text));
    write_file(rc_out, owned(text));
    int has_meta = 0;
    uint32_t mk = 0, mD = 0, mell = 0;
    uint64_t mq = 0;
    check(gapkit_threshold_meta(t.ptr, &has_meta, &mk, &mD, &mell, &mq));
    std::cout << "D=" << mD << "\n"
              << "ell=" << mell << "\n"
              << "q=" << mq << "\n"
              << "universe=" << gapkit_threshold_universe(t.ptr) << "\n"
              << "sets=" << gapkit_threshold_set_count(t.ptr) << "\n"
              << "out=" << rc_out << "\n";
    if (!rc_emit.empty()) {
      CircuitHandle c;
      check(gapkit_threshold_circuit(t.ptr, &c.ptr));
      char* ctext = nullptr;
      check(gapkit_circuit_serialize(c.ptr, &ctext));
      write_file(rc_emit, owned(ctext));
      std::cout << "circuit=" << rc_emit << "\n";
    }
    return kExitOk;
  }

  if (solve_threshold->parsed()) {
    if (st_structured && st_generic) fail("choose at most one of --structured, --generic");
    ThresholdHandle t;
    check(gapkit_threshold_parse(read_file(st_instance).c_str(), &t.ptr));
    int mode = st_structured ? GAPKIT_THRESHOLD_STRUCTURED
                             : st_generic ? GAPKIT_THRESHOLD_GENERIC : GAPKIT_THRESHOLD_AUTO;
    int used = 0;
    uint64_t size = 0;
    char* witness = nullptr;
    check(gapkit_threshold_solve(t.ptr, mode, budget, &used, &size, &witness));
    std::cout << "strategy=" << (used == GAPKIT_THRESHOLD_STRUCTURED ? "structured" : "generic")
              << "\n"
              << "size=" << size << "\n"
              << "witness=" << owned(witness) << "\n";
    return kExitOk;
  }

  if (verify_thr->parsed()) {
    GraphHandle g;
    load_graph(vt_graph, g);
    ReportHandle report;
    check(gapkit_verify_gap_threshold(g.ptr, vt_k, vt_rho.c_str(), budget, &report.ptr));
    return print_report(report.ptr);
  }

  if (hash_family->parsed()) {
    FamilyHandle h;
    if (!hf_in.empty()) {
      check(gapkit_hash_family_parse(read_file(hf_in).c_str(), &h.ptr));
    } else {
      if (hf_n == 0 || hf_kprime == 0) fail("hash-family needs --n and --kprime (or --in FILE)");
      check(gapkit_hash_family_build(hf_n, hf_kprime, hf_seed, budget, &h.ptr));
    }
    std::cout << "size=" << gapkit_hash_family_size(h.ptr) << "\n";
    if (hf_verify || !hf_in.empty()) {
      int perfect = 0;
      check(gapkit_hash_family_verify(h.ptr, budget, &perfect));
      std::cout << "perfect=" << (perfect ? "true" : "false") << "\n";
    }
    char* text = nullptr;
    check(gapkit_hash_family_dump(h.ptr, &text));
    if (hf_out.empty()) {
      std::cout << owned(text);
    } else {
      write_file(hf_out, owned(text));
      std::cout << "out=" << hf_out << "\n";
    }
    return kExitOk;
  }

  if (rs->parsed()) {
    if (rs_action == "encode") {
      if (rs_args.size() != rs_k) fail("encode needs exactly k message symbols");
      std::vector<uint32_t> message;
      for (const auto& a : rs_args) {
        char* end = nullptr;
        unsigned long v = std::strtoul(a.c_str(), &end, 10);
        if (end == a.c_str() || *end != '\0') fail("bad message symbol '" + a + "'");
        message.push_back(static_cast<uint32_t>(v));
      }
      std::vector<uint32_t> codeword(rs_D, 0);
      check(gapkit_rs_encode(rs_ell, rs_k, rs_D, message.data(), codeword.data()));
      std::cout << "codeword=";
      for (size_t i = 0; i < codeword.size(); ++i) std::cout << (i ? "," : "") << codeword[i];
      std::cout << "\n";
      return kExitOk;
    }
    if (rs_action == "recover") {
      std::vector<uint32_t> positions, values;
      for (const auto& a : rs_args) {
        auto colon = a.find(':');
        if (colon == std::string::npos) fail("recover arguments look like pos:value, got '" + a + "'");
        try {
          positions.push_back(static_cast<uint32_t>(std::stoul(a.substr(0, colon))));
          values.push_back(static_cast<uint32_t>(std::stoul(a.substr(colon + 1))));
        } catch (...) {
          fail("bad pos:value pair '" + a + "'");
        }
      }
      std::vector<uint32_t> message(rs_k, 0);
      check(gapkit_rs_recover(rs_ell, rs_k, rs_D, static_cast<uint32_t>(positions.size()),
                              positions.data(), values.data(), message.data()));
      std::cout << "message=";
      for (size_t i = 0; i < message.size(); ++i) std::cout << (i ? "," : "") << message[i];
      std::cout << "\n";
      return kExitOk;
    }
    fail("rs action must be 'encode' or 'recover'");
  }

  fail("no subcommand handled");  // unreachable: require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
