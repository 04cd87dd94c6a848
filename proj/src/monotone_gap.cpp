#include "monotone_gap.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "builder.hpp"
#include "error.hpp"

namespace gapkit {

uint64_t compute_k_prime(uint32_t k, const RatioSpec& rho) { return rho.k_prime(k); }

namespace {

// Copy of `c` with inputs outside `alive` fixed to 0 and constants
// propagated away.  Returns kFalse when the restriction is identically 0.
CircuitBuilder::Ref instantiate(const Circuit& c, uint64_t alive, CircuitBuilder& builder,
                                std::vector<CircuitBuilder::Ref>& refs) {
  const size_t n = c.inputs().size();
  refs.resize(c.node_count());
  for (size_t i = 0; i < n; ++i)
    refs[i] = (alive >> i) & 1 ? builder.input(static_cast<uint32_t>(i)) : CircuitBuilder::kFalse;
  for (size_t gi = 0; gi < c.gates().size(); ++gi) {
    const Gate& g = c.gates()[gi];
    std::vector<CircuitBuilder::Ref> ops;
    ops.reserve(g.operands.size());
    for (uint32_t op : g.operands) ops.push_back(refs[op]);
    refs[n + gi] = builder.gate(g.kind, std::move(ops));
  }
  return refs[c.output()];
}

// All subsets of {1..k'} of size <= k, as value bitmasks.
std::vector<uint64_t> range_subsets(uint32_t k_prime, uint32_t k) {
  std::vector<uint64_t> masks;
  masks.push_back(0);
  // Depth-first enumeration; order is irrelevant to the result (terms are
  // deduplicated downstream).
  struct Frame {
    uint64_t mask;
    uint32_t next;
    uint32_t size;
  };
  std::vector<Frame> frames{{0, 0, 0}};
  while (!frames.empty()) {
    Frame f = frames.back();
    frames.pop_back();
    if (f.size == k) continue;
    for (uint32_t v = f.next; v < k_prime; ++v) {
      uint64_t mask = f.mask | (uint64_t{1} << v);
      masks.push_back(mask);
      frames.push_back({mask, v + 1, f.size + 1});
    }
  }
  return masks;
}

}  // namespace

Circuit amplify(const Circuit& c, uint32_t k, const RatioSpec& rho, const AmplifyOptions& opt) {
  const auto m = metrics(c);
  if (m.circuit_class != CircuitClass::Monotone)
    throw_invalid("amplification requires a monotone circuit");
  const uint32_t n = static_cast<uint32_t>(c.inputs().size());
  if (n > 64) throw_invalid("amplification supports at most 64 inputs");
  if (k == 0 || k > n) throw_invalid("amplification requires 1 <= k <= n");

  const uint64_t k_prime64 = compute_k_prime(k, rho);
  if (k_prime64 > n)
    throw_invalid("k' = " + std::to_string(k_prime64) + " exceeds the input count " +
                  std::to_string(n) + "; no weight-k' assignments exist at this scale");
  const uint32_t k_prime = static_cast<uint32_t>(k_prime64);

  HashFamily family = build_perfect_family(n, k_prime, opt.seed, opt.family);

  std::vector<std::string> header{
      "amplified circuit: n=" + std::to_string(n) + " k=" + std::to_string(k) +
      " kprime=" + std::to_string(k_prime) + " rho=" + rho.to_string() +
      " family_size=" + std::to_string(family.size()) + " seed=" + std::to_string(opt.seed)};

  CircuitBuilder builder(c.inputs());
  const auto subsets = range_subsets(k_prime, k);
  std::map<uint64_t, CircuitBuilder::Ref> term_cache;  // alive mask -> restricted copy
  std::vector<CircuitBuilder::Ref> scratch_refs;

  std::vector<CircuitBuilder::Ref> conjuncts;
  for (const auto& table : family.functions) {
    // Distinct alive-input masks h^{ -1 }(T) over the admissible T.
    std::vector<uint64_t> alive_masks;
    alive_masks.reserve(subsets.size());
    for (uint64_t t_mask : subsets) {
      uint64_t alive = 0;
      for (uint32_t i = 0; i < n; ++i)
        if ((t_mask >> (table[i] - 1)) & 1) alive |= uint64_t{1} << i;
      alive_masks.push_back(alive);
    }
    std::sort(alive_masks.begin(), alive_masks.end());
    alive_masks.erase(std::unique(alive_masks.begin(), alive_masks.end()), alive_masks.end());

    std::vector<CircuitBuilder::Ref> terms;
    for (uint64_t alive : alive_masks) {
      auto it = term_cache.find(alive);
      CircuitBuilder::Ref ref;
      if (it != term_cache.end()) {
        ref = it->second;
      } else {
        ref = instantiate(c, alive, builder, scratch_refs);
        term_cache.emplace(alive, ref);
      }
      if (ref != CircuitBuilder::kFalse) terms.push_back(ref);
      if (builder.gate_count() > opt.gate_budget) throw_budget("amplification gate budget exceeded");
    }

    if (terms.empty()) {
      // The restriction is unsatisfiable for every admissible T, so the
      // whole amplified function is identically 0.  A constant-free
      // monotone circuit cannot express that; the closest stand-in is a
      // conjunction forcing weight k'+1, which stays unsatisfiable at all
      // weights <= k'.  That stand-in only exists when k' < n.
      if (k_prime >= n)
        throw_construction(
            "amplified circuit is identically false and k' = n; a constant-free monotone "
            "circuit cannot express it");
      CircuitBuilder sentinel(c.inputs());
      std::vector<CircuitBuilder::Ref> all;
      for (uint32_t i = 0; i <= k_prime; ++i) all.push_back(sentinel.input(i));
      CircuitBuilder::Ref out = opt.style == GateStyle::Large
                                    ? sentinel.gate(GateKind::And, std::move(all))
                                    : sentinel.balanced(GateKind::And, std::move(all));
      return sentinel.finish(out, std::move(header));
    }

    CircuitBuilder::Ref disj = opt.style == GateStyle::Large
                                   ? builder.gate(GateKind::Or, std::move(terms))
                                   : builder.balanced(GateKind::Or, std::move(terms));
    conjuncts.push_back(disj);
  }

  CircuitBuilder::Ref out = opt.style == GateStyle::Large
                                ? builder.gate(GateKind::And, std::move(conjuncts))
                                : builder.balanced(GateKind::And, std::move(conjuncts));
  return builder.finish(out, std::move(header));
}

GapReport verify_gap_monotone(const Circuit& c, uint32_t k, const RatioSpec& rho,
                              const GapVerifyOptions& opt) {
  Circuit amplified = amplify(c, k, rho, opt.amplify);
  const uint64_t k_prime = compute_k_prime(k, rho);

  SolveOptions solve{opt.solve_budget};
  GapReport report;
  report.kind = "monotone-gap";
  report.target_label = "kprime";
  report.k = k;
  report.target_bound = k_prime;
  report.extras.emplace_back("rho", rho.to_string());
  report.extras.emplace_back("amplified_nodes", std::to_string(amplified.node_count()));

  auto source_opt = min_weight_sat(c, solve);
  auto target_opt = min_weight_sat(amplified, solve);
  if (source_opt) report.opt_source = source_opt->first;
  if (target_opt) report.opt_target = target_opt->first;

  auto source_witness = is_k_satisfiable(c, k, solve);
  report.source_satisfiable = source_witness.has_value();

  if (report.source_satisfiable) {
    auto target_witness = is_k_satisfiable(amplified, k, solve);
    report.claim1_holds = target_witness.has_value();
    if (target_witness) report.claim1_witness = amplified.witness_names(*target_witness);
    report.claim2_holds = true;  // vacuous
  } else {
    report.claim1_holds = true;  // vacuous
    report.claim2_holds = !target_opt || target_opt->first > k_prime;
    if (!report.claim2_holds)
      report.claim2_counterexample = amplified.witness_names(target_opt->second);
  }
  return report;
}

SetSystem parse_set_system(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  SetSystem system;
  bool saw_universe = false;
  uint32_t max_elem = 0;
  bool any_elem = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    auto fail = [&](const std::string& what) -> void {
      throw_parse("line " + std::to_string(lineno) + ": " + what);
    };
    if (head == "universe") {
      if (saw_universe || !system.sets.empty()) fail("'universe' must appear once, before sets");
      int64_t n = -1;
      if (!(ls >> n) || n < 1 || n > 4096) fail("universe size must be in [1, 4096]");
      system.universe = static_cast<uint32_t>(n);
      saw_universe = true;
      continue;
    }
    if (head != "set") fail("expected 'set', got '" + head + "'");
    std::vector<uint32_t> members;
    int64_t e;
    while (ls >> e) {
      if (e < 0 || e > 4096) fail("element out of range");
      members.push_back(static_cast<uint32_t>(e));
      max_elem = std::max(max_elem, members.back());
      any_elem = true;
    }
    if (!ls.eof()) fail("malformed element");
    if (members.empty()) fail("empty set");
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    system.sets.push_back(std::move(members));
  }
  if (system.sets.empty()) throw_parse("set system: no sets");
  if (!saw_universe) system.universe = any_elem ? max_elem + 1 : 0;
  for (const auto& s : system.sets)
    for (uint32_t e : s)
      if (e >= system.universe) throw_parse("set system: element " + std::to_string(e) +
                                            " outside universe of size " +
                                            std::to_string(system.universe));
  return system;
}

Circuit hitting_set_to_circuit(const SetSystem& system) {
  if (system.sets.empty()) throw_invalid("hitting set encoding needs at least one set");
  if (system.universe == 0) throw_invalid("hitting set encoding needs a nonempty universe");
  for (const auto& s : system.sets)
    if (s.empty()) throw_invalid("hitting set encoding rejects empty sets");

  std::vector<std::string> names;
  names.reserve(system.universe);
  for (uint32_t e = 0; e < system.universe; ++e) names.push_back("e" + std::to_string(e));
  CircuitBuilder builder(std::move(names));

  std::vector<CircuitBuilder::Ref> clauses;
  clauses.reserve(system.sets.size());
  for (const auto& s : system.sets) {
    std::vector<CircuitBuilder::Ref> members;
    members.reserve(s.size());
    for (uint32_t e : s) members.push_back(builder.input(e));
    clauses.push_back(builder.gate(GateKind::Or, std::move(members)));
  }
  return builder.finish(builder.gate(GateKind::And, std::move(clauses)));
}

Circuit multicolored_clique_to_circuit(const ColoredGraph& g) {
  if (!g.has_coloring()) throw_invalid("multicolored encoding requires a vertex coloring");
  const uint32_t k = g.color_count();
  if (k < 2) throw_invalid("multicolored encoding needs at least 2 color classes");
  for (auto [u, v] : g.edges())
    if (g.color_of(u) == g.color_of(v))
      throw_invalid("coloring is not proper: edge " + std::to_string(u) + "-" + std::to_string(v) +
                    " joins class " + std::to_string(g.color_of(u)));

  std::vector<std::string> names;
  names.reserve(g.vertex_count());
  for (uint32_t v = 0; v < g.vertex_count(); ++v) names.push_back("x" + std::to_string(v));
  CircuitBuilder builder(std::move(names));

  std::vector<CircuitBuilder::Ref> pair_terms;
  for (uint32_t i = 0; i < k; ++i) {
    for (uint32_t j = i + 1; j < k; ++j) {
      std::vector<CircuitBuilder::Ref> edge_terms;
      for (auto [u, v] : g.edges()) {
        uint32_t cu = g.color_of(u), cv = g.color_of(v);
        if ((cu == i && cv == j) || (cu == j && cv == i))
          edge_terms.push_back(builder.gate(GateKind::And, {builder.input(u), builder.input(v)}));
      }
      if (edge_terms.empty())
        throw_invalid("no edge joins color classes " + std::to_string(i) + " and " +
                      std::to_string(j));
      pair_terms.push_back(builder.gate(GateKind::Or, std::move(edge_terms)));
    }
  }
  return builder.finish(builder.balanced(GateKind::And, std::move(pair_terms)));
}

}  // namespace gapkit
