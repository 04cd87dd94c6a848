#include "threshold.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "builder.hpp"
#include "error.hpp"
#include "reed_solomon.hpp"

namespace gapkit {

uint64_t ReductionLayout::vec_index(std::span<const uint32_t> digits) const {
  if (digits.size() != k) throw_invalid("digit vector must have k entries");
  uint64_t v = 0;
  for (uint32_t d : digits) {
    if (d >= q) throw_invalid("digit out of range [0, q)");
    v = v * q + d;
  }
  return v;
}

std::vector<uint32_t> ReductionLayout::digits_of(uint64_t vertex) const {
  if (vertex >= n) throw_invalid("vertex index out of range [0, n)");
  std::vector<uint32_t> digits(k);
  for (uint32_t i = k; i-- > 0;) {
    digits[i] = static_cast<uint32_t>(vertex % q);
    vertex /= q;
  }
  return digits;
}

uint64_t compute_code_length(uint32_t k, const RatioSpec& rho, uint64_t cap) {
  return rho.min_code_length(k, cap);
}

std::pair<ColoredGraph, ReductionLayout> pad_graph(const ColoredGraph& g, uint32_t k, uint32_t D) {
  if (k == 0) throw_invalid("k must be positive");
  if (D == 0) throw_invalid("D must be positive");
  ReductionLayout layout;
  layout.k = k;
  layout.D = D;
  for (uint32_t ell = 1;; ++ell) {
    const uint64_t q = uint64_t{1} << ell;
    if (static_cast<uint64_t>(k) * ell > 20)
      throw_budget("padded vertex count 2^(k*ell) exceeds the desk-scale limit");
    uint64_t n = 1;
    for (uint32_t i = 0; i < k; ++i) n *= q;
    if (q > D && n >= g.vertex_count()) {  // q > D is exactly n > D^k
      layout.ell = ell;
      layout.q = q;
      layout.n = n;
      break;
    }
  }
  ColoredGraph padded = g.padded(static_cast<uint32_t>(layout.n - g.vertex_count()));
  return {std::move(padded), layout};
}

namespace {

void check_reduced_shape(const ThresholdSetInstance& inst) {
  if (!inst.meta) throw_invalid("instance carries no reduction metadata");
  const ReductionLayout& L = inst.meta->layout;
  uint64_t expect_n = 1;
  for (uint32_t i = 0; i < L.k; ++i) expect_n *= L.q;
  if (L.q != uint64_t{1} << L.ell || L.n != expect_n || inst.universe != L.universe())
    throw_invalid("reduction metadata is inconsistent with the universe");
  if (inst.sets.size() < L.D) throw_invalid("reduced instance is missing its group sets");
  for (uint32_t d = 1; d <= L.D; ++d) {
    const WeightedSet& s = inst.sets[d - 1];
    if (s.weight != 1 || s.members.size() != L.n)
      throw_invalid("reduced instance group set " + std::to_string(d) + " has the wrong shape");
    for (uint64_t i = 0; i < L.n; ++i)
      if (s.members[i] != L.element(d, i))
        throw_invalid("reduced instance group set " + std::to_string(d) + " has the wrong members");
  }
}

}  // namespace

ThresholdSetInstance reduce_clique_to_threshold(const ColoredGraph& g, uint32_t k,
                                                const RatioSpec& rho, const ReduceOptions& opt) {
  if (k < 2) throw_invalid("reduction requires k >= 2");
  const uint64_t D64 = compute_code_length(k, rho, opt.code_length_cap);
  if (D64 > 64) throw_budget("D = " + std::to_string(D64) + " is beyond desk scale");
  const uint32_t D = static_cast<uint32_t>(D64);

  auto [padded, layout] = pad_graph(g, k, D);
  if (layout.universe() > opt.universe_budget)
    throw_budget("reduced universe of " + std::to_string(layout.universe()) +
                 " elements exceeds the budget");

  ThresholdSetInstance inst;
  inst.universe = layout.universe();
  inst.meta = ReductionMeta{layout, opt.seed, g.vertex_count(), 0};

  // Group sets S_d, weight 1.
  for (uint32_t d = 1; d <= D; ++d) {
    WeightedSet s;
    s.weight = 1;
    s.members.reserve(layout.n);
    for (uint64_t i = 0; i < layout.n; ++i) s.members.push_back(layout.element(d, i));
    inst.sets.push_back(std::move(s));
  }

  // Codeword table: row v, 1-based column j.
  RSSpec rs(layout.ell, k, D);
  const uint64_t n = layout.n;
  std::vector<std::vector<uint32_t>> code(n);
  for (uint64_t v = 0; v < n; ++v) code[v] = rs_encode(rs, layout.digits_of(v));

  uint64_t member_entries = 0;
  std::set<std::vector<uint64_t>> seen;
  uint64_t duplicates = 0;

  // Free coordinates besides rows a and b enumerate q^(k-2) vectors.
  std::vector<uint32_t> digits(k);
  std::vector<uint32_t> columns(k);
  for (uint32_t i = 0; i < k; ++i) columns[i] = i + 1;
  bool more_columns = true;
  while (more_columns) {
    for (uint32_t a = 1; a <= k; ++a) {
      for (uint32_t b = a + 1; b <= k; ++b) {
        for (uint64_t u = 0; u < n; ++u) {
          for (uint64_t v = 0; v < n; ++v) {
            if (u != v && padded.adjacent(static_cast<uint32_t>(u), static_cast<uint32_t>(v)))
              continue;
            WeightedSet s;
            s.weight = k - 1;
            for (uint32_t j : columns) {
              std::fill(digits.begin(), digits.end(), 0);
              digits[a - 1] = code[u][j - 1];
              digits[b - 1] = code[v][j - 1];
              // Iterate the free coordinates in lexicographic order.
              while (true) {
                s.members.push_back(layout.element(j, layout.vec_index(digits)));
                uint32_t i = k;
                bool carried = false;
                while (i-- > 0) {
                  if (i == a - 1 || i == b - 1) continue;
                  if (++digits[i] < layout.q) {
                    carried = true;
                    break;
                  }
                  digits[i] = 0;
                }
                if (!carried) break;
              }
            }
            std::sort(s.members.begin(), s.members.end());
            member_entries += s.members.size();
            if (member_entries > opt.member_budget)
              throw_budget("reduced instance exceeds the member budget");
            if (seen.insert(s.members).second)
              inst.sets.push_back(std::move(s));
            else
              ++duplicates;
          }
        }
      }
    }
    // Next k-subset of {1..D} in lexicographic order.
    more_columns = false;
    for (uint32_t i = k; i-- > 0;) {
      if (columns[i] + (k - i) <= D) {
        ++columns[i];
        for (uint32_t j = i + 1; j < k; ++j) columns[j] = columns[j - 1] + 1;
        more_columns = true;
        break;
      }
    }
  }
  inst.meta->duplicate_sets_dropped = duplicates;
  return inst;
}

bool is_feasible(const ThresholdSetInstance& inst, std::span<const uint64_t> elements) {
  std::vector<uint8_t> member(inst.universe, 0);
  for (uint64_t e : elements) {
    if (e >= inst.universe) throw_invalid("element out of the universe");
    member[e] = 1;
  }
  for (const WeightedSet& s : inst.sets) {
    uint64_t count = 0;
    for (uint64_t e : s.members)
      if (member[e] && ++count > s.weight) return false;
  }
  return true;
}

namespace {

struct IncidenceIndex {
  std::vector<uint64_t> weights;
  std::vector<std::vector<uint32_t>> element_sets;  // element -> set ids
  std::vector<uint64_t> counts;

  explicit IncidenceIndex(const ThresholdSetInstance& inst)
      : element_sets(inst.universe), counts(inst.sets.size(), 0) {
    weights.reserve(inst.sets.size());
    for (uint32_t sid = 0; sid < inst.sets.size(); ++sid) {
      weights.push_back(inst.sets[sid].weight);
      for (uint64_t e : inst.sets[sid].members)
        element_sets[e].push_back(sid);
    }
  }

  // Returns true and records the pick if no threshold is violated.
  bool add(uint64_t e) {
    const auto& sids = element_sets[e];
    for (size_t i = 0; i < sids.size(); ++i) {
      if (++counts[sids[i]] > weights[sids[i]]) {
        for (size_t j = 0; j <= i; ++j) --counts[sids[j]];
        return false;
      }
    }
    return true;
  }

  void remove(uint64_t e) {
    for (uint32_t sid : element_sets[e]) --counts[sid];
  }
};

struct BestSolution {
  uint64_t size = 0;
  std::vector<uint64_t> witness;
  bool any = false;

  void offer(const std::vector<uint64_t>& candidate) {
    if (!any || candidate.size() > size) {
      any = true;
      size = candidate.size();
      witness = candidate;
    }
  }
};

void solve_generic_rec(const ThresholdSetInstance& inst, IncidenceIndex& index, uint64_t next,
                       std::vector<uint64_t>& current, BestSolution& best, uint64_t& budget) {
  best.offer(current);
  if (next >= inst.universe) return;
  if (current.size() + (inst.universe - next) <= best.size) return;
  if (budget == 0) throw_budget("threshold solver budget exceeded");
  --budget;
  if (index.add(next)) {
    current.push_back(next);
    solve_generic_rec(inst, index, next + 1, current, best, budget);
    current.pop_back();
    index.remove(next);
  }
  solve_generic_rec(inst, index, next + 1, current, best, budget);
}

void solve_structured_rec(const ThresholdSetInstance& inst, const ReductionLayout& layout,
                          IncidenceIndex& index, uint32_t d, std::vector<uint64_t>& current,
                          BestSolution& best, uint64_t& budget) {
  if (d > layout.D) {
    best.offer(current);
    return;
  }
  if (current.size() + (layout.D - d + 1) <= best.size) return;
  for (uint64_t g = 0; g < layout.n; ++g) {
    if (budget == 0) throw_budget("threshold solver budget exceeded");
    --budget;
    const uint64_t e = layout.element(d, g);
    if (!index.add(e)) continue;
    current.push_back(e);
    solve_structured_rec(inst, layout, index, d + 1, current, best, budget);
    current.pop_back();
    index.remove(e);
  }
  solve_structured_rec(inst, layout, index, d + 1, current, best, budget);
}

}  // namespace

std::pair<uint64_t, std::vector<uint64_t>> max_solution(const ThresholdSetInstance& inst,
                                                        ThresholdSolveMode mode,
                                                        const SolveOptions& opt) {
  if (mode == ThresholdSolveMode::Auto)
    mode = inst.meta ? ThresholdSolveMode::Structured : ThresholdSolveMode::Generic;

  IncidenceIndex index(inst);
  BestSolution best;
  std::vector<uint64_t> current;
  uint64_t budget = opt.budget;

  if (mode == ThresholdSolveMode::Generic) {
    if (inst.universe > 24)
      throw_budget("generic threshold solver handles at most 24 elements; use the structured mode");
    solve_generic_rec(inst, index, 0, current, best, budget);
  } else {
    check_reduced_shape(inst);
    solve_structured_rec(inst, inst.meta->layout, index, 1, current, best, budget);
  }
  return {best.size, std::move(best.witness)};
}

Circuit emit_antimonotone_circuit(const ThresholdSetInstance& inst) {
  check_reduced_shape(inst);
  const ReductionLayout& L = inst.meta->layout;
  if (L.D * L.n * (L.n - 1) / 2 > (uint64_t{1} << 22))
    throw_budget("antimonotone emission: group pair clauses exceed the gate budget");

  std::vector<std::string> names;
  names.reserve(inst.universe);
  for (uint32_t d = 1; d <= L.D; ++d)
    for (uint64_t g = 0; g < L.n; ++g)
      names.push_back("s" + std::to_string(d) + "_" + std::to_string(g));
  CircuitBuilder builder(std::move(names));

  std::vector<CircuitBuilder::Ref> negated(inst.universe);
  for (uint64_t e = 0; e < inst.universe; ++e)
    negated[e] = builder.gate(GateKind::Not, {builder.input(static_cast<uint32_t>(e))});

  std::vector<CircuitBuilder::Ref> clauses;
  // At most one chosen element per group.
  for (uint32_t d = 1; d <= L.D; ++d)
    for (uint64_t g1 = 0; g1 < L.n; ++g1)
      for (uint64_t g2 = g1 + 1; g2 < L.n; ++g2)
        clauses.push_back(builder.gate(
            GateKind::Or, {negated[L.element(d, g1)], negated[L.element(d, g2)]}));

  // For every constraint set: some column of it is untouched.
  for (size_t sid = L.D; sid < inst.sets.size(); ++sid) {
    const WeightedSet& s = inst.sets[sid];
    std::vector<std::vector<CircuitBuilder::Ref>> columns(L.D + 1);
    for (uint64_t e : s.members) columns[e / L.n + 1].push_back(negated[e]);
    std::vector<CircuitBuilder::Ref> column_terms;
    for (uint32_t j = 1; j <= L.D; ++j)
      if (!columns[j].empty())
        column_terms.push_back(builder.gate(GateKind::And, std::move(columns[j])));
    clauses.push_back(builder.gate(GateKind::Or, std::move(column_terms)));
  }

  return builder.finish(builder.gate(GateKind::And, std::move(clauses)));
}

GapReport verify_gap_threshold(const ColoredGraph& g, uint32_t k, const RatioSpec& rho,
                               const ThresholdVerifyOptions& opt) {
  if (k < 2) throw_invalid("gap verification requires k >= 2");
  const uint64_t D = compute_code_length(k, rho, opt.reduce.code_length_cap);

  GapReport report;
  report.kind = "threshold-gap";
  report.target_label = "D";
  report.k = k;
  report.target_bound = D;
  report.extras.emplace_back("rho", rho.to_string());

  SolveOptions clique_opt{opt.clique_budget};
  auto clique = find_k_clique(g, k, clique_opt);
  report.source_satisfiable = clique.has_value();
  if (clique) {
    report.opt_source = k;
  } else {
    for (uint32_t j = std::min(k - 1, g.vertex_count()); j >= 1; --j) {
      if (find_k_clique(g, j, clique_opt)) {
        report.opt_source = j;
        break;
      }
    }
  }

  ThresholdSetInstance inst = reduce_clique_to_threshold(g, k, rho, opt.reduce);
  const ReductionLayout& L = inst.meta->layout;
  report.extras.emplace_back("ell", std::to_string(L.ell));
  report.extras.emplace_back("q", std::to_string(L.q));
  report.extras.emplace_back("universe", std::to_string(inst.universe));
  report.extras.emplace_back("sets", std::to_string(inst.sets.size()));

  auto [opt_size, witness] = max_solution(inst, ThresholdSolveMode::Structured,
                                          SolveOptions{opt.solve_budget});
  report.opt_target = opt_size;

  if (clique) {
    // The explicit solution encoded by the clique: column j holds the j-th
    // codeword symbols of the clique vertices.
    RSSpec rs(L.ell, k, static_cast<uint32_t>(D));
    std::vector<std::vector<uint32_t>> rows;
    rows.reserve(k);
    for (uint32_t v : *clique) rows.push_back(rs_encode(rs, L.digits_of(v)));
    std::vector<uint64_t> T;
    std::vector<uint32_t> digits(k);
    for (uint32_t j = 1; j <= L.D; ++j) {
      for (uint32_t i = 0; i < k; ++i) digits[i] = rows[i][j - 1];
      T.push_back(L.element(j, L.vec_index(digits)));
    }
    std::sort(T.begin(), T.end());
    const bool witness_ok = T.size() == D && is_feasible(inst, T);
    report.claim1_holds = witness_ok && opt_size >= D;
    if (report.claim1_holds) {
      std::string text;
      for (size_t i = 0; i < T.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(T[i]);
      }
      report.claim1_witness = text;
    }
    report.claim2_holds = true;  // vacuous
  } else {
    report.claim1_holds = true;  // vacuous
    report.claim2_holds = opt_size < k;
    if (!report.claim2_holds) {
      std::string text;
      for (size_t i = 0; i < witness.size(); ++i) {
        if (i) text += ",";
        text += std::to_string(witness[i]);
      }
      report.claim2_counterexample = text;
    }
  }
  return report;
}

ThresholdSetInstance parse_threshold(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  ThresholdSetInstance inst;
  bool saw_universe = false;
  std::optional<ReductionLayout> layout;
  uint64_t seed = 0;
  uint32_t source_vertices = 0;
  uint64_t duplicates = 0;
  bool saw_meta = false;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fail = [&](const std::string& what) -> void {
      throw_parse("line " + std::to_string(lineno) + ": " + what);
    };
    if (auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream cs(line.substr(hash + 1));
      std::string word;
      if (cs >> word) {
        if (word == "reduction") {
          ReductionLayout L;
          uint64_t q = 0;
          while (cs >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) fail("malformed reduction header field '" + word + "'");
            uint64_t value = 0;
            try {
              value = std::stoull(word.substr(eq + 1));
            } catch (...) {
              fail("malformed reduction header field '" + word + "'");
            }
            const std::string key = word.substr(0, eq);
            if (key == "k") L.k = static_cast<uint32_t>(value);
            else if (key == "D") L.D = static_cast<uint32_t>(value);
            else if (key == "ell") L.ell = static_cast<uint32_t>(value);
            else if (key == "q") q = value;
            else if (key == "seed") seed = value;
            else fail("unknown reduction header field '" + key + "'");
          }
          if (L.k == 0 || L.D == 0 || L.ell == 0) fail("incomplete reduction header");
          L.q = uint64_t{1} << L.ell;
          if (q != 0 && q != L.q) fail("reduction header q disagrees with ell");
          L.n = 1;
          for (uint32_t i = 0; i < L.k; ++i) L.n *= L.q;
          layout = L;
          saw_meta = true;
        } else if (word == "source") {
          while (cs >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = word.substr(0, eq);
            uint64_t value = 0;
            try {
              value = std::stoull(word.substr(eq + 1));
            } catch (...) {
              continue;
            }
            if (key == "vertices") source_vertices = static_cast<uint32_t>(value);
            if (key == "duplicates-dropped") duplicates = value;
          }
        }
      }
      line.resize(hash);
    }
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;
    if (head == "universe") {
      if (saw_universe) fail("duplicate 'universe' line");
      int64_t n = -1;
      if (!(ls >> n) || n < 1) fail("universe size must be positive");
      if (n > (int64_t{1} << 24)) fail("universe too large");
      inst.universe = static_cast<uint64_t>(n);
      saw_universe = true;
      continue;
    }
    if (head != "set") fail("expected 'set', got '" + head + "'");
    if (!saw_universe) fail("'universe' must precede sets");
    WeightedSet s;
    int64_t w = -1;
    if (!(ls >> w) || w < 1) fail("set weight must be a positive integer");
    s.weight = static_cast<uint64_t>(w);
    int64_t e;
    while (ls >> e) {
      if (e < 0 || static_cast<uint64_t>(e) >= inst.universe) fail("element outside the universe");
      s.members.push_back(static_cast<uint64_t>(e));
    }
    if (!ls.eof()) fail("malformed element");
    if (s.members.empty()) fail("set with no members");
    std::sort(s.members.begin(), s.members.end());
    if (std::adjacent_find(s.members.begin(), s.members.end()) != s.members.end())
      fail("duplicate element in set");
    inst.sets.push_back(std::move(s));
  }
  if (!saw_universe) throw_parse("threshold instance: missing 'universe' line");
  if (saw_meta) {
    inst.meta = ReductionMeta{*layout, seed, source_vertices, duplicates};
    check_reduced_shape(inst);
  }
  return inst;
}

std::string serialize_threshold(const ThresholdSetInstance& inst) {
  std::string out;
  if (inst.meta) {
    const ReductionLayout& L = inst.meta->layout;
    out += "# reduction k=" + std::to_string(L.k) + " D=" + std::to_string(L.D) +
           " ell=" + std::to_string(L.ell) + " q=" + std::to_string(L.q) +
           " seed=" + std::to_string(inst.meta->seed) + "\n";
    out += "# source vertices=" + std::to_string(inst.meta->source_vertices) +
           " duplicates-dropped=" + std::to_string(inst.meta->duplicate_sets_dropped) + "\n";
  }
  out += "universe " + std::to_string(inst.universe) + "\n";
  for (const WeightedSet& s : inst.sets) {
    out += "set " + std::to_string(s.weight);
    for (uint64_t e : s.members) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

}  // namespace gapkit
