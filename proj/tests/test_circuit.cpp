#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "builder.hpp"
#include "circuit.hpp"
#include "error.hpp"
#include "testutil.hpp"

using namespace gapkit;

namespace {

Circuit parse(const std::string& text) { return parse_circuit(text); }

}  // namespace

TEST_CASE("minimal circuits parse") {
  auto wire = parse("inputs x1\noutput x1");
  CHECK(wire.inputs().size() == 1);
  CHECK(wire.gates().empty());
  CHECK(wire.output() == 0);

  auto and2 = parse("inputs x1 x2\ngate g AND x1 x2\noutput g");
  CHECK(and2.gates().size() == 1);
  CHECK(and2.gates()[0].kind == GateKind::And);
}

TEST_CASE("parser reports each error class") {
  CHECK_THROWS_WITH_AS(parse("inputs x1\ngate g AND x1\noutput g"),
                       doctest::Contains("at least 2 operands"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1 x2\ngate g NOT x1 x2\noutput g"),
                       doctest::Contains("exactly 1 operand"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1\ngate g OR x1 y\noutput g"),
                       doctest::Contains("undeclared operand 'y'"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1 x1\noutput x1"), doctest::Contains("duplicate identifier"),
                       Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1 x2\ngate x1 AND x1 x2\noutput x1"),
                       doctest::Contains("duplicate identifier"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1"), doctest::Contains("missing 'output'"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1\noutput x1\noutput x1"),
                       doctest::Contains("content after the output"), Error);
  CHECK_THROWS_WITH_AS(parse("gate g AND x1 x2\noutput g"), doctest::Contains("expected 'inputs'"),
                       Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1 x2\ngate g XAND x1 x2\noutput g"),
                       doctest::Contains("unknown gate kind"), Error);
  CHECK_THROWS_WITH_AS(parse("inputs x1 9z\noutput x1"), doctest::Contains("invalid identifier"),
                       Error);
  CHECK_THROWS_WITH_AS(parse(""), doctest::Contains("missing 'inputs'"), Error);
}

TEST_CASE("parse errors carry line and column positions") {
  try {
    parse("inputs x1 x2\ngate g OR x1 zz\noutput g");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    CHECK(std::string(e.what()).find("column 14") != std::string::npos);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  auto c = parse("# header\n\ninputs x1 x2  # trailing\ngate g OR x1 x2\n\noutput g\n");
  CHECK(c.inputs().size() == 2);
  CHECK(c.gates().size() == 1);
}

TEST_CASE("evaluation basics") {
  auto and2 = parse("inputs x1 x2\ngate g AND x1 x2\noutput g");
  CHECK(evaluate(and2, {0, 1}));
  CHECK_FALSE(evaluate(and2, {0}));

  auto not1 = parse("inputs x1\ngate g NOT x1\noutput g");
  CHECK(evaluate(not1, {}));
  CHECK_FALSE(evaluate(not1, {0}));
}

TEST_CASE("metrics on hand-built circuits") {
  auto wire = parse("inputs x1\noutput x1");
  auto m = metrics(wire);
  CHECK(m.depth == 0);
  CHECK(m.weft == 0);
  CHECK(m.node_count == 1);
  CHECK(m.circuit_class == CircuitClass::Monotone);

  auto and3 = parse("inputs x1 x2 x3\ngate g AND x1 x2 x3\noutput g");
  m = metrics(and3);
  CHECK(m.depth == 1);
  CHECK(m.weft == 1);  // indegree 3 > 2 is large

  // Only indegree-2 gates: weft stays 0 at any depth.
  auto binary = parse(
      "inputs x1 x2 x3 x4\n"
      "gate a AND x1 x2\n"
      "gate b AND x3 x4\n"
      "gate c OR a b\n"
      "output c");
  m = metrics(binary);
  CHECK(m.depth == 2);
  CHECK(m.weft == 0);

  // The large gate off the output path still counts only on its own paths.
  auto side = parse(
      "inputs x1 x2 x3\n"
      "gate big OR x1 x2 x3\n"
      "gate out AND x1 x2\n"
      "output out");
  m = metrics(side);
  CHECK(m.depth == 1);
  CHECK(m.weft == 0);
}

TEST_CASE("circuit classes") {
  CHECK(metrics(parse("inputs x1 x2\ngate g OR x1 x2\noutput g")).circuit_class ==
        CircuitClass::Monotone);
  CHECK(metrics(parse("inputs x1 x2\ngate n1 NOT x1\ngate n2 NOT x2\ngate g AND n1 n2\noutput g"))
            .circuit_class == CircuitClass::Antimonotone);
  // NOT over a gate breaks antimonotonicity.
  CHECK(metrics(parse("inputs x1 x2\ngate a AND x1 x2\ngate n NOT a\noutput n")).circuit_class ==
        CircuitClass::General);
  // An input feeding a non-NOT gate alongside negations is general too.
  CHECK(metrics(parse("inputs x1 x2\ngate n NOT x1\ngate g OR n x2\noutput g")).circuit_class ==
        CircuitClass::General);
}

TEST_CASE("weight-k solving basics") {
  auto and2 = parse("inputs x1 x2\ngate g AND x1 x2\noutput g");
  auto w2 = is_k_satisfiable(and2, 2);
  REQUIRE(w2.has_value());
  CHECK(*w2 == Assignment{0, 1});
  CHECK_FALSE(is_k_satisfiable(and2, 1).has_value());

  auto or3 = parse("inputs x1 x2 x3\ngate g OR x1 x2 x3\noutput g");
  auto w1 = is_k_satisfiable(or3, 1);
  REQUIRE(w1.has_value());
  CHECK(*w1 == Assignment{0});  // lexicographic tie-break

  CHECK_THROWS_AS(is_k_satisfiable(and2, 3), Error);
}

TEST_CASE("min and max weight solving") {
  auto and2 = parse("inputs x1 x2\ngate g AND x1 x2\noutput g");
  auto min = min_weight_sat(and2);
  REQUIRE(min.has_value());
  CHECK(min->first == 2);

  auto or2 = parse("inputs x1 x2\ngate g OR x1 x2\noutput g");
  min = min_weight_sat(or2);
  REQUIRE(min.has_value());
  CHECK(min->first == 1);
  CHECK(min->second == Assignment{0});

  // NOT(x1) over inputs {x1, x2}: max weight 1 via {x2}.
  auto not1 = parse("inputs x1 x2\ngate g NOT x1\noutput g");
  auto max = max_weight_sat(not1);
  REQUIRE(max.has_value());
  CHECK(max->first == 1);
  CHECK(max->second == Assignment{1});

  // AND(NOT x1, NOT x2) is satisfied only by the empty assignment.
  auto allzero = parse("inputs x1 x2\ngate n1 NOT x1\ngate n2 NOT x2\ngate g AND n1 n2\noutput g");
  max = max_weight_sat(allzero);
  REQUIRE(max.has_value());
  CHECK(max->first == 0);
  CHECK(max->second.empty());
}

TEST_CASE("solvers agree with the truth-table oracle") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    auto c = trial % 2 == 0 ? testutil::random_monotone_circuit(rng, 8, 12)
                            : testutil::random_general_circuit(rng, 8, 12);
    auto scan = testutil::truth_table_scan(c);
    auto min = min_weight_sat(c);
    auto max = max_weight_sat(c);
    if (scan.min_weight) {
      REQUIRE(min.has_value());
      CHECK(min->first == *scan.min_weight);
      CHECK(evaluate(c, min->second));
    } else {
      CHECK_FALSE(min.has_value());
    }
    if (scan.max_weight) {
      REQUIRE(max.has_value());
      CHECK(max->first == *scan.max_weight);
      CHECK(evaluate(c, max->second));
    } else {
      CHECK_FALSE(max.has_value());
    }
    for (uint32_t k = 0; k <= 8; ++k) {
      auto witness = is_k_satisfiable(c, k);
      CHECK(witness.has_value() == scan.weight_satisfiable[k]);
      if (witness) {
        CHECK(witness->size() == k);
        CHECK(evaluate(c, *witness));
        CHECK(testutil::reference_eval(c, *witness));
      }
    }
  }
}

TEST_CASE("antimonotone max-weight agrees with the truth-table oracle") {
  // NOT layer over the inputs, then a random monotone circuit on top.
  std::mt19937_64 rng(4096);
  for (int trial = 0; trial < 30; ++trial) {
    const uint32_t n = 8;
    std::vector<std::string> inputs;
    std::vector<Gate> gates;
    for (uint32_t i = 0; i < n; ++i) {
      inputs.push_back("x" + std::to_string(i + 1));
      gates.push_back({"n" + std::to_string(i), GateKind::Not, {i}});
    }
    const uint32_t gate_count = 1 + static_cast<uint32_t>(rng() % 10);
    for (uint32_t gi = 0; gi < gate_count; ++gi) {
      const uint32_t prior = gi + n;  // NOT nodes and later gates only
      std::vector<uint32_t> operands{n + (static_cast<uint32_t>(rng()) % prior),
                                     n + (static_cast<uint32_t>(rng()) % prior)};
      if (operands[0] == operands[1]) operands[1] = n + (operands[1] - n + 1) % prior;
      gates.push_back({"g" + std::to_string(gi),
                       rng() & 1 ? GateKind::And : GateKind::Or, std::move(operands)});
    }
    Circuit c(std::move(inputs), std::move(gates), n + n + gate_count - 1);
    REQUIRE(metrics(c).circuit_class == CircuitClass::Antimonotone);
    auto scan = testutil::truth_table_scan(c);
    auto max = max_weight_sat(c);
    if (scan.max_weight) {
      REQUIRE(max.has_value());
      CHECK(max->first == *scan.max_weight);
    } else {
      CHECK_FALSE(max.has_value());
    }
    // Subsets of satisfying assignments stay satisfying.
    if (max) {
      for (int probe = 0; probe < 20; ++probe) {
        Assignment sub;
        for (uint32_t i : max->second)
          if (rng() & 1) sub.push_back(i);
        CHECK(evaluate(c, sub));
      }
    }
  }
}

TEST_CASE("rewriting with indegree-2 gates zeroes the weft") {
  std::mt19937_64 rng(512);
  for (int trial = 0; trial < 20; ++trial) {
    auto c = testutil::random_general_circuit(rng, 7, 12);
    CircuitBuilder builder(c.inputs());
    std::vector<CircuitBuilder::Ref> refs(c.node_count());
    for (uint32_t i = 0; i < c.inputs().size(); ++i) refs[i] = builder.input(i);
    for (size_t gi = 0; gi < c.gates().size(); ++gi) {
      const Gate& g = c.gates()[gi];
      std::vector<CircuitBuilder::Ref> ops;
      for (uint32_t op : g.operands) ops.push_back(refs[op]);
      refs[c.inputs().size() + gi] = builder.balanced(g.kind, std::move(ops));
    }
    auto binarized = builder.finish(refs[c.output()]);
    CHECK(metrics(binarized).weft == 0);
    for (uint64_t mask = 0; mask < (1u << 7); ++mask) {
      Assignment a;
      for (uint32_t i = 0; i < 7; ++i)
        if ((mask >> i) & 1) a.push_back(i);
      CHECK(testutil::reference_eval(c, a) == testutil::reference_eval(binarized, a));
    }
  }
}

TEST_CASE("monotone circuits stay satisfied under supersets") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    auto c = testutil::random_monotone_circuit(rng, 9, 15);
    for (int probe = 0; probe < 30; ++probe) {
      uint64_t small = rng() & 0x1FF;
      uint64_t large = small | (rng() & 0x1FF);
      Assignment a, b;
      for (uint32_t i = 0; i < 9; ++i) {
        if ((small >> i) & 1) a.push_back(i);
        if ((large >> i) & 1) b.push_back(i);
      }
      if (evaluate(c, a)) CHECK(evaluate(c, b));
    }
  }
}

TEST_CASE("parse of serialize is identity") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    auto c = testutil::random_general_circuit(rng, 6, 10);
    auto text = serialize_circuit(c);
    auto back = parse_circuit(text);
    CHECK(serialize_circuit(back) == text);
    CHECK(back.inputs() == c.inputs());
    CHECK(back.output() == c.output());
    REQUIRE(back.gates().size() == c.gates().size());
    for (size_t i = 0; i < c.gates().size(); ++i) {
      CHECK(back.gates()[i].name == c.gates()[i].name);
      CHECK(back.gates()[i].kind == c.gates()[i].kind);
      CHECK(back.gates()[i].operands == c.gates()[i].operands);
    }
  }
}

TEST_CASE("enumeration budget guards the solvers") {
  std::vector<std::string> inputs;
  std::vector<uint32_t> all;
  for (uint32_t i = 0; i < 40; ++i) {
    inputs.push_back("x" + std::to_string(i));
    all.push_back(i);
  }
  std::vector<Gate> gates{{"g", GateKind::And, all}};
  Circuit wide(std::move(inputs), std::move(gates), 40);
  SolveOptions tiny{100};
  CHECK_THROWS_AS(is_k_satisfiable(wide, 20, tiny), Error);
  CHECK_THROWS_AS(min_weight_sat(wide, tiny), Error);
  // Generous budget still finds the all-ones witness.
  CHECK(is_k_satisfiable(wide, 40).has_value());
}
