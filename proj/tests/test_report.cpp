#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "pathinv/action.hpp"
#include "pathinv/quiver.hpp"
#include "pathinv/rational.hpp"
#include "pathinv/report.hpp"

using pathinv::ComputeReport;
using pathinv::GeneratorBlocks;
using pathinv::HomogeneousAction;
using pathinv::Matrix;
using pathinv::Quiver;
using pathinv::Rational;
using pathinv::report_to_dot;
using pathinv::report_to_json;
using pathinv::run_compute;
using pathinv::RunOptions;

namespace {

HomogeneousAction<Rational> sign_loop() {
  HomogeneousAction<Rational> a;
  Quiver q({"v"});
  q.set_arrow_dim(0, 0, 1);
  a.quiver = q;
  GeneratorBlocks<Rational> g;
  g.name = "g1";
  g.blocks.emplace(std::make_pair(0, 0), Matrix<Rational>(1, 1, {Rational(-1)}));
  a.generators.push_back(std::move(g));
  return a;
}

RunOptions opts(std::size_t n) {
  RunOptions o;
  o.max_degree = n;
  return o;
}

}  // namespace

TEST_CASE("run_compute on the sign loop") {
  ComputeReport rep = run_compute(sign_loop(), opts(4));

  CHECK(rep.vertices == std::vector<std::string>{"v"});
  CHECK(rep.closure_order == 2);
  CHECK(rep.closure_complete);
  CHECK(rep.dimensions_by_degree == std::vector<std::size_t>{1, 0, 1, 0, 1});

  REQUIRE(rep.graded_arrows.size() == 1);
  CHECK(rep.graded_arrows[0].source == "v");
  CHECK(rep.graded_arrows[0].target == "v");
  CHECK(rep.graded_arrows[0].degree == 2);
  CHECK(rep.graded_arrows[0].multiplicity == 1);

  CHECK(rep.stabilized);
  CHECK(rep.psi_all_ok);
  CHECK(rep.freeness_ok);
  CHECK(rep.oracle_status == "checked");
  CHECK(rep.oracle_rows.size() == rep.words.size());
  for (const auto& row : rep.oracle_rows) CHECK(row.match);

  CHECK(rep.original_verdict.summary == "Tame (A~0)");
  CHECK(rep.invariant_verdict.summary == "Tame (A~0)");
  CHECK(rep.preserved == true);
  CHECK(rep.cycle_structure_ok == true);
  CHECK(rep.cycle_degree_witness_ok == true);
  CHECK(rep.caveats.empty());
}

TEST_CASE("word rows carry the psi identity") {
  ComputeReport rep = run_compute(sign_loop(), opts(4));
  REQUIRE(rep.words.size() == 4);
  for (const auto& w : rep.words) {
    CHECK(w.psi_ok);
    CHECK(w.psi_lhs == w.psi_rhs);
    CHECK(w.source == "v");
    CHECK(w.target == "v");
  }
  CHECK(rep.words[0].degree == 1);
  CHECK(rep.words[0].dim_invariant == 0);
  CHECK(rep.words[1].dim_invariant == 1);
  CHECK(rep.words[1].dim_irreducible == 1);
  CHECK(rep.words[3].dim_invariant == 1);
  CHECK(rep.words[3].dim_irreducible == 0);
}

TEST_CASE("oracle can be disabled") {
  RunOptions o = opts(3);
  o.run_oracle = false;
  ComputeReport rep = run_compute(sign_loop(), o);
  CHECK(rep.oracle_status == "skipped (disabled)");
  CHECK(rep.oracle_rows.empty());
}

TEST_CASE("JSON serialization is deterministic and well formed") {
  ComputeReport rep = run_compute(sign_loop(), opts(4));
  std::string j1 = report_to_json(rep);
  std::string j2 = report_to_json(run_compute(sign_loop(), opts(4)));
  CHECK(j1 == j2);
  CHECK(j1.back() == '\n');

  auto doc = nlohmann::json::parse(j1);
  CHECK(doc["instance"]["field"] == "rational");
  CHECK(doc["instance"]["max_degree"] == 4);
  CHECK(doc["closure"]["order"] == 2);
  CHECK(doc["closure"]["complete"] == true);
  CHECK(doc["dimensions_by_degree"].size() == 5);
  CHECK(doc["invariant_quiver"]["stabilized"] == true);
  CHECK(doc["invariant_quiver"]["graded_arrows"].size() == 1);
  CHECK(doc["checks"]["psi_all_ok"] == true);
  CHECK(doc["checks"]["freeness_ok"] == true);
  CHECK(doc["checks"]["oracle"]["status"] == "checked");
  CHECK(doc["verdicts"]["original"]["summary"] == "Tame (A~0)");
  CHECK(doc["preservation"]["preserved"] == true);
  CHECK_FALSE(doc.contains("timings"));
}

TEST_CASE("DOT output names arrows by degree and multiplicity") {
  ComputeReport rep = run_compute(sign_loop(), opts(4));
  std::string dot = report_to_dot(rep);
  CHECK(dot.find("digraph invariant_quiver") != std::string::npos);
  CHECK(dot.find("\"v\" -> \"v\" [label=\"d=2 ×1\"]") != std::string::npos);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
}
