#include "comax/algebra_io.hpp"
#include "comax/catalog.hpp"
#include "comax/export.hpp"
#include "comax/sl2.hpp"
#include "comax/subalgebra.hpp"
#include "comax/verify.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace comax;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int parse_error_line(std::string_view text) {
  try {
    parse_algebra_text(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

} // namespace

TEST_CASE("algebra text format round trips") {
  for (const auto& spec : sweep_families()) {
    auto f = Field::make(3);
    if (spec.id == FamilyId::case3_two_eigen && !default_two_eigen_mu(*f)) continue;
    auto L = build_catalog(spec, f);
    const auto text = format_algebra_text(*L);
    auto back = parse_algebra_text(text, L->name());
    CHECK(back->same_structure(*L));
    CHECK(format_algebra_text(*back) == text);
  }
  auto f4 = Field::make(2, 2);
  auto L = build_catalog({FamilyId::heisenberg3}, f4);
  CHECK(parse_algebra_text(format_algebra_text(*L))->same_structure(*L));
}

TEST_CASE("bundled sl2 file is the standard sl2") {
  auto L = load_algebra_file(COMAX_TEST_DATA "/sl2_f3.txt");
  CHECK(is_standard_sl2(*L));
  CHECK(L->same_structure(*build_catalog({FamilyId::sl2}, Field::make(3))));
  CHECK_THROWS_AS(load_algebra_file(COMAX_TEST_DATA "/missing.txt"), Error);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(parse_error_line("field 3\ndim 2\nbracket 1 1 : 0 0\n") == 3);
  CHECK(parse_error_line("field 3\ndim 2\nbracket 2 1 : 0 0\n") == 3);
  CHECK(parse_error_line("field 3\ndim 2\nbracket 1 3 : 0 0\n") == 3);
  CHECK(parse_error_line("field 3\ndim 2\nbracket 1 2 : 0\n") == 3);
  CHECK(parse_error_line("field 3\ndim 2\nbracket 1 2 : 0 1\nbracket 1 2 : 0 1\n") == 4);
  CHECK(parse_error_line("field 6\n") == 1);
  CHECK(parse_error_line("# comment\nfeld 3\n") == 2);
  CHECK(parse_error_line("field 3\nbracket 1 2 : 0 1\n") == 2);
  CHECK_THROWS_AS(parse_algebra_text("dim 2\n"), Error);
  // Jacobi fails: [e1,e2] = e3, [e1,e3] = e1, [e2,e3] = 0 over F_5.
  try {
    parse_algebra_text("field 5\ndim 3\nbracket 1 2 : 0 0 1\nbracket 1 3 : 1 0 0\n");
    FAIL("expected a Jacobi failure");
  } catch (const ParseError&) {
    FAIL("axiom failure should not be a syntax error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("not a Lie algebra") != std::string::npos);
  }
}

TEST_CASE("DOT export") {
  auto L = build_catalog({FamilyId::sl2}, Field::make(3));
  const auto g = build_graph(enumerate_subalgebras(L));
  const auto dot = to_dot(g);
  CHECK(dot.rfind("graph", 0) == 0);
  CHECK(dot.find("B[1 0 0;0 0 1]") != std::string::npos);
  CHECK(dot.find("NS[") != std::string::npos);
  std::size_t edges = 0;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  CHECK(edges == 96u);
  CHECK(kind_prefix(VertexKind::plane) == "P");
}

TEST_CASE("inventory JSON") {
  auto L = build_catalog({FamilyId::heisenberg3}, Field::make(2));
  const auto j = inventory_json(enumerate_subalgebras(L));
  CHECK(j.at("dim") == 3);
  CHECK(j.at("by_dim").at("2").size() == 3u);
  CHECK(j.at("frattini_dim") == 1);
  CHECK(j.at("frattini") == Json::array({Json::array({"0", "0", "1"})}));
  CHECK(Json::parse(dump_json(j)) == j);
  CHECK(dump_json(Json::parse(dump_json(j))) == dump_json(j));
}

TEST_CASE("predictions") {
  auto f2 = Field::make(2);
  CHECK_THROWS_AS(predict({FamilyId::sl2}, *f2), Error);
  CHECK_THROWS_AS(predict({FamilyId::case3_two_eigen}, *f2), Error);
  const auto laws = law_predictions(3);
  CHECK(laws.size() == 8u);
  CHECK(law_predictions(4).size() == 5u);
  for (const auto& p : predict({FamilyId::sl2}, *Field::make(5))) CHECK_FALSE(p.citation.empty());
}

TEST_CASE("compare statuses") {
  std::vector<Observation> obs{{"a", 1}, {"b", 2}, {"c", 3, false}, {"d", true}, {"e", 5}};
  std::vector<Prediction> pred{{"a", 1, "x"}, {"b", 3, "x"}, {"c", 3, "x"}, {"d", false, "x", true}, {"z", 0, "x"}};
  Summary s;
  const auto items = compare(obs, pred, s);
  CHECK(s.match == 1);
  CHECK(s.mismatch == 2); // b, and z has no observation
  CHECK(s.undecided == 1);
  CHECK(s.undecided_checked == 1);
  CHECK(s.conflict == 1);
  CHECK(s.unpredicted == 1);
  CHECK_FALSE(s.ok());
  Summary clean;
  compare({{"a", 1}}, {{"a", 1, "x"}}, clean);
  CHECK(clean.ok());
}

TEST_CASE("run reports") {
  RunConfig cfg;
  cfg.family = "dim1";
  cfg.check = true;
  const auto r = run(cfg);
  CHECK(r.summary.ok());
  CHECK(r.json.at("notes").at(0) == "graph has no vertices");
  CHECK(r.json.at("bundle").at("diameter").is_null());

  RunConfig sl;
  sl.family = "sl2";
  sl.field = "5";
  sl.check = true;
  const auto a = run(sl);
  const auto b = run(sl);
  CHECK(a.summary.ok());
  CHECK(a.summary.mismatch == 0);
  CHECK(dump_json(a.json) == dump_json(b.json));
  CHECK(a.text == b.text);
  CHECK(a.json.at("algebra").at("derived_dim") == 3);

  RunConfig star = sl;
  star.field = "3";
  star.family = "heisenberg3";
  star.star = true;
  const auto hs = run(star);
  CHECK(hs.json.at("graph") == "gamma_star");
  CHECK(hs.json.at("vertices").size() == 16u);
  CHECK(hs.summary.ok());

  RunConfig bad;
  bad.family = "sl2";
  bad.field = "2";
  CHECK_THROWS_AS(run(bad), Error);
  bad.family = "nosuch";
  bad.field = "3";
  CHECK_THROWS_AS(run(bad), Error);

  RunConfig c3;
  c3.family = "case3";
  c3.field = "3";
  c3.params = {{"matrix", "0,1,1,1"}};
  c3.check = true;
  const auto rc = run(c3);
  CHECK(rc.summary.ok());
  CHECK(rc.json.at("algebra").at("family").get<std::string>().rfind("case3_irreducible", 0) == 0);
}

TEST_CASE("run writes artifacts") {
  const std::string base = "comax_io_test";
  RunConfig cfg;
  cfg.family = "sl2";
  cfg.field = "3";
  cfg.check = true;
  cfg.json_path = base + ".json";
  cfg.dot_path = base + ".dot";
  cfg.inventory_path = base + ".inv.json";
  cfg.text_path = base + ".txt";
  const auto r = run(cfg);
  CHECK(slurp(*cfg.json_path) == dump_json(r.json));
  CHECK(slurp(*cfg.text_path) == r.text);
  CHECK(slurp(*cfg.dot_path).find("B[1 0 0;0 0 1]") != std::string::npos);
  CHECK(Json::parse(slurp(*cfg.inventory_path)).at("by_dim").at("1").size() == 13u);
  for (const auto& p : {*cfg.json_path, *cfg.dot_path, *cfg.inventory_path, *cfg.text_path}) std::remove(p.c_str());
}

TEST_CASE("load mode checks the laws") {
  RunConfig cfg;
  cfg.algebra_file = COMAX_TEST_DATA "/sl2_f3.txt";
  cfg.check = true;
  const auto r = run(cfg);
  CHECK(r.summary.ok());
  CHECK(r.summary.match == 8);
  CHECK(r.json.at("algebra").at("source") == "file");
}

TEST_CASE("sweep") {
  const auto s = sweep({{FamilyId::sl2}, {FamilyId::abelian, 2}}, {"2", "3"}, {});
  CHECK(s.ok());
  CHECK(s.errors == 0);
  CHECK(dump_json(s.json) == dump_json(sweep({{FamilyId::sl2}, {FamilyId::abelian, 2}}, {"2", "3"}, {}).json));
  CHECK(s.table.find("skipped") != std::string::npos);
}
