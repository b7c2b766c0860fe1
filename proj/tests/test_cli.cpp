#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/checks.hpp"
#include "support/fixtures.hpp"
#include "torfan_cli/commands.hpp"
#include "torfan_cli/document.hpp"

using namespace torfan;
using namespace torfan::cli;
using nlohmann::json;

namespace {

std::string read_document(const std::string& name) {
  std::ifstream in(std::string(TORFAN_DOCUMENTS_DIR) + "/" + name);
  REQUIRE_MESSAGE(in.good(), "missing document ", name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

json run_json(const std::string& command, const std::string& document, const CommandOptions& options = {}) {
  return json::parse(render_report(run_command(command, read_document(document), options), Format::json));
}

}  // namespace

TEST_CASE("named bases match the hand-built fans") {
  auto [p2, p2poly] = named_base("P^2");
  CHECK(p2.edges == testing::projective_space(2).edges);
  CHECK(p2.max_cones == testing::projective_space(2).max_cones);
  CHECK(p2poly.lambdas == testing::projective_polytope(2).lambdas);
  auto [q, qpoly] = named_base("P1xP1");
  CHECK(q.edges == testing::quadric().edges);
  CHECK(qpoly.lambdas == testing::quadric_polytope().lambdas);
  CHECK(named_base("C^3").first.edges == testing::affine_space(3).edges);
  CHECK_FAILS_WITH(named_base("Q^2"), ErrorKind::ValidationError);
  CHECK_FAILS_WITH(named_base("P^0"), ErrorKind::ValidationError);
}

TEST_CASE("parsing fan documents") {
  auto doc = parse_fan_document(read_document("p2_explicit.json"));
  CHECK(doc.fan.edges.size() == 3);
  CHECK(doc.fan.max_cones.size() == 3);
  CHECK(doc.polytope.lambdas == std::vector<BigRational>{0, 0, -1});

  CHECK_FAILS_WITH(parse_fan_document(R"({"rank":2,"edges":[[2,4],[0,1]],"max_cones":[[1,2]],"lambdas":["0","0"]})"),
                   ErrorKind::ValidationError);
  CHECK_FAILS_WITH(parse_fan_document(R"({"rank":2,"edges":[[1,0],[0,1]],"max_cones":[[1,3]],"lambdas":["0","0"]})"),
                   ErrorKind::ValidationError);
  CHECK_FAILS_WITH(parse_fan_document(R"({"rank":2,"edges":[[1,0],[0,1]],"max_cones":[[1,2]],"lambdas":["0"]})"),
                   ErrorKind::ValidationError);
  CHECK_FAILS_WITH(parse_fan_document(R"({"rank":2,"edges":[[1,0],[0,1]],"max_cones":[[1,2]],"lambdas":["x"]})"),
                   ErrorKind::ValidationError);
  CHECK_FAILS_WITH(parse_fan_document("{\n  \"rank\": 2,\n  ]"), ErrorKind::ParseError);
  try {
    parse_fan_document("{\n  \"rank\": 2,\n  ]");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }

  auto bundle = parse_fan_document(read_document("o1_p2.json"));
  REQUIRE(bundle.bundle.has_value());
  CHECK(*bundle.bundle->k == 1);
  auto blow = parse_fan_document(read_document("blowup_c3.json"));
  REQUIRE(blow.blowup.has_value());
  CHECK(blow.blowup->face == IndexSet{0, 1, 2});
  CHECK(blow.blowup->epsilon == 2);
}

TEST_CASE("documents round-trip") {
  for (const char* name : {"p2.json", "p2_explicit.json", "p1xp1.json", "o1_p2.json", "o11_p1xp1.json", "blowup_c3.json",
                           "twisted_p2.json"}) {
    CAPTURE(name);
    auto doc = parse_fan_document(read_document(name));
    auto again = parse_fan_document(serialize_fan_document(doc));
    CHECK(again.fan.rank == doc.fan.rank);
    CHECK(again.fan.edges == doc.fan.edges);
    CHECK(again.fan.max_cones == doc.fan.max_cones);
    CHECK(again.polytope.lambdas == doc.polytope.lambdas);
    CHECK(again.twist == doc.twist);
    CHECK(again.bundle.has_value() == doc.bundle.has_value());
    if (doc.bundle) CHECK(again.bundle->k == doc.bundle->k);
    CHECK(again.blowup.has_value() == doc.blowup.has_value());
    if (doc.blowup) {
      CHECK(again.blowup->face == doc.blowup->face);
      CHECK(again.blowup->epsilon == doc.blowup->epsilon);
    }
    CHECK(serialize_fan_document(again) == serialize_fan_document(doc));
  }
}

TEST_CASE("bundle documents produce the line bundle fan") {
  auto r = run_json("validate", "o1_p2.json");
  CHECK(r["results"]["complete"] == false);
  CHECK(r["results"]["smooth"] == true);
  CHECK(r["results"]["document"]["edges"] == json::parse("[[1,0,0],[0,1,0],[-1,-1,1],[0,0,1]]"));
}

TEST_CASE("qh on the projective plane") {
  auto r = run_json("qh", "p2.json");
  CHECK(r["command"] == "qh");
  CHECK(r["results"]["presentation"]["dimension"] == 3);
  CHECK(r["results"]["presentation"]["qsr_relations"] == json::array({"x1*x2*x3 - t"}));
  CHECK(r["results"]["presentation"]["groebner_basis"].back() == "x3^3 - 1");
  CommandOptions symbolic;
  symbolic.t_symbolic = true;
  auto s = run_json("qh", "p2.json", symbolic);
  CHECK(s["results"]["presentation"]["groebner_basis"].back() == "x3^3 - t");
}

TEST_CASE("sh on O(-1) over the plane") {
  auto r = run_json("sh", "o1_p2.json");
  CHECK(r["results"]["dimension"] == 2);
  CHECK(r["results"]["omega"]["characteristic"] == "X^2 + 1");
  CHECK(r["results"]["transfer"]["holds"] == true);
}

TEST_CASE("eigenvalues are sorted by modulus then argument") {
  auto r = run_json("qh", "p2.json");
  auto ev = r["results"]["omega"]["eigenvalues"];
  REQUIRE(ev.size() == 3);
  CHECK(ev[0][1].get<double>() < 0);
  CHECK(ev[1][0].get<double>() == doctest::Approx(1.0));
  CHECK(ev[2][1].get<double>() > 0);
}

TEST_CASE("mirror report renders a clause table") {
  auto report = run_command("mirror", read_document("p1xp1.json"));
  auto text = render_report(report, Format::text);
  CHECK(text.find("clauses:") != std::string::npos);
  CHECK(text.find("pass=true") != std::string::npos);
  CHECK(text.find("pass=false") == std::string::npos);
}

TEST_CASE("reports are deterministic") {
  CommandOptions o;
  o.seed = 4;
  for (const char* cmd : {"critical", "separate", "mirror"}) {
    auto a = render_report(run_command(cmd, read_document("o11_p1xp1.json"), o), Format::json);
    auto b = render_report(run_command(cmd, read_document("o11_p1xp1.json"), o), Format::json);
    CHECK(a == b);
  }
}

TEST_CASE("kato on the exceptional family") {
  auto r = run_json("kato", "kato_2x2.json");
  for (const auto& p : r["results"]["paths"]) CHECK(p["pole_exponent"].get<double>() == doctest::Approx(-1.0).epsilon(0.05));
  CHECK(r["results"]["gevec_holds"] == true);
}

TEST_CASE("linebundle and blowup commands") {
  CommandOptions k1;
  k1.k = BigInt(1);
  auto lb = run_json("linebundle", "p1xp1.json", k1);
  CHECK(lb["results"]["sh_dimension"] == 1);
  CHECK(lb["results"]["qh_dimension"] == 4);
  CHECK(lb["results"]["transfer_holds"] == true);
  CHECK(lb["results"]["phi_relations"] == true);

  auto bl = run_json("blowup", "blowup_p2_point.json");
  CHECK(bl["results"]["vertices_before"] == 3);
  CHECK(bl["results"]["vertices_after"] == 4);
  CHECK(bl["results"]["presentation"]["dimension"] == 4);
  CHECK_FAILS_WITH(run_command("blowup", read_document("p2.json")), ErrorKind::InvalidArgument);
}

TEST_CASE("exit status mapping") {
  CHECK(exit_status(Error(ErrorKind::ParseError, "")) == 2);
  CHECK(exit_status(Error(ErrorKind::ValidationError, "")) == 2);
  CHECK(exit_status(Error(ErrorKind::NotMonotone, "")) == 1);
  CHECK_FAILS_WITH(run_command("frobnicate", read_document("p2.json")), ErrorKind::ParseError);
  CommandOptions k3;
  k3.k = BigInt(3);
  CHECK_FAILS_WITH(run_command("linebundle", read_document("p2.json"), k3), ErrorKind::NotMonotone);
}

TEST_CASE("dimension-only text report") {
  Report r;
  r.command = "qh";
  r.results["dimension"] = 3;
  CHECK(render_report(r, Format::text) == "qh\n  dimension: 3\n");
}
