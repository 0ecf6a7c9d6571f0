#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "vmvt/serialize.hpp"
#include "vmvt/verify.hpp"

using namespace vmvt;

TEST_CASE("rationals round trip through JSON") {
  for (const char* text : {"0", "-47/9", "5813/23", "123456789012345678901234567890/7"}) {
    const Rational q = parse_rational(text);
    const auto j = io::to_json(q);
    CHECK(io::rational_from_json(nlohmann::json::parse(j.dump())) == q);
  }
}

TEST_CASE("count records round trip with counts as decimal strings") {
  CountRecord rec = count_J(3, 2, 6);
  rec.count = ipow(BigInt(10), 40) + 1;  // beyond any fixed-width integer
  const auto j = io::to_json(rec);
  CHECK(j.at("count").is_string());
  const auto back = io::count_record_from_json(nlohmann::json::parse(j.dump()));
  CHECK(back.count == rec.count);
  CHECK(back.op == rec.op);
  CHECK(back.params == rec.params);
  CHECK_FALSE(io::to_json(rec, false).contains("elapsed_ms"));
}

TEST_CASE("value records") {
  const auto j = io::value_record("kappa", {{"k", 4}, {"r", 2}, {"t", 2}}, Rational(6), "closed-form");
  CHECK(j.at("value").at("num") == "6");
  CHECK(j.at("value").at("den") == "1");
  CHECK(nlohmann::json::parse(j.dump()) == j);
  const auto eta = io::to_json(eta_known(99, 12));
  CHECK(eta.at("provenance") == "square-minus-one-threshold");
  CHECK(eta.at("m") == 2);
}

TEST_CASE("table CSV") {
  const std::string csv = io::gtilde_csv({s1(12), s1(13)});
  CHECK(csv == "k,s1_num,s1_den,m,w,v,family,gtilde\n"
               "12,5813,23,2,5,99,square-minus-one,253\n"
               "13,3882,13,3,6,99,square-minus-one,299\n");
}

TEST_CASE("trace CSV has one row per state") {
  const auto trace = run_iteration(zero_config(2, 2, 2, 3));
  const std::string csv = io::trace_csv(trace);
  CHECK(csv.rfind("n,a,b,h,c,gamma_num,gamma_den,psi_num,psi_den\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  const auto j = io::summary_json(trace);
  CHECK(j.at("all_ok") == true);
  CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("census reports include witnesses only on request") {
  const CongruenceInstance inst{3, 2, 2, 5, 0, 1, 0, 2, {1, 2, 3}};
  const auto c = count_classes(inst, true);
  CHECK(io::to_json(c, true).contains("witnesses"));
  CHECK_FALSE(io::to_json(c, false).contains("witnesses"));
  const auto m = io::to_json(max_B(3, 1, 2, 5, 0, 1));
  CHECK(m.at("strongly_diagonal") == true);
  CHECK(m.at("witness").contains("m"));
}

TEST_CASE("elimination identity record") {
  const auto j = io::to_json(solve_elimination_identity(1, 1));
  CHECK(j.at("c") == nlohmann::json::array({"-1", "1"}));
  CHECK(j.at("d") == nlohmann::json::array({"2", "1"}));
  CHECK(j.at("verified") == true);
}

TEST_CASE("suite reports are deterministic") {
  const auto a = verify_all(Profile::quick, 11).to_json().dump();
  const auto b = verify_all(Profile::quick, 11).to_json().dump();
  CHECK(a == b);
  CHECK(nlohmann::json::parse(a).at("checks").size() > 20);
}
