#include <catch2/catch_amalgamated.hpp>

#include "sympblob/json_io.hpp"

using namespace sympblob;

TEST_CASE("diagram JSON round trip") {
  for (int n = 1; n <= 3; ++n) {
    for (const Diagram& d : enumerate_blob(n)) CHECK(diagram_from_json(to_json(d)) == d);
    for (const Diagram& d : enumerate_Bx(n)) CHECK(diagram_from_json(to_json(d)) == d);
  }
  // a pseudodiagram with loops survives too
  Diagram d = Diagram::identity(2);
  d.loops[canonical_loop_word("LR")] = 2;
  d.loops[""] = 1;
  CHECK(diagram_from_json(to_json(d)) == d);
  // primed ends are written with a p suffix
  json j = to_json(Diagram::identity(1));
  CHECK(j["pairs"][0]["ends"][1] == "1p");
}

TEST_CASE("strip JSON round trip") {
  for (int m = 1; m <= 3; ++m)
    for (const Strip& s : enumerate_Bphi(m)) {
      json j = to_json(s);
      CHECK(j["period"] == 2 * m);
      CHECK(strip_from_json(j) == s);
    }
}

TEST_CASE("dimension tables") {
  json rows = dims_table_json(3);
  REQUIRE(rows.size() == 4u);
  CHECK(rows[3]["dims"]["0"] == 8);
  CHECK(rows[2]["algebra_rank"] == 19);
  std::string csv = dims_table_csv(2);
  CHECK(csv.find("m,l=-2,l=-1,l=0,l=1") == 0u);
}

TEST_CASE("gram report serialisation") {
  GramReport g = gram_matrix(2, 0);
  json j = to_json(g);
  CHECK(j["dim"] == 4);
  CHECK(j["basis"].size() == 4u);
  CHECK(Laurent::parse(j["determinant"].get<std::string>()) == g.determinant);
  Laurent rebuilt = Laurent::parse(j["remainder"].get<std::string>());
  for (const auto& jf : j["factors"])
    rebuilt *= Laurent::parse(jf["value"].get<std::string>()).pow(jf["multiplicity"].get<int>());
  CHECK(rebuilt == g.determinant);
}
