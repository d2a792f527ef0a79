#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sympblob/rep.hpp"
#include "sympblob/rewrite.hpp"

using namespace sympblob;

namespace {

Diagram line_with_word(const Word& w) {
  return Diagram(1, 1, {DPair(End::north(1), End::southern(1), w)});
}

// periodic-route product for comparison
std::pair<Laurent, Diagram> periodic_mul(const Diagram& a, const Diagram& b) {
  auto [k, s] = compose_phi(unfold_mux(a), unfold_mux(b));
  return {k, fold_nu(s)};
}

}  // namespace

TEST_CASE("single rewrites") {
  SECTION("LL on a line") {
    auto [k, d] = rect_reduce(line_with_word("LL"));
    CHECK(k == Laurent::param(Param::dL));
    CHECK(d == line_with_word("L"));
  }
  SECTION("LRL on a line") {
    auto [k, d] = rect_reduce(line_with_word("LRL"));
    CHECK(k == Laurent::param(Param::kLR));
    CHECK(d == line_with_word("L"));
  }
  SECTION("RLR on a line") {
    auto [k, d] = rect_reduce(line_with_word("RLR"));
    CHECK(k == Laurent::param(Param::kLR));
    CHECK(d == line_with_word("R"));
  }
  SECTION("loop classes") {
    Diagram d = Diagram::identity(1);
    d.loops[""] = 1;
    d.loops["L"] = 1;
    d.loops[canonical_loop_word("LLR")] = 1;
    auto [k, r] = rect_reduce(d);
    // {} -> d, L -> kL, LLR -> dL then kLR
    CHECK(k == Laurent::parse("d*dL*kL*kLR"));
    CHECK(r == Diagram::identity(1));
  }
  SECTION("the two-winding-line configuration") {
    Diagram tq(2, 2,
               {DPair(End::north(1), End::north(2), "LR"),
                DPair(End::southern(1), End::southern(2), "LR")});
    auto [k, d] = rect_reduce(tq);
    CHECK(k == Laurent::param(Param::kLR));
    Diagram expected(2, 2,
                     {DPair(End::north(1), End::southern(1), "L"),
                      DPair(End::north(2), End::southern(2), "R")});
    CHECK(d == expected);
  }
}

TEST_CASE("reduction is confluent") {
  std::mt19937 rng(90210);
  for (int m = 1; m <= 3; ++m) {
    auto basis = enumerate_Bx(m);
    std::uniform_int_distribution<size_t> pick_el(0, basis.size() - 1);
    std::uniform_int_distribution<int> nstack(2, 4);
    int accepted = 0;
    while (accepted < 150) {
      int k = nstack(rng);
      Diagram prod = basis[pick_el(rng)];
      for (int i = 1; i < k; ++i) prod = abacus_concat(prod, basis[pick_el(rng)]);
      if (prod.total_beads() > 6) continue;
      ++accepted;
      auto [k0, d0] = rect_reduce(prod);
      for (int trial = 0; trial < 6; ++trial) {
        auto chooser = [&](size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); };
        auto [k1, d1] = rect_reduce(prod, chooser);
        CHECK(k1 == k0);
        CHECK(d1 == d0);
      }
    }
  }
}

TEST_CASE("rectangular and periodic routes agree on basis pairs") {
  for (int m = 1; m <= 2; ++m) {
    auto basis = enumerate_Bx(m);
    for (const Diagram& a : basis)
      for (const Diagram& b : basis) {
        auto [k1, d1] = rect_mul(a, b);
        auto [k2, d2] = periodic_mul(a, b);
        CHECK(k1 == k2);
        CHECK(d1 == d2);
      }
  }
}

TEST_CASE("rectangular and periodic routes agree on random stacks") {
  std::mt19937 rng(5417);
  for (int m = 1; m <= 3; ++m) {
    auto basis = enumerate_Bx(m);
    std::vector<Strip> strips;
    for (const Diagram& d : basis) strips.push_back(unfold_mux(d));
    std::uniform_int_distribution<size_t> pick_el(0, basis.size() - 1);
    std::uniform_int_distribution<int> nstack(2, 4);
    int accepted = 0;
    while (accepted < 400) {
      int k = nstack(rng);
      std::vector<size_t> chosen;
      for (int i = 0; i < k; ++i) chosen.push_back(pick_el(rng));
      Diagram rect = basis[chosen[0]];
      Strip strip = strips[chosen[0]];
      for (int i = 1; i < k; ++i) {
        rect = abacus_concat(rect, basis[chosen[i]]);
        strip = strip_concat(strip, strips[chosen[i]]);
      }
      if (rect.total_beads() > 4) continue;
      ++accepted;
      auto [k1, d1] = rect_reduce(rect);
      auto [k2, s2] = strip_reduce(strip);
      CHECK(k1 == k2);
      CHECK(d1 == fold_nu(s2));
    }
  }
}
