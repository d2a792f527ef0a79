#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "sympblob/rep.hpp"

using namespace sympblob;

namespace {

std::set<std::string> S(std::initializer_list<std::string> xs) { return xs; }

std::set<std::string> basis_set(int m, int l) {
  auto b = standard_basis(m, l);
  return {b.begin(), b.end()};
}

RationalPoint pt6(int d, int dl, int dr, int kl, int kr, int klr) {
  return RationalPoint{d, dl, dr, kl, kr, klr};
}

}  // namespace

TEST_CASE("turn string validity") {
  CHECK(is_valid_turnstring("oRRL"));
  CHECK(is_valid_turnstring("LLoR"));
  CHECK(!is_valid_turnstring("RoL"));   // matched pair would span the o
  CHECK(!is_valid_turnstring("oLL"));   // unmatched L with o on its left
  CHECK(!is_valid_turnstring("Roo"));   // unmatched R with o on its right
  CHECK(weight_of_turnstring("ooR") == 2);
  CHECK(weight_of_turnstring("oRR") == -1);  // two unmatched R's: even
  CHECK(weight_of_turnstring("LoR") == 1);
  CHECK(weight_of_turnstring("LLo") == -1);
  CHECK(weight_of_turnstring("RRLL") == 0);
}

TEST_CASE("the table of standard bases up to m = 4") {
  CHECK(basis_set(0, 0) == S({""}));

  CHECK(basis_set(1, 0) == S({"L", "R"}));
  CHECK(basis_set(1, -1) == S({"o"}));

  CHECK(basis_set(2, 1) == S({"oR"}));
  CHECK(basis_set(2, 0) == S({"LL", "LR", "RL", "RR"}));
  CHECK(basis_set(2, -1) == S({"Lo"}));
  CHECK(basis_set(2, -2) == S({"oo"}));

  CHECK(basis_set(3, 2) == S({"ooR"}));
  CHECK(basis_set(3, 1) == S({"LoR"}));
  CHECK(standard_basis(3, 0).size() == 8u);
  CHECK(basis_set(3, -1) == S({"LLo", "RLo", "oRL", "oRR"}));
  CHECK(basis_set(3, -2) == S({"Loo"}));
  CHECK(basis_set(3, -3) == S({"ooo"}));

  CHECK(basis_set(4, 3) == S({"oooR"}));
  CHECK(basis_set(4, 2) == S({"LooR"}));
  CHECK(basis_set(4, 1) == S({"oRRR", "oRLR", "oRRL", "RLoR", "LLoR"}));
  CHECK(standard_basis(4, 0).size() == 16u);
  CHECK(basis_set(4, -1) == S({"LLLo", "LRLo", "RLLo", "LoRL", "LoRR"}));
  CHECK(basis_set(4, -2) == S({"LLoo", "RLoo", "oRLo", "ooRL", "ooRR"}));
  CHECK(basis_set(4, -3) == S({"Looo"}));
  CHECK(basis_set(4, -4) == S({"oooo"}));
}

TEST_CASE("closed-form dimensions match enumeration") {
  for (int m = 0; m <= 6; ++m)
    for (int l : weight_range(m))
      CHECK(dimension(m, l) == static_cast<long>(standard_basis(m, l).size()));
  CHECK(dimension(3, 0) == 8);
  CHECK(dimension(4, 1) == 5);
  CHECK(dimension(2, -2) == 1);
  CHECK_THROWS_AS(dimension(3, 3), WeightOutOfRange);
  CHECK_THROWS_AS(standard_basis(2, -3), WeightOutOfRange);
}

TEST_CASE("cellular dimension count") {
  for (int m = 0; m <= 4; ++m) {
    long total = 0;
    for (int l : weight_range(m)) total += dimension(m, l) * dimension(m, l);
    CHECK(total == static_cast<long>(enumerate_Bphi(m).size()));
  }
}

TEST_CASE("turn strings biject with kets") {
  for (int m = 1; m <= 4; ++m)
    for (int l : weight_range(m))
      for (const auto& s : standard_basis(m, l)) {
        Ket k = ket_from_turnstring(s);
        CHECK(k.weight() == l);
        CHECK(turnstring_from_ket(k) == s);
      }
}

TEST_CASE("diagram weights agree with ket weights") {
  for (int m = 1; m <= 3; ++m)
    for (const Strip& d : enumerate_Bphi(m)) {
      CHECK(weight_of(d) == ket_of(d).weight());
      CHECK(weight_of(d) == bra_ket_of(d).weight());
    }
}

TEST_CASE("gram matrices") {
  SECTION("m=1, weight -1 is the 1x1 identity pairing") {
    GramReport g = gram_matrix(1, -1);
    REQUIRE(g.dim == 1);
    CHECK(g.matrix[0][0].is_monomial());
    CHECK(g.determinant == g.matrix[0][0]);
  }
  SECTION("symmetry under the bra-ket involution") {
    for (int m = 1; m <= 3; ++m)
      for (int l : weight_range(m)) {
        GramReport g = gram_matrix(m, l);
        for (size_t i = 0; i < g.matrix.size(); ++i)
          for (size_t j = 0; j < g.matrix.size(); ++j) CHECK(g.matrix[i][j] == g.matrix[j][i]);
      }
  }
  SECTION("no Gram determinant is the zero polynomial") {
    for (int m = 1; m <= 3; ++m)
      for (int l : weight_range(m)) CHECK(!gram_matrix(m, l).determinant.is_zero());
  }
  SECTION("the d-degree is maximal on the diagonal") {
    // the generic-simplicity argument: in every row the diagonal entry
    // carries the highest power of d
    auto d_degree = [](const Laurent& p) {
      int deg = INT_MIN;
      for (const auto& [e, c] : p.terms()) {
        (void)c;
        deg = std::max(deg, e[static_cast<int>(Param::d)]);
      }
      return deg;
    };
    for (int m = 1; m <= 3; ++m)
      for (int l : weight_range(m)) {
        GramReport g = gram_matrix(m, l);
        for (size_t i = 0; i < g.matrix.size(); ++i) {
          int diag = d_degree(g.matrix[i][i]);
          for (size_t j = 0; j < g.matrix.size(); ++j) {
            if (g.matrix[i][j].is_zero()) continue;
            CHECK(diag >= d_degree(g.matrix[i][j]));
          }
        }
      }
  }
  SECTION("determinant evaluation commutes with matrix evaluation") {
    std::mt19937 rng(8080);
    std::uniform_int_distribution<int> v(1, 7);
    for (int m = 1; m <= 2; ++m)
      for (int l : weight_range(m)) {
        GramReport g = gram_matrix(m, l);
        for (int t = 0; t < 5; ++t) {
          RationalPoint p = pt6(v(rng), v(rng), v(rng), v(rng), v(rng), v(rng));
          auto evaluated = evaluate_matrix(g.matrix, p);
          // rational determinant by elimination
          int n = static_cast<int>(evaluated.size());
          Rational det = 1;
          int sign = 1;
          for (int k = 0; k < n; ++k) {
            int piv = k;
            while (piv < n && evaluated[piv][k] == 0) ++piv;
            if (piv == n) {
              det = 0;
              break;
            }
            if (piv != k) {
              std::swap(evaluated[piv], evaluated[k]);
              sign = -sign;
            }
            det *= evaluated[k][k];
            for (int i = k + 1; i < n; ++i) {
              Rational f = evaluated[i][k] / evaluated[k][k];
              for (int j = k; j < n; ++j) evaluated[i][j] -= f * evaluated[k][j];
            }
          }
          det *= sign;
          CHECK(g.determinant.evaluate(p) == det);
        }
      }
  }
  SECTION("factorisation reconstructs the determinant") {
    for (int m = 1; m <= 3; ++m)
      for (int l : weight_range(m)) {
        GramReport g = gram_matrix(m, l);
        CHECK(g.factorisation.reconstruct() == g.determinant);
      }
  }
}

TEST_CASE("restriction to the blob algebra") {
  SECTION("weight zero restricts to one copy of each blob standard") {
    for (int m = 1; m <= 5; ++m) {
      auto sections = restrict_to_blob(m, 0);
      CHECK(sections.size() == static_cast<size_t>(m) + 1);
      long total = 0;
      std::set<int> weights;
      for (const auto& s : sections) {
        total += s.dim;
        weights.insert(s.blob_weight);
        int c = std::abs(s.blob_weight);
        CHECK(s.dim == binomial(m, (m - c) / 2));
      }
      CHECK(total == (1L << m));
      CHECK(weights.size() == sections.size());  // one copy of each
    }
  }
  SECTION("ur value sets follow the four parity cases") {
    for (int m = 1; m <= 5; ++m)
      for (int l : weight_range(m)) {
        if (l == 0) continue;
        int x = std::abs(l);
        std::set<int> expected;
        if ((m - x) % 2 == 1 && l < 0)
          for (int r = m - x - 1; r >= 0; r -= 2) expected.insert(r);
        if ((m - x) % 2 == 1 && l > 0)
          for (int r = m - x; r >= 1; r -= 2) expected.insert(r);
        if ((m - x) % 2 == 0 && l > 0)
          for (int r = m - x - 1; r >= 1; r -= 2) expected.insert(r);
        if ((m - x) % 2 == 0 && l < 0)
          for (int r = m - x; r >= 0; r -= 2) expected.insert(r);
        std::set<int> got;
        long total = 0;
        for (const auto& s : restrict_to_blob(m, l)) {
          got.insert(s.ur);
          total += s.dim;
          int c = std::abs(s.blob_weight);
          CHECK(s.dim == binomial(m, (m - c) / 2));
        }
        CHECK(got == expected);
        CHECK(total == dimension(m, l));
      }
  }
  SECTION("m=3 examples") {
    auto sections = restrict_to_blob(3, 0);
    std::multiset<long> dims;
    for (const auto& s : sections) dims.insert(s.dim);
    CHECK(dims == std::multiset<long>{1, 1, 3, 3});
    std::set<int> urs;
    for (const auto& s : restrict_to_blob(3, -1)) urs.insert(s.ur);
    CHECK(urs == std::set<int>{0, 2});
  }
}

TEST_CASE("globalisation of module bases") {
  SECTION("the S_0 tower has bases of size 2, 4, 8") {
    CHECK(standard_basis(1, 0).size() == 2u);
    auto g2 = globalise_module(2, 0);
    CHECK(g2.seed_size == 2u);
    CHECK(g2.closure_size == 4u);
    CHECK(g2.matches_standard_basis);
    auto g3 = globalise_module(3, 0);
    CHECK(g3.seed_size == 4u);
    CHECK(g3.closure_size == 8u);
    CHECK(g3.matches_standard_basis);
  }
  SECTION("G lands in weight -l and G' in weight l, all weights, m <= 3") {
    for (int m = 2; m <= 3; ++m)
      for (int l : weight_range(m - 1)) {
        auto g = globalise_module(m, l, false);
        CHECK(g.target_l == -l);
        CHECK(g.seed_size == static_cast<size_t>(dimension(m - 1, l)));
        CHECK(g.matches_standard_basis);
        auto gp = globalise_module(m, l, true);
        CHECK(gp.target_l == l);
        CHECK(gp.matches_standard_basis);
      }
  }
  SECTION("G and G' commute on kets") {
    for (int m = 1; m <= 3; ++m)
      for (int l : weight_range(m))
        for (const Ket& k : weight_kets(m, l))
          CHECK(globalise_ket(globalise_ket_right(k)) == globalise_ket_right(globalise_ket(k)));
  }
}

TEST_CASE("cellularity checks") {
  auto rep1 = check_cellularity(1);
  CHECK(rep1.involution_antiautomorphism);
  CHECK(rep1.involution_involutive);
  CHECK(rep1.cut_recombine_bijective);
  CHECK(rep1.lower_terms_axiom);
  CHECK(rep1.pairs_checked == 25u);

  // e and f are fixed by the involution
  for (int m = 1; m <= 3; ++m) {
    CHECK(Strip::e_gen(m).flipped() == Strip::e_gen(m));
    CHECK(Strip::f_gen(m).flipped() == Strip::f_gen(m));
  }

  auto rep2 = check_cellularity(2);
  CHECK(rep2.involution_antiautomorphism);
  CHECK(rep2.involution_involutive);
  CHECK(rep2.cut_recombine_bijective);
  CHECK(rep2.lower_terms_axiom);
}

TEST_CASE("semisimplicity scan") {
  SECTION("rejects zero parameters") {
    CHECK_THROWS_AS(semisimplicity_scan(1, pt6(0, 1, 1, 1, 1, 1)), ZeroParameter);
  }
  SECTION("generic point at m = 2 is semisimple") {
    auto rep = semisimplicity_scan(2, pt6(2, 3, 5, 7, 11, 13));
    CHECK(!rep.any_gram_vanishes);
    for (const auto& e : rep.entries) CHECK(e.rank == e.dim);
  }
  SECTION("the applicability table follows the parity of m") {
    auto rep3 = semisimplicity_scan(1, pt6(1, 1, 1, 1, 1, 1));
    for (const auto& c : rep3.conditions) CHECK(!c.applicable);  // m = 1 below all bounds
  }
}
