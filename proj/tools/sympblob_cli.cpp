/*
  Command line front end for the diagram algebra toolkit: basis
  enumeration, multiplication, Gram matrices, dimension tables,
  verification suites and parameter scans.

  Data goes to stdout, diagnostics to stderr.  Exit codes: 0 on
  success, 1 on a data error or failed verification, 2 on a usage
  error.  SYMPBLOB_MAX_RANK (default 8) bounds the accepted ranks.
*/

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

#include "sympblob/json_io.hpp"
#include "sympblob/presentations.hpp"
#include "sympblob/rewrite.hpp"

using namespace sympblob;

namespace {

int max_rank() {
  if (const char* env = std::getenv("SYMPBLOB_MAX_RANK")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 8;
}

void check_rank(int r) {
  if (r < 0 || r > max_rank())
    throw std::runtime_error("rank " + std::to_string(r) + " exceeds the limit " +
                             std::to_string(max_rank()) + " (set SYMPBLOB_MAX_RANK to raise it)");
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  Rational r;
  if (slash == std::string::npos)
    r = Rational(mpz_class(s));
  else
    r = Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  r.canonicalize();
  return r;
}

RationalPoint parse_point(const std::vector<std::string>& sets) {
  RationalPoint pt{};
  std::array<bool, kParamCount> given{};
  for (const auto& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos) throw CLI::ValidationError("--set expects name=value");
    auto p = param_from_string(kv.substr(0, eq));
    if (!p) throw CLI::ValidationError("unknown parameter '" + kv.substr(0, eq) + "'");
    pt[static_cast<int>(*p)] = parse_rational(kv.substr(eq + 1));
    given[static_cast<int>(*p)] = true;
  }
  for (int i = 0; i < kParamCount; ++i)
    if (!given[i])
      throw CLI::ValidationError(std::string("parameter ") + param_name(static_cast<Param>(i)) +
                                 " not set (this command needs a full numeric point)");
  return pt;
}

// --- verify suites ----------------------------------------------------------

bool suite_presentation(std::ostream& os) {
  bool ok = true;
  for (int n = 1; n <= 4; ++n)
    for (auto which : {Presentation::TLb, Presentation::AffineC}) {
      auto rep = verify_presentation(which, n);
      ok &= rep.all_hold();
      os << "  " << rep.family << " n=" << n << ": " << (rep.all_hold() ? "ok" : "FAILED") << " ("
         << rep.relations.size() << " relations)\n";
    }
  return ok;
}

bool suite_confluence(std::ostream& os) {
  std::mt19937 rng(20240601);
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    auto basis = enumerate_Bx(m);
    std::vector<Strip> strips;
    for (const Diagram& d : basis) strips.push_back(unfold_mux(d));
    std::uniform_int_distribution<size_t> pick_el(0, basis.size() - 1);
    std::uniform_int_distribution<int> nstack(2, 4);
    int accepted = 0;
    bool here = true;
    while (accepted < 600) {
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
      here &= (k1 == k2 && d1 == fold_nu(s2));
      auto chooser = [&](size_t nn) { return std::uniform_int_distribution<size_t>(0, nn - 1)(rng); };
      auto [k3, d3] = rect_reduce(rect, chooser);
      here &= (k3 == k1 && d3 == d1);
    }
    os << "  m=" << m << ": " << accepted
       << " pseudodiagrams, rectangular vs periodic and randomised orders: "
       << (here ? "ok" : "FAILED") << "\n";
    ok &= here;
  }
  return ok;
}

bool suite_fold_roundtrip(std::ostream& os) {
  bool ok = true;
  for (int m = 1; m <= 3; ++m) {
    auto strips = enumerate_Bphi(m);
    bool here = true;
    for (const Strip& s : strips) here &= (unfold_mux(fold_nu(s)) == s);
    for (const Diagram& d : enumerate_Bx(m)) here &= (fold_nu(unfold_mux(d)) == d);
    os << "  m=" << m << ": " << strips.size() << " diagrams: " << (here ? "ok" : "FAILED") << "\n";
    ok &= here;
  }
  return ok;
}

bool suite_cellularity(std::ostream& os) {
  bool ok = true;
  for (int m = 1; m <= 2; ++m) {
    auto rep = check_cellularity(m);
    bool here = rep.involution_antiautomorphism && rep.involution_involutive &&
                rep.cut_recombine_bijective && rep.lower_terms_axiom;
    os << "  m=" << m << ": " << rep.pairs_checked << " pairs: " << (here ? "ok" : "FAILED")
       << "\n";
    ok &= here;
  }
  return ok;
}

bool suite_dims(std::ostream& os) {
  bool ok = true;
  for (int m = 0; m <= 6; ++m)
    for (int l : weight_range(m))
      ok &= (dimension(m, l) == static_cast<long>(standard_basis(m, l).size()));
  for (int m = 0; m <= 4; ++m) {
    long total = 0;
    for (int l : weight_range(m)) total += dimension(m, l) * dimension(m, l);
    ok &= (total == static_cast<long>(enumerate_Bphi(m).size()));
  }
  os << "  closed form vs enumeration (m <= 6) and rank sums (m <= 4): " << (ok ? "ok" : "FAILED")
     << "\n";
  return ok;
}

bool suite_gram_identities(std::ostream& os) {
  GramReport g1 = gram_matrix(3, -1);
  Laurent e1 = Laurent::param(Param::kL) * Laurent::param(Param::kR) * K3();
  bool ok1 = g1.determinant == e1;
  os << "  Gram(6,-1) = kL kR K3: " << (ok1 ? "ok" : "FAILED") << "\n";
  GramReport g0 = gram_matrix(3, 0);
  Laurent e0 = Laurent::param(Param::kLR).pow(4) * K1().pow(4) * psi(phi(K1())) * psi(K2()) *
               phi(K2()) * K13();
  bool ok0 = g0.determinant == e0;
  os << "  Gram(6,0) = kLR^4 K1^4 PhiPsi(K1) Psi(K2) Phi(K2) K13: " << (ok0 ? "ok" : "FAILED")
     << "\n";
  return ok1 && ok0;
}

// --- element printing ---------------------------------------------------------

template <typename D, typename ToJson>
void print_element(const Element<D>& x, const std::string& format, ToJson to_j) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& [d, c] : x.terms) {
      json t;
      t["coefficient"] = c.to_string();
      t["diagram"] = to_j(d);
      arr.push_back(t);
    }
    std::cout << arr.dump() << "\n";
    return;
  }
  if (x.terms.empty()) {
    std::cout << "0\n";
    return;
  }
  for (const auto& [d, c] : x.terms)
    std::cout << "(" << c.to_string() << ") * " << to_j(d).dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram algebra toolkit for Temperley-Lieb, blob, contour and symplectic blob"};
  app.require_subcommand(1);
  std::ostream& err = std::cerr;

  // enumerate
  auto* cmd_enum = app.add_subcommand("enumerate", "list a diagram basis");
  std::string en_family = "tl", en_format = "text";
  int en_n = 1, en_period = 2, en_level = 0;
  cmd_enum->add_option("--family", en_family, "tl | blob | contour | bx | bphi")->required();
  cmd_enum->add_option("--n,--rank,--m", en_n, "rank")->required();
  cmd_enum->add_option("--period", en_period, "contour bead period");
  cmd_enum->add_option("--level", en_level, "contour exposure bound");
  cmd_enum->add_option("--format", en_format, "text | json | count");

  // multiply
  auto* cmd_mul = app.add_subcommand("multiply", "multiply two basis diagrams");
  std::string mu_family = "bx", mu_lhs, mu_rhs, mu_format = "text";
  cmd_mul->add_option("--family", mu_family, "blob | bx | bphi")->required();
  cmd_mul->add_option("--lhs", mu_lhs, "left operand, JSON")->required();
  cmd_mul->add_option("--rhs", mu_rhs, "right operand, JSON")->required();
  cmd_mul->add_option("--format", mu_format, "text | json");

  // gram
  auto* cmd_gram = app.add_subcommand("gram", "Gram matrix and determinant of a standard module");
  int gr_m = 1, gr_l = 0;
  bool gr_matrix = false;
  std::string gr_format = "text";
  cmd_gram->add_option("--m", gr_m, "half period")->required();
  cmd_gram->add_option("--weight", gr_l, "module weight")->required();
  cmd_gram->add_flag("--matrix", gr_matrix, "also print the matrix");
  cmd_gram->add_option("--format", gr_format, "text | json | csv");

  // dims
  auto* cmd_dims = app.add_subcommand("dims", "dimension table of the standard modules");
  int dm_m = 4;
  std::string dm_format = "text";
  cmd_dims->add_option("--m", dm_m, "table rows run from 0 to m")->required();
  cmd_dims->add_option("--format", dm_format, "text | json | csv");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run named property suites");
  std::string vf_suite = "all";
  cmd_verify->add_option(
      "--suite", vf_suite,
      "presentation | confluence | fold-roundtrip | cellularity | dims | gram-paper-identities | "
      "all");

  // scan
  auto* cmd_scan = app.add_subcommand("scan", "evaluate Gram determinants at a parameter point");
  int sc_m = 2;
  std::vector<std::string> sc_sets;
  cmd_scan->add_option("--m", sc_m, "half period")->required();
  cmd_scan->add_option("--set", sc_sets, "parameter assignment, e.g. --set kLR=3/2")->required();

  // export
  auto* cmd_export = app.add_subcommand("export", "write dimension tables or Gram reports");
  std::string ex_what = "dims", ex_format = "csv";
  int ex_m = 4, ex_l = 0;
  cmd_export->add_option("--what", ex_what, "dims | gram")->required();
  cmd_export->add_option("--m", ex_m, "rank bound / half period")->required();
  auto* exlopt = cmd_export->add_option("--weight", ex_l, "module weight (gram only)");
  cmd_export->add_option("--format", ex_format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_enum->parsed()) {
      check_rank(en_n);
      auto dump = [&](const auto& list) {
        if (en_format == "count") {
          std::cout << list.size() << "\n";
        } else if (en_format == "json") {
          json arr = json::array();
          for (const auto& d : list) arr.push_back(to_json(d));
          std::cout << arr.dump() << "\n";
        } else {
          for (const auto& d : list) std::cout << to_json(d).dump() << "\n";
        }
      };
      if (en_family == "tl")
        dump(enumerate_tl(en_n));
      else if (en_family == "blob")
        dump(enumerate_blob(en_n));
      else if (en_family == "contour")
        dump(enumerate_contour(en_n, en_period, en_level));
      else if (en_family == "bx")
        dump(enumerate_Bx(en_n));
      else if (en_family == "bphi")
        dump(enumerate_Bphi(en_n));
      else
        throw UnsupportedFamily(en_family);
    } else if (cmd_mul->parsed()) {
      if (mu_family == "bphi") {
        Strip a = strip_from_json(json::parse(mu_lhs));
        Strip b = strip_from_json(json::parse(mu_rhs));
        check_rank(a.m);
        StripElement prod = compose_phi(StripElement(a), StripElement(b));
        print_element(prod, mu_format, [](const Strip& s) { return to_json(s); });
      } else {
        Diagram a = diagram_from_json(json::parse(mu_lhs));
        Diagram b = diagram_from_json(json::parse(mu_rhs));
        check_rank(a.n);
        DiagramElement prod = mu_family == "blob"
                                  ? blob_mul(DiagramElement(a), DiagramElement(b))
                                  : compose_x(DiagramElement(a), DiagramElement(b));
        print_element(prod, mu_format, [](const Diagram& d) { return to_json(d); });
      }
    } else if (cmd_gram->parsed()) {
      check_rank(gr_m);
      GramReport g = gram_matrix(gr_m, gr_l);
      if (gr_format == "json") {
        std::cout << to_json(g).dump() << "\n";
      } else if (gr_format == "csv") {
        std::cout << gram_report_csv(g);
      } else {
        std::cout << g.factorisation.to_string() << "\n";
        if (gr_matrix) {
          for (size_t i = 0; i < g.matrix.size(); ++i) {
            for (size_t j = 0; j < g.matrix[i].size(); ++j)
              std::cout << (j ? " | " : "") << g.matrix[i][j].to_string();
            std::cout << "\n";
          }
        }
      }
    } else if (cmd_dims->parsed()) {
      check_rank(dm_m);
      if (dm_format == "json") {
        std::cout << dims_table_json(dm_m).dump() << "\n";
      } else if (dm_format == "csv") {
        std::cout << dims_table_csv(dm_m);
      } else {
        for (int m = 0; m <= dm_m; ++m) {
          std::cout << "m=" << m << ":";
          for (int l : weight_range(m)) std::cout << " S(" << l << ")=" << dimension(m, l);
          std::cout << "\n";
        }
      }
    } else if (cmd_verify->parsed()) {
      struct Suite {
        std::string name;
        bool (*run)(std::ostream&);
      };
      const std::vector<Suite> suites = {
          {"presentation", suite_presentation},
          {"confluence", suite_confluence},
          {"fold-roundtrip", suite_fold_roundtrip},
          {"cellularity", suite_cellularity},
          {"dims", suite_dims},
          {"gram-paper-identities", suite_gram_identities},
      };
      bool ok = true, matched = false;
      for (const auto& s : suites) {
        if (vf_suite != "all" && vf_suite != s.name) continue;
        matched = true;
        std::cout << s.name << ":\n";
        bool here = s.run(std::cout);
        std::cout << s.name << ": " << (here ? "PASS" : "FAIL") << "\n";
        ok &= here;
      }
      if (!matched) throw std::runtime_error("unknown suite '" + vf_suite + "'");
      if (!ok) return 1;
    } else if (cmd_scan->parsed()) {
      check_rank(sc_m);
      RationalPoint pt;
      try {
        pt = parse_point(sc_sets);
      } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
      }
      ScanReport rep = semisimplicity_scan(sc_m, pt);
      for (const auto& e2 : rep.entries)
        std::cout << "Gram(" << 2 * rep.m << "," << e2.l << "): dim=" << e2.dim
                  << " det=" << e2.det_value << " rank=" << e2.rank
                  << (e2.det_value == 0 ? "  [vanishes]" : "") << "\n";
      for (const auto& c : rep.conditions)
        std::cout << c.name << " = " << (c.vanishes ? "0" : "nonzero")
                  << (c.applicable ? "  [non-semisimple manifold at this m]" : "") << "\n";
    } else if (cmd_export->parsed()) {
      check_rank(ex_m);
      if (ex_what == "dims") {
        std::cout << (ex_format == "json" ? dims_table_json(ex_m).dump() + "\n"
                                          : dims_table_csv(ex_m));
      } else if (ex_what == "gram") {
        if (exlopt->count() == 0) throw std::runtime_error("export --what gram needs --weight");
        GramReport g = gram_matrix(ex_m, ex_l);
        std::cout << (ex_format == "json" ? to_json(g).dump() + "\n" : gram_report_csv(g));
      } else {
        throw std::runtime_error("unknown export '" + ex_what + "'");
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
