#pragma once

/*
  JSON and CSV serialisation of diagrams, strips, dimension tables and
  Gram reports.

  Rectangular diagram format (exact round trip, pairs ordered by least
  end, southern vertices written with a trailing "p"):

    {"n":3,"m":3,"pairs":[{"ends":["1","3p"],"word":"LR"},...],"loops":["L"]}

  Periodic symmetric diagram format (wall crossings and the belt are
  explicit; piece ends use N/S for vertices and W/E for wall points):

    {"period":4,"pieces":[{"ends":["N1","W1"]},...],"belt":1}
*/

#include <json.hpp>

#include "sympblob/rep.hpp"

namespace sympblob {

using nlohmann::json;

inline json to_json(const Diagram& d) {
  json pairs = json::array();
  for (const auto& p : d.pairs) {
    json jp;
    jp["ends"] = {p.a.to_string(), p.b.to_string()};
    if (!p.word.empty()) jp["word"] = p.word;
    pairs.push_back(jp);
  }
  json loops = json::array();
  for (const auto& [w, mult] : d.loops)
    for (int i = 0; i < mult; ++i) loops.push_back(w);
  json out;
  out["n"] = d.n;
  out["m"] = d.m;
  out["pairs"] = pairs;
  out["loops"] = loops;
  return out;
}

inline Diagram diagram_from_json(const json& j) {
  Diagram d;
  d.n = j.at("n").get<int>();
  d.m = j.at("m").get<int>();
  for (const auto& jp : j.at("pairs")) {
    auto ends = jp.at("ends");
    auto a = End::parse(ends.at(0).get<std::string>());
    auto b = End::parse(ends.at(1).get<std::string>());
    if (!a || !b) throw ParseError("bad diagram end");
    Word w = jp.contains("word") ? jp.at("word").get<std::string>() : Word{};
    d.pairs.emplace_back(*a, *b, w);
  }
  if (j.contains("loops"))
    for (const auto& jw : j.at("loops")) d.loops[canonical_loop_word(jw.get<std::string>())] += 1;
  d.normalise();
  return d;
}

inline json to_json(const Strip& s) {
  json pieces = json::array();
  for (const auto& p : s.pieces) {
    json jp;
    jp["ends"] = {p.a.to_string(), p.b.to_string()};
    pieces.push_back(jp);
  }
  json out;
  out["period"] = 2 * s.m;
  out["pieces"] = pieces;
  out["belt"] = s.belt_count();
  out["wall0_crossings"] = s.wall_points(StripEnd::Kind::W);
  out["wall1_crossings"] = s.wall_points(StripEnd::Kind::E);
  if (s.loops) out["loop_pairs"] = s.loops;
  return out;
}

inline StripEnd strip_end_from_string(const std::string& s) {
  if (s.size() < 2) throw ParseError("bad strip end '" + s + "'");
  int idx = std::stoi(s.substr(1));
  switch (s[0]) {
    case 'N': return sN(idx);
    case 'S': return sS(idx);
    case 'W': return sW(idx);
    case 'E': return sE(idx);
    case 'C': return sC(idx);
  }
  throw ParseError("bad strip end '" + s + "'");
}

inline Strip strip_from_json(const json& j) {
  int period = j.at("period").get<int>();
  if (period % 2) throw ParseError("period must be even");
  std::vector<StripPiece> ps;
  for (const auto& jp : j.at("pieces")) {
    auto ends = jp.at("ends");
    ps.emplace_back(strip_end_from_string(ends.at(0).get<std::string>()),
                    strip_end_from_string(ends.at(1).get<std::string>()));
  }
  int loops = j.contains("loop_pairs") ? j.at("loop_pairs").get<int>() : 0;
  return Strip(period / 2, std::move(ps), loops);
}

// --- tables ---------------------------------------------------------------------

inline json dims_table_json(int max_m) {
  json rows = json::array();
  for (int m = 0; m <= max_m; ++m) {
    json row;
    row["m"] = m;
    json cells = json::object();
    for (int l : weight_range(m)) cells[std::to_string(l)] = dimension(m, l);
    row["dims"] = cells;
    long total = 0;
    for (int l : weight_range(m)) total += dimension(m, l) * dimension(m, l);
    row["algebra_rank"] = total;
    rows.push_back(row);
  }
  return rows;
}

inline std::string dims_table_csv(int max_m) {
  std::string out = "m";
  for (int l = -max_m; l <= max_m - 1; ++l) out += ",l=" + std::to_string(l);
  out += "\n";
  for (int m = 0; m <= max_m; ++m) {
    out += std::to_string(m);
    for (int l = -max_m; l <= max_m - 1; ++l) {
      out += ",";
      bool in_range = m == 0 ? l == 0 : (l >= -m && l <= m - 1);
      if (in_range) out += std::to_string(dimension(m, l));
    }
    out += "\n";
  }
  return out;
}

inline json to_json(const GramReport& g) {
  json out;
  out["m"] = g.m;
  out["weight"] = g.l;
  out["dim"] = g.dim;
  out["basis"] = g.basis;
  json rows = json::array();
  for (const auto& row : g.matrix) {
    json r = json::array();
    for (const auto& e : row) r.push_back(e.to_string());
    rows.push_back(r);
  }
  out["matrix"] = rows;
  out["determinant"] = g.determinant.to_string();
  json factors = json::array();
  for (const auto& [f, mult] : g.factorisation.factors) {
    json jf;
    jf["name"] = f.name;
    jf["value"] = f.value.to_string();
    jf["multiplicity"] = mult;
    factors.push_back(jf);
  }
  out["factors"] = factors;
  out["remainder"] = g.factorisation.remainder.to_string();
  return out;
}

inline std::string gram_report_csv(const GramReport& g) {
  std::string out = "m,weight,dim,determinant,factored\n";
  out += std::to_string(g.m) + "," + std::to_string(g.l) + "," + std::to_string(g.dim) + ",\"" +
         g.determinant.to_string() + "\",\"" + g.factorisation.to_string() + "\"\n";
  out += "basis";
  for (const auto& b : g.basis) out += "," + b;
  out += "\n";
  for (size_t i = 0; i < g.matrix.size(); ++i) {
    out += g.basis[i];
    for (const auto& e : g.matrix[i]) out += ",\"" + e.to_string() + "\"";
    out += "\n";
  }
  return out;
}

}  // namespace sympblob
