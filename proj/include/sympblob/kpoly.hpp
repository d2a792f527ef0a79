#pragma once

/*
  The named determinant factors K0, K1, K2, K3, K13 in the six blob
  parameters, the commuting swap operators Phi (dL <-> kL) and
  Psi (dR <-> kR), and trial-division factorisation against the fixed
  catalogue of parameters and K-polynomials.
*/

#include <string>
#include <utility>
#include <vector>

#include "sympblob/laurent.hpp"

namespace sympblob {

inline Laurent phi(const Laurent& p) { return p.swap_params(Param::dL, Param::kL); }
inline Laurent psi(const Laurent& p) { return p.swap_params(Param::dR, Param::kR); }

inline Laurent K0() { return Laurent::param(Param::kLR); }

// K1 = dL*dR - kLR
inline Laurent K1() {
  return Laurent::param(Param::dL) * Laurent::param(Param::dR) - Laurent::param(Param::kLR);
}

// K2 = kLR - dL*kR - kL*dR + d*dL*dR
inline Laurent K2() {
  using L = Laurent;
  return L::param(Param::kLR) - L::param(Param::dL) * L::param(Param::kR) -
         L::param(Param::kL) * L::param(Param::dR) +
         L::param(Param::d) * L::param(Param::dL) * L::param(Param::dR);
}

// K3 = d^2*dL*dR - d*dL*kR - d*dR*kL - dL*dR + kL*kR
inline Laurent K3() {
  using L = Laurent;
  return L::param(Param::d, 2) * L::param(Param::dL) * L::param(Param::dR) -
         L::param(Param::d) * L::param(Param::dL) * L::param(Param::kR) -
         L::param(Param::d) * L::param(Param::dR) * L::param(Param::kL) -
         L::param(Param::dL) * L::param(Param::dR) +
         L::param(Param::kL) * L::param(Param::kR);
}

// K13 = d^2*dL*dR - d*dL*kR - d*dR*kL + kL*kR - kLR
inline Laurent K13() {
  using L = Laurent;
  return L::param(Param::d, 2) * L::param(Param::dL) * L::param(Param::dR) -
         L::param(Param::d) * L::param(Param::dL) * L::param(Param::kR) -
         L::param(Param::d) * L::param(Param::dR) * L::param(Param::kL) +
         L::param(Param::kL) * L::param(Param::kR) - L::param(Param::kLR);
}

enum class SwapOp { id, Phi, Psi, PhiPsi };

inline Laurent apply_swap(SwapOp op, const Laurent& p) {
  switch (op) {
    case SwapOp::id: return p;
    case SwapOp::Phi: return phi(p);
    case SwapOp::Psi: return psi(p);
    case SwapOp::PhiPsi: return phi(psi(p));
  }
  return p;
}

struct KPolynomial {
  std::string name;  // e.g. "K2", "Psi(K2)", or a bare parameter name
  Laurent value;
};

// The catalogue used for trial division: the six parameters, then the
// Phi/Psi orbit of each named K-polynomial (duplicates removed, names of
// the first occurrence kept).
inline const std::vector<KPolynomial>& k_catalogue() {
  static const std::vector<KPolynomial> catalogue = [] {
    std::vector<KPolynomial> out;
    for (int i = 0; i < kParamCount; ++i) {
      Param p = static_cast<Param>(i);
      out.push_back({param_name(p), Laurent::param(p)});
    }
    const std::vector<std::pair<std::string, Laurent>> base = {
        {"K0", K0()}, {"K1", K1()}, {"K2", K2()}, {"K3", K3()}, {"K13", K13()}};
    const std::vector<std::pair<std::string, SwapOp>> ops = {
        {"", SwapOp::id}, {"Phi", SwapOp::Phi}, {"Psi", SwapOp::Psi}, {"PhiPsi", SwapOp::PhiPsi}};
    for (const auto& [bname, bval] : base) {
      for (const auto& [oname, op] : ops) {
        Laurent v = apply_swap(op, bval);
        bool seen = false;
        for (const auto& entry : out)
          if (entry.value == v) {
            seen = true;
            break;
          }
        if (seen) continue;
        std::string name = oname.empty() ? bname : oname + "(" + bname + ")";
        out.push_back({name, v});
      }
    }
    return out;
  }();
  return catalogue;
}

struct Factorisation {
  std::vector<std::pair<KPolynomial, int>> factors;  // factor, multiplicity
  Laurent remainder;

  Laurent reconstruct() const {
    Laurent p = remainder;
    for (const auto& [f, mult] : factors) p *= f.value.pow(mult);
    return p;
  }

  std::string to_string() const {
    if (factors.empty()) return remainder.to_string();
    std::string out;
    if (!remainder.is_one()) out = "(" + remainder.to_string() + ")";
    for (const auto& [f, mult] : factors) {
      if (!out.empty()) out += " * ";
      out += f.name;
      if (mult != 1) out += "^" + std::to_string(mult);
    }
    return out;
  }
};

// Greedy trial division of p against the fixed catalogue. Parameter
// (monomial) factors are read off the monomial content, so their
// multiplicities may be negative in the Laurent ring; the K-polynomials
// are then divided out until none divides. Always exact:
// p == remainder * prod factors^mult.
inline Factorisation factor_against_klist(const Laurent& p) {
  Factorisation out;
  out.remainder = p;
  if (p.is_zero()) return out;

  Exponents c = p.content();
  for (int i = 0; i < kParamCount; ++i) {
    if (c[i] != 0) {
      Param par = static_cast<Param>(i);
      out.factors.push_back({{param_name(par), Laurent::param(par)}, c[i]});
    }
  }
  Exponents unshift;
  for (int i = 0; i < kParamCount; ++i) unshift[i] = -c[i];
  Laurent rest = p.shifted(unshift);

  for (const auto& entry : k_catalogue()) {
    if (entry.value.is_monomial()) continue;  // parameters handled via content
    int mult = 0;
    while (true) {
      auto q = divide_exact(rest, entry.value);
      if (!q) break;
      rest = *q;
      ++mult;
    }
    if (mult > 0) out.factors.push_back({entry, mult});
  }
  out.remainder = rest;
  return out;
}

}  // namespace sympblob
