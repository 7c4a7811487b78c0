#pragma once

#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "vizing/domination.hpp"
#include "vizing/error.hpp"
#include "vizing/graph.hpp"

namespace vizing {

/// Arbitrary-precision rational; every inequality decision goes through this type.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::size_t num, std::size_t den) {
  if (den == 0) throw DegenerateInputError("zero denominator");
  return Rational(BigInt(num), BigInt(den));
}

/// "p/q", or "p" for integers.
inline std::string to_string(const Rational& r) {
  const auto num = boost::multiprecision::numerator(r);
  const auto den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

/// Parses "p/q", "p", or a terminating decimal like "0.25".
inline Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw ParseError("not a rational number: '" + text + "'", 0); };
  if (text.empty()) return fail();
  try {
    if (auto slash = text.find('/'); slash != std::string::npos) {
      BigInt num(text.substr(0, slash)), den(text.substr(slash + 1));
      if (den == 0) return fail();
      return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
      const std::string frac = text.substr(dot + 1);
      BigInt whole(text.substr(0, dot).empty() ? "0" : text.substr(0, dot));
      BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
      BigInt part(frac.empty() ? "0" : frac);
      return Rational(whole * scale + part, scale);
    }
    return Rational(BigInt(text));
  } catch (const std::runtime_error&) {
    return fail();
  }
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Domination density γ(G)/|V(G)|, kept with its unreduced parts.
struct Density {
  Rational value;
  std::size_t gamma = 0;
  std::size_t order = 0;
};

inline Density make_density(std::size_t gamma, std::size_t order) {
  return Density{make_rational(gamma, order), gamma, order};
}

inline Density rho(const Graph& g, GammaCache* cache = nullptr) {
  return make_density(gamma_number(g, cache), g.order());
}

struct DensityVizingResult {
  Density rho_g;
  Density rho_h;
  Density rho_product;
  bool holds = false;
};

/// ρ(G□H) >= ρ(G)ρ(H), evaluated in exact rationals.
inline DensityVizingResult density_vizing_check(const Graph& g, const Graph& h, const VizingOptions& opts = {}) {
  auto product = cartesian_product(g, h, opts.vertex_limit);
  DensityVizingResult r{rho(g, opts.cache), rho(h, opts.cache), rho(product.graph, opts.cache), false};
  r.holds = r.rho_product.value >= r.rho_g.value * r.rho_h.value;
  return r;
}

}  // namespace vizing
