#pragma once

// Closed-form upper bounds for the order of A \ X, evaluated exactly.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "addbasis/basis.hpp"

namespace addbasis {

using BigInt = boost::multiprecision::cpp_int;

struct BoundInputs {
  int h = 0;
  std::optional<Int> k{}, d{}, eta{}, mu{};
};

struct BoundValue {
  std::string name;
  BigInt value;
  /// false for asymptotic or real-valued references that carry unstated O(.) terms
  bool certified = true;
  /// real value for references; equals value for certified bounds
  double reference = 0.0;
  BoundInputs inputs;
};

/// C(n, k); 0 when k < 0 or k > n.
BigInt binomial(Int n, Int k);

/// (h+1) C(h+k-1, k) - k C(h+k-1, k+1)
BoundValue nash_general(int h, Int k);
/// C(h+k-1, k) + Σ_{i<h} C(k+i-1, i)(h-i), the unsimplified form
BoundValue nash_original_sum(int h, Int k);
/// h(h+3)/2 + d h(h-1)(h+4)/6
BoundValue farhi_d(int h, Int d);
/// Σ_{l<h} (l d + 1)(h - l + 1), the sum the closed form comes from
BigInt farhi_d_sum(int h, Int d);
/// η(h²-1) + h + 1
BoundValue farhi_eta(int h, Int eta);
/// hμ(hμ+3)/2
BoundValue farhi_mu(int h, Int mu);
/// hd(hd+1)(hd+5)/6, requires d >= 1
BoundValue remark_d(int h, Int d);
/// farhi_d(h, k-1), valid when X is an arithmetic progression
BoundValue corollary2(int h, Int k);

/// Single-element bounds: erdos_graham (reference), grekos, nash_single, plagne.
std::vector<BoundValue> historical_single(int h);

struct MagnitudeReference {
  double nathanson_nash_lower = 0;  // (h/(k+1))^{k+1}
  double jia_lower = 0;             // 4/3 (h/(k+1))^{k+1}
  double upper = 0;                 // (2/k!) h^{k+1}

  double lower() const noexcept { return jia_lower; }
};

/// Main terms only; not certified at finite h.
MagnitudeReference magnitude_reference(int h, Int k);

/// Every applicable bound for (h, params), sorted by value then name.
/// remark_d is included only for d >= 1, cor2 only for arithmetic progressions.
std::vector<BoundValue> compare_all(int h, const RemovalParameters& params);

}  // namespace addbasis
