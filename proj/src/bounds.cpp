#include "addbasis/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace addbasis {

namespace {

void require_positive(Int v, const char* what) {
  if (v < 1) throw Error(Errc::PreconditionViolated, std::string(what) + " must be positive");
}

BoundValue certified(std::string name, BigInt value, BoundInputs in) {
  BoundValue b;
  b.name = std::move(name);
  b.reference = value.convert_to<double>();
  b.value = std::move(value);
  b.inputs = in;
  return b;
}

}  // namespace

BigInt binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (Int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BoundValue nash_general(int h, Int k) {
  require_positive(h, "h");
  require_positive(k, "k");
  BigInt v = BigInt(h + 1) * binomial(h + k - 1, k) - BigInt(k) * binomial(h + k - 1, k + 1);
  return certified("nash", std::move(v), {.h = h, .k = k});
}

BoundValue nash_original_sum(int h, Int k) {
  require_positive(h, "h");
  require_positive(k, "k");
  BigInt v = binomial(h + k - 1, k);
  for (Int i = 0; i < h; ++i) v += binomial(k + i - 1, i) * (h - i);
  return certified("nash_original", std::move(v), {.h = h, .k = k});
}

BoundValue farhi_d(int h, Int d) {
  require_positive(h, "h");
  if (d < 0) throw Error(Errc::PreconditionViolated, "d must be non-negative");
  const BigInt hb = h;
  BigInt v = hb * (hb + 3) / 2 + BigInt(d) * hb * (hb - 1) * (hb + 4) / 6;
  return certified("farhi_d", std::move(v), {.h = h, .d = d});
}

BigInt farhi_d_sum(int h, Int d) {
  BigInt s = 0;
  for (Int l = 0; l < h; ++l) s += BigInt(l * d + 1) * (h - l + 1);
  return s;
}

BoundValue farhi_eta(int h, Int eta) {
  require_positive(h, "h");
  require_positive(eta, "eta");
  const BigInt hb = h;
  BigInt v = BigInt(eta) * (hb * hb - 1) + hb + 1;
  return certified("farhi_eta", std::move(v), {.h = h, .eta = eta});
}

BoundValue farhi_mu(int h, Int mu) {
  require_positive(h, "h");
  require_positive(mu, "mu");
  const BigInt n = BigInt(h) * mu;
  return certified("farhi_mu", n * (n + 3) / 2, {.h = h, .mu = mu});
}

BoundValue remark_d(int h, Int d) {
  require_positive(h, "h");
  require_positive(d, "d");
  const BigInt n = BigInt(h) * d;
  return certified("remark_d", n * (n + 1) * (n + 5) / 6, {.h = h, .d = d});
}

BoundValue corollary2(int h, Int k) {
  require_positive(k, "k");
  auto b = farhi_d(h, k - 1);
  b.name = "cor2";
  b.inputs.k = k;
  return b;
}

std::vector<BoundValue> historical_single(int h) {
  require_positive(h, "h");
  const BigInt hb = h;
  const BoundInputs in{.h = h, .k = 1};
  std::vector<BoundValue> out;

  BoundValue eg;
  eg.name = "erdos_graham";
  eg.certified = false;
  const double hd = h;
  eg.reference = 1.25 * hd * hd + 0.5 * hd * std::log(hd) + 2.0 * hd;
  eg.value = BigInt(static_cast<long long>(std::ceil(eg.reference)));
  eg.inputs = in;
  out.push_back(std::move(eg));

  out.push_back(certified("grekos", hb * hb + hb, in));
  out.push_back(certified("nash_single", (hb * hb + 3 * hb) / 2, in));
  out.push_back(certified("plagne", hb * (hb + 1) / 2 + (hb - 1 + 2) / 3, in));
  return out;
}

MagnitudeReference magnitude_reference(int h, Int k) {
  require_positive(h, "h");
  require_positive(k, "k");
  const double ratio = static_cast<double>(h) / static_cast<double>(k + 1);
  MagnitudeReference m;
  m.nathanson_nash_lower = std::pow(ratio, static_cast<double>(k + 1));
  m.jia_lower = 4.0 / 3.0 * m.nathanson_nash_lower;
  m.upper = 2.0 / std::tgamma(static_cast<double>(k + 1)) * std::pow(static_cast<double>(h), static_cast<double>(k + 1));
  return m;
}

std::vector<BoundValue> compare_all(int h, const RemovalParameters& p) {
  std::vector<BoundValue> out{nash_general(h, p.k), farhi_d(h, p.d), farhi_eta(h, p.eta), farhi_mu(h, p.mu)};
  if (p.d >= 1) out.push_back(remark_d(h, p.d));
  if (p.arithmetic_progression) out.push_back(corollary2(h, p.k));
  std::stable_sort(out.begin(), out.end(), [](const BoundValue& a, const BoundValue& b) {
    if (a.value != b.value) return a.value < b.value;
    return a.name < b.name;
  });
  return out;
}

}  // namespace addbasis
