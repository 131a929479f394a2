#include "qhermite/families.hpp"

#include <cassert>

namespace qh {

XPoly PolyFamily::at(int n) const {
  if (n < 0) throw std::invalid_argument("PolyFamily::at: negative degree");
  if (static_cast<size_t>(n) >= ready_.load(std::memory_order_acquire))
    grow_to(n);
  return cache_[n];
}

void PolyFamily::grow_to(int n) const {
  std::lock_guard<std::mutex> lock(grow_mutex_);
  for (size_t i = ready_.load(std::memory_order_relaxed);
       i <= static_cast<size_t>(n); ++i) {
    cache_.push_back(compute(static_cast<int>(i)));
    ready_.store(i + 1, std::memory_order_release);
  }
}

XPoly PolyFamily::compute(int n) const {
  VariableKind vk = kind_ == FamilyKind::q_inv_hermite
                        ? VariableKind::hyperbolic
                        : VariableKind::cosine;
  if (kind_ == FamilyKind::q_inv_hermite) {
    // h_n = i^-n H_n(ix | q^-1): flip the sign of every coefficient whose
    // x-power is two steps below the degree mod 4, and invert s.
    XPoly base = qhermite(n);
    XPoly result(vk);
    for (int k = n; k >= 0; k -= 2) {
      SPoly c = base.coeff(k).substitute_s_inverse();
      if (((n - k) / 2) % 2 != 0) c = -c;
      result.set_coeff(k, c);
    }
    return result;
  }

  if (n == 0) return XPoly::constant(SPoly::one(), vk);
  if (n == 1) return XPoly::monomial(SPoly(Rational(2)), 1, vk);

  XPoly two_x = XPoly::monomial(SPoly(Rational(2)), 1, vk);
  XPoly prev = at(n - 2), cur = at(n - 1);
  SPoly step = kind_ == FamilyKind::q_hermite
                   ? SPoly::one() - SPoly::q_power(n - 1)
                   : SPoly(Rational(2 * (n - 1)));
  return two_x * cur - prev.scaled(step);
}

namespace {

PolyFamily& family_instance(FamilyKind kind) {
  static PolyFamily q{FamilyKind::q_hermite};
  static PolyFamily q_inv{FamilyKind::q_inv_hermite};
  static PolyFamily classical{FamilyKind::classical_hermite};
  switch (kind) {
    case FamilyKind::q_hermite:
      return q;
    case FamilyKind::q_inv_hermite:
      return q_inv;
    default:
      return classical;
  }
}

}  // namespace

XPoly qhermite(int n) { return family_instance(FamilyKind::q_hermite).at(n); }

XPoly qinv_hermite(int n) {
  return family_instance(FamilyKind::q_inv_hermite).at(n);
}

XPoly classical_hermite(int n) {
  return family_instance(FamilyKind::classical_hermite).at(n);
}

SPoly qpoch_symbolic(int a_exponent, int n) {
  assert(n >= 0);
  SPoly result = SPoly::one();
  for (int j = 0; j < n; ++j)
    result *= SPoly::one() - SPoly::q_power(a_exponent + j);
  return result;
}

namespace {

// (q^{m+1}; q)_{N-m} = (q;q)_N / (q;q)_m as a direct product; the common
// denominator used while multiplying the factor series.
SPoly poch_tail(int m, int order) { return qpoch_symbolic(m + 1, order - m); }

}  // namespace

std::vector<ZFun> rogers_genfun_coeffs(int order) {
  assert(order >= 0);
  const int N = order;
  // Factor series over the common denominator (q;q)_N:
  //   [t^m] (t z^{+-1}; q)_inf^{-1} = z^{+-m} / (q;q)_m
  std::vector<SPoly> tails(N + 1);
  for (int m = 0; m <= N; ++m) tails[m] = poch_tail(m, N);

  SPoly poch_n = SPoly::one();  // (q;q)_n, grown incrementally
  SPoly denom = qpoch_symbolic(1, N) * qpoch_symbolic(1, N);
  std::vector<ZFun> result;
  result.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) poch_n *= SPoly::one() - SPoly::q_power(n);
    ZFun conv(VariableKind::cosine);
    for (int j = 0; j <= n; ++j)
      conv += ZFun::monomial(tails[j] * tails[n - j], j - (n - j));
    // Clear: multiply by (q;q)_n, divide by the squared common denominator.
    ZFun cleared(VariableKind::cosine);
    for (const auto& [e, c] : conv.terms())
      cleared.set_coeff(e, exact_div(c * poch_n, denom));
    result.push_back(std::move(cleared));
  }
  return result;
}

std::vector<ZFun> hyperbolic_genfun_coeffs(int order) {
  assert(order >= 0);
  const int N = order;
  std::vector<SPoly> tails(N + 1);
  for (int m = 0; m <= N; ++m) tails[m] = poch_tail(m, N);

  // [t^m] (t w^-1; q)_inf = (-1)^m q^{m(m-1)/2} w^-m / (q;q)_m
  // [t^m] (-t w; q)_inf  =        q^{m(m-1)/2} w^m  / (q;q)_m
  SPoly poch_n = SPoly::one();
  SPoly denom = qpoch_symbolic(1, N) * qpoch_symbolic(1, N);
  std::vector<ZFun> result;
  result.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    if (n > 0) poch_n *= SPoly::one() - SPoly::q_power(n);
    ZFun conv(VariableKind::hyperbolic);
    for (int j = 0; j <= n; ++j) {
      int k = n - j;
      SPoly c = tails[j] * tails[k];
      c = c.shifted(j * (j - 1) + k * (k - 1));  // q^{j(j-1)/2 + k(k-1)/2}
      if (j % 2 != 0) c = -c;
      conv += ZFun::monomial(std::move(c), k - j, VariableKind::hyperbolic);
    }
    // Clear (q;q)_n and the q^{n(n-1)/2} prefactor.
    ZFun cleared(VariableKind::hyperbolic);
    for (const auto& [e, c] : conv.terms())
      cleared.set_coeff(e,
                        exact_div(c * poch_n, denom).shifted(-n * (n - 1)));
    result.push_back(std::move(cleared));
  }
  return result;
}

}  // namespace qh
