#pragma once

#include <atomic>
#include <deque>
#include <mutex>
#include <vector>

#include "qhermite/zfun.hpp"

namespace qh {

enum class FamilyKind { q_hermite, q_inv_hermite, classical_hermite };

// Lazily grown, monotone cache of one polynomial family. Entries never move
// once published, so warm reads take no lock.
class PolyFamily {
 public:
  explicit PolyFamily(FamilyKind kind) : kind_(kind) {}
  PolyFamily(const PolyFamily&) = delete;
  PolyFamily& operator=(const PolyFamily&) = delete;

  FamilyKind family_kind() const { return kind_; }
  XPoly at(int n) const;

 private:
  void grow_to(int n) const;
  XPoly compute(int n) const;

  FamilyKind kind_;
  mutable std::deque<XPoly> cache_;
  mutable std::atomic<size_t> ready_{0};
  mutable std::mutex grow_mutex_;
};

// Continuous q-Hermite polynomial H_n(x|q), built by the three-term
// recurrence H_{n+1} = 2x H_n - (1 - q^n) H_{n-1}. Coefficients are
// polynomials in q (even powers of s only); degree n, leading coefficient
// 2^n, parity (-1)^n.
XPoly qhermite(int n);

// Continuous q^{-1}-Hermite polynomial h_n(x|q): the image of the q-Hermite
// family under x -> ix, i^-n normalization and q -> q^-1, which keeps the
// coefficients real Laurent polynomials in q. Degree n, leading coefficient
// 2^n; hyperbolic presentation kind (x = sinh phi).
XPoly qinv_hermite(int n);

// Ordinary (physicists') Hermite polynomial H_n(x) via
// H_{n+1} = 2x H_n - 2n H_{n-1}.
XPoly classical_hermite(int n);

// (q^a; q)_n = prod_{j=0}^{n-1} (1 - q^{a+j}), exact in the s-ring.
SPoly qpoch_symbolic(int a_exponent, int n);

// Truncated expansion of the Rogers generating function
//   1 / ((t z; q)_inf (t z^-1; q)_inf) = sum_n t^n H_n(x|q) / (q;q)_n.
// Returns terms 0..order with the (q;q)_n denominator cleared, so term n is
// exactly x_to_z(H_n). The two infinite-product factors are expanded as
// power series in t (coefficient of t^m is z^{+-m} / (q;q)_m, the closed
// form of the stacked geometric expansions), carried over the common
// denominator (q;q)_order, multiplied, and cleared by exact division. This
// path shares nothing with the recurrence construction.
std::vector<ZFun> rogers_genfun_coeffs(int order);

// Truncated expansion of the hyperbolic generating function
//   (t w^-1; q)_inf (-t w; q)_inf = sum_n q^{n(n-1)/2} t^n h_n / (q;q)_n.
// Term n is returned cleared of both (q;q)_n and q^{n(n-1)/2}, so it equals
// x_to_z(h_n) in the hyperbolic kind.
std::vector<ZFun> hyperbolic_genfun_coeffs(int order);

}  // namespace qh
