#pragma once

// Closed-form tails of power series of the form sum_{k>n} w(k) r^(k-1).
//
// The weights come from the coefficient bounds of the two families:
//   general analytic      k(k+1)(2k+1)/6
//   general co-analytic   k(k-1)(2k-1)/6
//   convex analytic       k(k+1)/2
//   convex co-analytic    k(k-1)/2
// Each is an integer combination of k, k^2 and k^3, so every tail is a
// linear combination of tail_k, tail_k2 and tail_k3.

#include <cstdint>
#include <string_view>

namespace hsec {

enum class TailClass {
  GeneralAnalytic,
  GeneralCoAnalytic,
  ConvexAnalytic,
  ConvexCoAnalytic,
};

inline constexpr TailClass kAllTailClasses[] = {
    TailClass::GeneralAnalytic, TailClass::GeneralCoAnalytic,
    TailClass::ConvexAnalytic, TailClass::ConvexCoAnalytic};

std::string_view to_string(TailClass c);

/// Weight w(k) of the class, computed in 64-bit integers (k < 1.6e6).
double tail_weight(TailClass c, std::int64_t k);

/// sum_{k=n+1}^inf k r^(k-1).
double tail_k(int n, double r);
/// sum_{k=n+1}^inf k^2 r^(k-1).
double tail_k2(int n, double r);
/// sum_{k=n+1}^inf k^3 r^(k-1).
double tail_k3(int n, double r);

/// sum_{k=n+1}^inf w(k) r^(k-1), requires n >= 1 and 0 <= r < 1.
double tail_weighted(TailClass c, int n, double r);

/// Truncated sum over k = n+1 .. n+terms. Test oracle only; converges
/// far too slowly near r = 1 to be used anywhere else.
double tail_brute(TailClass c, int n, double r, std::int64_t terms);

}  // namespace hsec
