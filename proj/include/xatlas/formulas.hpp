#pragma once

#include <cstdint>

#include "xatlas/rational.hpp"

namespace xatlas {

// Largest n accepted by the integer evaluators (keeps every product inside int64).
inline constexpr std::int64_t kFormulaMaxN = 40000;

inline constexpr std::int64_t floor_half(std::int64_t k) { return k >= 0 ? k / 2 : -((-k + 1) / 2); }

// Zarankiewicz number Z(m, n).
std::int64_t z_bipartite(std::int64_t m, std::int64_t n);
// floor(n/2) floor((n-1)/2) floor((n-2)/2) floor((n-3)/2).
std::int64_t z_complete4(std::int64_t n);

// Per-class counts of the even-n drawing and the odd-n center increment.
std::int64_t nu_ex(std::int64_t n);
std::int64_t nu_exy(std::int64_t n);
std::int64_t odd_increment(std::int64_t n);

std::int64_t ub_p3(std::int64_t n);
std::int64_t ub_c4(std::int64_t n);

// 8594/10000
Rational deklerk_constant();

// Raw closed-form lower bounds; clamp with clamp_nonnegative for reporting.
Rational lb_knn(std::int64_t n);
Rational lb_p3(std::int64_t n);
Rational lb_c4(std::int64_t n);

Rational clamp_nonnegative(const Rational& r);

}  // namespace xatlas
