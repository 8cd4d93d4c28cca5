#include "xatlas/formulas.hpp"

#include <stdexcept>
#include <string>

namespace xatlas {

namespace {

void check_range(std::int64_t n, std::int64_t lo, const char* name) {
  if (n < lo || n > kFormulaMaxN)
    throw std::domain_error(std::string(name) + ": n out of range");
}

std::int64_t exact_div(std::int64_t num, std::int64_t den, const char* name) {
  if (num % den != 0) throw std::logic_error(std::string(name) + ": value is not integral");
  return num / den;
}

Rational congestion_ratio(std::int64_t n) {
  // 1 / (1 + 3/(n-1))^2
  const Rational base = Rational(1) + Rational(3) / Rational(n - 1);
  return Rational(1) / (base * base);
}

}  // namespace

std::int64_t z_bipartite(std::int64_t m, std::int64_t n) {
  check_range(m, 0, "z_bipartite");
  check_range(n, 0, "z_bipartite");
  return floor_half(m) * floor_half(m - 1) * floor_half(n) * floor_half(n - 1);
}

std::int64_t z_complete4(std::int64_t n) {
  check_range(n, 0, "z_complete4");
  if (n < 4) return 0;
  return floor_half(n) * floor_half(n - 1) * floor_half(n - 2) * floor_half(n - 3);
}

std::int64_t nu_ex(std::int64_t n) {
  check_range(n, 6, "nu_ex");
  if (n % 2 != 0) throw std::domain_error("nu_ex: n must be even");
  return exact_div(n * n * (n - 2) * (n - 4), 96, "nu_ex");
}

std::int64_t nu_exy(std::int64_t n) {
  check_range(n, 6, "nu_exy");
  if (n % 2 != 0) throw std::domain_error("nu_exy: n must be even");
  return exact_div(n * (n - 2) * (n - 3) * (n - 4), 24, "nu_exy");
}

std::int64_t odd_increment(std::int64_t n) {
  check_range(n, 5, "odd_increment");
  if (n % 2 == 0) throw std::domain_error("odd_increment: n must be odd");
  return exact_div((n - 1) * (n - 3) * (n - 3), 4, "odd_increment");
}

std::int64_t ub_p3(std::int64_t n) {
  check_range(n, 1, "ub_p3");
  return 4 * z_complete4(n) + n * floor_half(n - 1) * floor_half(n - 2);
}

std::int64_t ub_c4(std::int64_t n) {
  check_range(n, 3, "ub_c4");
  return 16 * z_complete4(n) + n * (n - 1) * (2 * n - 5);
}

Rational deklerk_constant() { return Rational(8594, 10000); }

Rational lb_knn(std::int64_t n) {
  check_range(n, 2, "lb_knn");
  const std::int64_t h = floor_half(n) * floor_half(n - 1);
  return deklerk_constant() * congestion_ratio(n) * Rational(h) * Rational(h) -
         Rational(n) * Rational(n - 1) * Rational(n - 1);
}

Rational lb_p3(std::int64_t n) {
  check_range(n, 2, "lb_p3");
  const Rational z = Rational(n) * Rational(floor_half(2 * n - 1)) * Rational(floor_half(n)) * Rational(floor_half(n - 1));
  const Rational tail = Rational(3, 2) * Rational(n) * Rational(2 * n - 2) * Rational(2 * n - 2);
  return deklerk_constant() * congestion_ratio(n) * z - tail;
}

Rational lb_c4(std::int64_t n) {
  check_range(n, 2, "lb_c4");
  const Rational f = Rational(floor_half(2 * n - 1));
  const Rational z = Rational(n) * Rational(n) * f * f;
  const Rational tail = Rational(2) * Rational(n) * Rational(2 * n - 2) * Rational(2 * n - 2);
  return deklerk_constant() * congestion_ratio(n) * z - tail;
}

Rational clamp_nonnegative(const Rational& r) { return r.sign() < 0 ? Rational(0) : r; }

}  // namespace xatlas
