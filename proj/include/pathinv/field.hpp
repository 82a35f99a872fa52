#pragma once

#include <concepts>
#include <string>

namespace pathinv {

// Exact field scalar: value-semantic, equality-decidable, with total
// arithmetic except division by zero. Both Rational and Fp model this.
template <class F>
concept Field = std::regular<F> && std::constructible_from<F, long long> &&
                requires(const F a, const F b) {
                  { a + b } -> std::same_as<F>;
                  { a - b } -> std::same_as<F>;
                  { a * b } -> std::same_as<F>;
                  { a / b } -> std::same_as<F>;
                  { -a } -> std::same_as<F>;
                  { a.is_zero() } -> std::same_as<bool>;
                  { a.str() } -> std::same_as<std::string>;
                };

}  // namespace pathinv
