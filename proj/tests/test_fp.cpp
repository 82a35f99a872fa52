#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "pathinv/fp.hpp"

using pathinv::Fp;
using pathinv::is_prime;

TEST_CASE("fp residues normalize") {
  CHECK(Fp::residue(10, 7).value() == 3);
  CHECK(Fp::residue(-1, 7).value() == 6);
  CHECK(Fp::residue(0, 5).is_zero());
  CHECK_THROWS_AS(Fp::residue(1, 1), std::domain_error);
  CHECK_THROWS_AS(Fp::residue(1, Fp::max_modulus), std::domain_error);
}

TEST_CASE("fp arithmetic mod 7") {
  Fp a = Fp::residue(3, 7);
  Fp b = Fp::residue(5, 7);
  CHECK((a + b).value() == 1);
  CHECK((a - b).value() == 5);
  CHECK((a * b).value() == 1);
  CHECK((a / b).value() == 2);  // 5 * 2 = 10 = 3
  CHECK((-a).value() == 4);
  CHECK_THROWS_AS(a / Fp::residue(0, 7), std::domain_error);
}

TEST_CASE("fp inverses") {
  for (long long p : {2LL, 3LL, 5LL, 7LL, 31LL})
    for (long long v = 1; v < p; ++v) {
      Fp x = Fp::residue(v, p);
      CHECK((Fp(1) / x * x).value() == 1);
    }
}

TEST_CASE("fp constants adopt the modulus of the other operand") {
  Fp a = Fp::residue(4, 5);
  CHECK((a + Fp(1)).value() == 0);
  CHECK((Fp(-1) * a).value() == 1);
  CHECK(Fp(6) == Fp::residue(1, 5));
  CHECK(Fp(0).is_zero());
}

TEST_CASE("fp mixed moduli are rejected") {
  Fp a = Fp::residue(1, 5);
  Fp b = Fp::residue(1, 7);
  CHECK_THROWS_AS(a + b, std::domain_error);
  CHECK_THROWS_AS(a * b, std::domain_error);
}

TEST_CASE("primality testing") {
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK(is_prime(7919));
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(7917));
}
