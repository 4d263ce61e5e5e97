#include "supercong/identities.hpp"

#include <doctest.h>

using namespace supercong;

TEST_CASE("exact identities at small indices") {
  for (const auto& id : identity_ids()) {
    CAPTURE(id);
    if (id == "tauraso-id") {
      for (long p : {5L, 7L, 11L, 13L}) CHECK(verify_identity(id, p));
    } else {
      for (long n = 1; n <= 12; ++n) {
        CAPTURE(n);
        CHECK(verify_identity(id, n));
      }
    }
  }
}

TEST_CASE("s, t, r sequences") {
  CHECK(s_value(1) == 8);
  CHECK(t_value(1) == 1);
  CHECK(r_value(1) == 1);
  CHECK(s_value(2) == 120);
  CHECK(t_value(2) == 5);
  CHECK(r_value(2) == 5);
  for (long n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(verify_recursions(n));
  }
}

TEST_CASE("divisibility families") {
  CHECK(divisibility_ids().size() == 11);
  for (const auto& fam : divisibility_ids()) {
    CAPTURE(fam);
    for (long n = 2; n <= 12; ++n) {
      CAPTURE(n);
      CHECK(verify_divisibility(fam, n));
    }
  }
}

TEST_CASE("a_m integrality and parity") {
  for (long m = 2; m <= 16; ++m) {
    CAPTURE(m);
    CHECK(verify_am(m));
  }
}

TEST_CASE("S_n primality scan") {
  CHECK(scan_s_primality(100).empty());
}

TEST_CASE("classical congruences at small primes") {
  for (const auto& id : numeric_congruence_ids()) {
    CAPTURE(id);
    for (long p : {5L, 7L, 11L, 13L}) {
      if (id == "fast-b5" && p == 5) continue;
      CAPTURE(p);
      CHECK(verify_numeric_congruence(id, p));
    }
  }
}
