#pragma once

#include "supercong/arith.hpp"

namespace supercong {

// Exact combinatorial identities verified over the integers/rationals at a
// given parameter n (for "tauraso-id" the parameter is an odd prime p).
const std::vector<std::string>& identity_ids();
bool verify_identity(const std::string& id, long n);

// s_n = (1/n) sum_{k<n} (21k+8) binom(2k,k)^3 (always an integer),
// t_n = s_n / (4 binom(2n,n)), r_n = sum_{k<n} binom(n+k-1,k)^2.
Int s_value(long n);
Int t_value(long n);
Int r_value(long n);

// Both recursions for s_n and t_n at index n, plus t_n = r_n.
bool verify_recursions(long n);

// Divisibility families; family ids:
//   5.1i/-8, 5.1i/16, 5.1i/256, 5.1i/-512, 5.1i/4096,
//   5.3, 5.4, 5.5, rem5.2/1, rem5.2/2, 5.8
const std::vector<std::string>& divisibility_ids();
bool verify_divisibility(const std::string& family, long n);

// a_m = (sum_{n<m} (3n^2+n) 16^{m-1-n} g(n)) / (2 m^3 (m-1)) with
// g(n) = sum_k binom(n,k)^2 binom(2k,k) binom(2(n-k),n-k).
// Checks integrality and that a_m is odd exactly when m is a power of two.
bool verify_am(long m);

// Composites n in (1, limit] with S_n = sum_{k<n}(21k+8)binom(2k,k)^3
// congruent to 8n mod n^4 (conjecturally none).
std::vector<long> scan_s_primality(long limit);

// Classical congruences checked numerically at a prime p; ids:
//   lemma2.1, lehmer2.2, lehmer2.3, lehmer20, lem2.4a, lem2.4b, lem4.2,
//   morley, glaisher, sd-lift, fast-euler, fast-b3, fast-b5,
//   eta-klein, rv-eta
const std::vector<std::string>& numeric_congruence_ids();
bool verify_numeric_congruence(const std::string& id, long p);

}  // namespace supercong
