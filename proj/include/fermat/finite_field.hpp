#pragma once

#include <cstdint>
#include <vector>

#include "fermat/cyclo.hpp"

namespace fermat {

/// F_q with q = p^f, elements encoded as integers sum_i c_i p^i in [0, q),
/// i.e. coefficient vectors of residues modulo a monic irreducible of degree f.
class FiniteField {
 public:
  /// The modulus is the smallest monic irreducible of degree f when monic
  /// polynomials are ordered by their encoding (c_{f-1}, ..., c_0) read as a
  /// base-p number. The generator is the `generator_rank`-th smallest
  /// primitive element in encoding order.
  FiniteField(long long p, int f, int generator_rank = 0);

  long long p() const { return p_; }
  int f() const { return f_; }
  long long q() const { return q_; }
  const IntPoly& modulus() const { return modulus_; }
  long long generator() const { return gen_; }

  long long add(long long x, long long y) const;
  long long sub(long long x, long long y) const;
  long long mul(long long x, long long y) const;
  long long pow(long long x, unsigned long long e) const;

  /// table[x] = k with generator^k = x, for x in [1, q); table[0] is unused.
  std::vector<std::uint32_t> dlog_table() const;

 private:
  bool is_primitive(long long x, const std::vector<long long>& factors) const;

  long long p_;
  int f_;
  long long q_;
  IntPoly modulus_;
  long long gen_ = 0;
};

/// Multiplicative order of p modulo n.
int mult_order(long long p, int n);

bool is_prime(long long n);

}  // namespace fermat
