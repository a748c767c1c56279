#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fermat/cyclo.hpp"
#include "fermat/index.hpp"

namespace fermat {

struct SplittingData {
  long long p;
  int f;   // order of p mod N
  int gp;  // number of primes above p
};

SplittingData splitting(int n, long long p);

struct JacobiOptions {
  long long max_field_size = 1LL << 26;
  int generator_rank = 0;
};

/// j(v0) = -sum_{x != 0,1} chi(x)^a chi(1-x)^b over F_{p^f}, where v0 is the
/// prime above p at which zeta_N reduces to gen^{(q-1)/N}.
CycElt jacobi_sum(const FermatIndex& idx, long long p, const JacobiOptions& opt = {});

struct LocalFactorData {
  long long p;
  int f;
  std::vector<BigInt> poly;  // coefficient of T^k, degree phi(N), poly[0] = 1
};

LocalFactorData local_factor(const FermatIndex& idx, long long p, const JacobiOptions& opt = {});

/// Coset representatives of <p> in (Z/N)^x, each the smallest of its coset.
std::vector<int> coset_representatives(int n, long long p);

/// a_0..a_X of L(j_N^{a,b}, s) (a_0 = 0). Local factors for distinct primes
/// run on up to `threads` workers; the output does not depend on the schedule.
std::vector<std::int64_t> dirichlet_coeffs(const FermatIndex& idx, std::int64_t x, unsigned threads = 1);

struct CharacterValue {
  CycElt generator;
  CycElt phi;
};

/// Conductor and finite-character data for a supported class [a, b].
struct CharacterEntry {
  int n, a, b;
  long long conductor_norm;
  std::string conductor;  // the ideal, e.g. "(1-z7)"
  std::vector<CharacterValue> values;
};

const std::vector<CharacterEntry>& character_table();
/// Entry whose orbit contains (a, b), or nullptr.
const CharacterEntry* find_character_entry(const FermatIndex& idx);

/// phi(alpha) * prod_{h in H} sigma_h^{-1}(alpha): the predicted Jacobi sum at (alpha).
CycElt hecke_target(const FermatIndex& idx, const CycElt& alpha, const CycElt& phi);

/// True iff the Jacobi sum at the prime (alpha) equals hecke_target. The
/// ideal (alpha) must be prime of norm p^f with p not dividing N.
bool hecke_verify(const FermatIndex& idx, const CycElt& alpha, const CycElt& phi, const JacobiOptions& opt = {});
/// As above with phi(alpha) taken from the character table.
bool hecke_verify(const FermatIndex& idx, const CycElt& alpha);

}  // namespace fermat
