#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace fermat {

/// <x> in {0, ..., N-1}; nonzero for admissible residues.
inline int angle(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// An element (a, b) of I_N, stored with representatives in {1, ..., N-1}.
class FermatIndex {
 public:
  FermatIndex(int n, long long a, long long b);

  int N() const { return n_; }
  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return angle(-a_ - b_, n_); }
  int g() const;

  FermatIndex scaled(long long h) const { return FermatIndex(n_, h * a_, h * b_); }
  FermatIndex negated() const { return scaled(-1); }

  std::string to_string() const;
  friend bool operator==(const FermatIndex& x, const FermatIndex& y) {
    return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  int n_;
  int a_;
  int b_;
};

enum class ElementKind { E, E_ALPHA, E_BETA };

struct ElementDescriptor {
  ElementKind kind;
  friend bool operator==(ElementDescriptor x, ElementDescriptor y) { return x.kind == y.kind; }
};

const char* element_name(ElementKind kind);

/// H_N^{a,b} = { h in (Z/N)^x : <ha> + <hb> < N }, ascending.
std::vector<int> h_set(const FermatIndex& idx);

std::set<std::pair<int, int>> orbit(const FermatIndex& idx);

bool is_primitive(const FermatIndex& idx);
/// (N, a, b) = (d N', d a', d b') -> (N', a', b') with d = gcd(N, a, b).
FermatIndex reduce_nonprimitive(const FermatIndex& idx);

/// Tr_{K_N/Q}(zeta_N^{<hc> + <hb>/2}); the E_ALPHA weight for even N and even b.
long long alpha_trace(const FermatIndex& idx, int h);
/// Tr_{K_N/Q}(zeta_N^{<hc> + <ha>/2}); the E_BETA weight for even N and even a.
long long beta_trace(const FermatIndex& idx, int h);

/// The g elements whose regulators form the matrix rows, in the order
/// E < E_ALPHA < E_BETA. Throws InsufficientElements when fewer than g
/// independent elements are available.
std::vector<ElementDescriptor> element_set(const FermatIndex& idx);

}  // namespace fermat
