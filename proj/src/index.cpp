#include "fermat/index.hpp"

#include <stdexcept>

#include "fermat/cyclo.hpp"
#include "fermat/errors.hpp"

namespace fermat {

FermatIndex::FermatIndex(int n, long long a, long long b)
    : n_(n), a_(n > 0 ? angle(a, n) : 0), b_(n > 0 ? angle(b, n) : 0) {
  if (n < 3) throw std::invalid_argument("FermatIndex: N must be >= 3");
  if (a_ == 0 || b_ == 0 || c() == 0)
    throw std::invalid_argument("FermatIndex: need a, b, a+b nonzero mod N, got " + to_string());
}

int FermatIndex::g() const { return euler_phi(n_) / 2; }

std::string FermatIndex::to_string() const {
  return "(" + std::to_string(n_) + "," + std::to_string(a_) + "," + std::to_string(b_) + ")";
}

const char* element_name(ElementKind kind) {
  switch (kind) {
    case ElementKind::E: return "e";
    case ElementKind::E_ALPHA: return "e_alpha";
    case ElementKind::E_BETA: return "e_beta";
  }
  return "?";
}

std::vector<int> h_set(const FermatIndex& idx) {
  const int n = idx.N();
  std::vector<int> out;
  for (int h : unit_residues(n))
    if (angle(static_cast<long long>(h) * idx.a(), n) + angle(static_cast<long long>(h) * idx.b(), n) < n)
      out.push_back(h);
  return out;
}

std::set<std::pair<int, int>> orbit(const FermatIndex& idx) {
  std::set<std::pair<int, int>> out;
  for (int h : unit_residues(idx.N())) {
    const FermatIndex s = idx.scaled(h);
    out.emplace(s.a(), s.b());
  }
  return out;
}

bool is_primitive(const FermatIndex& idx) {
  return gcd_ll(gcd_ll(idx.N(), idx.a()), idx.b()) == 1;
}

FermatIndex reduce_nonprimitive(const FermatIndex& idx) {
  const long long d = gcd_ll(gcd_ll(idx.N(), idx.a()), idx.b());
  if (d == 1) throw std::invalid_argument("reduce_nonprimitive: " + idx.to_string() + " is primitive");
  return FermatIndex(static_cast<int>(idx.N() / d), idx.a() / d, idx.b() / d);
}

namespace {

long long zeta_trace(int n, long long e) {
  const Rational t = elt_trace(CycElt::zeta(n, e));
  return numerator(t).convert_to<long long>();
}

}  // namespace

long long alpha_trace(const FermatIndex& idx, int h) {
  const int n = idx.N();
  if (n % 2 != 0 || idx.b() % 2 != 0) throw std::invalid_argument("alpha_trace: needs N and b even");
  const int hc = angle(static_cast<long long>(h) * idx.c(), n);
  const int hb = angle(static_cast<long long>(h) * idx.b(), n);
  return zeta_trace(n, hc + hb / 2);
}

long long beta_trace(const FermatIndex& idx, int h) {
  const int n = idx.N();
  if (n % 2 != 0 || idx.a() % 2 != 0) throw std::invalid_argument("beta_trace: needs N and a even");
  const int hc = angle(static_cast<long long>(h) * idx.c(), n);
  const int ha = angle(static_cast<long long>(h) * idx.a(), n);
  return zeta_trace(n, hc + ha / 2);
}

std::vector<ElementDescriptor> element_set(const FermatIndex& idx) {
  if (!is_primitive(idx)) throw std::invalid_argument("element_set: " + idx.to_string() + " is not primitive");
  const int g = idx.g();
  std::vector<ElementDescriptor> out{{ElementKind::E}};
  if (g == 1) return out;

  const int a = idx.a(), b = idx.b(), c = idx.c();
  bool use_alpha = false, use_beta = false;
  if (idx.N() % 2 != 0) {
    use_alpha = a != c;
    use_beta = b != c && !(use_alpha && a == b);
  } else {
    const auto hs = h_set(idx);
    auto any_nonzero = [&](auto trace) {
      for (int h : hs)
        if (trace(idx, h) != 0) return true;
      return false;
    };
    use_alpha = b % 2 == 0 && a != c && any_nonzero(alpha_trace);
    use_beta = a % 2 == 0 && b != c && any_nonzero(beta_trace);
  }
  if (use_alpha) out.push_back({ElementKind::E_ALPHA});
  if (use_beta) out.push_back({ElementKind::E_BETA});
  if (static_cast<int>(out.size()) < g)
    throw InsufficientElements("only " + std::to_string(out.size()) + " independent elements for " +
                               idx.to_string() + ", need " + std::to_string(g));
  out.resize(static_cast<std::size_t>(g));
  return out;
}

}  // namespace fermat
