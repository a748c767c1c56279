#include "fermat/coeff_cache.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fermat/jacobi.hpp"

namespace fermat {

namespace fs = std::filesystem;

std::string default_cache_dir() {
  const char* env = std::getenv("FERMAT_CACHE_DIR");
  return env != nullptr ? std::string(env) : std::string();
}

std::string coeff_cache_path(const std::string& dir, const FermatIndex& idx) {
  std::ostringstream name;
  name << "coeffs_" << idx.N() << "_" << idx.a() << "_" << idx.b() << ".txt";
  return (fs::path(dir) / name.str()).string();
}

std::optional<std::vector<std::int64_t>> load_coeffs(const std::string& dir, const FermatIndex& idx,
                                                     std::int64_t x) {
  if (dir.empty()) return std::nullopt;
  std::ifstream in(coeff_cache_path(dir, idx));
  if (!in) return std::nullopt;
  int n = 0, a = 0, b = 0, version = 0;
  std::int64_t stored = 0;
  if (!(in >> n >> a >> b >> stored >> version)) return std::nullopt;
  if (n != idx.N() || a != idx.a() || b != idx.b() || version != kCoeffCacheVersion || stored < x)
    return std::nullopt;
  std::vector<std::int64_t> coeffs(static_cast<std::size_t>(x) + 1, 0);
  std::int64_t k = 0, value = 0;
  for (std::int64_t expect = 1; expect <= x; ++expect) {
    if (!(in >> k >> value) || k != expect) return std::nullopt;
    coeffs[static_cast<std::size_t>(k)] = value;
  }
  return coeffs;
}

void store_coeffs(const std::string& dir, const FermatIndex& idx, const std::vector<std::int64_t>& coeffs) {
  if (dir.empty() || coeffs.size() < 2) return;
  fs::create_directories(dir);
  static std::atomic<unsigned> counter{0};
  const std::string final_path = coeff_cache_path(dir, idx);
  const std::string tmp_path =
      final_path + ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write coefficient cache " + tmp_path);
    const std::int64_t x = static_cast<std::int64_t>(coeffs.size()) - 1;
    out << idx.N() << ' ' << idx.a() << ' ' << idx.b() << ' ' << x << ' ' << kCoeffCacheVersion << '\n';
    for (std::int64_t k = 1; k <= x; ++k) out << k << ' ' << coeffs[static_cast<std::size_t>(k)] << '\n';
    if (!out.flush()) throw std::runtime_error("cannot write coefficient cache " + tmp_path);
  }
  fs::rename(tmp_path, final_path);
}

std::vector<std::int64_t> cached_dirichlet_coeffs(const std::string& dir, const FermatIndex& idx, std::int64_t x,
                                                  unsigned threads) {
  if (auto hit = load_coeffs(dir, idx, x)) return *std::move(hit);
  auto coeffs = dirichlet_coeffs(idx, x, threads);
  store_coeffs(dir, idx, coeffs);
  return coeffs;
}

}  // namespace fermat
