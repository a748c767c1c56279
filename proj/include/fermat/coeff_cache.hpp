#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fermat/index.hpp"

namespace fermat {

inline constexpr int kCoeffCacheVersion = 1;

/// Directory named by FERMAT_CACHE_DIR, or empty (no caching).
std::string default_cache_dir();

std::string coeff_cache_path(const std::string& dir, const FermatIndex& idx);

/// a_0..a_X from the cache if a file for idx covers at least X terms.
std::optional<std::vector<std::int64_t>> load_coeffs(const std::string& dir, const FermatIndex& idx, std::int64_t x);

/// Writes a temporary file and renames it into place.
void store_coeffs(const std::string& dir, const FermatIndex& idx, const std::vector<std::int64_t>& coeffs);

/// Cache lookup, falling back to dirichlet_coeffs and storing the result.
/// An empty `dir` disables the cache.
std::vector<std::int64_t> cached_dirichlet_coeffs(const std::string& dir, const FermatIndex& idx, std::int64_t x,
                                                  unsigned threads = 1);

}  // namespace fermat
