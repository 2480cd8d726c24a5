#pragma once
// On-disk cache of Hecke coefficients. One text file per (p, i); only f is
// stored since f^c has the conjugate coefficients.
//
//   SYLV1 p=<p> i=<i> N=<N> M=<M>
//   <n> <a> <b>        one line per nonzero a_n = a + b*w

#include <filesystem>
#include <optional>
#include <string>

#include "cubesum/parametrize.hpp"

namespace cubesum {

// Explicit directory, else $CUBESUM_CACHE, else none (caching off).
std::optional<std::filesystem::path> resolve_cache_dir(const std::string& flag);

std::filesystem::path cache_file(const std::filesystem::path& dir, long p, int i);

std::string serialize_coefficients(const HeckeForm& f);
// Throws BadInput on a malformed file or a header for other (p, i).
HeckeForm parse_coefficients(const std::string& text, long p, int i);

// Returns the cached form if it holds at least M terms.
std::optional<HeckeForm> load_cached(const std::filesystem::path& dir, long p, int i, std::size_t M);
// Write to a temporary file and rename over the target.
void store_cached(const std::filesystem::path& dir, const HeckeForm& f);

// Form provider backed by the cache directory; keeps the largest form in memory.
FormProvider cached_provider(std::optional<std::filesystem::path> dir);

}  // namespace cubesum
