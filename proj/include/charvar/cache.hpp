#pragma once

// On-disk persistence of the Macdonald and kernel tables.
//
// Files live in one directory: macdonald.json and kernel.json, each carrying a
// format header. A file with another format version is never read or
// overwritten; `clear` is the only way past it.

#include <filesystem>
#include <stdexcept>
#include <vector>

#include "charvar/hlv.hpp"

namespace charvar {

class CacheVersionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kCacheFormatVersion = 1;

struct CacheFileStatus {
  bool present = false;
  std::size_t entries = 0;
  std::uintmax_t bytes = 0;
};

struct CacheStatus {
  std::filesystem::path dir;
  CacheFileStatus macdonald;
  CacheFileStatus kernel;
  std::vector<KernelKey> kernel_keys;
};

class DiskCache {
 public:
  explicit DiskCache(std::filesystem::path dir);

  /// $CHARVAR_CACHE_DIR, else $XDG_CACHE_HOME/charvar, else ~/.cache/charvar.
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }

  /// Seeds the in-memory tables from disk. Missing files are fine.
  void load() const;
  /// Merges the in-memory tables into the files. Leaves a file untouched when
  /// it already holds every entry.
  void save() const;
  /// Tables for all |λ| ≤ n and the (n, g, k) kernel, then save().
  void warm(int n, int g, int k) const;

  CacheStatus status() const;
  /// Removes the cache files (any version); other files in the directory stay.
  void clear() const;

 private:
  std::filesystem::path dir_;
};

}  // namespace charvar
