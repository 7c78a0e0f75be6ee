#include "charvar/cache.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <optional>

#include "charvar/macdonald.hpp"
#include "charvar/serialize.hpp"

namespace charvar {

namespace fs = std::filesystem;

namespace {

const char* const kMacdonaldFile = "macdonald.json";
const char* const kKernelFile = "kernel.json";
const char* const kFormatName = "charvar-cache";

class DirLock {
 public:
  DirLock(const fs::path& dir, bool exclusive) {
    fs::create_directories(dir);
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw std::runtime_error("cannot open cache lock in " + dir.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw std::runtime_error("cannot lock cache directory " + dir.string());
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

 private:
  int fd_ = -1;
};

// Entries of one cache file, or nothing when the file does not exist.
std::optional<Json> read_entries(const fs::path& file, const std::string& kind) {
  if (!fs::exists(file)) return std::nullopt;
  std::ifstream in(file);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::exception& e) {
    throw CacheVersionError(file.string() + " is not a readable cache file (" + e.what() +
                            "); run `charvar cache clear`");
  }
  if (!doc.is_object() || doc.value("format", "") != kFormatName || doc.value("kind", "") != kind)
    throw CacheVersionError(file.string() + " is not a " + kind + " cache file; run `charvar cache clear`");
  int version = doc.value("version", -1);
  if (version != kCacheFormatVersion)
    throw CacheVersionError(file.string() + " has format version " + std::to_string(version) +
                            ", this build reads version " + std::to_string(kCacheFormatVersion) +
                            "; run `charvar cache clear`");
  return doc.at("entries");
}

void write_entries(const fs::path& file, const std::string& kind, const Json& entries) {
  Json doc = {{"format", kFormatName},
              {"kind", kind},
              {"version", kCacheFormatVersion},
              {"entries", entries}};
  fs::path tmp = file;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump() << '\n';
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
  }
  fs::rename(tmp, file);
}

std::map<Partition, SymFunc1> macdonald_from(const Json& entries) {
  std::map<Partition, SymFunc1> out;
  for (const auto& e : entries) out.emplace(partition_from_json(e.at(0)), symfunc_from_json(e.at(1)));
  return out;
}

std::map<KernelKey, KernelResult> kernels_from(const Json& entries) {
  std::map<KernelKey, KernelResult> out;
  for (const auto& e : entries) {
    KernelResult kr = kernel_from_json(e);
    out.emplace(KernelKey{kr.n, kr.g, kr.k}, std::move(kr));
  }
  return out;
}

}  // namespace

DiskCache::DiskCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path DiskCache::default_dir() {
  if (const char* d = std::getenv("CHARVAR_CACHE_DIR"); d && *d) return d;
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return fs::path(x) / "charvar";
  if (const char* h = std::getenv("HOME"); h && *h) return fs::path(h) / ".cache" / "charvar";
  return fs::temp_directory_path() / "charvar-cache";
}

void DiskCache::load() const {
  if (!fs::exists(dir_)) return;
  DirLock lock(dir_, false);
  if (auto m = read_entries(dir_ / kMacdonaldFile, "macdonald")) htilde_seed(macdonald_from(*m));
  if (auto k = read_entries(dir_ / kKernelFile, "kernel")) kernel_seed(kernels_from(*k));
}

void DiskCache::save() const {
  DirLock lock(dir_, true);

  auto mac = htilde_snapshot();
  std::size_t on_disk = 0;
  if (auto m = read_entries(dir_ / kMacdonaldFile, "macdonald")) {
    auto old = macdonald_from(*m);
    on_disk = old.size();
    mac.merge(old);
  }
  if (mac.size() != on_disk || !fs::exists(dir_ / kMacdonaldFile)) {
    Json entries = Json::array();
    for (const auto& [lam, f] : mac) entries.push_back({to_json(lam), to_json(f)});
    write_entries(dir_ / kMacdonaldFile, "macdonald", entries);
  }

  auto ker = kernel_snapshot();
  on_disk = 0;
  if (auto k = read_entries(dir_ / kKernelFile, "kernel")) {
    auto old = kernels_from(*k);
    on_disk = old.size();
    ker.merge(old);
  }
  if (ker.size() != on_disk || !fs::exists(dir_ / kKernelFile)) {
    Json entries = Json::array();
    for (const auto& [key, kr] : ker) entries.push_back(to_json(kr));
    write_entries(dir_ / kKernelFile, "kernel", entries);
  }
}

void DiskCache::warm(int n, int g, int k) const {
  load();
  for (int d = 1; d <= n; ++d)
    for (const auto& lam : partitions_of(d)) htilde(lam);
  hlv_kernel(n, g, k);
  save();
}

CacheStatus DiskCache::status() const {
  CacheStatus st;
  st.dir = dir_;
  if (!fs::exists(dir_)) return st;
  DirLock lock(dir_, false);
  auto fill = [&](const char* name, const char* kind, CacheFileStatus& fs_out) -> std::optional<Json> {
    fs::path p = dir_ / name;
    if (!fs::exists(p)) return std::nullopt;
    fs_out.present = true;
    fs_out.bytes = fs::file_size(p);
    auto entries = read_entries(p, kind);
    fs_out.entries = entries->size();
    return entries;
  };
  fill(kMacdonaldFile, "macdonald", st.macdonald);
  if (auto k = fill(kKernelFile, "kernel", st.kernel))
    for (const auto& e : *k) st.kernel_keys.emplace_back(e.at("n").get<int>(), e.at("g").get<int>(), e.at("k").get<int>());
  return st;
}

void DiskCache::clear() const {
  if (!fs::exists(dir_)) return;
  DirLock lock(dir_, true);
  for (const char* name : {kMacdonaldFile, kKernelFile}) {
    fs::remove(dir_ / name);
    fs::path tmp = dir_ / name;
    tmp += ".tmp";
    fs::remove(tmp);
  }
}

}  // namespace charvar
