#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "charvar/cache.hpp"
#include "charvar/macdonald.hpp"
#include "charvar/serialize.hpp"

using namespace charvar;
namespace fs = std::filesystem;

namespace {

const FieldElem Z = FieldElem::z();
const FieldElem W = FieldElem::w();

fs::path scratch_dir(const char* tag) {
  fs::path p = fs::temp_directory_path() / (std::string("charvar-test-") + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("polynomial encodings round trip") {
  ZWPoly p = ZWPoly::monomial(BigRat(3, 7), 2, 1) - ZWPoly::monomial(BigRat("123456789012345678901234567890"), 0, 5) +
             ZWPoly(1);
  Json j = to_json(p);
  CHECK(j[0] == Json{0, 0, "1", "1"});
  CHECK(zwpoly_from_json(j) == p);

  FieldElem f = (Z - W).pow(3) / (Z * Z - FieldElem(1));
  CHECK(field_from_json(to_json(f)) == f);
  CHECK(field_from_json(Json::parse(to_json(f).dump())) == f);

  UniPoly u(std::vector<BigRat>{0, BigRat(1, 2), 0, BigRat(-4)});
  CHECK(to_json(u).dump() == R"([[1,"1/2"],[3,-4]])");
  CHECK(unipoly_from_json(to_json(u)) == u);
  CHECK(unipoly_from_json(Json::parse(R"([[2,1],[3,2],[4,"1"]])")) ==
        UniPoly(std::vector<BigRat>{0, 0, 1, 2, 1}));
}

TEST_CASE("malformed input is a validation error") {
  CHECK_THROWS_AS(zwpoly_from_json(Json::parse(R"([[0,0,"1"]])")), ValidationError);
  CHECK_THROWS_AS(zwpoly_from_json(Json::parse(R"([[-1,0,"1","1"]])")), ValidationError);
  CHECK_THROWS_AS(zwpoly_from_json(Json::parse(R"([[0,0,"1","0"]])")), ValidationError);
  CHECK_THROWS_AS(partition_from_json(Json::parse("[1,2]")), ValidationError);
  CHECK_THROWS_AS(unipoly_from_json(Json::parse("[[0,1.5]]")), ValidationError);
}

TEST_CASE("symmetric function encodings round trip") {
  SymFunc1 h = htilde({2, 1});
  CHECK(symfunc_from_json(to_json(h)) == h);
  KernelResult kr = hlv_kernel(2, 0, 3);
  KernelResult back = kernel_from_json(Json::parse(to_json(kr).dump()));
  CHECK(back.n == 2);
  CHECK(back.kernel == kr.kernel);
}

TEST_CASE("disk cache") {
  fs::path dir = scratch_dir("cache");
  DiskCache cache(dir);
  CHECK_FALSE(cache.status().kernel.present);

  cache.warm(2, 0, 4);
  CacheStatus st = cache.status();
  CHECK(st.macdonald.present);
  CHECK(st.macdonald.entries >= 3);
  REQUIRE(st.kernel.present);
  CHECK(std::find(st.kernel_keys.begin(), st.kernel_keys.end(), KernelKey{2, 0, 4}) != st.kernel_keys.end());

  std::string mac = slurp(dir / "macdonald.json");
  std::string ker = slurp(dir / "kernel.json");
  auto mtime = fs::last_write_time(dir / "kernel.json");
  cache.warm(2, 0, 4);
  CHECK(slurp(dir / "macdonald.json") == mac);
  CHECK(slurp(dir / "kernel.json") == ker);
  CHECK(fs::last_write_time(dir / "kernel.json") == mtime);

  SUBCASE("reload seeds the tables") {
    KernelResult before = hlv_kernel(2, 0, 4);
    kernel_clear_memo();
    htilde_clear_memo();
    cache.load();
    CHECK(kernel_snapshot().count(KernelKey{2, 0, 4}) == 1);
    CHECK(hlv_kernel(2, 0, 4).kernel == before.kernel);
    CHECK(htilde_snapshot().size() == st.macdonald.entries);
  }
  SUBCASE("version mismatch refuses to read or write") {
    Json doc = Json::parse(ker);
    doc["version"] = kCacheFormatVersion + 1;
    std::ofstream(dir / "kernel.json") << doc.dump();
    std::string stale = slurp(dir / "kernel.json");
    CHECK_THROWS_AS(cache.load(), CacheVersionError);
    CHECK_THROWS_AS(cache.save(), CacheVersionError);
    CHECK_THROWS_AS(cache.status(), CacheVersionError);
    CHECK(slurp(dir / "kernel.json") == stale);
  }
  SUBCASE("clear") {
    std::ofstream(dir / "unrelated.txt") << "keep";
    cache.clear();
    st = cache.status();
    CHECK_FALSE(st.macdonald.present);
    CHECK_FALSE(st.kernel.present);
    CHECK(st.kernel_keys.empty());
    CHECK(fs::exists(dir / "unrelated.txt"));
  }
  fs::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  ::setenv("CHARVAR_CACHE_DIR", "/tmp/somewhere", 1);
  CHECK(DiskCache::default_dir() == fs::path("/tmp/somewhere"));
  ::unsetenv("CHARVAR_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  CHECK(DiskCache::default_dir() == fs::path("/tmp/xdg/charvar"));
  ::unsetenv("XDG_CACHE_HOME");
  ::setenv("HOME", "/home/someone", 1);
  CHECK(DiskCache::default_dir() == fs::path("/home/someone/.cache/charvar"));
}
