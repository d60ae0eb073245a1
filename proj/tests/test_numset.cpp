#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <stdexcept>

#include "helpers.hpp"
#include "sumprodlab/io.hpp"
#include "sumprodlab/numset.hpp"
#include "sumprodlab/rng.hpp"

using namespace sumprodlab;
using testutil::nset;
using testutil::q;
using testutil::qset;

TEST_CASE("build_set deduplicates and sorts") {
  const NumSet s = nset({3, 1, 2, 2});
  CHECK(s.size() == 3);
  CHECK(s == nset({1, 2, 3}));

  CHECK(build_set({}).empty());
  CHECK(build_set({}).size() == 0);

  const NumSet collide = qset({"1/2", "2/4"});
  CHECK(collide.size() == 1);
  CHECK(collide[0].str() == "1/2");
}

TEST_CASE("build_set is idempotent") {
  Xoshiro256StarStar rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ExactScalar> vals;
    const std::size_t n = 1 + rng.uniform_below(12);
    for (std::size_t i = 0; i < n; ++i) {
      vals.emplace_back(static_cast<long>(rng.uniform_below(41)) - 20);
    }
    const NumSet s = build_set(vals);
    CHECK(build_set(s.elements()) == s);
  }
}

TEST_CASE("affine_image") {
  CHECK(affine_image(nset({1, 2, 3}), ExactScalar(1), ExactScalar(0)) ==
        nset({1, 2, 3}));
  CHECK(affine_image(nset({1, 2, 3}), ExactScalar(2), ExactScalar(1)) ==
        nset({3, 5, 7}));
  CHECK(affine_image(nset({1, 2}), ExactScalar(-1), ExactScalar(0)) ==
        nset({-2, -1}));
  CHECK_THROWS_AS(affine_image(nset({1}), ExactScalar(0), ExactScalar(1)),
                  std::domain_error);
}

TEST_CASE("affine round trip restores the set") {
  Xoshiro256StarStar rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ExactScalar> vals;
    const std::size_t n = 1 + rng.uniform_below(10);
    for (std::size_t i = 0; i < n; ++i) {
      vals.push_back(ExactScalar(BigInt(static_cast<long>(rng.uniform_below(81)) - 40),
                                 BigInt(static_cast<long>(rng.uniform_below(7)) + 1)));
    }
    const NumSet a = build_set(vals);
    long u_num = static_cast<long>(rng.uniform_below(11)) - 5;
    if (u_num == 0) u_num = 3;
    const ExactScalar u(BigInt(u_num),
                        BigInt(static_cast<long>(rng.uniform_below(4)) + 1));
    const ExactScalar v(static_cast<long>(rng.uniform_below(21)) - 10);
    const NumSet image = affine_image(a, u, v);
    CHECK(image.size() == a.size());
    CHECK(affine_image(image, u.reciprocal(), -(v / u)) == a);
  }
}

TEST_CASE("set_union") {
  CHECK(set_union(nset({1, 2}), nset({2, 3})) == nset({1, 2, 3}));
  const NumSet a = nset({-3, 0, 4});
  CHECK(set_union(a, a) == a);
  CHECK(set_union(nset({1}), nset({-1})) == nset({-1, 1}));
}

TEST_CASE("set file round trip and canonicalization") {
  const Json doc = Json::parse(R"({"elements": [3, "2/4", 1, "2/4", "10/5"]})");
  const NumSet s = set_from_json(doc);
  CHECK(s.size() == 3);
  CHECK(s[0].str() == "1/2");
  CHECK(s[1].str() == "1");
  CHECK(s[2].str() == "3");

  const Json out = set_to_json(s);
  CHECK(out["elements"][0] == "1/2");
  CHECK(out["elements"][1] == 1);
  CHECK(out["elements"][2] == 3);
  CHECK(set_from_json(out) == s);
}

TEST_CASE("set file rejects malformed input") {
  CHECK_THROWS_AS(set_from_json(Json::parse(R"({"elements": ["1/0"]})")),
                  std::domain_error);
  CHECK_THROWS_AS(set_from_json(Json::parse(R"({"elements": [1.5]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(set_from_json(Json::parse(R"({"values": [1]})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(set_from_json(Json::parse(R"([1, 2])")),
                  std::invalid_argument);
}

TEST_CASE("set files handle values beyond 64 bits") {
  BigInt big(1);
  mpz_mul_2exp(big.get_mpz_t(), big.get_mpz_t(), 100);
  const NumSet s = build_set({ExactScalar(big), ExactScalar(1)});
  const Json out = set_to_json(s);
  CHECK(out["elements"][1].is_string());
  CHECK(set_from_json(out) == s);
}

TEST_CASE("write and read a set file") {
  const NumSet s = qset({"-7", "1/3", "12"});
  const std::string path = "numset_roundtrip.json";
  write_set_file(path, s);
  CHECK(read_set_file(path) == s);
  std::remove(path.c_str());
}
