#include "doctest.h"
#include "qc/vines.hpp"

#include <random>

using namespace qc;

namespace {

// underlying function of delta . braid, via the strand permutation
std::vector<int> underlying(const VinesMorphism& v) {
  std::vector<int> p = braid_permutation(v.braid);
  std::vector<int> pinv(p.size());
  for (size_t i = 0; i < p.size(); ++i) pinv[static_cast<size_t>(p[i])] = static_cast<int>(i);
  std::vector<int> out(static_cast<size_t>(v.src));
  for (int x = 0; x < v.src; ++x)
    out[static_cast<size_t>(x)] = v.delta[static_cast<size_t>(pinv[static_cast<size_t>(x)])];
  return out;
}

VinesMorphism random_vines(std::mt19937& rng, int src) {
  std::vector<int> delta(static_cast<size_t>(src));
  int cur = 0;
  for (int i = 0; i < src; ++i) {
    cur += std::uniform_int_distribution<int>(0, 1)(rng);
    delta[static_cast<size_t>(i)] = cur;
  }
  int dst = delta.empty() ? 0 : delta.back() + 1;
  BraidWord braid{src, {}};
  int len = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int l = 0; l < len && src > 1; ++l) {
    int idx = std::uniform_int_distribution<int>(1, src - 1)(rng);
    braid.letters.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? idx : -idx);
  }
  return validate_vines(src, dst, std::move(braid), std::move(delta));
}

}  // namespace

TEST_CASE("elementary factorization of monotone maps round-trips") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    int src = std::uniform_int_distribution<int>(0, 5)(rng);
    std::vector<int> delta(static_cast<size_t>(src));
    int cur = 0;
    for (int i = 0; i < src; ++i) {
      cur += std::uniform_int_distribution<int>(0, 2)(rng) == 0 ? 1 : 0;
      delta[static_cast<size_t>(i)] = cur;
    }
    int dst = (src ? delta.back() + 1 : 0) + std::uniform_int_distribution<int>(0, 2)(rng);
    if (dst == 0) dst = 1;
    auto word = elementary_factors(delta, dst);
    CHECK(recompose_elementary(word, src, dst) == delta);
  }
}

TEST_CASE("composition with identities and the stabilising example") {
  VinesMorphism merge = validate_vines(2, 1, BraidWord{2, {}}, {0, 0});
  VinesMorphism braided = validate_vines(2, 2, BraidWord{2, {1}}, {0, 1});
  VinesMorphism composite = vines_compose(merge, braided);
  CHECK(composite.braid.letters == std::vector<int>{1});
  CHECK(composite.delta == std::vector<int>{0, 0});
  CHECK(vines_equal(composite, merge));
  CHECK(vines_equal(vines_compose(merge, vines_identity(2)), merge));
  CHECK(vines_equal(vines_compose(vines_identity(1), merge), merge));
}

TEST_CASE("letters vanish when pushed through a matching unit insertion") {
  // f inserts a strand ([1] -> [2] hitting position 0), g crosses the pair:
  // the letter dies and the insertion index shifts
  VinesMorphism f = validate_vines(1, 2, BraidWord{1, {}}, {0});
  VinesMorphism g = validate_vines(2, 2, BraidWord{2, {1}}, {0, 1});
  VinesMorphism c = vines_compose(g, f);
  CHECK(c.braid.letters.empty());
  CHECK(c.delta == std::vector<int>{1});
  // underlying functions compose: u(g) o u(f) sends 0 to 1
  auto uf = underlying(f), ug = underlying(g);
  CHECK(underlying(c) == std::vector<int>{ug[static_cast<size_t>(uf[0])]});
}

TEST_CASE("vines_compose preserves the underlying function") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 5)(rng);
    VinesMorphism f = random_vines(rng, n);
    VinesMorphism g = random_vines(rng, f.dst);
    VinesMorphism c = vines_compose(g, f);
    auto uf = underlying(f), ug = underlying(g), uc = underlying(c);
    std::vector<int> expected(static_cast<size_t>(n));
    for (int x = 0; x < n; ++x)
      expected[static_cast<size_t>(x)] = ug[static_cast<size_t>(uf[static_cast<size_t>(x)])];
    CHECK(uc == expected);
  }
}

TEST_CASE("vines_equal is an equivalence matching underlying functions") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 4)(rng);
    VinesMorphism a = random_vines(rng, n);
    VinesMorphism b = random_vines(rng, n);
    if (a.dst != b.dst) continue;
    bool eq = vines_equal(a, b);
    CHECK(eq == (underlying(a) == underlying(b)));
    CHECK(eq == vines_equal(b, a));
    CHECK(vines_equal(a, a));
  }
  VinesMorphism single = validate_vines(2, 2, BraidWord{2, {1}}, {0, 1});
  CHECK(!vines_equal(single, vines_identity(2)));
}

TEST_CASE("mismatched shapes are rejected") {
  VinesMorphism a = vines_identity(2), b = vines_identity(3);
  CHECK_THROWS_AS(vines_compose(a, b), Error);
  CHECK_THROWS_AS(vines_equal(a, b), Error);
  CHECK_THROWS_AS(validate_vines(2, 1, BraidWord{2, {5}}, {0, 0}), Error);
  CHECK_THROWS_AS(validate_vines(2, 1, BraidWord{2, {}}, {1, 0}), Error);
}
