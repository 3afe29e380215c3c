#include "doctest.h"
#include "qc/classify.hpp"
#include "qc/serde.hpp"

using namespace qc;

TEST_CASE("tiny classifications: trivial, Z/2, Z/3") {
  auto trivial = classify_group(cyclic_group(1));
  CHECK(trivial.distinct_r.size() == 1);
  CHECK(trivial.distinct_r[0] == std::vector<int>{0});

  auto z2 = classify_group(cyclic_group(2));
  CHECK(z2.distinct_r.size() == 1);
  CHECK(z2.distinct_r[0] == swap_yb(2).table);
  CHECK(z2.entries.size() == 1);  // K = Z/2, trivial action, phi = id

  auto z3 = classify_group(cyclic_group(3));
  CHECK(z3.distinct_r.size() == 1);
  CHECK(z3.distinct_r[0] == swap_yb(3).table);
  CHECK(z3.entries.size() == 2);  // two bijective homomorphisms, same operator
}

TEST_CASE("brute force oracle agrees on orders up to 4") {
  for (int order = 1; order <= 4; ++order)
    for (const auto& g : catalog(order)) {
      auto mine = classify_group(g).distinct_r;
      auto brute = brute_force_qc_tables(g);
      CHECK(mine == brute);
    }
}

TEST_CASE("every classification entry passes verify_entry") {
  auto g = cyclic_group(4);
  auto report = classify_group(g);
  for (const auto& e : report.entries) CHECK(verify_entry(g, e).all_ok());
  // a corrupted entry turns at least one verdict red
  auto bad = report.entries[0];
  std::swap(bad.r_table[1], bad.r_table[2]);
  CHECK(!verify_entry(g, bad).all_ok());
  // the swap on S3 is rejected by the com check, showing the filter matters
  auto s3 = catalog_by_name("S3");
  ClassificationEntry fake;
  fake.k_name = "S3";
  fake.action_index = 0;
  fake.cocycle = {0, 1, 2, 3, 4, 5};
  fake.r_table = swap_yb(6).table;
  auto verdicts = verify_entry(s3, fake);
  CHECK(!verdicts.all_ok());
}

TEST_CASE("nearly commutative classification restricts to abelian K") {
  auto v = catalog_by_name("Z/2xZ/2");
  auto report = classify_nearly_commutative(v);
  CHECK(!report.entries.empty());
  bool swap_found = false;
  for (const auto& r : report.distinct_r) swap_found = swap_found || r == swap_yb(4).table;
  CHECK(swap_found);
  for (const auto& e : report.entries) {
    CHECK(e.nearly_commutative);
    CHECK(catalog_by_name(e.k_name).is_abelian());
  }
  // for S3 the nearly-commutative list drops the non-abelian K = S3 entries
  auto s3 = catalog_by_name("S3");
  auto nc = classify_nearly_commutative(s3);
  for (const auto& e : nc.entries) CHECK(e.k_name != "S3");
}

TEST_CASE("reports are deterministic") {
  auto a = to_json(classify_group(cyclic_group(4))).dump();
  auto b = to_json(classify_group(cyclic_group(4))).dump();
  CHECK(a == b);
}

TEST_CASE("aut orbits partition the distinct tables") {
  auto report = classify_group(catalog_by_name("Z/2xZ/2"));
  size_t covered = 0;
  for (const auto& orbit : report.aut_orbits) covered += orbit.size();
  CHECK(covered == report.distinct_r.size());
}

TEST_CASE("order bounds are enforced") {
  FiniteGroup big;
  big.n = 13;
  CHECK_THROWS_AS(classify_group(big), Error);
}
