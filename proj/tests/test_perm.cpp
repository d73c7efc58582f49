#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hallcheck/perm.hpp"

using namespace hallcheck;

TEST_CASE("identity permutation") {
  Perm id(5);
  CHECK(id.degree() == 5);
  CHECK(id.is_identity());
  CHECK(id.order() == 1);
  CHECK(id.to_cycle_string() == "()");
  for (int i = 0; i < 5; ++i) CHECK(id(i) == i);
}

TEST_CASE("from_images validates bijections") {
  CHECK_NOTHROW(Perm::from_images({1, 0, 2}));
  CHECK_THROWS_AS(Perm::from_images({0, 0, 1}), structural_error);
  CHECK_THROWS_AS(Perm::from_images({0, 3, 1}), structural_error);
  CHECK(Perm::from_images({}).degree() == 0);
}

TEST_CASE("from_cycles basic shapes") {
  Perm p = Perm::from_cycles(4, {{0, 1, 2, 3}});
  CHECK(p(0) == 1);
  CHECK(p(3) == 0);
  CHECK(p.order() == 4);

  Perm q = Perm::from_cycles(5, {{0, 1}, {2, 3, 4}});
  CHECK(q.order() == 6);
  CHECK(q.to_cycle_string() == "(0 1)(2 3 4)");

  SECTION("fixed points are legal and omitted from the text form") {
    Perm r = Perm::from_cycles(6, {{1, 4}});
    CHECK(r(0) == 0);
    CHECK(r.to_cycle_string() == "(1 4)");
  }
}

TEST_CASE("from_cycles rejects bad input") {
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, 3}}), config_error);
  CHECK_THROWS_AS(Perm::from_cycles(3, {{0, -1}}), config_error);
  CHECK_THROWS_AS(Perm::from_cycles(4, {{0, 1}, {1, 2}}), config_error);
  CHECK_THROWS_AS(Perm::from_cycles(4, {{0, 1, 0}}), config_error);
}

TEST_CASE("composition applies the right factor first") {
  // With a = (0 1) and b = (0 1 2): compose(a, b) sends 0 -> b(0)=1 -> a(1)=0,
  // 1 -> 2 -> 2, 2 -> 0 -> 1, i.e. the product is the transposition (1 2),
  // which has order 2.
  Perm a = Perm::from_cycles(3, {{0, 1}});
  Perm b = Perm::from_cycles(3, {{0, 1, 2}});
  Perm ab = compose(a, b);
  CHECK(ab(0) == 0);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 1);
  CHECK(ab.order() == 2);
  CHECK(ab.to_cycle_string() == "(1 2)");

  // The other order gives (0 2).
  Perm ba = compose(b, a);
  CHECK(ba.to_cycle_string() == "(0 2)");
  CHECK(ab != ba);
}

TEST_CASE("compose rejects degree mismatch") {
  CHECK_THROWS_AS(compose(Perm(3), Perm(4)), structural_error);
}

TEST_CASE("inverse undoes composition") {
  Perm p = Perm::from_cycles(6, {{0, 2, 4}, {1, 5}});
  CHECK(compose(p, p.inverse()).is_identity());
  CHECK(compose(p.inverse(), p).is_identity());
  CHECK(p.inverse().order() == p.order());
}

TEST_CASE("order is the lcm of cycle lengths") {
  CHECK(Perm::from_cycles(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}}).order() == 12);
  CHECK(Perm::from_cycles(7, {{0, 1, 2, 3, 4, 5, 6}}).order() == 7);
}

TEST_CASE("cycle string starts each cycle at its least point") {
  Perm p = Perm::from_cycles(5, {{3, 1, 2}});
  CHECK(p.to_cycle_string() == "(1 2 3)");
  Perm q = Perm::from_cycles(6, {{4, 5}, {0, 2}});
  CHECK(q.to_cycle_string() == "(0 2)(4 5)");
}

TEST_CASE("comparison is lexicographic on images") {
  Perm id(3);
  Perm p = Perm::from_cycles(3, {{1, 2}});
  Perm q = Perm::from_cycles(3, {{0, 1}});
  CHECK(id < p);
  CHECK(p < q);
  CHECK(id == Perm(3));
}

TEST_CASE("hashes separate distinct small permutations") {
  std::set<std::uint64_t> hashes;
  // All 24 permutations of degree 4.
  std::vector<std::uint16_t> img{0, 1, 2, 3};
  int count = 0;
  do {
    hashes.insert(Perm::from_images(img).hash());
    ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  CHECK(count == 24);
  CHECK(hashes.size() == 24);
}

TEST_CASE("cycles() round-trips through from_cycles") {
  Perm p = Perm::from_cycles(8, {{0, 3, 5}, {1, 7}});
  Perm q = Perm::from_cycles(8, p.cycles());
  CHECK(p == q);
}
