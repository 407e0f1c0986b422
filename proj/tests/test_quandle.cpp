#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "tq/quandle.hpp"

using namespace tq;

namespace {

QuandleViolation expect_violation(const std::vector<std::vector<int>>& rows) {
  auto result = QuandleTable::validate(rows);
  REQUIRE(std::holds_alternative<QuandleViolation>(result));
  return std::get<QuandleViolation>(result);
}

bool checks_iso(const QuandleTable& q1, const QuandleTable& q2,
                const Permutation& sigma) {
  for (int x = 0; x < q1.order(); ++x)
    for (int y = 0; y < q1.order(); ++y)
      if (sigma(q1.at(x, y)) != q2.at(sigma(x), sigma(y))) return false;
  return true;
}

}  // namespace

TEST_CASE("permutation basics") {
  Permutation p({1, 2, 0});
  CHECK(p.inverse().image() == std::vector<int>{2, 0, 1});
  CHECK(Permutation::identity(4).is_identity());
  CHECK(Permutation::all(3).size() == 6);
  CHECK(Permutation::all_fixing(3, 1).size() == 2);
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("index set basics") {
  IndexSet s{0, 2};
  CHECK(s.size() == 2);
  CHECK(s.contains(2));
  CHECK(!s.contains(1));
  CHECK(s.complement_in(3) == IndexSet{1});
  CHECK((s & IndexSet{2, 1}) == IndexSet{2});
  CHECK(set_to_string(s) == "{a,c}");
  CHECK(set_to_string(IndexSet{}) == "{}");
}

TEST_CASE("validate accepts the listed order-3 tables") {
  CHECK(fixtures::t3_trivial().order() == 3);
  CHECK(fixtures::t3_dihedral().at(0, 1) == 2);  // a * b = c
  CHECK(fixtures::t3_two_orbit().at(1, 0) == 2);
}

TEST_CASE("validate reports the first violation in scan order") {
  // column a = (a, a) cannot be a permutation
  auto v = expect_violation({{0, 0}, {0, 1}});
  CHECK(v.defect == QuandleDefect::kColumnNotBijective);
  CHECK(v.j == 0);

  // entry (a,a) = b breaks idempotence before anything else is looked at
  v = expect_violation({{1, 0}, {1, 0}});
  CHECK(v.defect == QuandleDefect::kNotIdempotent);
  CHECK(v.i == 0);

  v = expect_violation({{0, 9}, {1, 1}});
  CHECK(v.defect == QuandleDefect::kEntryOutOfRange);
  CHECK(v.i == 0);
  CHECK(v.j == 1);

  // columns are fine here but distributivity fails; witness is lex-least
  v = expect_violation({{0, 2, 0}, {2, 1, 1}, {1, 0, 2}});
  CHECK(v.defect == QuandleDefect::kNotSelfDistributive);
  CHECK(v.describe().find("self-distributivity") != std::string::npos);

  CHECK_THROWS_AS(QuandleTable::validate({{0, 0}, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(QuandleTable::validate({}), std::invalid_argument);
}

TEST_CASE("right translation") {
  // dihedral column a swaps b and c
  CHECK(right_translation(fixtures::t3_dihedral(), 0).image() ==
        std::vector<int>{0, 2, 1});
  CHECK(right_translation(fixtures::t3_trivial(), 1).is_identity());
  // column d of the {a}{b,c}{d} table is (a, c, b, d)
  CHECK(right_translation(fixtures::t4_swap_bc(), 3).image() ==
        std::vector<int>{0, 2, 1, 3});
  CHECK_THROWS_AS(right_translation(fixtures::t3_trivial(), 3),
                  std::out_of_range);
}

TEST_CASE("left translation map") {
  CHECK(left_translation_map(fixtures::t3_trivial(), 1) ==
        std::vector<int>{1, 1, 1});
  CHECK(left_translation_map(fixtures::t3_dihedral(), 0) ==
        std::vector<int>{0, 2, 1});
  auto fixture = counterexample_fixture();
  QuandleTable six = QuandleTable::from_rows(fixture.table);
  CHECK(left_translation_map(six, 2) == std::vector<int>{3, 4, 2, 2, 2, 2});
}

TEST_CASE("subquandles and complements") {
  QuandleTable q = fixtures::t3_two_orbit();
  CHECK(is_subquandle(q, IndexSet{0}));
  CHECK(is_subquandle(q, IndexSet{1, 2}));
  CHECK(!is_subquandle(fixtures::t3_dihedral(), IndexSet{0, 1}));
  CHECK(!is_subquandle(q, IndexSet{}));
  CHECK_THROWS_AS(is_subquandle(q, IndexSet{5}), std::out_of_range);

  CHECK(is_complemented(q, IndexSet{0}));
  CHECK(!is_complemented(fixtures::t3_dihedral(), IndexSet{0}));
  CHECK(is_complemented(q, IndexSet::full(3)));
  CHECK(is_complemented(fixtures::t3_dihedral(), IndexSet::full(3)));
}

TEST_CASE("orbit decomposition") {
  auto d = orbit_decomposition(fixtures::t4_trivial());
  CHECK(d.blocks.size() == 4);
  for (int x = 0; x < 4; ++x) CHECK(d.blocks[d.block_of[x]] == IndexSet{x});

  d = orbit_decomposition(fixtures::t3_two_orbit());
  CHECK(d.blocks == std::vector<IndexSet>{IndexSet{0}, IndexSet{1, 2}});
  CHECK(d.block_of == std::vector<int>{0, 1, 1});

  d = orbit_decomposition(fixtures::t4_dihedral3_plus());
  CHECK(d.blocks == std::vector<IndexSet>{IndexSet{0}, IndexSet{1, 2, 3}});
}

TEST_CASE("minimal complemented subquandle containing a point") {
  CHECK(minimal_complemented_containing(fixtures::t3_dihedral(), 1) ==
        IndexSet::full(3));
  CHECK(minimal_complemented_containing(fixtures::t3_two_orbit(), 2) ==
        IndexSet{1, 2});
  CHECK(minimal_complemented_containing(fixtures::t3_trivial(), 1) ==
        IndexSet{1});
}

TEST_CASE("intersecting complemented subquandles") {
  QuandleTable q = fixtures::t3_two_orbit();
  CHECK(intersect_complemented(q, IndexSet::full(3), IndexSet::full(3)) ==
        IndexSet::full(3));

  QuandleTable t4 = fixtures::t4_trivial();
  CHECK(intersect_complemented(t4, IndexSet{0, 1}, IndexSet{1, 2}) ==
        IndexSet{1});
  CHECK(intersect_complemented(t4, IndexSet{0, 1}, IndexSet{2, 3}) ==
        std::nullopt);
  CHECK_THROWS_AS(
      intersect_complemented(fixtures::t3_dihedral(), IndexSet{0}, IndexSet{0}),
      std::invalid_argument);

  QuandleTable six = QuandleTable::from_rows(counterexample_fixture().table);
  auto inter = intersect_complemented(six, IndexSet{0, 2, 3, 4, 5},
                                      IndexSet{1, 2, 3, 4, 5});
  REQUIRE(inter.has_value());
  CHECK(*inter == IndexSet{2, 3, 4, 5});
  CHECK(is_complemented(six, *inter));
}

TEST_CASE("find_isomorphism") {
  QuandleTable q = fixtures::t3_two_orbit();
  auto self = find_isomorphism(q, q);
  REQUIRE(self.has_value());
  CHECK(self->is_identity());

  CHECK(find_isomorphism(fixtures::t3_dihedral(), fixtures::t3_trivial()) ==
        std::nullopt);

  // a relabeling is recovered as some isomorphism
  Permutation shift({1, 2, 0});
  QuandleTable relabeled = q.relabeled(shift);
  auto iso = find_isomorphism(q, relabeled);
  REQUIRE(iso.has_value());
  CHECK(checks_iso(q, relabeled, *iso));

  CHECK_THROWS_AS(find_isomorphism(q, fixtures::t4_trivial()),
                  std::invalid_argument);
}

TEST_CASE("canonical form") {
  QuandleTable trivial = fixtures::t3_trivial();
  CHECK(canonical_form(trivial) == trivial);

  QuandleTable dihedral = fixtures::t3_dihedral();
  for (const Permutation& sigma : Permutation::all(3))
    CHECK(canonical_form(dihedral.relabeled(sigma)) ==
          canonical_form(dihedral));

  std::set<std::vector<int>> forms;
  for (const QuandleTable& q : fixtures::listed_order4())
    forms.insert(canonical_form(q).flat());
  CHECK(forms.size() == 7);
}

TEST_CASE("enumerate_quandles counts") {
  CHECK(enumerate_quandles(1, true).size() == 1);
  CHECK(enumerate_quandles(2, false).size() == 1);
  CHECK(enumerate_quandles(3, false).size() == 5);
  CHECK(enumerate_quandles(3, true).size() == 3);
  CHECK(enumerate_quandles(4, false).size() == 36);
  CHECK(enumerate_quandles(4, true).size() == 7);
  CHECK(enumerate_quandles(5, false).size() == 404);
  CHECK(enumerate_quandles(5, true).size() == 22);
  CHECK(enumerate_quandles(6, true).size() == 73);
  CHECK_THROWS_AS(enumerate_quandles(0, false), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_quandles(7, false), std::invalid_argument);
}

TEST_CASE("enumerated representatives match the listed tables") {
  auto reps3 = enumerate_quandles(3, true);
  for (const QuandleTable& listed : fixtures::listed_order3()) {
    int hits = 0;
    for (const QuandleTable& rep : reps3)
      hits += find_isomorphism(listed, rep).has_value();
    CHECK(hits == 1);
  }
}

TEST_CASE("labeled count equals the sum of orbit sizes of the classes") {
  // |labeled| = sum over classes of n! / |Aut|
  for (int n = 2; n <= 6; ++n) {
    long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    long expected = 0;
    for (const QuandleTable& q : enumerate_quandles(n, true))
      expected += factorial / static_cast<long>(automorphisms(q).size());
    CHECK(expected ==
          static_cast<long>(enumerate_quandles(n, false).size()));
  }
}

TEST_CASE("self-distributivity holds for every enumerated table") {
  for (int n = 1; n <= 5; ++n)
    for (const QuandleTable& q : enumerate_quandles(n, n >= 5))
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z)
            CHECK(q.at(q.at(x, y), z) == q.at(q.at(x, z), q.at(y, z)));
}

TEST_CASE("right translations are bijections with two-sided inverses") {
  for (int n = 1; n <= 4; ++n)
    for (const QuandleTable& q : enumerate_quandles(n, true))
      for (int x = 0; x < n; ++x) {
        Permutation r = right_translation(q, x);
        Permutation inv = r.inverse();
        for (int y = 0; y < n; ++y) CHECK(inv(r(y)) == y);
      }
}

TEST_CASE("orbit blocks are the minimal complemented subquandles") {
  for (int n = 1; n <= 5; ++n)
    for (const QuandleTable& q : enumerate_quandles(n, true)) {
      auto d = orbit_decomposition(q);
      for (IndexSet block : d.blocks) {
        CHECK(is_complemented(q, block));
        // no proper nonempty subset of a block is complemented
        uint32_t m = block.mask();
        for (uint32_t sub = (m - 1) & m; sub; sub = (sub - 1) & m)
          CHECK(!is_complemented(q, IndexSet(sub)));
      }
      // the subset-scan agrees with the union-find blocks
      for (int a = 0; a < n; ++a)
        CHECK(minimal_complemented_containing(q, a) == d.blocks[d.block_of[a]]);
    }
}

TEST_CASE("complemented subquandles are closed under intersection") {
  for (int n = 1; n <= 5; ++n)
    for (const QuandleTable& q : enumerate_quandles(n, true)) {
      std::vector<IndexSet> complemented;
      for (uint32_t m = 1; m < (1u << n); ++m)
        if (is_complemented(q, IndexSet(m))) complemented.push_back(IndexSet(m));
      for (IndexSet s1 : complemented)
        for (IndexSet s2 : complemented) {
          if ((s1 & s2).empty()) continue;
          CHECK(is_complemented(q, s1 & s2));
          auto inter = intersect_complemented(q, s1, s2);  // throws on failure
          CHECK(inter == (s1 & s2));
        }
    }
}

TEST_CASE("canonical form is relabeling invariant") {
  for (int n = 1; n <= 4; ++n)
    for (const QuandleTable& q : enumerate_quandles(n, true)) {
      QuandleTable canon = canonical_form(q);
      for (const Permutation& sigma : Permutation::all(n))
        CHECK(canonical_form(q.relabeled(sigma)) == canon);
    }
  // n = 5: sampled relabelings
  std::mt19937 rng(20240811);
  auto classes = enumerate_quandles(5, true);
  const auto& perms = Permutation::all(5);
  for (int trial = 0; trial < 40; ++trial) {
    const QuandleTable& q = classes[rng() % classes.size()];
    const Permutation& sigma = perms[rng() % perms.size()];
    CHECK(canonical_form(q.relabeled(sigma)) == canonical_form(q));
  }
}

TEST_CASE("representatives are pairwise non-isomorphic") {
  for (int n = 3; n <= 4; ++n) {
    auto reps = enumerate_quandles(n, true);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j)
        CHECK(find_isomorphism(reps[i], reps[j]) == std::nullopt);
  }
}

TEST_CASE("isomorphisms carry orbits onto orbits") {
  std::mt19937 rng(7);
  for (int n = 3; n <= 4; ++n) {
    const auto& perms = Permutation::all(n);
    for (const QuandleTable& q : enumerate_quandles(n, true)) {
      const Permutation& sigma = perms[rng() % perms.size()];
      QuandleTable relabeled = q.relabeled(sigma);
      auto blocks = orbit_decomposition(q).blocks;
      auto expected = orbit_decomposition(relabeled).blocks;
      std::vector<IndexSet> mapped;
      for (IndexSet b : blocks) {
        IndexSet image;
        for (int x : b.elements()) image.add(sigma(x));
        mapped.push_back(image);
      }
      std::sort(mapped.begin(), mapped.end());
      std::sort(expected.begin(), expected.end());
      CHECK(mapped == expected);
    }
  }
}
