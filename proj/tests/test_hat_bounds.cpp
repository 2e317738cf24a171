#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "hatlab/braid.hpp"
#include "hatlab/data.hpp"
#include "hatlab/hat_bounds.hpp"
#include "hatlab/reproduce.hpp"
#include "hatlab/witnesses.hpp"

using namespace hatlab;

TEST(Adjunction, WorkedValues) {
  EXPECT_EQ(plane_curve_genus(1), 0);
  EXPECT_EQ(plane_curve_genus(6), 10);
  EXPECT_EQ(hat_genus_at_degree(19, 6), 0);   // T(3,11)
  EXPECT_EQ(hat_genus_at_degree(1, 3), 0);    // trefoil in a cubic
  EXPECT_EQ(hat_genus_at_degree(-1, 4), 3);
  EXPECT_EQ(slice_genus_qp(19), 10);
  EXPECT_EQ(min_hat_degree(19), 6);
  EXPECT_EQ(min_hat_degree(-5), 1);
  EXPECT_THROW(hat_genus_at_degree(2, 4), DomainError);
  EXPECT_THROW(hat_genus_at_degree(21, 6), DomainError);
  EXPECT_THROW(slice_genus_qp(-3), DomainError);
  EXPECT_THROW(plane_curve_genus(0), DomainError);
}

TEST(Adjunction, DegreeInvertsGenus) {
  for (i64 slk = -21; slk <= 61; slk += 2)
    for (i64 d = std::max<i64>(2, min_hat_degree(slk)); d <= 30; ++d) {
      i64 g = hat_genus_at_degree(slk, d);
      auto back = hat_degree_for_genus(slk, g);
      ASSERT_TRUE(back) << slk << " " << d;
      EXPECT_EQ(*back, d);
    }
  // genus 1 for the trefoil would need d^2 - 3d = 2
  EXPECT_FALSE(hat_degree_for_genus(1, 1));
  EXPECT_THROW(hat_degree_for_genus(1, -1), DomainError);
}

TEST(Adjunction, GenusGrowsWithDegree) {
  for (i64 slk = -9; slk <= 41; slk += 2) {
    i64 d0 = min_hat_degree(slk);
    for (i64 d = d0; d < d0 + 10; ++d)
      EXPECT_EQ(hat_genus_at_degree(slk, d + 1) - hat_genus_at_degree(slk, d), d - 1);
  }
}

TEST(Triangular, WorkedValues) {
  EXPECT_EQ(triangular_lb(10), (TriangularBound{10, 6, 0}));
  EXPECT_EQ(triangular_lb(5), (TriangularBound{6, 5, 1}));
  EXPECT_EQ(triangular_lb(0).d, 1);
  EXPECT_EQ(triangular_lb(0).genus_lb, 0);
  EXPECT_THROW(triangular_lb(-1), DomainError);
}

TEST(Triangular, ZeroExactlyOnTriangularNumbers) {
  std::set<i64> tri;
  for (i64 n = 0; n < 100; ++n) tri.insert(n * (n + 1) / 2);
  for (i64 g = 0; g <= 2000; ++g) {
    auto t = triangular_lb(g);
    EXPECT_EQ(t.genus_lb == 0, tri.count(g) == 1) << g;
    EXPECT_GE(t.m, g);
    if (t.d > 1) {
      EXPECT_LT(plane_curve_genus(t.d - 1), g);
    }
  }
}

// g = d(d-1)/2 + l with 1 <= l <= d gives the bound d - l.
TEST(Triangular, MatchesOffsetForm) {
  for (i64 d = 1; d <= 60; ++d)
    for (i64 l = 1; l <= d; ++l) EXPECT_EQ(triangular_lb(d * (d - 1) / 2 + l).genus_lb, d - l) << d << " " << l;
}

TEST(Torus, SemigroupThirdElementAgainstEnumeration) {
  for (i64 p = 2; p <= 20; ++p)
    for (i64 q = p + 1; q <= 20; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::set<i64> s;
      for (i64 a = 0; a <= 3; ++a)
        for (i64 b = 0; b <= 3; ++b) s.insert(a * p + b * q);
      EXPECT_EQ(semigroup_lb(p, q), *std::next(s.begin(), 2)) << p << "," << q;
    }
  EXPECT_THROW(semigroup_lb(4, 6), DomainError);
  EXPECT_THROW(semigroup_lb(5, 3), DomainError);
}

// slk from the braid closure, then adjunction in degree q.
TEST(Torus, HatGenusMatchesAdjunction) {
  for (int p = 2; p <= 12; ++p)
    for (int q = p + 1; q <= 12; ++q) {
      if (std::gcd(p, q) != 1) continue;
      i64 slk = self_linking(torus_braid(p, q));
      EXPECT_EQ(torus_hat_genus(p, q), hat_genus_at_degree(slk, q)) << p << "," << q;
      EXPECT_EQ(milnor_genus(p, q), slice_genus_qp(slk));
    }
}

TEST(NegativeBraids, DegreeOneGenus) {
  EXPECT_EQ(negbraid_hat_genus(-1), 0);
  EXPECT_EQ(negbraid_hat_genus(-5), 2);
  EXPECT_THROW(negbraid_hat_genus(1), DomainError);
  for (i64 slk = -41; slk <= -1; slk += 2) EXPECT_EQ(negbraid_hat_genus(slk), hat_genus_at_degree(slk, 1));
}

// Closures of (s1 ... s_{p-1})^-q: slk = -pq + q - p, hat genus (p-1)(q+1)/2.
TEST(NegativeBraids, NegativeTorusKnots) {
  for (int p = 2; p <= 9; ++p)
    for (int q = p + 1; q <= 15; ++q) {
      if (std::gcd(p, q) != 1) continue;
      i64 slk = self_linking(inverse(torus_braid(p, q)));
      EXPECT_EQ(slk, -p * q + q - p);
      EXPECT_EQ(negbraid_hat_genus(slk), (p - 1) * (q + 1) / 2);
    }
}

TEST(TwistKnots, KnownAndUnknown) {
  EXPECT_EQ(twist_knot_hat_genus(1), 2);
  EXPECT_EQ(twist_knot_hat_genus(3), 3);
  EXPECT_EQ(twist_knot_hat_genus(2), 1);
  EXPECT_EQ(twist_knot_hat_genus(6), 3);
  EXPECT_EQ(twist_knot_hat_genus(-3), 1);
  EXPECT_EQ(twist_knot_hat_genus(-7), 1);
  EXPECT_FALSE(twist_knot_hat_genus(0));
  EXPECT_FALSE(twist_knot_hat_genus(-1));
  EXPECT_FALSE(twist_knot_hat_genus(-2));
  EXPECT_FALSE(twist_knot_hat_genus(-4));
}

TEST(Budget, SubtractsSingularities) {
  EXPECT_EQ(singular_genus_budget(6, {}), 10);
  EXPECT_EQ(singular_genus_budget(6, {1, 1, 3}), 5);
  EXPECT_THROW(singular_genus_budget(4, {2, 2}), DomainError);
  EXPECT_THROW(singular_genus_budget(4, {-1}), DomainError);
}

TEST(Overflow, LargeDegreesThrow) {
  EXPECT_THROW(plane_curve_genus(i64{1} << 40), OverflowError);
  EXPECT_THROW(hat_genus_at_degree(1, i64{1} << 40), OverflowError);
  EXPECT_NO_THROW(plane_curve_genus(i64{1} << 30));
}

TEST(Report, QuasipositiveBounds) {
  auto r = hat_bounds(19, 10);
  ASSERT_TRUE(r.triangular);
  EXPECT_EQ(r.degree_lb, 6);
  EXPECT_EQ(r.genus_lb, 0);
  EXPECT_EQ(r.genus_by_degree, (std::map<i64, i64>{{6, 0}, {7, 5}, {8, 11}, {9, 18}}));
  EXPECT_THROW(hat_bounds(19, 9), DomainError);
  EXPECT_FALSE(hat_bounds(1, 3).triangular);
}

TEST(Report, WitnessesAreChecked) {
  auto r = hat_bounds(41, 21);
  EXPECT_EQ(r.degree_lb, 8);
  EXPECT_EQ(r.genus_lb, 0);
  apply_degree_lb(r, 9);
  EXPECT_EQ(r.genus_lb, 7);
  apply_degree_lb(r, 8);
  EXPECT_EQ(r.degree_lb, 9);
  EXPECT_THROW(add_witness(r, {8, 0, "below the raised bound"}), DomainError);
  EXPECT_THROW(add_witness(r, {9, 6, "wrong genus"}), DomainError);
  add_witness(r, {9, 7, "ok"});
  EXPECT_EQ(r.witnesses.size(), 1u);
  EXPECT_EQ(r.genus_by_degree.at(9), 7);
}

TEST(T2Table, PublishedRow) {
  auto rows = t2_table(witness_db(), 11);
  ASSERT_EQ(rows.size(), 11u);
  for (const auto& r : rows) {
    EXPECT_TRUE(r.exact()) << r.k << ": " << r.cell();
    EXPECT_EQ(r.lb, published_t2_row()[static_cast<std::size_t>(r.k - 1)]);
  }
  EXPECT_EQ(t2_table_tsv(rows),
            "k\t1\t2\t3\t4\t5\t6\t7\t8\t9\t10\t11\nhat_genus\t0\t1\t0\t2\t1\t0\t3\t2\t1\t5\t4\n");
}

TEST(T2Table, LowerBoundsNeverExceedWitnesses) {
  auto rows = t2_table(witness_db(), 11);
  for (const auto& r : rows) {
    EXPECT_GE(r.lb, triangular_lb(r.k).genus_lb);
    if (r.ub) {
      EXPECT_LE(r.lb, *r.ub);
    }
  }
  auto more = t2_table(witness_db(), 15);
  EXPECT_FALSE(more[14].ub);
  EXPECT_EQ(more[14].cell(), std::to_string(more[14].lb) + "..?");
}

TEST(WitnessDbParse, RejectsBadData) {
  const std::string tail = R"j(, "crossing_changes": [], "degree_lower_bounds": [], "class_exclusions": []})j";
  // genus 1 in a cubic contradicts adjunction for the trefoil
  const std::string wrong_genus = R"j({"hats": [{"knot": "T(2,3)", "k": 1, "degree": 3, "hat_genus": 1,
      "source": "x", "evidence": "y"}])j" + tail;
  const std::string wrong_name = R"j({"hats": [{"knot": "T(2,5)", "k": 1, "degree": 3, "hat_genus": 0,
      "source": "x", "evidence": "y"}])j" + tail;
  const std::string bad_edge = R"j({"hats": [], "crossing_changes": [{"from_k": 2, "to_k": 3, "changes": 2}],
      "degree_lower_bounds": [], "class_exclusions": []})j";
  EXPECT_THROW(parse_witness_db("{"), ParseError);
  EXPECT_THROW(parse_witness_db(R"j({"hats": []})j"), ParseError);
  EXPECT_NO_THROW(parse_witness_db(R"j({"hats": [])j" + tail));
  EXPECT_THROW(parse_witness_db(wrong_genus), DomainError);
  EXPECT_THROW(parse_witness_db(wrong_name), DomainError);
  EXPECT_THROW(parse_witness_db(bad_edge), DomainError);
}

TEST(WitnessDbParse, ContradictoryWitnessBreaksTable) {
  // a genus-0 hat for T(2,5) would beat its triangular bound
  WitnessDb db;
  db.hats.push_back({"T(2,5)", 2, 3, 0, "x", "y", ""});
  EXPECT_THROW(t2_table(db, 3), DomainError);
}
