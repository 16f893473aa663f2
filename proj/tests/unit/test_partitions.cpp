#include <gtest/gtest.h>

#include "qmock/error.hpp"
#include "qmock/partitions/partitions.hpp"
#include "qmock/specfun/specfun.hpp"

using namespace qmock;
using namespace qmock::partitions;
using qmock::exactring::to_int64;

namespace {

constexpr std::int64_t Q(std::int64_t n) { return 24 * n; }

// Euler's pentagonal recurrence, an oracle independent of enumeration.
std::vector<long long> partition_numbers(int max_n) {
  std::vector<long long> p(static_cast<std::size_t>(max_n) + 1, 0);
  p[0] = 1;
  for (int n = 1; n <= max_n; ++n) {
    long long acc = 0;
    for (int k = 1;; ++k) {
      const int g1 = k * (3 * k - 1) / 2;
      const int g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const long long sign = k % 2 == 1 ? 1 : -1;
      acc += sign * p[n - g1];
      if (g2 <= n) acc += sign * p[n - g2];
    }
    p[n] = acc;
  }
  return p;
}

// Coefficient of w^m q^n in a generic-w series without denominator.
long long gf_count(const specfun::LocalizedSeries& f, int m, int n) {
  const auto c = f.num().coeff(Q(n)).coeff(2 * m);
  return to_int64(c.rational_value());
}

}  // namespace

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(enumerate(4).size(), 5u);
  const auto zero = enumerate(0);
  ASSERT_EQ(zero.size(), 1u);
  EXPECT_TRUE(zero[0].parts.empty());
  const auto two = enumerate(2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].parts, (std::vector<int>{2}));
  EXPECT_EQ(two[1].parts, (std::vector<int>{1, 1}));
}

TEST(Enumerate, DecreasingLexOrderAndSums) {
  const auto all = enumerate(12);
  for (std::size_t i = 0; i < all.size(); ++i) {
    int sum = 0;
    for (std::size_t j = 0; j < all[i].parts.size(); ++j) {
      sum += all[i].parts[j];
      if (j > 0) EXPECT_LE(all[i].parts[j], all[i].parts[j - 1]);
    }
    EXPECT_EQ(sum, 12);
    if (i > 0) EXPECT_TRUE(all[i].parts < all[i - 1].parts);
  }
}

TEST(Enumerate, CountsMatchPentagonal) {
  const auto p = partition_numbers(40);
  for (int n = 0; n <= 40; n += 5) EXPECT_EQ(partition_count(n), p[n]) << n;
  EXPECT_EQ(p[40], 37338);
}

TEST(Enumerate, CapEnforced) {
  EXPECT_THROW(enumerate(61), PreconditionError);
  set_enumeration_cap(70);
  EXPECT_EQ(enumeration_cap(), 70);
  EXPECT_NO_THROW(for_each_partition(61, [](std::span<const int>) {}));
  set_enumeration_cap(60);
  EXPECT_THROW(stat_table(StatKind::kRank, 61), PreconditionError);
}

TEST(Statistic, RankAndCrank) {
  const std::vector<int> four{4}, ones{1, 1, 1, 1}, two{2}, one_one{1, 1}, one{1};
  EXPECT_EQ(rank(four), 3);
  EXPECT_EQ(rank(ones), -3);
  EXPECT_EQ(crank(two), 2);
  EXPECT_EQ(crank(one_one), -2);
  EXPECT_EQ(crank(one), -1);
  EXPECT_EQ(rank(std::span<const int>{}), 0);
  EXPECT_EQ(crank(std::span<const int>{}), 0);
  // [3,1]: k = 1, one part exceeds 1.
  const std::vector<int> three_one{3, 1};
  EXPECT_EQ(crank(three_one), 0);
}

TEST(Table, WorkedExamples) {
  const StatTable r = stat_table(StatKind::kRank, 4);
  EXPECT_EQ(r.count(-1, 4), 1);
  EXPECT_EQ(r.count(0, 4), 1);
  EXPECT_EQ(r.count(1, 4), 1);
  EXPECT_EQ(r.count(1, 2), 1);
  EXPECT_EQ(r.count(0, 2), 0);
  EXPECT_EQ(r.count(-1, 2), 1);

  const StatTable conv = stat_table(StatKind::kCrankConvention, 3);
  EXPECT_EQ(conv.count(0, 1), -1);
  EXPECT_EQ(conv.count(1, 1), 1);
  EXPECT_EQ(conv.count(-1, 1), 1);
  const StatTable comb = stat_table(StatKind::kCrankCombinatorial, 3);
  EXPECT_EQ(comb.column(1), (std::map<int, long long>{{-1, 1}}));
  for (int n = 0; n <= 3; ++n) {
    if (n != 1) EXPECT_EQ(conv.column(n), comb.column(n));
  }
}

TEST(Table, SumsAndRankSymmetry) {
  const auto p = partition_numbers(30);
  const StatTable r = stat_table(StatKind::kRank, 30);
  const StatTable c = stat_table(StatKind::kCrankCombinatorial, 30);
  for (int n = 0; n <= 30; ++n) {
    EXPECT_EQ(r.column_sum(n), p[n]);
    EXPECT_EQ(c.column_sum(n), p[n]);
    for (const auto& [m, count] : r.column(n)) EXPECT_EQ(r.count(-m, n), count);
  }
}

TEST(Table, ParallelMatchesSerial) {
  for (StatKind kind : {StatKind::kRank, StatKind::kCrankCombinatorial, StatKind::kCrankConvention}) {
    EXPECT_TRUE(stat_table(kind, 28) == stat_table_serial(kind, 28)) << to_string(kind);
  }
}

TEST(Table, CountingMatchesEnumeration) {
  for (StatKind kind : {StatKind::kRank, StatKind::kCrankCombinatorial, StatKind::kCrankConvention}) {
    EXPECT_TRUE(stat_table_counted(kind, 32) == stat_table(kind, 32)) << to_string(kind);
  }
}

TEST(Table, CountingReachesFarAndSumsToP) {
  const auto p = partition_numbers(200);
  const StatTable r = stat_table_counted(StatKind::kRank, 200);
  const StatTable c = stat_table_counted(StatKind::kCrankCombinatorial, 200);
  for (int n : {50, 123, 200}) {
    EXPECT_EQ(r.column_sum(n), p[n]);
    EXPECT_EQ(c.column_sum(n), p[n]);
  }
  EXPECT_THROW(stat_table_counted(StatKind::kRank, kCountingLimit + 1), PreconditionError);
}

TEST(Table, CsvFormat) {
  EXPECT_EQ(stat_table(StatKind::kRank, 0).to_csv(), "m,n,count\n0,0,1\n");
  EXPECT_EQ(stat_table(StatKind::kCrankConvention, 1).to_csv(), "m,n,count\n0,0,1\n-1,1,1\n0,1,-1\n1,1,1\n");
  EXPECT_EQ(stat_kind_from_string("crank-combinatorial"), StatKind::kCrankCombinatorial);
  EXPECT_THROW(stat_kind_from_string("nope"), LookupError);
}

TEST(GeneratingFunction, RankTableMatchesEulerian) {
  const auto f = specfun::build_eulerian(specfun::EulerianKind::kRank, Q(26));
  const StatTable t = stat_table(StatKind::kRank, 25);
  for (int n = 0; n <= 25; ++n) {
    for (int m = -n; m <= n; ++m) ASSERT_EQ(gf_count(f, m, n), t.count(m, n)) << m << "," << n;
  }
}

TEST(GeneratingFunction, ConventionCrankMatchesProduct) {
  const auto f = specfun::build_eulerian(specfun::EulerianKind::kCrank, Q(26));
  const StatTable t = stat_table(StatKind::kCrankConvention, 25);
  for (int n = 0; n <= 25; ++n) {
    for (int m = -n; m <= n; ++m) ASSERT_EQ(gf_count(f, m, n), t.count(m, n)) << m << "," << n;
  }
}

TEST(P3, SmallValues) {
  EXPECT_EQ(p3(0), 1);
  EXPECT_EQ(p3(1), 1);
  EXPECT_EQ(p3(4), 4);
}

TEST(P3, MatchesProductExpansion) {
  // prod_{j not 0 mod 3} 1/(1 - q^j) = (q^3;q^3)_inf / (q;q)_inf.
  qlaurent::ProductForm f;
  f.times_pochhammer_infinite(qlaurent::Monomial::q(Q(3)), Q(3));
  f.times_pochhammer_infinite(qlaurent::Monomial::q(Q(1)), Q(1), -1);
  const auto series = f.expand(Q(41));
  for (int n = 0; n <= 40; ++n) {
    EXPECT_EQ(to_int64(series.num().coeff(Q(n)).coeff(0).rational_value()), p3(n)) << n;
  }
}

TEST(Aggregate, WorkedExamples) {
  const StatTable r = stat_table(StatKind::kRank, 4);
  const StatTable c = stat_table(StatKind::kCrankConvention, 4);
  EXPECT_EQ(n6(r, 1), 1);
  EXPECT_EQ(n6(r, 0), 1);
  EXPECT_EQ(m2(c, 1), -3);
  // Ranks of the partitions of 4 are 3, 1, 0, -1, -3.
  EXPECT_EQ(class_count(r, 0, 3, 4), 3);
  EXPECT_THROW(n6(c, 1), PreconditionError);
  EXPECT_THROW(m2(r, 1), PreconditionError);
}
