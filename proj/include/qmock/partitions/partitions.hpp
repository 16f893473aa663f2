#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qmock::partitions {

/// Largest n the enumerator accepts (default 60).
int enumeration_cap();
void set_enumeration_cap(int cap);

struct Partition {
  std::vector<int> parts;  // weakly decreasing
  int n = 0;
};

/// Calls visit on every partition of n, parts weakly decreasing, in
/// decreasing lexicographic order ([2] before [1,1]). The span is only valid
/// during the call.
void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit);
std::vector<Partition> enumerate(int n);

/// Largest part minus number of parts; 0 for the empty partition.
int rank(std::span<const int> parts);
/// Largest part if no 1 appears, otherwise (#parts > k) - k where k is the
/// multiplicity of 1; 0 for the empty partition.
int crank(std::span<const int> parts);
inline int rank(const Partition& p) { return rank(p.parts); }
inline int crank(const Partition& p) { return crank(p.parts); }

enum class StatKind { kRank, kCrankCombinatorial, kCrankConvention };
std::string to_string(StatKind kind);
StatKind stat_kind_from_string(const std::string& name);

/// counts(m, n) for 0 <= n <= max_n.
class StatTable {
 public:
  StatTable(StatKind kind, int max_n);

  StatKind kind() const { return kind_; }
  int max_n() const { return max_n_; }
  long long count(int m, int n) const;
  /// Nonzero entries of column n, ordered by m.
  const std::map<int, long long>& column(int n) const;
  void set_column(int n, std::map<int, long long> col);
  /// Sum over m of counts(m, n).
  long long column_sum(int n) const;

  /// "m,n,count" header and one row per nonzero entry, ordered by n then m.
  std::string to_csv() const;

  friend bool operator==(const StatTable& a, const StatTable& b) {
    return a.kind_ == b.kind_ && a.max_n_ == b.max_n_ && a.columns_ == b.columns_;
  }

 private:
  StatKind kind_;
  int max_n_;
  std::vector<std::map<int, long long>> columns_;
};

/// Tabulation kernels: the OpenMP one distributes columns over threads.
StatTable stat_table_serial(StatKind kind, int max_n);
StatTable stat_table(StatKind kind, int max_n);

/// Largest n accepted by the counting tables (int64 headroom).
inline constexpr int kCountingLimit = 300;

/// Same table computed by counting instead of enumerating, so it reaches
/// n = kCountingLimit. Rank uses the (largest part, number of parts) box
/// decomposition; crank splits on the multiplicity of the part 1.
StatTable stat_table_counted(StatKind kind, int max_n);

/// Partitions of n into parts not divisible by 3.
long long p3(int n);
/// Number of partitions of n (by enumeration).
long long partition_count(int n);

/// Entries of column n whose m is congruent to t modulo mod.
long long class_count(const StatTable& table, int t, int mod, int n);
/// N_(6)(n) from a rank table.
long long n6(const StatTable& rank_table, int n);
/// M_(2)(n) from a crank-convention table.
long long m2(const StatTable& crank_table, int n);

}  // namespace qmock::partitions
