#include "qmock/partitions/partitions.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

#include "qmock/error.hpp"

namespace qmock::partitions {

namespace {

std::atomic<int> g_cap{60};
constexpr int kHardCap = 120;

void check_cap(int n) {
  if (n < 0) throw PreconditionError("partition size must be nonnegative");
  if (n > g_cap.load()) {
    throw PreconditionError("n = " + std::to_string(n) + " exceeds the enumeration cap " +
                            std::to_string(g_cap.load()));
  }
}

void visit_rec(int remaining, int max_part, std::vector<int>& stack,
               const std::function<void(std::span<const int>)>& visit) {
  if (remaining == 0) {
    visit(stack);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    stack.push_back(part);
    visit_rec(remaining - part, part, stack, visit);
    stack.pop_back();
  }
}

std::map<int, long long> tabulate_column(StatKind kind, int n) {
  std::map<int, long long> col;
  if (kind == StatKind::kCrankConvention && n == 1) return {{-1, 1}, {0, -1}, {1, 1}};
  for_each_partition(n, [&](std::span<const int> parts) {
    ++col[kind == StatKind::kRank ? rank(parts) : crank(parts)];
  });
  return col;
}

}  // namespace

int enumeration_cap() { return g_cap.load(); }

void set_enumeration_cap(int cap) {
  if (cap < 0 || cap > kHardCap) {
    throw PreconditionError("enumeration cap must lie in [0, " + std::to_string(kHardCap) + "]");
  }
  g_cap.store(cap);
}

void for_each_partition(int n, const std::function<void(std::span<const int>)>& visit) {
  check_cap(n);
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n));
  visit_rec(n, n, stack, visit);
}

std::vector<Partition> enumerate(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](std::span<const int> parts) {
    out.push_back(Partition{std::vector<int>(parts.begin(), parts.end()), n});
  });
  return out;
}

int rank(std::span<const int> parts) {
  if (parts.empty()) return 0;
  return parts.front() - static_cast<int>(parts.size());
}

int crank(std::span<const int> parts) {
  if (parts.empty()) return 0;
  const int ones = static_cast<int>(std::count(parts.begin(), parts.end(), 1));
  if (ones == 0) return parts.front();
  const int larger = static_cast<int>(std::count_if(parts.begin(), parts.end(), [&](int p) { return p > ones; }));
  return larger - ones;
}

std::string to_string(StatKind kind) {
  switch (kind) {
    case StatKind::kRank: return "rank";
    case StatKind::kCrankCombinatorial: return "crank-combinatorial";
    case StatKind::kCrankConvention: return "crank-convention";
  }
  return "?";
}

StatKind stat_kind_from_string(const std::string& name) {
  if (name == "rank") return StatKind::kRank;
  if (name == "crank-combinatorial") return StatKind::kCrankCombinatorial;
  if (name == "crank-convention") return StatKind::kCrankConvention;
  throw LookupError("unknown table kind '" + name + "'");
}

StatTable::StatTable(StatKind kind, int max_n) : kind_(kind), max_n_(max_n) {
  if (max_n < 0 || max_n > kCountingLimit) throw PreconditionError("table size outside [0, " + std::to_string(kCountingLimit) + "]");
  columns_.resize(static_cast<std::size_t>(max_n) + 1);
}

long long StatTable::count(int m, int n) const {
  if (n < 0 || n > max_n_) throw PreconditionError("column " + std::to_string(n) + " outside the table");
  const auto& col = columns_[static_cast<std::size_t>(n)];
  auto it = col.find(m);
  return it == col.end() ? 0 : it->second;
}

const std::map<int, long long>& StatTable::column(int n) const {
  if (n < 0 || n > max_n_) throw PreconditionError("column " + std::to_string(n) + " outside the table");
  return columns_[static_cast<std::size_t>(n)];
}

void StatTable::set_column(int n, std::map<int, long long> col) {
  std::erase_if(col, [](const auto& kv) { return kv.second == 0; });
  columns_.at(static_cast<std::size_t>(n)) = std::move(col);
}

long long StatTable::column_sum(int n) const {
  long long s = 0;
  for (const auto& [m, c] : column(n)) s += c;
  return s;
}

std::string StatTable::to_csv() const {
  std::ostringstream os;
  os << "m,n,count\n";
  for (int n = 0; n <= max_n_; ++n) {
    for (const auto& [m, c] : columns_[static_cast<std::size_t>(n)]) os << m << "," << n << "," << c << "\n";
  }
  return os.str();
}

StatTable stat_table_serial(StatKind kind, int max_n) {
  check_cap(max_n);
  StatTable t(kind, max_n);
  for (int n = 0; n <= max_n; ++n) t.set_column(n, tabulate_column(kind, n));
  return t;
}

StatTable stat_table(StatKind kind, int max_n) {
  check_cap(max_n);
  StatTable t(kind, max_n);
  std::vector<std::map<int, long long>> cols(static_cast<std::size_t>(max_n) + 1);
  // Column cost grows like p(n), so hand out the big ones first.
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i <= max_n; ++i) {
    const int n = max_n - i;
    cols[static_cast<std::size_t>(n)] = tabulate_column(kind, n);
  }
  for (int n = 0; n <= max_n; ++n) t.set_column(n, std::move(cols[static_cast<std::size_t>(n)]));
  return t;
}

namespace {

using Counts = std::vector<long long>;

// exact[e][r]: partitions of r into exactly e parts.
std::vector<Counts> exact_parts(int max_n) {
  std::vector<Counts> exact(static_cast<std::size_t>(max_n) + 1, Counts(static_cast<std::size_t>(max_n) + 1, 0));
  exact[0][0] = 1;
  for (int e = 1; e <= max_n; ++e) {
    for (int r = e; r <= max_n; ++r) {
      // Either some part is 1 (drop it) or all parts are >= 2 (lower each by 1).
      exact[e][r] = exact[e - 1][r - 1] + exact[e][r - e];
    }
  }
  return exact;
}

StatTable rank_counted(int max_n) {
  // box[a][b][r]: partitions of r into at most a parts, each at most b,
  // kept for a + b + r < max_n (all a hook removal can leave).
  const int lim = max_n;
  std::vector<std::vector<Counts>> box(static_cast<std::size_t>(lim) + 1);
  for (int a = 0; a <= lim; ++a) {
    box[a].resize(static_cast<std::size_t>(lim - a) + 1);
    for (int b = 0; a + b <= lim; ++b) {
      Counts& g = box[a][b];
      g.assign(static_cast<std::size_t>(lim - a - b) + 1, 0);
      for (int r = 0; r < static_cast<int>(g.size()); ++r) {
        if (a == 0 || b == 0) {
          g[r] = r == 0 ? 1 : 0;
          continue;
        }
        // Largest part below b, or equal to b (remove it).
        long long v = r < static_cast<int>(box[a][b - 1].size()) ? box[a][b - 1][r] : 0;
        if (r >= b && r - b < static_cast<int>(box[a - 1][b].size())) v += box[a - 1][b][r - b];
        g[r] = v;
      }
    }
  }
  StatTable t(StatKind::kRank, max_n);
  t.set_column(0, {{0, 1}});
  for (int n = 1; n <= max_n; ++n) {
    std::map<int, long long> col;
    for (int largest = 1; largest <= n; ++largest) {
      for (int parts = 1; largest + parts - 1 <= n; ++parts) {
        const int rest = n - largest - parts + 1;
        const auto& g = box[parts - 1][largest - 1];
        if (rest < static_cast<int>(g.size()) && g[rest] != 0) col[largest - parts] += g[rest];
      }
    }
    t.set_column(n, std::move(col));
  }
  return t;
}

StatTable crank_counted(StatKind kind, int max_n) {
  const auto exact = exact_parts(max_n);
  std::vector<std::map<int, long long>> cols(static_cast<std::size_t>(max_n) + 1);
  cols[0][0] = 1;
  // No part equal to 1: crank is the largest part L. Count partitions of
  // n - L into parts in [2, L].
  {
    Counts coins(static_cast<std::size_t>(max_n) + 1, 0);
    coins[0] = 1;
    for (int largest = 2; largest <= max_n; ++largest) {
      for (int r = largest; r <= max_n; ++r) coins[r] += coins[r - largest];
      // coins[r]: partitions of r into parts in [2, largest].
      for (int n = largest; n <= max_n; ++n) {
        if (coins[n - largest] != 0) cols[n][largest] += coins[n - largest];
      }
    }
  }
  // Part 1 appears k >= 1 times: the other parts form a partition of n - k
  // into parts >= 2, e of which exceed k. Parts > k: exactly e parts of
  // size >= k + 1, i.e. exact[e][j - e k]; parts in [2, k]: small[].
  Counts small(static_cast<std::size_t>(max_n) + 1, 0);
  small[0] = 1;
  for (int k = 1; k <= max_n; ++k) {
    if (k >= 2) {
      for (int r = k; r <= max_n; ++r) small[r] += small[r - k];
    }
    for (int n = k; n <= max_n; ++n) {
      const int rest = n - k;
      for (int e = 0; e * (k + 1) <= rest; ++e) {
        long long total = 0;
        for (int big = e * (k + 1); big <= rest; ++big) {
          const long long a = e == 0 ? (big == 0 ? 1 : 0) : exact[e][big - e * k];
          if (a != 0) total += a * small[rest - big];
        }
        if (total != 0) cols[n][e - k] += total;
      }
    }
  }
  if (kind == StatKind::kCrankConvention && max_n >= 1) cols[1] = {{-1, 1}, {0, -1}, {1, 1}};
  StatTable t(kind, max_n);
  for (int n = 0; n <= max_n; ++n) t.set_column(n, std::move(cols[n]));
  return t;
}

}  // namespace

StatTable stat_table_counted(StatKind kind, int max_n) {
  if (max_n < 0 || max_n > kCountingLimit) {
    throw PreconditionError("counting tables stop at n = " + std::to_string(kCountingLimit));
  }
  return kind == StatKind::kRank ? rank_counted(max_n) : crank_counted(kind, max_n);
}

long long p3(int n) {
  long long count = 0;
  for_each_partition(n, [&](std::span<const int> parts) {
    if (std::none_of(parts.begin(), parts.end(), [](int p) { return p % 3 == 0; })) ++count;
  });
  return count;
}

long long partition_count(int n) {
  long long count = 0;
  for_each_partition(n, [&](std::span<const int>) { ++count; });
  return count;
}

long long class_count(const StatTable& table, int t, int mod, int n) {
  if (mod <= 0) throw PreconditionError("modulus must be positive");
  long long s = 0;
  for (const auto& [m, c] : table.column(n)) {
    if (((m - t) % mod + mod) % mod == 0) s += c;
  }
  return s;
}

long long n6(const StatTable& rank_table, int n) {
  if (rank_table.kind() != StatKind::kRank) throw PreconditionError("N_(6) needs a rank table");
  return class_count(rank_table, 0, 6, n) + class_count(rank_table, 1, 6, n) + class_count(rank_table, -1, 6, n) -
         class_count(rank_table, 3, 6, n) - class_count(rank_table, 2, 6, n) - class_count(rank_table, -2, 6, n);
}

long long m2(const StatTable& crank_table, int n) {
  if (crank_table.kind() != StatKind::kCrankConvention) throw PreconditionError("M_(2) needs a crank-convention table");
  return class_count(crank_table, 0, 2, n) - class_count(crank_table, 1, 2, n);
}

}  // namespace qmock::partitions
