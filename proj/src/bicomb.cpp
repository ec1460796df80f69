#include "exotic/bicomb.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <map>
#include <sstream>

#include "exotic/error.hpp"

namespace exotic {

Partition::Partition(std::vector<int> parts) {
  for (int p : parts) {
    if (p < 0) throw Error(ErrorKind::RangeError, "negative part in partition");
  }
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  size_ = 0;
  for (int p : parts_) size_ += p;
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int j = 1; j <= row(1); ++j) {
    int count = 0;
    for (int p : parts_) count += (p >= j);
    out.push_back(count);
  }
  return Partition(std::move(out));
}

int Partition::multiplicity(int k) const noexcept {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition Partition::parse(std::string_view text) {
  if (text == "-" || text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value <= 0) {
      throw Error(ErrorKind::ParseError, "invalid partition \"" + std::string(text) + "\"");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) {
    throw Error(ErrorKind::ParseError, "partition parts must be weakly decreasing: \"" +
                                           std::string(text) + "\"");
  }
  return Partition(std::move(parts));
}

Partition operator+(const Partition& a, const Partition& b) {
  std::vector<int> out(static_cast<std::size_t>(std::max(a.length(), b.length())));
  for (int i = 1; i <= static_cast<int>(out.size()); ++i) out[i - 1] = a.row(i) + b.row(i);
  return Partition(std::move(out));
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> out = a.parts();
  out.insert(out.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(out));
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::uint64_t partition_count(int n) {
  if (n < 0) return 0;
  // Euler's recurrence via the coin-change table.
  std::vector<std::uint64_t> table(static_cast<std::size_t>(n) + 1, 0);
  table[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) table[s] += table[s - part];
  return table[n];
}

int n_invariant(const Partition& lambda) {
  int acc = 0;
  for (int i = 0; i < lambda.length(); ++i) acc += i * lambda.parts()[i];
  return acc;
}

std::string Bipartition::to_string() const { return first.to_string() + "|" + second.to_string(); }

Bipartition Bipartition::parse(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos) {
    throw Error(ErrorKind::ParseError, "bipartition needs exactly one '|': \"" +
                                           std::string(text) + "\"");
  }
  auto lhs = text.substr(0, bar);
  auto rhs = text.substr(bar + 1);
  if (lhs.empty() || rhs.empty()) {
    throw Error(ErrorKind::ParseError, "empty component must be written '-'");
  }
  return {Partition::parse(lhs), Partition::parse(rhs)};
}

int total(const Composition& c) {
  int acc = 0;
  for (int x : c) acc += x;
  return acc;
}

Composition interleave_c(const Bipartition& label) {
  int len = std::max(label.first.length(), label.second.length());
  Composition out;
  out.reserve(2 * static_cast<std::size_t>(len));
  for (int i = 1; i <= len; ++i) {
    out.push_back(label.first.row(i));
    out.push_back(label.second.row(i));
  }
  return out;
}

bool dominance_leq(const Composition& c, const Composition& d) {
  if (total(c) != total(d)) throw Error(ErrorKind::UnequalTotals, "compositions of different size");
  std::size_t len = std::max(c.size(), d.size());
  int sc = 0, sd = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sc += i < c.size() ? c[i] : 0;
    sd += i < d.size() ? d[i] : 0;
    if (sc > sd) return false;
  }
  return true;
}

bool closure_leq(const Bipartition& mu, const Bipartition& lambda) {
  if (mu.rank() != lambda.rank()) {
    throw Error(ErrorKind::RankMismatch, mu.to_string() + " vs " + lambda.to_string());
  }
  return dominance_leq(interleave_c(mu), interleave_c(lambda));
}

bool canonical_less(const Bipartition& a, const Bipartition& b) {
  Composition ca = interleave_c(a), cb = interleave_c(b);
  std::size_t len = std::max(ca.size(), cb.size());
  ca.resize(len, 0);
  cb.resize(len, 0);
  return ca > cb;
}

std::vector<Bipartition> bipartitions_of(int n) {
  std::vector<Bipartition> out;
  for (int m = n; m >= 0; --m) {
    for (const auto& first : partitions_of(m))
      for (const auto& second : partitions_of(n - m)) out.push_back({first, second});
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::uint64_t bipartition_count(int n) {
  std::uint64_t acc = 0;
  for (int m = 0; m <= n; ++m) acc += partition_count(m) * partition_count(n - m);
  return acc;
}

int n_invariant(const Bipartition& label) { return n_invariant(label.first + label.second); }

namespace {

void check_rank(const Bipartition& label, int n) {
  if (label.rank() != n) {
    throw Error(ErrorKind::RankMismatch,
                label.to_string() + " has rank " + std::to_string(label.rank()) +
                    ", expected " + std::to_string(n));
  }
}

}  // namespace

int orbit_dim(const Bipartition& label, int n) {
  check_rank(label, n);
  return 2 * n * n - 2 * n - 4 * n_invariant(label) + 2 * label.first.size();
}

int fiber_dim_d(const Bipartition& label, int n) {
  check_rank(label, n);
  return 2 * n_invariant(label) + n - label.first.size();
}

std::vector<NodeRemoval> removable_nodes(const Bipartition& label) {
  if (label.rank() == 0) throw Error(ErrorKind::EmptyBipartition, "no node to remove");
  std::vector<NodeRemoval> out;
  auto scan = [&](int component, const Partition& part) {
    for (int r = 1; r <= part.length(); ++r) {
      if (part.row(r) > part.row(r + 1)) {
        std::vector<int> parts = part.parts();
        parts[static_cast<std::size_t>(r - 1)] -= 1;
        Partition reduced(std::move(parts));
        Bipartition result = component == 1 ? Bipartition{reduced, label.second}
                                            : Bipartition{label.first, reduced};
        out.push_back({component, r, std::move(result)});
      }
    }
  };
  scan(1, label.first);
  scan(2, label.second);
  return out;
}

std::vector<std::pair<Bipartition, Bipartition>> hasse_covers(int n) {
  auto labels = bipartitions_of(n);
  const std::size_t count = labels.size();
  // less[i][j]: labels[i] < labels[j] strictly.
  std::vector<std::vector<char>> less(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j)
      less[i][j] = i != j && closure_leq(labels[i], labels[j]);

  std::vector<std::pair<Bipartition, Bipartition>> covers;
  for (std::size_t hi = 0; hi < count; ++hi) {
    for (std::size_t lo = 0; lo < count; ++lo) {
      if (!less[lo][hi]) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < count && covered; ++mid)
        if (less[lo][mid] && less[mid][hi]) covered = false;
      if (covered) covers.emplace_back(labels[hi], labels[lo]);
    }
  }
  return covers;
}

std::string hasse_dot(int n) {
  std::ostringstream os;
  os << "digraph closure_order_n" << n << " {\n  rankdir=BT;\n";
  std::map<int, std::vector<std::string>> by_dim;
  for (const auto& label : bipartitions_of(n)) {
    int dim = orbit_dim(label, n);
    os << "  \"" << label.to_string() << "\" [label=\"" << label.to_string() << "\\ndim " << dim
       << "\"];\n";
    by_dim[dim].push_back(label.to_string());
  }
  for (const auto& [dim, names] : by_dim) {
    os << "  { rank=same;";
    for (const auto& name : names) os << " \"" << name << "\";";
    os << " }\n";
  }
  for (const auto& [upper, lower] : hasse_covers(n)) {
    os << "  \"" << lower.to_string() << "\" -> \"" << upper.to_string() << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace exotic
