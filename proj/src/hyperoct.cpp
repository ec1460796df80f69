#include "exotic/hyperoct.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "exotic/error.hpp"

namespace exotic {

namespace {

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out *= static_cast<std::uint64_t>(i);
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return out;
}

// z_λ = Π i^{m_i} m_i!
std::uint64_t z_value(const Partition& lambda) {
  std::uint64_t out = 1;
  for (int i = 1; i <= lambda.row(1); ++i) {
    const int m = lambda.multiplicity(i);
    for (int k = 0; k < m; ++k) out *= static_cast<std::uint64_t>(i);
    out *= factorial(m);
  }
  return out;
}

// Sub-multisets of the parts of `lambda`: callback(chosen, rest, ways) where `ways`
// counts the distinct ways to pick the chosen cycles from labelled cycles.
void for_each_submultiset(const Partition& lambda,
                          const std::function<void(const Partition&, const Partition&, std::uint64_t)>& visit) {
  std::vector<std::pair<int, int>> groups;  // (part, multiplicity)
  for (int i = lambda.row(1); i >= 1; --i)
    if (int m = lambda.multiplicity(i)) groups.emplace_back(i, m);
  std::vector<int> chosen(groups.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t g) {
    if (g == groups.size()) {
      std::vector<int> in, out;
      std::uint64_t ways = 1;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        in.insert(in.end(), static_cast<std::size_t>(chosen[k]), groups[k].first);
        out.insert(out.end(), static_cast<std::size_t>(groups[k].second - chosen[k]), groups[k].first);
        ways *= binomial(groups[k].second, chosen[k]);
      }
      visit(Partition(std::move(in)), Partition(std::move(out)), ways);
      return;
    }
    for (int c = 0; c <= groups[g].second; ++c) {
      chosen[g] = c;
      rec(g + 1);
    }
  };
  rec(0);
}

using SignedCycleFunction = std::function<std::int64_t(const Partition& positive, const Partition& negative)>;

// Induction from W_m × W_{n−m} to W_n evaluated at the class (α, β).
std::int64_t induce(int m, const SignedCycleFunction& left, const SignedCycleFunction& right,
                    const Bipartition& cls) {
  std::int64_t total = 0;
  for_each_submultiset(cls.first, [&](const Partition& a1, const Partition& a2, std::uint64_t wa) {
    for_each_submultiset(cls.second, [&](const Partition& b1, const Partition& b2, std::uint64_t wb) {
      if (a1.size() + b1.size() != m) return;
      const std::int64_t l = left(a1, b1);
      if (l == 0) return;
      total += static_cast<std::int64_t>(wa * wb) * l * right(a2, b2);
    });
  });
  return total;
}

std::int64_t mn_recursive(std::vector<int> beta, const std::vector<int>& rho, std::size_t next,
                          std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t>& memo) {
  if (next == rho.size()) return 1;
  std::vector<int> rest(rho.begin() + static_cast<std::ptrdiff_t>(next), rho.end());
  auto key = std::make_pair(beta, rest);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const int k = rho[next];
  std::int64_t acc = 0;
  // beta is strictly decreasing; a rim hook of length k moves one bead from b to b−k.
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int b : beta) between += (b > target && b < beta[i]);
    std::vector<int> moved = beta;
    moved[i] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    const std::int64_t sub = mn_recursive(std::move(moved), rho, next + 1, memo);
    acc += (between % 2 ? -sub : sub);
  }
  memo.emplace(std::move(key), acc);
  return acc;
}

std::int64_t signed_parity(const Partition& negative) { return negative.length() % 2 ? -1 : 1; }

}  // namespace

std::uint64_t wn_order(int n) { return (std::uint64_t{1} << n) * factorial(n); }

std::uint64_t wn_centralizer_order(const Bipartition& signature) {
  return z_value(signature.first) * (std::uint64_t{1} << signature.first.length()) * z_value(signature.second) *
         (std::uint64_t{1} << signature.second.length());
}

std::vector<WnClass> wn_classes(int n) {
  if (n < 1) throw Error(ErrorKind::RangeError, "W_n needs n >= 1");
  const Bipartition identity{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), Partition()};
  std::vector<WnClass> out;
  auto push = [&](const Bipartition& sig) {
    const std::uint64_t z = wn_centralizer_order(sig);
    out.push_back({sig, z, wn_order(n) / z});
  };
  push(identity);
  for (const auto& sig : bipartitions_of(n))
    if (sig != identity) push(sig);
  return out;
}

std::int64_t sn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) {
    throw Error(ErrorKind::SizeMismatch, "χ^" + lambda.to_string() + " at class " + rho.to_string());
  }
  thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, std::int64_t> memo;
  const int len = lambda.length();
  std::vector<int> beta;
  for (int i = 1; i <= len; ++i) beta.push_back(lambda.row(i) + len - i);
  return mn_recursive(std::move(beta), rho.parts(), 0, memo);
}

std::int64_t wn_character(const Bipartition& irrep, const Bipartition& cls) {
  if (irrep.rank() != cls.rank()) {
    throw Error(ErrorKind::SizeMismatch, "irrep " + irrep.to_string() + " vs class " + cls.to_string());
  }
  const Partition& mu = irrep.first;
  const Partition& nu = irrep.second;
  return induce(
      mu.size(),
      [&](const Partition& pos, const Partition& neg) { return sn_character(mu, join(pos, neg)); },
      [&](const Partition& pos, const Partition& neg) {
        return signed_parity(neg) * sn_character(nu, join(pos, neg));
      },
      cls);
}

std::uint64_t standard_tableaux(const Partition& lambda) {
  std::uint64_t hooks = 1;
  const Partition conj = lambda.conjugate();
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.row(r); ++c)
      hooks *= static_cast<std::uint64_t>(lambda.row(r) - c + conj.row(c) - r + 1);
  return factorial(lambda.size()) / hooks;
}

std::uint64_t irrep_dim(const Bipartition& irrep) {
  return binomial(irrep.rank(), irrep.first.size()) * standard_tableaux(irrep.first) *
         standard_tableaux(irrep.second);
}

ClassFunction character(const Bipartition& irrep) {
  ClassFunction out{irrep.rank(), {}};
  for (const auto& cls : wn_classes(irrep.rank())) out.values.push_back(wn_character(irrep, cls.signature));
  return out;
}

ClassFunction regular_character(int n) {
  ClassFunction out{n, {}};
  for (const auto& cls : wn_classes(n)) out.values.push_back(cls.size == 1 && cls.signature.second.empty()
                                                                 ? static_cast<std::int64_t>(wn_order(n))
                                                                 : 0);
  return out;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.n != g.n || f.values.size() != g.values.size()) throw Error(ErrorKind::SizeMismatch, "class functions of different W_n");
  const auto classes = wn_classes(f.n);
  if (classes.size() != f.values.size()) throw Error(ErrorKind::SizeMismatch, "class function length");
  __int128 acc = 0;
  for (std::size_t c = 0; c < classes.size(); ++c)
    acc += static_cast<__int128>(classes[c].size) * f.values[c] * g.values[c];
  // Characters of W_n are real, so no conjugation is needed.
  const std::int64_t order = static_cast<std::int64_t>(wn_order(f.n));
  const std::int64_t whole = static_cast<std::int64_t>(acc / order);
  const std::int64_t rem = static_cast<std::int64_t>(acc % order);
  return Rational(whole) + Rational(rem, order);
}

CharacterTable CharacterTable::build(int n) {
  CharacterTable table;
  table.n_ = n;
  table.irreps_ = bipartitions_of(n);
  table.classes_ = wn_classes(n);
  table.values_.resize(table.irreps_.size());
  for (std::size_t i = 0; i < table.irreps_.size(); ++i)
    for (const auto& cls : table.classes_) table.values_[i].push_back(wn_character(table.irreps_[i], cls.signature));
  return table;
}

CharacterTable CharacterTable::assemble(int n, std::vector<Bipartition> irreps, std::vector<WnClass> classes,
                                        std::vector<std::vector<std::int64_t>> values) {
  if (irreps.size() != classes.size() || values.size() != irreps.size()) {
    throw Error(ErrorKind::SizeMismatch, "character table must be square");
  }
  for (const auto& row : values)
    if (row.size() != classes.size()) throw Error(ErrorKind::SizeMismatch, "character table row has wrong length");
  CharacterTable table;
  table.n_ = n;
  table.irreps_ = std::move(irreps);
  table.classes_ = std::move(classes);
  table.values_ = std::move(values);
  return table;
}

std::size_t CharacterTable::irrep_index(const Bipartition& label) const {
  auto it = std::find(irreps_.begin(), irreps_.end(), label);
  if (it == irreps_.end()) throw Error(ErrorKind::IndexOutOfRange, "unknown irrep " + label.to_string());
  return static_cast<std::size_t>(it - irreps_.begin());
}

std::size_t CharacterTable::class_index(const Bipartition& signature) const {
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].signature == signature) return c;
  throw Error(ErrorKind::IndexOutOfRange, "unknown class " + signature.to_string());
}

BranchingMatrix restrict_branching(int n) {
  if (n < 2) throw Error(ErrorKind::RangeError, "branching needs n >= 2");
  const CharacterTable big = CharacterTable::build(n);
  const CharacterTable small = CharacterTable::build(n - 1);
  BranchingMatrix out{n, big.irreps(), small.irreps(), {}};
  // W_{n−1} class (α, β) lies in the W_n class (α ∪ (1), β).
  std::vector<std::size_t> fused;
  for (const auto& cls : small.classes()) {
    fused.push_back(big.class_index({join(cls.signature.first, Partition({1})), cls.signature.second}));
  }
  for (std::size_t i = 0; i < big.irreps().size(); ++i) {
    ClassFunction restricted{n - 1, {}};
    for (std::size_t c = 0; c < small.classes().size(); ++c) restricted.values.push_back(big.value(i, fused[c]));
    std::vector<std::int64_t> row;
    for (std::size_t j = 0; j < small.irreps().size(); ++j) {
      Rational mult = inner_product(restricted, small.row(j));
      if (mult.denominator() != 1) throw Error(ErrorKind::RangeError, "non-integral branching multiplicity");
      row.push_back(mult.numerator());
    }
    out.entries.push_back(std::move(row));
  }
  return out;
}

std::uint64_t GradedWnModule::dimension() const {
  std::uint64_t total = 0;
  for (const auto& [degree, mult] : degrees)
    for (std::size_t i = 0; i < labels.size(); ++i) total += static_cast<std::uint64_t>(mult[i]) * irrep_dim(labels[i]);
  return total;
}

GradedWnModule graded_fiber_module(int n, int m, const Partition& rho1, const Partition& rho2) {
  if (n < 1 || m < 0 || m > n) {
    throw Error(ErrorKind::RangeError, "need 0 <= m <= n, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (rho1.size() != m || rho2.size() != n - m) {
    throw Error(ErrorKind::SizeMismatch, "ρ₁ must partition m and ρ₂ must partition n − m");
  }
  GradedWnModule out{n, bipartitions_of(n), {}};
  const CharacterTable table = CharacterTable::build(n);
  for (int k = 0; k <= n - m; ++k) {
    // H^{2k}(P_1^{n−m}): k-subsets of the factors; a chosen negative cycle contributes −1.
    auto cohomology = [k](const Partition& pos, const Partition& neg) {
      std::int64_t acc = 0;
      for_each_submultiset(pos, [&](const Partition& pa, const Partition&, std::uint64_t wa) {
        for_each_submultiset(neg, [&](const Partition& na, const Partition&, std::uint64_t wb) {
          if (pa.size() + na.size() != k) return;
          acc += static_cast<std::int64_t>(wa * wb) * signed_parity(na);
        });
      });
      return acc;
    };
    ClassFunction induced{n, {}};
    for (const auto& cls : table.classes()) {
      induced.values.push_back(induce(
          m, [&](const Partition& pos, const Partition& neg) { return sn_character(rho1, join(pos, neg)); },
          [&](const Partition& pos, const Partition& neg) {
            return cohomology(pos, neg) * sn_character(rho2, join(pos, neg));
          },
          cls.signature));
    }
    std::vector<std::int64_t> mult;
    for (std::size_t i = 0; i < table.irreps().size(); ++i) {
      Rational r = inner_product(induced, table.row(i));
      if (r.denominator() != 1 || r.numerator() < 0) {
        throw Error(ErrorKind::RangeError, "graded component is not a genuine character");
      }
      mult.push_back(r.numerator());
    }
    out.degrees.emplace(2 * k, std::move(mult));
  }
  return out;
}

}  // namespace exotic
