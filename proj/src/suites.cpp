#include "exotic/suites.hpp"

#include <random>

#include "exotic/classify.hpp"
#include "exotic/error.hpp"
#include "exotic/hyperoct.hpp"

namespace exotic {

namespace {

struct Recorder {
  Report& report;

  void expect(const std::string& check, const std::string& instance, const std::string& expected,
              const std::string& got) {
    ++report.checked;
    if (expected != got) report.mismatches.push_back({check, instance, expected, got});
  }
  void expect(const std::string& check, const std::string& instance, std::int64_t expected, std::int64_t got) {
    expect(check, instance, std::to_string(expected), std::to_string(got));
  }
};

std::string at(int n, Scalar p, const Bipartition& label) {
  return "n=" + std::to_string(n) + " p=" + std::to_string(p) + " " + label.to_string();
}

ExoticPair lie_pair(const NormalFormData& nf) {
  return ExoticPair{nf.pair.space, log_map(nf.pair.x), nf.pair.v, Flavor::Lie};
}

}  // namespace

Report stabilizer_dim_report(int n, Scalar p) {
  Report report{"stabilizer-dim", n, 0, {}};
  Recorder rec{report};
  const SymplecticSpace space(n, p);
  const int sp_dim = 2 * n * n + n;
  for (const auto& label : bipartitions_of(n)) {
    const NormalFormData nf = normal_form_pair(label, space);
    const ExoticPair lie = lie_pair(nf);
    rec.expect("normal-form-label", at(n, p, label), label.to_string(), exotic_type(nf.pair).to_string());
    rec.expect("normal-form-label-lie", at(n, p, label), label.to_string(), exotic_type(lie).to_string());
    const int with_v = stabilizer_dim(nf.pair, true);
    const int without_v = stabilizer_dim(nf.pair, false);
    rec.expect("stab-dim", at(n, p, label), sp_dim - orbit_dim(label, n), with_v);
    rec.expect("stab-dim-lie", at(n, p, label), with_v, stabilizer_dim(lie, true));
    rec.expect("stab-dim-drop", at(n, p, label), without_v - 2 * label.first.size(), with_v);
    const int cyc = cyclic_dim(lie);
    rec.expect("cyclic-dim", at(n, p, label), label.first.row(1), cyc);
  }
  return report;
}

Report parabolic_report(int n, Scalar p, int max_blocks) {
  Report report{"parabolic", n, 0, {}};
  Recorder rec{report};
  const SymplecticSpace space(n, p);
  for (const auto& label : bipartitions_of(n)) {
    const NormalFormData nf = normal_form_pair(label, space);
    if (nf.blocks() > max_blocks) continue;
    const int stab = stabilizer_dim(nf.pair, true);
    // Each removable node sits in the last row q_i of some block i.
    for (const auto& node : removable_nodes(label)) {
      int block = 0;
      for (int i = 1; i <= nf.blocks(); ++i)
        if (nf.block_last_row[static_cast<std::size_t>(i - 1)] == node.row) block = i;
      const NodeCase which = node.component == 1 ? NodeCase::I : NodeCase::II;
      const std::string instance = at(n, p, label) + " -> " + node.result.to_string() + " block=" + std::to_string(block);
      rec.expect("node-in-block-end", instance, "true", block ? "true" : "false");
      if (!block) continue;
      rec.expect("line-stabilizer", instance, parabolic_stabilizer_expected(stab, node.row, which),
                 parabolic_stabilizer_dim(nf, block, which));
    }
  }
  return report;
}

Report chartable_report(int n) {
  Report report{"chartable", n, 0, {}};
  Recorder rec{report};
  const CharacterTable table = CharacterTable::build(n);
  const auto& classes = table.classes();
  const std::size_t k = classes.size();
  const auto order = static_cast<std::int64_t>(wn_order(n));
  rec.expect("square", "n=" + std::to_string(n), static_cast<std::int64_t>(bipartition_count(n)),
             static_cast<std::int64_t>(k));
  std::int64_t class_total = 0;
  for (const auto& c : classes) class_total += static_cast<std::int64_t>(c.size);
  rec.expect("class-sizes", "n=" + std::to_string(n), order, class_total);

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      __int128 acc = 0;
      for (std::size_t c = 0; c < k; ++c)
        acc += static_cast<__int128>(classes[c].size) * table.value(i, c) * table.value(j, c);
      rec.expect("row-orthogonality", table.irreps()[i].to_string() + " . " + table.irreps()[j].to_string(),
                 i == j ? order : 0, static_cast<std::int64_t>(acc));
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    for (std::size_t d = c; d < k; ++d) {
      std::int64_t acc = 0;
      for (std::size_t i = 0; i < k; ++i) acc += table.value(i, c) * table.value(i, d);
      rec.expect("column-orthogonality",
                 classes[c].signature.to_string() + " . " + classes[d].signature.to_string(),
                 c == d ? static_cast<std::int64_t>(classes[c].centralizer_order) : 0, acc);
    }
  }
  // The identity class and the central element −1 = (−, 1ⁿ).
  const std::size_t id = table.class_index(Bipartition{Partition(std::vector<int>(static_cast<std::size_t>(n), 1)), {}});
  const std::size_t minus_one =
      table.class_index(Bipartition{{}, Partition(std::vector<int>(static_cast<std::size_t>(n), 1))});
  rec.expect("identity-first", "n=" + std::to_string(n), 0, static_cast<std::int64_t>(id));
  for (std::size_t i = 0; i < k; ++i) {
    const Bipartition& irrep = table.irreps()[i];
    const auto dim = static_cast<std::int64_t>(irrep_dim(irrep));
    rec.expect("degree", irrep.to_string(), dim, table.value(i, id));
    rec.expect("central", irrep.to_string(), irrep.second.size() % 2 ? -dim : dim, table.value(i, minus_one));
  }
  return report;
}

Report closure_poset_report(int n) {
  Report report{"closure-poset", n, 0, {}};
  Recorder rec{report};
  const auto labels = bipartitions_of(n);
  const std::size_t k = labels.size();
  std::vector<std::vector<char>> leq(k, std::vector<char>(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) leq[a][b] = closure_leq(labels[a], labels[b]);
  for (std::size_t a = 0; a < k; ++a) {
    rec.expect("reflexive", labels[a].to_string(), 1, leq[a][a]);
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const std::string pair = labels[a].to_string() + " <= " + labels[b].to_string();
      if (leq[a][b] && leq[b][a]) rec.expect("antisymmetric", pair, "false", "true");
      if (leq[a][b]) {
        ++report.checked;
        if (orbit_dim(labels[a], n) >= orbit_dim(labels[b], n)) {
          report.mismatches.push_back({"dimension-monotone", pair, "<", std::to_string(orbit_dim(labels[a], n)) + " vs " +
                                                                            std::to_string(orbit_dim(labels[b], n))});
        }
        for (std::size_t c = 0; c < k; ++c)
          if (leq[b][c] && !leq[a][c]) rec.expect("transitive", pair + " <= " + labels[c].to_string(), "true", "false");
      }
    }
  }
  return report;
}

Report determination_report(int n) {
  Report report{"determine", n, 0, {}};
  Recorder rec{report};
  Determination det;
  try {
    det = determine_correspondence(n);
  } catch (const Error& e) {
    rec.expect("solvable", "n=" + std::to_string(n), "unique bijection", e.what());
    return report;
  }
  for (const auto& stats : det.stats)
    rec.expect("unique", "rank=" + std::to_string(stats.rank), 1, static_cast<std::int64_t>(stats.solutions_with_axioms));
  for (const auto& [rank, level] : det.map.by_rank)
    for (const auto& [orbit, irrep] : level) rec.expect("identity", orbit.to_string(), orbit.to_string(), irrep.to_string());
  return report;
}

Report graded_report(int n) {
  Report report{"graded", n, 0, {}};
  Recorder rec{report};
  for (const auto& rho : partitions_of(n)) {
    const GradedWnModule mod = graded_fiber_module(n, n, rho, Partition());
    const Bipartition expected{rho, Partition()};
    std::string got;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < mod.labels.size(); ++i) {
      const auto mult = mod.degrees.at(0)[i];
      total += mult;
      if (mult) got += (got.empty() ? "" : "+") + std::to_string(mult) + "*" + mod.labels[i].to_string();
    }
    rec.expect("single-irrep", "m=n rho=" + rho.to_string(), "1*" + expected.to_string(), got);
    rec.expect("single-degree", "m=n rho=" + rho.to_string(), 1, static_cast<std::int64_t>(mod.degrees.size()));
  }
  if (n == 1) {
    const GradedWnModule mod = graded_fiber_module(1, 0, Partition(), Partition({1}));
    const Bipartition trivial{Partition({1}), {}};
    const Bipartition sign{{}, Partition({1})};
    auto render = [&](int degree) {
      std::string out;
      for (std::size_t i = 0; i < mod.labels.size(); ++i) {
        const auto mult = mod.degrees.at(degree)[i];
        if (mult) out += (out.empty() ? "" : "+") + std::to_string(mult) + "*" + mod.labels[i].to_string();
      }
      return out;
    };
    rec.expect("degree-0", "n=1 m=0", "1*" + trivial.to_string(), render(0));
    rec.expect("degree-2", "n=1 m=0", "1*" + sign.to_string(), render(2));
  }
  return report;
}

Report invariance_report(int n, Scalar p, std::uint64_t seed, int samples) {
  Report report{"invariance", n, 0, {}};
  Recorder rec{report};
  const SymplecticSpace space(n, p);
  const auto labels = bipartitions_of(n);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Scalar> scalar(0, p - 1);
  const FpMatrix j = space.J();
  // Product of random transvections 1 − c u uᵀ J.
  auto random_symplectic = [&] {
    FpMatrix g = FpMatrix::identity(p, space.dim());
    for (int step = 0; step < 4 * space.dim(); ++step) {
      Vector u(static_cast<std::size_t>(space.dim()));
      for (auto& e : u) e = scalar(rng);
      const FpMatrix col = FpMatrix::column(p, u);
      g = (FpMatrix::identity(p, space.dim()) - (col * col.transpose() * j).scaled(scalar(rng))) * g;
    }
    return g;
  };
  std::uniform_int_distribution<std::size_t> pick(0, labels.size() - 1);
  for (int s = 0; s < samples; ++s) {
    const Bipartition& label = labels[pick(rng)];
    const ExoticPair base = lie_pair(normal_form_pair(label, space));
    const FpMatrix g = random_symplectic();
    rec.expect("symplectic", "sample " + std::to_string(s), 1, membership(g, Membership::HGroup));
    const ExoticPair moved{space, g * base.x * inverse(g), g * base.v, Flavor::Lie};
    rec.expect("conjugation-invariant", at(n, p, label) + " sample " + std::to_string(s), label.to_string(),
               exotic_type(moved).to_string());
  }
  return report;
}

Report klyachko_as_report(const KlyachkoReport& k) {
  Report report{"klyachko", k.n, 0, {}};
  Recorder rec{report};
  const std::string where = "n=" + std::to_string(k.n) + " p=" + std::to_string(k.p);
  rec.expect("orbits-vs-gl-classes", where, static_cast<std::int64_t>(k.gl_classes), static_cast<std::int64_t>(k.orbit_count));
  rec.expect("embedding-surjective", where, static_cast<std::int64_t>(k.orbit_count), static_cast<std::int64_t>(k.orbits_hit));
  return report;
}

}  // namespace exotic
