#include "exotic/census.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <thread>
#include <unordered_map>

#include <boost/pending/disjoint_sets.hpp>
#include <json.hpp>

#include "exotic/classify.hpp"
#include "exotic/error.hpp"

namespace exotic {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::RangeError, "integer overflow");
  return out;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

using DisjointSets = boost::disjoint_sets_with_storage<>;

}  // namespace

std::uint64_t sp_group_order(int n, std::uint64_t q) {
  if (n < 1 || q < 2) throw Error(ErrorKind::RangeError, "need n >= 1 and q >= 2");
  std::uint64_t out = ipow(q, n * n);
  for (int i = 1; i <= n; ++i) out = checked_mul(out, ipow(q, 2 * i) - 1);
  return out;
}

void require_census_gate(int n, Scalar p) {
  if (n < 1 || n > 2 || (p != 3 && p != 5)) {
    throw Error(ErrorKind::SizeGate, "census supports n <= 2 and p in {3,5}; got n=" + std::to_string(n) +
                                         " p=" + std::to_string(p));
  }
}

std::vector<FpMatrix> sp_generators(const SymplecticSpace& space) {
  const int n = space.n;
  const Scalar p = space.p;
  std::vector<Vector> directions;
  auto sum = [p](Vector a, const Vector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = mod_add(a[i], b[i], p);
    return a;
  };
  for (int i = 1; i <= n; ++i) {
    directions.push_back(space.e(i));
    directions.push_back(space.f(i));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) directions.push_back(sum(space.e(i), space.e(j)));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) directions.push_back(sum(space.e(i), space.f(j)));

  // T_u = 1 − u uᵀ J, so T_u w = w + <w,u> u.
  const FpMatrix j = space.J();
  std::vector<FpMatrix> gens;
  for (const auto& u : directions) {
    FpMatrix col = FpMatrix::column(p, u);
    gens.push_back(FpMatrix::identity(p, space.dim()) - col * col.transpose() * j);
  }
  return gens;
}

std::uint64_t pack_key(const FpMatrix& x, const Vector& v) {
  const std::uint64_t p = x.p();
  std::uint64_t key = 0;
  for (Scalar e : x.entries()) key = key * p + e;
  for (Scalar e : v) key = key * p + e;
  return key;
}

FpMatrix unpack_matrix(std::uint64_t key, int size, Scalar p) {
  std::vector<Scalar> entries(static_cast<std::size_t>(size) * size);
  for (std::size_t i = entries.size(); i-- > 0;) {
    entries[i] = static_cast<Scalar>(key % p);
    key /= p;
  }
  return FpMatrix(p, size, size, std::move(entries));
}

std::vector<std::uint64_t> sp_group_keys(int n, Scalar p) {
  require_census_gate(n, p);
  const SymplecticSpace space(n, p);
  const auto gens = sp_generators(space);
  const Vector none;
  // Layered closure on sorted key vectors.
  std::vector<std::uint64_t> visited{pack_key(FpMatrix::identity(p, space.dim()), none)};
  std::vector<std::uint64_t> frontier = visited;
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t key : frontier) {
      const FpMatrix g = unpack_matrix(key, space.dim(), p);
      for (const auto& t : gens) next.push_back(pack_key(t * g, none));
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::uint64_t> fresh;
    std::set_difference(next.begin(), next.end(), visited.begin(), visited.end(), std::back_inserter(fresh));
    std::vector<std::uint64_t> merged;
    merged.reserve(visited.size() + fresh.size());
    std::merge(visited.begin(), visited.end(), fresh.begin(), fresh.end(), std::back_inserter(merged));
    visited = std::move(merged);
    frontier = std::move(fresh);
  }
  return visited;
}

std::vector<FpMatrix> sp_group_elements(int n, Scalar p) {
  std::vector<FpMatrix> out;
  for (std::uint64_t key : sp_group_keys(n, p)) out.push_back(unpack_matrix(key, 2 * n, p));
  return out;
}

NilconeEnumerator::NilconeEnumerator(int n, Scalar p, Flavor flavor, std::size_t chunks)
    : space_(n, p), flavor_(flavor), basis_(self_adjoint_basis(space_)) {
  require_census_gate(n, p);
  matrix_codes_ = ipow(p, static_cast<int>(basis_.size()));
  vector_codes_ = ipow(p, space_.dim());
  chunks_ = static_cast<std::size_t>(std::clamp<std::uint64_t>(chunks, 1, matrix_codes_));
}

FpMatrix NilconeEnumerator::matrix(std::uint64_t code) const {
  FpMatrix x(space_.p, space_.dim(), space_.dim());
  for (const auto& b : basis_) {
    const Scalar c = static_cast<Scalar>(code % space_.p);
    code /= space_.p;
    if (c) x = x + b.scaled(c);
  }
  return x;
}

Vector NilconeEnumerator::vector(std::uint64_t code) const {
  Vector v(static_cast<std::size_t>(space_.dim()));
  for (auto& e : v) {
    e = static_cast<Scalar>(code % space_.p);
    code /= space_.p;
  }
  return v;
}

bool NilconeEnumerator::admissible(const FpMatrix& x) const {
  if (flavor_ == Flavor::Lie) return is_nilpotent(x);
  return is_nilpotent(x - FpMatrix::identity(space_.p, space_.dim()));
}

void NilconeEnumerator::for_each_matrix(std::size_t chunk,
                                        const std::function<void(std::uint64_t, const FpMatrix&)>& visit) const {
  const std::uint64_t begin = matrix_codes_ * chunk / chunks_;
  const std::uint64_t end = matrix_codes_ * (chunk + 1) / chunks_;
  for (std::uint64_t code = begin; code < end; ++code) {
    FpMatrix x = matrix(code);
    if (admissible(x)) visit(code, x);
  }
}

void NilconeEnumerator::for_each_pair(const std::function<void(const FpMatrix&, const Vector&)>& visit) const {
  for (std::size_t chunk = 0; chunk < chunks_; ++chunk) {
    for_each_matrix(chunk, [&](std::uint64_t, const FpMatrix& x) {
      for (std::uint64_t vc = 0; vc < vector_codes_; ++vc) visit(x, vector(vc));
    });
  }
}

std::vector<ExoticPair> enumerate_exotic_nilcone(int n, Scalar p) {
  NilconeEnumerator nilcone(n, p, Flavor::Lie, 1);
  std::vector<ExoticPair> out;
  nilcone.for_each_pair([&](const FpMatrix& x, const Vector& v) {
    out.push_back(ExoticPair{nilcone.space(), x, v, Flavor::Lie});
  });
  return out;
}

std::uint64_t stabilizer_census(const ExoticPair& pair, const std::vector<FpMatrix>& group) {
  std::uint64_t count = 0;
  for (const auto& g : group)
    if (g * pair.x == pair.x * g && g * pair.v == pair.v) ++count;
  return count;
}

std::uint64_t stabilizer_census(const ExoticPair& pair) {
  require_census_gate(pair.space.n, pair.space.p);
  validate(pair);
  std::uint64_t count = 0;
  for (std::uint64_t key : sp_group_keys(pair.space.n, pair.space.p)) {
    const FpMatrix g = unpack_matrix(key, pair.space.dim(), pair.space.p);
    if (g * pair.x == pair.x * g && g * pair.v == pair.v) ++count;
  }
  return count;
}

namespace {

using json = nlohmann::json;

// Chunk-level partial census; merging is exact addition plus set union.
struct Partial {
  std::uint64_t total = 0;
  std::map<Bipartition, std::uint64_t> counts;
  std::map<int, std::set<Bipartition>> strata;
  std::map<Bipartition, std::pair<std::uint64_t, std::uint64_t>> reps;

  void merge(const Partial& other) {
    total += other.total;
    for (const auto& [label, c] : other.counts) counts[label] += c;
    for (const auto& [m, labels] : other.strata) strata[m].insert(labels.begin(), labels.end());
    for (const auto& [label, rep] : other.reps) {
      auto it = reps.find(label);
      if (it == reps.end() || rep < it->second) reps[label] = rep;
    }
  }
};

std::string flavor_name(Flavor f) { return f == Flavor::Lie ? "lie" : "group"; }

json checkpoint_json(int n, Scalar p, Flavor flavor, std::size_t chunks, const std::set<std::size_t>& done,
                     const Partial& partial) {
  json j;
  j["n"] = n;
  j["p"] = p;
  j["flavor"] = flavor_name(flavor);
  j["chunks"] = chunks;
  j["done"] = done;
  j["total_points"] = partial.total;
  j["labels"] = json::object();
  for (const auto& [label, c] : partial.counts) j["labels"][label.to_string()] = c;
  j["strata"] = json::object();
  for (const auto& [m, labels] : partial.strata) {
    json arr = json::array();
    for (const auto& l : labels) arr.push_back(l.to_string());
    j["strata"][std::to_string(m)] = arr;
  }
  j["representatives"] = json::object();
  for (const auto& [label, rep] : partial.reps) j["representatives"][label.to_string()] = {rep.first, rep.second};
  return j;
}

void write_checkpoint(const std::filesystem::path& path, const json& j) {
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream os(tmp);
    if (!os) throw Error(ErrorKind::UsageError, "cannot write checkpoint " + tmp.string());
    os << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

void load_checkpoint(const std::filesystem::path& path, int n, Scalar p, Flavor flavor, std::size_t chunks,
                     std::set<std::size_t>& done, Partial& partial) {
  std::ifstream is(path);
  if (!is) return;
  json j;
  try {
    j = json::parse(is);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, "checkpoint " + path.string() + ": " + e.what());
  }
  if (j.at("n").get<int>() != n || j.at("p").get<Scalar>() != p || j.at("flavor").get<std::string>() != flavor_name(flavor) ||
      j.at("chunks").get<std::size_t>() != chunks) {
    throw Error(ErrorKind::UsageError, "checkpoint " + path.string() + " belongs to a different census");
  }
  done = j.at("done").get<std::set<std::size_t>>();
  partial.total = j.at("total_points").get<std::uint64_t>();
  for (const auto& [key, c] : j.at("labels").items()) partial.counts[Bipartition::parse(key)] = c.get<std::uint64_t>();
  for (const auto& [key, arr] : j.at("strata").items())
    for (const auto& l : arr) partial.strata[std::stoi(key)].insert(Bipartition::parse(l.get<std::string>()));
  for (const auto& [key, rep] : j.at("representatives").items())
    partial.reps[Bipartition::parse(key)] = {rep.at(0).get<std::uint64_t>(), rep.at(1).get<std::uint64_t>()};
}

Partial census_chunk(const NilconeEnumerator& nilcone, std::size_t chunk) {
  Partial part;
  const auto& space = nilcone.space();
  nilcone.for_each_matrix(chunk, [&](std::uint64_t xcode, const FpMatrix& x) {
    const ExoticClassifier classifier(space, x, nilcone.flavor());
    const FpMatrix shift = nilcone.flavor() == Flavor::Lie ? x : x - FpMatrix::identity(space.p, space.dim());
    for (std::uint64_t vc = 0; vc < nilcone.vector_codes(); ++vc) {
      const Vector v = nilcone.vector(vc);
      const OrbitLabel label = classifier.type_of(v);
      ++part.total;
      ++part.counts[label];
      std::vector<Vector> chain{v};
      for (int k = 1; k < space.dim(); ++k) chain.push_back(shift * chain.back());
      part.strata[Subspace::span(space.p, space.dim(), chain).dim()].insert(label);
      auto it = part.reps.find(label);
      if (it == part.reps.end()) part.reps.emplace(label, std::make_pair(xcode, vc));
    }
  });
  return part;
}

void run_orbit_checks(CensusResult& result, const NilconeEnumerator& nilcone) {
  const auto& space = nilcone.space();
  const std::uint64_t order = sp_group_order(space.n, space.p);

  // Points of the cone, indexed for union-find.
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<Bipartition> point_label;
  std::vector<std::pair<FpMatrix, Vector>> points;
  for (std::size_t chunk = 0; chunk < nilcone.chunk_count(); ++chunk) {
    nilcone.for_each_matrix(chunk, [&](std::uint64_t, const FpMatrix& x) {
      const ExoticClassifier classifier(space, x, nilcone.flavor());
      for (std::uint64_t vc = 0; vc < nilcone.vector_codes(); ++vc) {
        Vector v = nilcone.vector(vc);
        index.emplace(pack_key(x, v), points.size());
        point_label.push_back(classifier.type_of(v));
        points.emplace_back(x, std::move(v));
      }
    });
  }

  DisjointSets sets(points.size());
  for (const auto& g : sp_generators(space)) {
    const FpMatrix g_inv = inverse(g);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto& [x, v] = points[i];
      auto it = index.find(pack_key(g * x * g_inv, g * v));
      if (it == index.end()) throw Error(ErrorKind::RangeError, "generator moved a point off the cone");
      sets.union_set(i, it->second);
    }
  }
  std::map<std::size_t, Bipartition> root_label;
  std::map<Bipartition, std::set<std::size_t>> roots_by_label;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t root = sets.find_set(i);
    auto [it, inserted] = root_label.emplace(root, point_label[i]);
    if (!inserted && it->second != point_label[i]) result.labels_invariant = false;
    roots_by_label[point_label[i]].insert(root);
  }

  // Stabilizers of all representatives in a single pass over the group.
  std::vector<Bipartition> labels;
  std::vector<ExoticPair> reps;
  for (const auto& label : bipartitions_of(space.n)) {
    if (!result.label_counts.count(label)) continue;
    labels.push_back(label);
    reps.push_back(representative(result, label));
  }
  std::vector<std::uint64_t> stabilizers(reps.size(), 0);
  for (std::uint64_t key : sp_group_keys(space.n, space.p)) {
    const FpMatrix g = unpack_matrix(key, space.dim(), space.p);
    for (std::size_t r = 0; r < reps.size(); ++r)
      if (g * reps[r].v == reps[r].v && g * reps[r].x == reps[r].x * g) ++stabilizers[r];
  }

  for (std::size_t r = 0; r < labels.size(); ++r) {
    OrbitCheck check;
    check.label = labels[r];
    check.count = result.label_counts.at(labels[r]);
    check.stabilizer = stabilizers[r];
    check.group_order = order;
    check.orbit_stabilizer_ok = stabilizers[r] != 0 && order % stabilizers[r] == 0 && order / stabilizers[r] == check.count;
    check.components = roots_by_label[labels[r]].size();
    check.transitive = check.components == 1;
    result.orbit_checks.push_back(std::move(check));
  }
}

}  // namespace

ExoticPair representative(const CensusResult& result, const Bipartition& label) {
  const auto it = result.representatives.find(label);
  if (it == result.representatives.end()) throw Error(ErrorKind::IndexOutOfRange, "no point with label " + label.to_string());
  NilconeEnumerator nilcone(result.n, result.p, result.flavor, 1);
  return ExoticPair{nilcone.space(), nilcone.matrix(it->second.first), nilcone.vector(it->second.second), result.flavor};
}

CensusResult orbit_census(int n, Scalar p, const CensusOptions& options) {
  require_census_gate(n, p);
  if (options.jobs < 1) throw Error(ErrorKind::UsageError, "jobs must be >= 1");
  const NilconeEnumerator nilcone(n, p, options.flavor, options.chunks);

  std::set<std::size_t> done;
  Partial total;
  if (options.checkpoint) load_checkpoint(*options.checkpoint, n, p, options.flavor, nilcone.chunk_count(), done, total);

  std::vector<std::size_t> pending;
  for (std::size_t c = 0; c < nilcone.chunk_count(); ++c)
    if (!done.count(c)) pending.push_back(c);
  if (options.max_chunks && pending.size() > *options.max_chunks) pending.resize(*options.max_chunks);

  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < pending.size(); i = next++) {
        Partial part = census_chunk(nilcone, pending[i]);
        std::lock_guard lock(merge_mutex);
        total.merge(part);
        done.insert(pending[i]);
        if (options.checkpoint) {
          write_checkpoint(*options.checkpoint, checkpoint_json(n, p, options.flavor, nilcone.chunk_count(), done, total));
        }
      }
    } catch (...) {
      std::lock_guard lock(merge_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < options.jobs; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);

  CensusResult result;
  result.n = n;
  result.p = p;
  result.flavor = options.flavor;
  result.complete = done.size() == nilcone.chunk_count();
  result.total_points = total.total;
  result.label_counts = std::move(total.counts);
  result.strata = std::move(total.strata);
  result.representatives = std::move(total.reps);
  if (result.complete && options.orbit_checks) run_orbit_checks(result, nilcone);
  return result;
}

Report census_report(const CensusResult& result) {
  Report report{"census", result.n, 0, {}};
  const std::string where = "n=" + std::to_string(result.n) + " p=" + std::to_string(result.p);
  auto expect = [&](const std::string& check, const std::string& instance, const std::string& expected,
                    const std::string& got) {
    ++report.checked;
    if (expected != got) report.mismatches.push_back({check, instance, expected, got});
  };
  expect("complete", where, "true", result.complete ? "true" : "false");
  expect("label-count", where, std::to_string(bipartition_count(result.n)), std::to_string(result.label_counts.size()));
  std::uint64_t sum = 0;
  for (const auto& [label, c] : result.label_counts) sum += c;
  expect("points-sum", where, std::to_string(result.total_points), std::to_string(sum));
  for (const auto& label : bipartitions_of(result.n)) {
    expect("label-present", label.to_string(), "true", result.label_counts.count(label) ? "true" : "false");
  }
  if (!result.orbit_checks.empty()) {
    expect("labels-invariant", where, "true", result.labels_invariant ? "true" : "false");
    for (const auto& check : result.orbit_checks) {
      const std::string predicted = check.stabilizer ? std::to_string(check.group_order / check.stabilizer) : "undefined";
      expect("orbit-stabilizer", check.label.to_string(), predicted, std::to_string(check.count));
      expect("stabilizer-divides", check.label.to_string(), "0",
             std::to_string(check.stabilizer ? check.group_order % check.stabilizer : 1));
      expect("transitive", check.label.to_string(), "1", std::to_string(check.components));
    }
  }
  return report;
}

Report strata_check(const CensusResult& result) {
  Report report{"strata", result.n, 0, {}};
  std::map<int, std::set<Bipartition>> predicted;
  for (const auto& label : bipartitions_of(result.n)) predicted[label.first.row(1)].insert(label);
  for (int m = 0; m <= 2 * result.n; ++m) {
    const auto seen = result.strata.count(m) ? result.strata.at(m) : std::set<Bipartition>{};
    const auto want = predicted.count(m) ? predicted.at(m) : std::set<Bipartition>{};
    ++report.checked;
    if (seen != want) {
      auto render = [](const std::set<Bipartition>& s) {
        std::string out;
        for (const auto& l : s) out += (out.empty() ? "" : " ") + l.to_string();
        return "{" + out + "}";
      };
      report.mismatches.push_back({"strata", "cyclic_dim=" + std::to_string(m), render(want), render(seen)});
    }
  }
  return report;
}

Report closure_shadow_check(const CensusResult& result) {
  Report report{"closure-shadow", result.n, 0, {}};
  const int n = result.n;
  for (int m = 0; m <= n; ++m) {
    std::set<Bipartition> seen;
    for (const auto& [dim, labels] : result.strata)
      if (dim <= m) seen.insert(labels.begin(), labels.end());
    const Bipartition top{Partition({m}), Partition({n - m})};
    std::set<Bipartition> want;
    for (const auto& label : bipartitions_of(n))
      if (closure_leq(label, top)) want.insert(label);
    ++report.checked;
    if (seen != want) {
      report.mismatches.push_back({"closure-shadow", "m=" + std::to_string(m), std::to_string(want.size()) + " labels",
                                   std::to_string(seen.size()) + " labels"});
    }
  }
  return report;
}

Report compare_censuses(const CensusResult& lie, const CensusResult& group) {
  Report report{"log-map", lie.n, 0, {}};
  std::set<Bipartition> labels;
  for (const auto& [l, c] : lie.label_counts) labels.insert(l);
  for (const auto& [l, c] : group.label_counts) labels.insert(l);
  for (const auto& label : labels) {
    const auto a = lie.label_counts.count(label) ? lie.label_counts.at(label) : 0;
    const auto b = group.label_counts.count(label) ? group.label_counts.at(label) : 0;
    ++report.checked;
    if (a != b) report.mismatches.push_back({"log-map", label.to_string(), std::to_string(a), std::to_string(b)});
  }
  return report;
}

namespace {

// All matrices of a given family, indexed for union-find under conjugation by `gens`.
std::uint64_t count_conjugation_orbits(const std::vector<FpMatrix>& points, const std::vector<FpMatrix>& gens,
                                       std::vector<std::size_t>* roots = nullptr) {
  std::unordered_map<std::uint64_t, std::size_t> index;
  const Vector none;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(pack_key(points[i], none), i);
  DisjointSets sets(points.size());
  for (const auto& g : gens) {
    const FpMatrix g_inv = inverse(g);
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto it = index.find(pack_key(g * points[i] * g_inv, none));
      if (it == index.end()) throw Error(ErrorKind::RangeError, "conjugation left the point set");
      sets.union_set(i, it->second);
    }
  }
  std::set<std::size_t> distinct;
  if (roots) roots->resize(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::size_t r = sets.find_set(i);
    distinct.insert(r);
    if (roots) (*roots)[i] = r;
  }
  return distinct.size();
}

std::vector<FpMatrix> general_linear(int n, Scalar p) {
  std::vector<FpMatrix> out;
  const std::uint64_t total = ipow(p, n * n);
  for (std::uint64_t code = 0; code < total; ++code) {
    FpMatrix m = unpack_matrix(code, n, p);
    if (mat_rank(m) == n) out.push_back(std::move(m));
  }
  return out;
}

std::vector<FpMatrix> gl_generators(int n, Scalar p) {
  std::vector<FpMatrix> gens;
  for (int i = 0; i < n; ++i) {
    for (Scalar s = 2; s < p; ++s) {
      FpMatrix d = FpMatrix::identity(p, n);
      d(i, i) = s;
      gens.push_back(d);
    }
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      FpMatrix e = FpMatrix::identity(p, n);
      e(i, j) = 1;
      gens.push_back(e);
    }
  }
  return gens;
}

}  // namespace

std::uint64_t gl_class_count(int n, Scalar p) {
  require_census_gate(n, p);
  const auto group = general_linear(n, p);
  return count_conjugation_orbits(group, gl_generators(n, p));
}

KlyachkoReport klyachko_census(int n, Scalar p) {
  require_census_gate(n, p);
  const SymplecticSpace space(n, p);
  NilconeEnumerator all(n, p, Flavor::Lie, 1);
  std::vector<FpMatrix> points;
  for (std::uint64_t code = 0; code < all.matrix_codes(); ++code) {
    FpMatrix x = all.matrix(code);
    if (mat_rank(x) == space.dim()) points.push_back(std::move(x));
  }
  std::vector<std::size_t> roots;
  KlyachkoReport report;
  report.n = n;
  report.p = p;
  report.points = points.size();
  report.orbit_count = count_conjugation_orbits(points, sp_generators(space), &roots);
  report.gl_classes = gl_class_count(n, p);

  std::unordered_map<std::uint64_t, std::size_t> index;
  const Vector none;
  for (std::size_t i = 0; i < points.size(); ++i) index.emplace(pack_key(points[i], none), i);
  std::set<std::size_t> hit;
  for (const auto& a : general_linear(n, p)) {
    const FpMatrix image = klyachko_embed(embed_in_A(a));
    hit.insert(roots.at(index.at(pack_key(image, none))));
  }
  report.orbits_hit = hit.size();
  return report;
}

}  // namespace exotic
