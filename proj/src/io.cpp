#include "exotic/io.hpp"

#include <sstream>

#include "exotic/error.hpp"

namespace exotic {

namespace {

std::string flavor_name(Flavor f) { return f == Flavor::Lie ? "lie" : "group"; }

Flavor flavor_from(const std::string& s) {
  if (s == "lie") return Flavor::Lie;
  if (s == "group") return Flavor::Group;
  throw Error(ErrorKind::ParseError, "unknown flavor '" + s + "'");
}

template <typename T>
T field(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

Bipartition label_at(const Json& j, const char* key) { return Bipartition::parse(field<std::string>(j, key)); }

std::vector<Bipartition> labels_from(const Json& arr) {
  std::vector<Bipartition> out;
  for (const auto& s : arr) out.push_back(Bipartition::parse(s.get<std::string>()));
  return out;
}

Json labels_to(const std::vector<Bipartition>& labels) {
  Json arr = Json::array();
  for (const auto& l : labels) arr.push_back(l.to_string());
  return arr;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

Json matrix_to_json(const FpMatrix& m) {
  return Json{{"p", m.p()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.entries()}};
}

FpMatrix matrix_from_json(const Json& j) {
  const auto p = field<std::uint64_t>(j, "p");
  if (!is_odd_prime(p)) throw Error(ErrorKind::ParseError, "p must be an odd prime");
  const auto raw = field<std::vector<std::int64_t>>(j, "entries");
  std::vector<Scalar> entries;
  for (auto e : raw) {
    if (e < 0 || static_cast<std::uint64_t>(e) >= p) throw Error(ErrorKind::ParseError, "entry outside [0,p)");
    entries.push_back(static_cast<Scalar>(e));
  }
  return FpMatrix(static_cast<Scalar>(p), field<int>(j, "rows"), field<int>(j, "cols"), std::move(entries));
}

Json pair_to_json(const ExoticPair& pair) {
  return Json{{"p", pair.space.p},
              {"n", pair.space.n},
              {"flavor", flavor_name(pair.flavor)},
              {"x", matrix_to_json(pair.x)},
              {"v", pair.v}};
}

ExoticPair pair_from_json(const Json& j) {
  const auto p = field<std::uint64_t>(j, "p");
  if (!is_odd_prime(p)) throw Error(ErrorKind::ParseError, "p must be an odd prime");
  const SymplecticSpace space(field<int>(j, "n"), static_cast<Scalar>(p));
  ExoticPair pair{space, matrix_from_json(j.at("x")), {}, flavor_from(j.value("flavor", std::string("lie")))};
  for (auto e : field<std::vector<std::int64_t>>(j, "v")) {
    if (e < 0 || static_cast<std::uint64_t>(e) >= p) throw Error(ErrorKind::ParseError, "entry outside [0,p)");
    pair.v.push_back(static_cast<Scalar>(e));
  }
  if (pair.x.p() != space.p) throw Error(ErrorKind::SizeMismatch, "matrix prime differs from pair prime");
  validate(pair);
  return pair;
}

Json orbits_to_json(int n) {
  Json rows = Json::array();
  for (const auto& label : bipartitions_of(n))
    rows.push_back(Json{{"label", label.to_string()}, {"dim", orbit_dim(label, n)}, {"d", fiber_dim_d(label, n)}});
  return Json{{"n", n}, {"orbits", rows}};
}

std::string orbits_to_tsv(int n) {
  std::ostringstream os;
  os << "label\tdim\td\n";
  for (const auto& label : bipartitions_of(n))
    os << label.to_string() << '\t' << orbit_dim(label, n) << '\t' << fiber_dim_d(label, n) << '\n';
  return os.str();
}

Json springer_to_json(const SpringerTable& table) {
  Json rows = Json::array();
  for (const auto& r : table.rows) {
    Json row{{"label", r.label.to_string()},
             {"orbit_dim", r.orbit_dim},
             {"d", r.d},
             {"irrep", r.irrep.to_string()},
             {"irrep_dim", r.irrep_dim},
             {"covers", labels_to(r.covers)}};
    if (r.census_points) row["census_points"] = *r.census_points;
    rows.push_back(std::move(row));
  }
  return Json{{"n", table.n}, {"rows", rows}};
}

SpringerTable springer_from_json(const Json& j) {
  SpringerTable table{field<int>(j, "n"), {}};
  for (const auto& row : j.at("rows")) {
    OrbitRecord r;
    r.label = label_at(row, "label");
    r.orbit_dim = field<int>(row, "orbit_dim");
    r.d = field<int>(row, "d");
    r.irrep = label_at(row, "irrep");
    r.irrep_dim = field<std::uint64_t>(row, "irrep_dim");
    r.covers = labels_from(row.at("covers"));
    if (row.contains("census_points")) r.census_points = field<std::uint64_t>(row, "census_points");
    table.rows.push_back(std::move(r));
  }
  return table;
}

std::string springer_to_tsv(const SpringerTable& table) {
  std::ostringstream os;
  os << "label\torbit_dim\td\tirrep\tirrep_dim\tcovers\n";
  for (const auto& r : table.rows) {
    os << r.label.to_string() << '\t' << r.orbit_dim << '\t' << r.d << '\t' << r.irrep.to_string() << '\t'
       << r.irrep_dim << '\t';
    for (std::size_t i = 0; i < r.covers.size(); ++i) os << (i ? " " : "") << r.covers[i].to_string();
    os << '\n';
  }
  return os.str();
}

Json chartable_to_json(const CharacterTable& table) {
  Json classes = Json::array();
  for (const auto& c : table.classes())
    classes.push_back(Json{{"signature", c.signature.to_string()}, {"size", c.size}, {"centralizer", c.centralizer_order}});
  Json values = Json::array();
  for (std::size_t i = 0; i < table.irreps().size(); ++i) values.push_back(table.row(i).values);
  return Json{{"n", table.n()}, {"irreps", labels_to(table.irreps())}, {"classes", classes}, {"values", values}};
}

CharacterTable chartable_from_json(const Json& j) {
  std::vector<WnClass> classes;
  for (const auto& c : j.at("classes"))
    classes.push_back(WnClass{label_at(c, "signature"), field<std::uint64_t>(c, "centralizer"), field<std::uint64_t>(c, "size")});
  return CharacterTable::assemble(field<int>(j, "n"), labels_from(j.at("irreps")), std::move(classes),
                                  field<std::vector<std::vector<std::int64_t>>>(j, "values"));
}

std::string chartable_to_tsv(const CharacterTable& table) {
  std::ostringstream os;
  os << "irrep";
  for (const auto& c : table.classes()) os << '\t' << c.signature.to_string();
  os << '\n' << "class_size";
  for (const auto& c : table.classes()) os << '\t' << c.size;
  os << '\n';
  for (std::size_t i = 0; i < table.irreps().size(); ++i) {
    os << table.irreps()[i].to_string();
    for (std::size_t c = 0; c < table.classes().size(); ++c) os << '\t' << table.value(i, c);
    os << '\n';
  }
  return os.str();
}

Json branching_to_json(const BranchingMatrix& b) {
  return Json{{"n", b.n}, {"rows", labels_to(b.rows)}, {"cols", labels_to(b.cols)}, {"entries", b.entries}};
}

BranchingMatrix branching_from_json(const Json& j) {
  return BranchingMatrix{field<int>(j, "n"), labels_from(j.at("rows")), labels_from(j.at("cols")),
                         field<std::vector<std::vector<std::int64_t>>>(j, "entries")};
}

std::string branching_to_tsv(const BranchingMatrix& b) {
  std::ostringstream os;
  os << "restrict";
  for (const auto& c : b.cols) os << '\t' << c.to_string();
  os << '\n';
  for (std::size_t i = 0; i < b.rows.size(); ++i) {
    os << b.rows[i].to_string();
    for (auto e : b.entries[i]) os << '\t' << e;
    os << '\n';
  }
  return os.str();
}

Json graded_to_json(const GradedWnModule& m) {
  Json degrees = Json::object();
  for (const auto& [deg, mult] : m.degrees) degrees[std::to_string(deg)] = mult;
  return Json{{"n", m.n}, {"labels", labels_to(m.labels)}, {"degrees", degrees}, {"dimension", m.dimension()}};
}

Json report_to_json(const Report& r) {
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches)
    mismatches.push_back(Json{{"check", m.check}, {"instance", m.instance}, {"expected", m.expected}, {"got", m.got}});
  return Json{{"suite", r.suite},
              {"n", r.n},
              {"checked", r.checked},
              {"passed", r.passed()},
              {"mismatches", mismatches}};
}

Report report_from_json(const Json& j) {
  Report r{field<std::string>(j, "suite"), field<int>(j, "n"), field<std::uint64_t>(j, "checked"), {}};
  for (const auto& m : j.at("mismatches")) {
    r.mismatches.push_back(Mismatch{field<std::string>(m, "check"), field<std::string>(m, "instance"),
                                    field<std::string>(m, "expected"), field<std::string>(m, "got")});
  }
  return r;
}

Json census_to_json(const CensusResult& c) {
  Json labels = Json::object();
  for (const auto& label : bipartitions_of(c.n)) {
    auto it = c.label_counts.find(label);
    if (it != c.label_counts.end()) labels[label.to_string()] = it->second;
  }
  for (const auto& [label, count] : c.label_counts)
    if (!labels.contains(label.to_string())) labels[label.to_string()] = count;
  const auto order = bipartitions_of(c.n);
  Json strata = Json::object();
  for (const auto& [m, set] : c.strata) {
    std::vector<Bipartition> seen;
    for (const auto& label : order)
      if (set.count(label)) seen.push_back(label);
    strata[std::to_string(m)] = labels_to(seen);
  }
  Json reps = Json::object();
  for (const auto& label : order) {
    auto it = c.representatives.find(label);
    if (it != c.representatives.end()) reps[label.to_string()] = {it->second.first, it->second.second};
  }
  Json checks = Json::array();
  for (const auto& oc : c.orbit_checks) {
    checks.push_back(Json{{"label", oc.label.to_string()},
                          {"count", oc.count},
                          {"stabilizer", oc.stabilizer},
                          {"group_order", oc.group_order},
                          {"orbit_stabilizer_ok", oc.orbit_stabilizer_ok},
                          {"components", oc.components},
                          {"transitive", oc.transitive}});
  }
  return Json{{"n", c.n},
              {"p", c.p},
              {"flavor", flavor_name(c.flavor)},
              {"complete", c.complete},
              {"total_points", c.total_points},
              {"labels", labels},
              {"strata", strata},
              {"representatives", reps},
              {"orbit_checks", checks},
              {"labels_invariant", c.labels_invariant}};
}

CensusResult census_from_json(const Json& j) {
  CensusResult c;
  c.n = field<int>(j, "n");
  c.p = field<Scalar>(j, "p");
  c.flavor = flavor_from(field<std::string>(j, "flavor"));
  c.complete = field<bool>(j, "complete");
  c.total_points = field<std::uint64_t>(j, "total_points");
  for (const auto& [key, value] : j.at("labels").items()) c.label_counts[Bipartition::parse(key)] = value.get<std::uint64_t>();
  for (const auto& [key, value] : j.at("strata").items()) {
    for (const auto& l : labels_from(value)) c.strata[std::stoi(key)].insert(l);
  }
  for (const auto& [key, value] : j.at("representatives").items())
    c.representatives[Bipartition::parse(key)] = {value.at(0).get<std::uint64_t>(), value.at(1).get<std::uint64_t>()};
  for (const auto& oc : j.at("orbit_checks")) {
    c.orbit_checks.push_back(OrbitCheck{label_at(oc, "label"), field<std::uint64_t>(oc, "count"),
                                        field<std::uint64_t>(oc, "stabilizer"), field<std::uint64_t>(oc, "group_order"),
                                        field<bool>(oc, "orbit_stabilizer_ok"), field<std::uint64_t>(oc, "components"),
                                        field<bool>(oc, "transitive")});
  }
  c.labels_invariant = field<bool>(j, "labels_invariant");
  return c;
}

Json klyachko_to_json(const KlyachkoReport& k) {
  return Json{{"n", k.n},
              {"p", k.p},
              {"points", k.points},
              {"orbit_count", k.orbit_count},
              {"gl_classes", k.gl_classes},
              {"orbits_hit", k.orbits_hit},
              {"passed", k.passed()}};
}

}  // namespace exotic
