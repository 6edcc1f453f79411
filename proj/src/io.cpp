#include "golodlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "golodlab/errors.hpp"

namespace golod {

namespace {

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t x = 0; x < offset && x < text.size(); ++x) {
    if (text[x] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

SimplicialComplex build(const std::vector<std::vector<int>>& facets, const std::vector<int>& vertices) {
  if (facets.empty() && vertices.empty()) throw ParseError("no facets", 1, 1);
  return SimplicialComplex::from_int_facets(facets, vertices);
}

SimplicialComplex parse_lines(std::string_view text) {
  std::vector<std::vector<int>> facets;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<int> facet;
    std::set<int> seen;
    std::size_t x = 0;
    while (x < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[x]))) {
        ++x;
        continue;
      }
      std::size_t start = x;
      while (x < line.size() && !std::isspace(static_cast<unsigned char>(line[x]))) ++x;
      int value = 0;
      auto token = line.substr(start, x - start);
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      const int column = static_cast<int>(start) + 1;
      if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError("expected an integer vertex label, got '" + std::string(token) + "'", line_no, column);
      if (!seen.insert(value).second)
        throw ParseError("vertex " + std::to_string(value) + " repeated in a facet", line_no, column);
      facet.push_back(value);
    }
    if (!facet.empty()) facets.push_back(std::move(facet));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return build(facets, {});
}

std::vector<int> int_array(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw ParseError(what + " must contain integers");
    out.push_back(v.get<int>());
  }
  return out;
}

SimplicialComplex parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("malformed JSON", line, column);
  }
  if (!doc.is_object() || !doc.contains("facets")) throw ParseError("expected an object with a \"facets\" array");
  std::vector<std::vector<int>> facets;
  if (!doc["facets"].is_array()) throw ParseError("\"facets\" must be an array");
  for (const auto& f : doc["facets"]) {
    auto facet = int_array(f, "each facet");
    if (std::set<int>(facet.begin(), facet.end()).size() != facet.size())
      throw ParseError("vertex repeated in a facet");
    facets.push_back(std::move(facet));
  }
  std::vector<int> vertices;
  if (doc.contains("vertices")) {
    vertices = int_array(doc["vertices"], "\"vertices\"");
    std::set<int> declared(vertices.begin(), vertices.end());
    for (const auto& f : facets)
      for (int v : f)
        if (!declared.count(v)) throw ParseError("facet vertex " + std::to_string(v) + " is not declared");
  }
  return build(facets, vertices);
}

Json label_json(const VertexLabel& l) {
  if (l.path.size() == 1) return Json(l.path[0]);
  return Json(l.to_string());
}

Json subset_json(const SimplicialComplex& k, VertexSet s) {
  Json out = Json::array();
  for (int v : vertices_of(s)) out.push_back(label_json(k.vertex(v)));
  return out;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::vector<std::vector<int>> all_subsets_of_size(int n, int size) {
  std::vector<std::vector<int>> out;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s)
    if (card(s) == size) {
      std::vector<int> f;
      for (int v : vertices_of(s)) f.push_back(v + 1);
      out.push_back(f);
    }
  return out;
}

std::vector<CatalogEntry> make_catalog() {
  std::vector<CatalogEntry> c;
  c.push_back({"point", "a single vertex", {{1}}, 1, {1}, {1}, true});
  c.push_back({"two-points", "two isolated vertices", {{1}, {2}}, 2, {2}, {2}, false});
  c.push_back({"bd-simplex-1", "boundary of the 1-simplex", {{1}, {2}}, 2, {2}, {2}, false});
  c.push_back({"triangle", "boundary of a triangle, the minimal circle", {{1, 2}, {2, 3}, {1, 3}}, 0, {1, 1},
               {1, 1}, true});
  for (int m = 4; m <= 12; ++m) {
    std::vector<std::vector<int>> f;
    for (int v = 1; v <= m; ++v) f.push_back({v, v % m + 1});
    c.push_back({"cycle-" + std::to_string(m), std::to_string(m) + "-gon", f, 0, {1, 1}, {1, 1}, true});
  }
  for (int n = 2; n <= 6; ++n) {
    std::vector<int> b(n, 0);
    b[0] = 1;
    b[n - 1] += 1;
    c.push_back({"bd-simplex-" + std::to_string(n), "boundary of the " + std::to_string(n) + "-simplex",
                 all_subsets_of_size(n + 1, n), 1 + ((n - 1) % 2 == 0 ? 1 : -1), b, b, true});
  }
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> b(n + 1, 0);
    b[0] = 1;
    c.push_back({"simplex-" + std::to_string(n), "full " + std::to_string(n) + "-simplex",
                 all_subsets_of_size(n + 1, n + 1), 1, b, b, false});
  }
  c.push_back({"rp2-6",
               "6-vertex real projective plane",
               {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6}, {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}},
               1,
               {1, 0, 0},
               {1, 1, 1},
               false});
  {
    std::vector<std::vector<int>> f;
    for (int v = 0; v < 7; ++v) {
      f.push_back({v + 1, (v + 1) % 7 + 1, (v + 3) % 7 + 1});
      f.push_back({v + 1, (v + 2) % 7 + 1, (v + 3) % 7 + 1});
    }
    c.push_back({"torus-7", "7-vertex torus", f, 0, {1, 2, 1}, {1, 2, 1}, true});
  }
  c.push_back({"points-6", "six isolated vertices", {{1}, {2}, {3}, {4}, {5}, {6}}, 6, {6}, {6}, false});
  c.push_back({"points-8", "eight isolated vertices", {{1}, {2}, {3}, {4}, {5}, {6}, {7}, {8}}, 8, {8}, {8}, false});
  c.push_back({"three-edges", "three disjoint edges", {{1, 2}, {3, 4}, {5, 6}}, 3, {3, 0}, {3, 0}, false});
  return c;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (std::size_t x = 0; x < v.size(); ++x) out += (x ? "," : "") + std::to_string(v[x]);
  return out;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text, InputFormat format) {
  return format == InputFormat::facet_json ? parse_json(text) : parse_lines(text);
}

InputFormat detect_format(std::string_view text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{' ? InputFormat::facet_json : InputFormat::facet_lines;
  }
  return InputFormat::facet_lines;
}

std::string emit_facet_lines(const SimplicialComplex& k) {
  if (!k.all_plain_labels()) throw DomainError("facet-lines needs integer vertex labels");
  auto facets = k.facets();
  std::sort(facets.begin(), facets.end(), lex_less);
  std::ostringstream os;
  for (FaceMask f : facets) {
    bool first = true;
    for (const auto& l : k.labels_of(f)) {
      os << (first ? "" : " ") << l.path[0];
      first = false;
    }
    os << '\n';
  }
  return os.str();
}

Json emit_facet_json(const SimplicialComplex& k) {
  if (!k.all_plain_labels()) throw DomainError("facet-json needs integer vertex labels");
  Json out;
  Json vertices = Json::array();
  for (const auto& l : k.vertices()) vertices.push_back(l.path[0]);
  out["vertices"] = vertices;
  auto facets = k.facets();
  std::sort(facets.begin(), facets.end(), lex_less);
  Json fs = Json::array();
  for (FaceMask f : facets) fs.push_back(subset_json(k, f));
  out["facets"] = fs;
  return out;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = make_catalog();
  return entries;
}

std::string validate_entry(const CatalogEntry& e) {
  SimplicialComplex k = SimplicialComplex::from_int_facets(e.facets);
  auto fv = k.f_vector();
  long long chi = 0;
  for (std::size_t d = 0; d < fv.size(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(fv[d]);
  if (chi != e.euler_characteristic)
    return "Euler characteristic " + std::to_string(chi) + " != " + std::to_string(e.euler_characteristic);
  auto bq = homology(k, Field::rationals(), false).betti_numbers();
  if (bq != e.betti_q) return "Betti numbers over Q are (" + join_ints(bq) + ")";
  auto b2 = homology(k, Field::prime(2), false).betti_numbers();
  if (b2 != e.betti_f2) return "Betti numbers over F2 are (" + join_ints(b2) + ")";
  bool orientable = !bq.empty() && bq.back() == 1;
  if (orientable != e.orientable) return "orientability proxy mismatch";
  return "";
}

SimplicialComplex load_catalog(const std::string& name) {
  for (const auto& e : catalog_entries()) {
    if (e.name != name) continue;
    if (auto problem = validate_entry(e); !problem.empty())
      throw VerificationError("catalog entry " + name + " failed validation: " + problem);
    return SimplicialComplex::from_int_facets(e.facets);
  }
  throw DomainError("unknown catalog entry: " + name);
}

Json tightness_json(const SimplicialComplex& k, const TightnessReport& r) {
  Json out;
  out["verdict"] = r.tight;
  out["flavor"] = r.reduced ? "reduced" : "unreduced";
  out["require_connected"] = r.require_connected;
  out["connected"] = r.connected;
  out["witness"] = r.witness ? subset_json(k, *r.witness) : Json(nullptr);
  out["witness_degree"] = r.witness ? Json(r.witness_degree) : Json(nullptr);
  out["subsets_checked"] = r.subsets_checked;
  if (!r.table.empty()) {
    Json table = Json::array();
    for (const auto& row : r.table) {
      Json e;
      e["subset"] = subset_json(k, row.subset);
      e["injective"] = row.injective;
      table.push_back(e);
    }
    out["table"] = table;
  }
  return out;
}

Json weak_golod_json(const SimplicialComplex& k, const WeakGolodResult& r) {
  Json out;
  out["verdict"] = r.weakly_golod;
  out["pairs_checked"] = r.pairs_checked;
  if (r.witness) {
    Json w;
    w["first"] = subset_json(k, r.witness->first);
    w["second"] = subset_json(k, r.witness->second);
    w["first_degree"] = r.witness->first_degree;
    w["second_degree"] = r.witness->second_degree;
    w["first_class"] = r.witness->first_class;
    w["second_class"] = r.witness->second_class;
    w["product"] = vector_json(r.witness->product);
    out["witness"] = w;
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json hochster_json(const SimplicialComplex& k, const HochsterTable& t) {
  Json out;
  Json poincare = Json::object();
  for (const auto& [d, r] : t.poincare()) poincare[std::to_string(d)] = r;
  out["poincare"] = poincare;
  Json entries = Json::array();
  for (const auto& e : t.entries) {
    Json j;
    j["subset"] = subset_json(k, e.subset);
    j["reduced_degree"] = e.reduced_degree;
    j["total_degree"] = e.total_degree;
    j["rank"] = e.rank;
    entries.push_back(j);
  }
  out["entries"] = entries;
  return out;
}

Json certificate_summary_json(const GolodCertificate& c) {
  Json out;
  out["field"] = c.field.name();
  out["max_arity"] = c.max_arity;
  out["verified"] = c.verified();
  out["partitions_scanned"] = c.partitions_scanned;
  out["vacuous_partitions"] = c.vacuous_partitions;
  out["entries"] = c.entries.size();
  Json by = Json::object();
  for (const auto& [a, n] : c.entries_by_arity()) by[std::to_string(a)] = n;
  out["entries_by_arity"] = by;
  std::size_t checks = 0;
  for (const auto& e : c.entries) checks += static_cast<std::size_t>(e.decomposition_checks);
  out["decomposition_checks"] = checks;
  return out;
}

Json koszul_json(const SimplicialComplex& k, const KoszulCochain& x) {
  Json out = Json::array();
  for (const auto& [key, v] : x.terms) {
    Json t;
    t["subset"] = subset_json(k, key.subset);
    t["face"] = subset_json(k, key.face);
    t["value"] = v.to_string();
    out.push_back(t);
  }
  return out;
}

Json certificate_json(const SimplicialComplex& k, const GolodCertificate& c) {
  Json out = certificate_summary_json(c);
  Json entries = Json::array();
  for (const auto& e : c.entries) {
    Json j;
    j["support"] = subset_json(k, e.support);
    Json parts = Json::array();
    for (VertexSet p : e.parts) parts.push_back(subset_json(k, p));
    j["parts"] = parts;
    j["degrees"] = e.degrees;
    j["classes"] = e.class_indices;
    j["condition_holds"] = e.condition_holds;
    j["defining_system"] = e.defining_system;
    j["representative_is_coboundary"] = e.representative_is_coboundary;
    j["decomposition_checks"] = e.decomposition_checks;
    j["decomposition_exact"] = e.decomposition_exact;
    Json system = Json::array();
    for (const auto& [pos, x] : e.system.entries) {
      Json s;
      s["i"] = pos.first;
      s["j"] = pos.second;
      s["terms"] = koszul_json(k, x);
      system.push_back(s);
    }
    j["system"] = system;
    j["representative"] = koszul_json(k, e.representative);
    entries.push_back(j);
  }
  out["entry_list"] = entries;
  return out;
}

Json report_json(const ComplexReport& r, const SimplicialComplex& k) {
  Json out;
  out["name"] = r.name;
  Json fields = Json::array();
  for (const auto& f : r.fields) fields.push_back(f.field.name());
  out["fields"] = fields;
  out["f_vector"] = r.f_vector;
  Json betti = Json::object(), tight = Json::object(), weak = Json::object(), cert = Json::object();
  Json per_field = Json::object();
  for (const auto& f : r.fields) {
    const std::string n = f.field.name();
    Json b;
    b["unreduced"] = f.betti;
    b["reduced"] = f.reduced_betti;
    b["hochster"] = hochster_json(k, f.hochster);
    betti[n] = b;
    Json t = tightness_json(k, f.tight);
    t["reduced_flavor"] = tightness_json(k, f.tight_reduced);
    t["connected_convention"] = tightness_json(k, f.tight_connected);
    tight[n] = t;
    weak[n] = weak_golod_json(k, f.weak_golod);
    Json c;
    c["status"] = f.certificate_note;
    c["summary"] = f.certificate ? certificate_summary_json(*f.certificate) : Json(nullptr);
    cert[n] = c;
    Json a;
    a["pure"] = f.annotations.pure;
    a["ridges_in_two_facets"] = f.annotations.ridges_in_two_facets;
    a["connected"] = f.annotations.connected;
    a["top_rank"] = f.annotations.top_rank;
    a["closed_orientable_candidate"] = f.annotations.closed_orientable_candidate();
    a["tightness_conventions_agree"] = f.tight.tight == f.tight_connected.tight;
    per_field[n] = a;
  }
  out["betti"] = betti;
  out["tight"] = tight;
  out["weak_golod"] = weak;
  out["certificate"] = cert;
  Json ann;
  ann["euler_characteristic"] = r.euler_characteristic;
  ann["neighborly"] = r.neighborly;
  ann["tight_neighborly"] = r.tight_neighborly ? Json(*r.tight_neighborly) : Json(nullptr);
  ann["manifold_heuristics"] = "necessary-condition heuristics, not a manifold recognizer";
  ann["per_field"] = per_field;
  out["annotations"] = ann;
  out["tool_version"] = kToolVersion;
  out["schema_version"] = kSchemaVersion;
  return out;
}

std::string report_text(const ComplexReport& r, const SimplicialComplex& k) {
  std::ostringstream os;
  os << "complex " << r.name << "\n";
  os << "f-vector";
  for (auto x : r.f_vector) os << ' ' << x;
  os << "\neuler characteristic " << r.euler_characteristic << "\n";
  os << "neighborly " << (r.neighborly ? "yes" : "no") << "\n";
  if (r.tight_neighborly) os << "tight-neighborly identity " << (*r.tight_neighborly ? "holds" : "fails") << "\n";
  for (const auto& f : r.fields) {
    os << "[" << f.field.name() << "]\n";
    os << "  betti";
    for (int b : f.betti) os << ' ' << b;
    os << "\n  tight " << (f.tight.tight ? "yes" : "no");
    if (f.tight.witness) os << " (witness " << k.format(*f.tight.witness) << ", degree " << f.tight.witness_degree << ")";
    os << "\n  tight with connectivity " << (f.tight_connected.tight ? "yes" : "no") << "\n";
    os << "  weakly golod " << (f.weak_golod.weakly_golod ? "yes" : "no");
    if (f.weak_golod.witness)
      os << " (witness " << k.format(f.weak_golod.witness->first) << " x " << k.format(f.weak_golod.witness->second)
         << ")";
    os << "\n  koszul poincare";
    for (const auto& [d, n] : f.hochster.poincare()) os << ' ' << d << ':' << n;
    os << "\n  certificate " << f.certificate_note;
    if (f.certificate)
      os << " (" << f.certificate->entries.size() << " entries, " << f.certificate->partitions_scanned
         << " partitions, max arity " << f.certificate->max_arity << ")";
    os << "\n  manifold heuristics: pure " << (f.annotations.pure ? "yes" : "no") << ", ridges in two facets "
       << (f.annotations.ridges_in_two_facets ? "yes" : "no") << ", connected "
       << (f.annotations.connected ? "yes" : "no") << ", top rank " << f.annotations.top_rank << "\n";
  }
  return os.str();
}

}  // namespace golod
