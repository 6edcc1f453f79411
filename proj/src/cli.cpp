#include "golodlab/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "golodlab/errors.hpp"
#include "golodlab/io.hpp"
#include "golodlab/parallel.hpp"

namespace golod {

namespace {

struct Options {
  std::vector<std::string> fields{"q"};
  std::string flavor = "unreduced";
  int max_arity = 3;
  std::string format = "json";
  std::string out_path;
  std::optional<int> jobs;
  std::uint64_t seed = 1;
  std::string source;
  std::string input_format = "auto";
  bool require_connected = false;
  bool table = false;
  bool all = false;
  bool no_certificate = false;
  int cases = 200;
  std::vector<std::string> classes;
};

struct Loaded {
  std::string name;
  SimplicialComplex complex;
};

Loaded load_source(const Options& o) {
  if (o.source.empty()) throw DomainError("no input complex given");
  if (o.source.rfind("catalog:", 0) == 0) {
    std::string name = o.source.substr(8);
    return {name, load_catalog(name)};
  }
  std::string text;
  if (o.source == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(o.source, std::ios::binary);
    if (!in) throw DomainError("cannot open " + o.source);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  InputFormat fmt = o.input_format == "json"    ? InputFormat::facet_json
                    : o.input_format == "lines" ? InputFormat::facet_lines
                                                : detect_format(text);
  std::string name = o.source;
  if (auto slash = name.find_last_of('/'); slash != std::string::npos) name = name.substr(slash + 1);
  return {name, parse_complex(text, fmt)};
}

std::vector<Field> parse_fields(const Options& o) {
  std::vector<Field> out;
  for (const auto& s : o.fields) {
    Field f = Field::parse(s);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

Json header(const std::string& command, const Loaded& l) {
  Json out;
  out["command"] = command;
  out["name"] = l.name;
  out["tool_version"] = kToolVersion;
  out["schema_version"] = kSchemaVersion;
  return out;
}

/// Parses "1,4:0:0" as (support, degree, index).
SupportedClass parse_class(const SimplicialComplex& k, const std::string& spec, const Field& f) {
  auto c1 = spec.find(':');
  auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
  if (c1 == std::string::npos || c2 == std::string::npos)
    throw DomainError("class must look like LABELS:DEGREE:INDEX, got " + spec);
  VertexSet support = 0;
  std::stringstream labels(spec.substr(0, c1));
  std::string tok;
  while (std::getline(labels, tok, ',')) {
    int v = k.vertex_index(VertexLabel::plain(std::stoi(tok)));
    if (v < 0) throw DomainError("unknown vertex " + tok);
    support |= bit(v);
  }
  int degree = std::stoi(spec.substr(c1 + 1, c2 - c1 - 1));
  int index = std::stoi(spec.substr(c2 + 1));
  return basis_class(k, support, degree, index, f);
}

SimplicialComplex random_complex(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> nf(1, 4);
  std::uniform_int_distribution<std::uint64_t> mask(1, (std::uint64_t{1} << n) - 1);
  std::vector<std::vector<int>> facets;
  const int count = nf(rng);
  for (int x = 0; x < count; ++x) {
    std::vector<int> f;
    for (int v : vertices_of(mask(rng))) f.push_back(v + 1);
    facets.push_back(f);
  }
  std::vector<int> all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  return SimplicialComplex::from_int_facets(facets, all);
}

Cochain random_cochain(std::mt19937_64& rng, const SimplicialComplex& k, const Field& f, int degree) {
  std::uniform_int_distribution<int> val(-2, 2);
  Cochain c = zero_cochain(k, f, degree);
  for (auto& v : c.values) v = f.from_int(val(rng));
  return c;
}

Json verify_identities(const Options& o, const std::optional<Loaded>& input, bool& ok) {
  std::mt19937_64 rng(o.seed);
  Json out;
  out["command"] = "verify-identities";
  out["seed"] = o.seed;
  Json per_field = Json::object();
  std::vector<Loaded> targets;
  if (input) {
    targets.push_back(*input);
  } else {
    for (const auto& e : catalog_entries())
      if (SimplicialComplex::from_int_facets(e.facets).num_vertices() <= 6)
        targets.push_back({e.name, load_catalog(e.name)});
  }
  for (const auto& f : parse_fields(o)) {
    std::size_t random_cases = 0, random_failures = 0;
    std::uniform_int_distribution<int> qd(0, 3), md(1, 8);
    for (int c = 0; c < o.cases; ++c) {
      SimplicialComplex k = random_complex(rng, 6);
      const int q = qd(rng), m = md(rng);
      std::uniform_int_distribution<int> target(0, m - 1);
      VertexRule rule(static_cast<std::size_t>(k.num_vertices()) * (q + 1));
      for (auto& t : rule) t = target(rng);
      ++random_cases;
      if (!verify_boundary_identity(k, q, rule, f).is_zero()) ++random_failures;
    }
    Json fj;
    fj["boundary_identity"] = Json{{"cases", random_cases}, {"failures", random_failures}};
    Json complexes = Json::array();
    for (const auto& t : targets) {
      const auto& k = t.complex;
      ComplexPtr kp = share(k);
      std::size_t partitions = 0, failures_i = 0, lemma_cases = 0, failures_lemma = 0;
      for (int q = 0; q <= 2; ++q)
        for (const auto& parts : ordered_partitions(k.vertex_mask(), q + 1)) {
          VertexPartition p(k, parts);
          ++partitions;
          if (!verify_boundary_identity_I(k, p, f).is_zero()) ++failures_i;
          std::uniform_int_distribution<int> dd(0, std::max(0, std::min(k.dimension(), 1)));
          std::vector<Cochain> a;
          for (int x = 0; x <= q; ++x) a.push_back(random_cochain(rng, k, f, dd(rng)));
          ++lemma_cases;
          if (!prism_lemma_residual(k, p, a, f).is_zero()) ++failures_lemma;
        }
      Json cj;
      cj["name"] = t.name;
      cj["partitions"] = partitions;
      cj["boundary_identity_I_failures"] = failures_i;
      cj["prism_lemma_cases"] = lemma_cases;
      cj["prism_lemma_failures"] = failures_lemma;
      bool phi_ok = true;
      if (k.num_vertices() <= 5) {
        auto r = verify_phi_iso(k, f);
        phi_ok = r.passed();
        cj["phi_isomorphism"] = phi_ok;
      } else {
        cj["phi_isomorphism"] = nullptr;
      }
      if (failures_i || failures_lemma || !phi_ok) ok = false;
      complexes.push_back(cj);
    }
    if (random_failures) ok = false;
    fj["complexes"] = complexes;
    per_field[f.name()] = fj;
  }
  out["fields"] = per_field;
  out["all_zero"] = ok;
  return out;
}

std::string text_of(const Json& j, int indent = 0) {
  std::ostringstream os;
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << pad << key << ":\n" << text_of(value, indent + 2);
    } else if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << pad << key << ":\n";
      for (const auto& item : value) os << pad << "  -\n" << text_of(item, indent + 4);
    } else {
      os << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
  return os.str();
}

int run(const std::string& command, const Options& o, std::string& payload) {
  const int jobs = resolve_jobs(o.jobs);
  const bool json = o.format == "json";
  auto finish = [&](const Json& j, const std::string& text) {
    payload = json ? j.dump(2) + "\n" : text;
    return 0;
  };

  if (command == "catalog") {
    if (!o.source.empty()) {
      Loaded l = load_source(o);
      Json j = header("catalog", l);
      j["complex"] = emit_facet_json(l.complex);
      return finish(j, emit_facet_lines(l.complex));
    }
    Json list = Json::array();
    std::string text;
    for (const auto& e : catalog_entries()) {
      std::string problem = validate_entry(e);
      Json item;
      item["name"] = e.name;
      item["description"] = e.description;
      item["valid"] = problem.empty();
      if (!problem.empty()) item["problem"] = problem;
      list.push_back(item);
      text += e.name + "  " + e.description + (problem.empty() ? "" : "  INVALID: " + problem) + "\n";
    }
    Json j;
    j["command"] = "catalog";
    j["entries"] = list;
    return finish(j, text);
  }

  if (command == "verify-identities") {
    std::optional<Loaded> input;
    if (!o.source.empty()) input = load_source(o);
    bool ok = true;
    Json j = verify_identities(o, input, ok);
    payload = json ? j.dump(2) + "\n" : text_of(j);
    return ok ? 0 : 2;
  }

  if (command == "report" && o.all) {
    ReportOptions ro{parse_fields(o), o.max_arity, !o.no_certificate, jobs};
    Json all = Json::array();
    std::string text;
    for (const auto& e : catalog_entries()) {
      SimplicialComplex k = load_catalog(e.name);
      ComplexReport r = full_report(e.name, k, ro);
      all.push_back(report_json(r, k));
      text += report_text(r, k) + "\n";
    }
    return finish(all, text);
  }

  Loaded l = load_source(o);
  const auto& k = l.complex;
  const auto fields = parse_fields(o);

  if (command == "homology") {
    Json j = header(command, l);
    j["flavor"] = o.flavor;
    j["f_vector"] = k.f_vector();
    Json per = Json::object();
    std::ostringstream text;
    for (const auto& f : fields) {
      auto h = homology(k, f, o.flavor == "reduced");
      Json b;
      b["min_degree"] = h.min_degree;
      b["betti"] = h.betti_numbers();
      per[f.name()] = b;
      text << f.name() << " betti (from degree " << h.min_degree << "):";
      for (int x : h.betti_numbers()) text << ' ' << x;
      text << "\n";
    }
    j["homology"] = per;
    return finish(j, text.str());
  }

  if (command == "tight") {
    Json j = header(command, l);
    Json per = Json::object();
    std::ostringstream text;
    for (const auto& f : fields) {
      TightnessOptions opt;
      opt.reduced = o.flavor == "reduced";
      opt.require_connected = o.require_connected;
      opt.full_table = o.table;
      opt.jobs = jobs;
      auto r = is_tight(k, f, opt);
      per[f.name()] = tightness_json(k, r);
      text << f.name() << ": " << (r.tight ? "tight" : "not tight");
      if (r.witness) text << " (witness " << k.format(*r.witness) << ", degree " << r.witness_degree << ")";
      text << "\n";
    }
    j["tight"] = per;
    return finish(j, text.str());
  }

  if (command == "weak-golod") {
    Json j = header(command, l);
    Json per = Json::object();
    std::ostringstream text;
    for (const auto& f : fields) {
      auto r = weak_golod_check(k, f, jobs);
      Json w = weak_golod_json(k, r);
      w["hochster"] = hochster_json(k, hochster_cohomology(k, f, jobs));
      per[f.name()] = w;
      text << f.name() << ": " << (r.weakly_golod ? "weakly golod" : "not weakly golod");
      if (r.witness) text << " (witness " << k.format(r.witness->first) << " x " << k.format(r.witness->second) << ")";
      text << ", " << r.pairs_checked << " class pairs\n";
    }
    j["weak_golod"] = per;
    return finish(j, text.str());
  }

  if (command == "certify-golod") {
    Json j = header(command, l);
    Json per = Json::object();
    std::ostringstream text;
    for (const auto& f : fields) {
      auto t = is_tight(k, f, TightnessOptions{false, false, false, jobs});
      if (!t.tight) {
        Json c;
        c["status"] = "not tight";
        c["tightness"] = tightness_json(k, t);
        per[f.name()] = c;
        text << f.name() << ": not tight (witness " << k.format(*t.witness) << "), no certificate\n";
        continue;
      }
      auto cert = construct_golod_certificate(k, f, o.max_arity, jobs);
      if (!cert.verified()) throw VerificationError("certificate failed verification");
      Json c = certificate_json(k, cert);
      c["status"] = "verified";
      per[f.name()] = c;
      text << f.name() << ": certificate verified, " << cert.entries.size() << " entries over "
           << cert.partitions_scanned << " partitions (" << cert.vacuous_partitions << " vacuous), max arity "
           << cert.max_arity << "\n";
    }
    j["certificate"] = per;
    return finish(j, text.str());
  }

  if (command == "massey-triple") {
    if (o.classes.size() != 3) throw DomainError("massey-triple needs exactly three --class options");
    const Field f = fields.front();
    auto a = parse_class(k, o.classes[0], f), b = parse_class(k, o.classes[1], f), c = parse_class(k, o.classes[2], f);
    auto r = triple_massey_exact(k, f, a, b, c);
    Json j = header(command, l);
    j["field"] = f.name();
    j["defined"] = r.defined;
    j["pairwise_disjoint"] = r.pairwise_disjoint;
    j["trivial"] = r.trivial;
    j["support"] = Json::array();
    for (int v : vertices_of(r.support)) j["support"].push_back(k.vertex(v).path[0]);
    j["degree"] = r.degree;
    Json rc = Json::array(), nf = Json::array(), ind = Json::array();
    for (const auto& x : r.representative_class) rc.push_back(x.to_string());
    for (const auto& x : r.normal_form) nf.push_back(x.to_string());
    for (const auto& row : r.indeterminacy) {
      Json jr = Json::array();
      for (const auto& x : row) jr.push_back(x.to_string());
      ind.push_back(jr);
    }
    j["representative_class"] = rc;
    j["indeterminacy"] = ind;
    j["normal_form"] = nf;
    j["note"] = r.note;
    std::ostringstream text;
    text << "defined " << (r.defined ? "yes" : "no") << ", trivial " << (r.trivial ? "yes" : "no") << " (" << r.note
         << ")\n";
    return finish(j, text.str());
  }

  if (command == "report") {
    ReportOptions ro{fields, o.max_arity, !o.no_certificate, jobs};
    ComplexReport r = full_report(l.name, k, ro);
    return finish(report_json(r, k), report_text(r, k));
  }

  throw DomainError("unknown command " + command);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tightness and Golodness checks for small simplicial complexes", "golodlab"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool source_required) {
    sub->add_option("--field", o.fields, "q, f2, f3 or f<p>; repeatable")->take_all()->allow_extra_args(false);
    sub->add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", o.out_path, "write output to PATH");
    sub->add_option("--jobs", o.jobs, "worker threads (default: GOLODLAB_JOBS, then all processors)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--input-format", o.input_format, "auto, lines or json")
        ->check(CLI::IsMember({"auto", "lines", "json"}));
    auto* src = sub->add_option("source", o.source, "facet file, '-' for stdin, or catalog:NAME");
    if (source_required) src->required();
  };

  auto* homology_cmd = app.add_subcommand("homology", "Betti numbers");
  add_common(homology_cmd, true);
  homology_cmd->add_option("--flavor", o.flavor, "reduced or unreduced")
      ->check(CLI::IsMember({"reduced", "unreduced"}));

  auto* tight_cmd = app.add_subcommand("tight", "tightness verdict with a failing subset");
  add_common(tight_cmd, true);
  tight_cmd->add_option("--flavor", o.flavor, "reduced or unreduced")->check(CLI::IsMember({"reduced", "unreduced"}));
  tight_cmd->add_flag("--require-connected", o.require_connected, "also demand connectivity");
  tight_cmd->add_flag("--table", o.table, "report every subset");

  auto* weak_cmd = app.add_subcommand("weak-golod", "products in the cohomology of C*(K)");
  add_common(weak_cmd, true);

  auto* cert_cmd = app.add_subcommand("certify-golod", "vanishing defining systems for a tight complex");
  add_common(cert_cmd, true);
  cert_cmd->add_option("--max-arity", o.max_arity, "largest number of factors")->check(CLI::Range(2, 8));

  auto* triple_cmd = app.add_subcommand("massey-triple", "exact triple Massey product");
  add_common(triple_cmd, true);
  triple_cmd->add_option("--class", o.classes, "LABELS:DEGREE:INDEX, e.g. 1,4:0:0; give three")->take_all()->allow_extra_args(false);

  auto* report_cmd = app.add_subcommand("report", "full report");
  add_common(report_cmd, false);
  report_cmd->add_option("--max-arity", o.max_arity, "largest number of factors")->check(CLI::Range(2, 8));
  report_cmd->add_flag("--all", o.all, "every catalog complex");
  report_cmd->add_flag("--no-certificate", o.no_certificate, "skip the certificate");

  auto* catalog_cmd = app.add_subcommand("catalog", "list or print built-in complexes");
  add_common(catalog_cmd, false);

  auto* verify_cmd = app.add_subcommand("verify-identities", "randomized prism and dga identity sweep");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--seed", o.seed, "random seed");
  verify_cmd->add_option("--cases", o.cases, "random boundary identity cases")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return 1;
  }
  if (o.fields.empty()) o.fields = {"q"};

  std::string command = app.get_subcommands().front()->get_name();
  if (command == "report" && !o.all && o.source.empty()) {
    err << "error: report needs a source or --all\n";
    return 1;
  }

  std::string payload;
  int code = 0;
  try {
    code = run(command, o, payload);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const VerificationError& e) {
    err << "internal verification failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  if (!o.out_path.empty()) {
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write " << o.out_path << "\n";
      return 1;
    }
    f << payload;
  } else {
    out << payload;
  }
  return code;
}

}  // namespace golod
