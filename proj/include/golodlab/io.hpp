#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "golodlab/analysis.hpp"

namespace golod {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::ordered_json;

enum class InputFormat { facet_lines, facet_json };

/// facet-lines: one facet per line, whitespace-separated integer labels, `#` comments.
/// facet-json: {"vertices": [...], "facets": [[...], ...]}; "vertices" is optional.
/// Malformed input throws ParseError with a 1-based line and column.
SimplicialComplex parse_complex(std::string_view text, InputFormat format);
/// facet-json when the first non-blank character is '{', facet-lines otherwise.
InputFormat detect_format(std::string_view text);

/// Canonical facet lists; both round-trip through parse_complex.
std::string emit_facet_lines(const SimplicialComplex& k);
Json emit_facet_json(const SimplicialComplex& k);

struct CatalogEntry {
  std::string name;
  std::string description;
  std::vector<std::vector<int>> facets;
  long long euler_characteristic = 0;
  std::vector<int> betti_q;   // unreduced
  std::vector<int> betti_f2;  // unreduced
  /// Top homology rank over Q equals 1.
  bool orientable = false;
};

const std::vector<CatalogEntry>& catalog_entries();
/// Loads and validates an entry; VerificationError when the facet list misses its expectations.
SimplicialComplex load_catalog(const std::string& name);
/// Checks χ, Betti numbers over Q and F_2 and the orientability proxy; returns the first mismatch or "".
std::string validate_entry(const CatalogEntry& e);

Json tightness_json(const SimplicialComplex& k, const TightnessReport& r);
Json weak_golod_json(const SimplicialComplex& k, const WeakGolodResult& r);
Json hochster_json(const SimplicialComplex& k, const HochsterTable& t);
Json certificate_summary_json(const GolodCertificate& c);
/// Summary plus every entry with its defining system.
Json certificate_json(const SimplicialComplex& k, const GolodCertificate& c);
Json koszul_json(const SimplicialComplex& k, const KoszulCochain& x);
Json report_json(const ComplexReport& r, const SimplicialComplex& k);
std::string report_text(const ComplexReport& r, const SimplicialComplex& k);

}  // namespace golod
