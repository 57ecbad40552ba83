#include "linkforge/report.hpp"

#include <algorithm>
#include <sstream>

#include "linkforge/catalog.hpp"
#include "linkforge/errors.hpp"
#include "linkforge/milnor.hpp"

namespace linkforge {

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

void append_int_array(std::ostringstream& out, const std::vector<std::int64_t>& v) {
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out << ",";
    out << v[i];
  }
  out << "]";
}

}  // namespace

ObstructionScan obstruction_scan(const LinkDiagram& d) {
  ObstructionScan scan;
  scan.components = d.component_count();
  if (scan.components == 2) {
    scan.applicable = true;
    LinkingMatrix m = linking_matrix(d);
    MuValue sl = milnor_mu(d, {1, 1, 2, 2});
    scan.mu1122 = sl.value;
    scan.mu1122_delta = sl.indeterminacy;
    ComponentFlags flags = derive_flags(d, 4);
    ObstructionCertificate cert = obstruction_two_comp(sl.value, flags);
    bool well_defined = m.at(1, 2) == 0 && sl.indeterminacy == 0;
    cert.hypotheses.insert(
        cert.hypotheses.begin(),
        {"mu_1122 well-defined (lk=0, delta=0)", well_defined,
         "lk=" + std::to_string(m.at(1, 2)) +
             ", delta=" + std::to_string(sl.indeterminacy)});
    if (!well_defined) cert.concluded.reset();
    scan.certificates.push_back(std::move(cert));
  } else if (scan.components == 3) {
    scan.applicable = true;
    LinkingMatrix m = linking_matrix(d);
    MuValue triple = milnor_mu(d, {1, 2, 3});
    scan.mu123 = triple.value;
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (int p = 0; p < 3; ++p) {
      std::set<int> drop;
      for (int c = 1; c <= 3; ++c) {
        if (c != pairs[p][0] && c != pairs[p][1]) drop.insert(c);
      }
      LinkDiagram sub = remove_components(d, drop);
      scan.mu1122_pairs[p] = milnor_mu(sub, {1, 1, 2, 2}).value;
    }
    ComponentFlags flags = derive_flags(d, 3);
    scan.certificates =
        obstruction_three_comp(m, triple.value, scan.mu1122_pairs, flags);
  }
  return scan;
}

std::string to_json(const BoundReport& r) {
  std::ostringstream out;
  out << "{\"k\":" << r.k << ",\"lower\":" << r.lower
      << ",\"upper\":" << r.upper << ",\"exact\":";
  if (r.exact) {
    out << *r.exact;
  } else {
    out << "null";
  }
  out << ",\"homotopy_lower\":" << r.homotopy_lower
      << ",\"homotopy_upper\":" << r.homotopy_upper << ",\"provenance\":[";
  for (std::size_t i = 0; i < r.provenance.size(); ++i) {
    if (i) out << ",";
    out << "\"" << json_escape(r.provenance[i]) << "\"";
  }
  out << "]}";
  return out.str();
}

std::string to_json(const ObstructionCertificate& cert) {
  std::ostringstream out;
  out << "{\"theorem\":\"" << theorem_name(cert.theorem)
      << "\",\"hypotheses\":[";
  for (std::size_t i = 0; i < cert.hypotheses.size(); ++i) {
    if (i) out << ",";
    const auto& h = cert.hypotheses[i];
    out << "{\"name\":\"" << json_escape(h.name) << "\",\"holds\":"
        << (h.holds ? "true" : "false") << ",\"witness\":\""
        << json_escape(h.witness) << "\"}";
  }
  out << "],\"concluded\":";
  if (cert.concluded) {
    out << "{\"k\":" << cert.concluded->k
        << ",\"lower\":" << cert.concluded->lower << "}";
  } else {
    out << "null";
  }
  out << "}";
  return out.str();
}

std::string to_json(const SearchReport& r, bool stable_ms) {
  std::ostringstream out;
  out << "{\"exhausted\":" << (r.exhausted ? "true" : "false")
      << ",\"min_witness_size\":";
  if (r.min_witness_size) {
    out << *r.min_witness_size;
  } else {
    out << "null";
  }
  out << ",\"witnesses\":[";
  for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
    if (i) out << ",";
    out << "{\"changes\":[";
    bool first = true;
    for (int id : r.witnesses[i].change_set) {
      if (!first) out << ",";
      first = false;
      out << id;
    }
    out << "]}";
  }
  out << "],\"examined\":" << r.examined
      << ",\"ms\":" << (stable_ms ? 0 : r.wall_ms) << "}";
  return out.str();
}

std::string invariants_report_json(const LinkDiagram& d, int k) {
  LinkingMatrix m = linking_matrix(d);
  MilnorTable table = milnor_table(d, k);
  std::ostringstream out;
  out << "{\"components\":" << d.component_count()
      << ",\"unknot_components\":" << d.unknot_components
      << ",\"crossings\":" << d.crossing_count() << ",\"linking_matrix\":[";
  for (int i = 0; i < m.n; ++i) {
    if (i) out << ",";
    append_int_array(out, m.lk[i]);
  }
  out << "],\"self_writhe\":";
  std::vector<std::int64_t> writhes, v2s;
  for (int i = 1; i <= d.component_count(); ++i) {
    writhes.push_back(self_writhe(d, i));
    v2s.push_back(v2(d, i));
  }
  append_int_array(out, writhes);
  out << ",\"v2\":";
  append_int_array(out, v2s);
  out << ",\"milnor_table\":" << to_json(table) << "}";
  return out.str();
}

std::string bounds_report_json(const LinkDiagram& d, int k, bool min_ordering) {
  LinkingMatrix m = linking_matrix(d);
  ComponentFlags flags = derive_flags(d, k);
  BoundReport report = uk_bounds(m, flags, k);
  ObstructionScan scan = obstruction_scan(d);
  for (const auto& cert : scan.certificates) {
    if (cert.concluded && k >= cert.concluded->k &&
        cert.concluded->lower > report.lower) {
      report.lower = cert.concluded->lower;
      report.provenance.push_back(std::string(theorem_name(cert.theorem)) +
                                  "-lower");
    }
  }

  std::ostringstream out;
  out << "{\"linking_matrix\":[";
  for (int i = 0; i < m.n; ++i) {
    if (i) out << ",";
    append_int_array(out, m.lk[i]);
  }
  out << "],\"lambda\":" << lambda_total(m)
      << ",\"lambda_star\":" << lambda_star(m)
      << ",\"lambda_prime\":" << lambda_prime(m) << ",\"lambda_star_min\":";
  if (min_ordering && m.n <= 8) {
    out << lambda_star_min_over_orderings(m);
  } else {
    out << "null";
  }
  out << ",\"flags\":[";
  for (std::size_t i = 0; i < flags.entries.size(); ++i) {
    if (i) out << ",";
    const auto& e = flags.entries[i];
    const char* state = e.state == ComponentFlag::CertifiedNontrivial
                            ? "certified_nontrivial"
                        : e.state == ComponentFlag::CertifiedTrivial
                            ? "certified_trivial"
                            : "unknown";
    out << "{\"state\":\"" << state << "\",\"certificate\":\""
        << json_escape(e.certificate) << "\"}";
  }
  out << "],\"bounds\":" << to_json(report) << ",\"obstructions\":[";
  for (std::size_t i = 0; i < scan.certificates.size(); ++i) {
    if (i) out << ",";
    out << to_json(scan.certificates[i]);
  }
  out << "]}";
  return out.str();
}

std::string obstructions_report_json(const LinkDiagram& d) {
  ObstructionScan scan = obstruction_scan(d);
  std::ostringstream out;
  out << "{\"components\":" << scan.components
      << ",\"applicable\":" << (scan.applicable ? "true" : "false");
  if (scan.components == 2) {
    out << ",\"mu_1122\":" << scan.mu1122
        << ",\"mu_1122_delta\":" << scan.mu1122_delta;
  }
  if (scan.components == 3) {
    out << ",\"mu_123\":" << scan.mu123 << ",\"mu_1122_pairs\":["
        << scan.mu1122_pairs[0] << "," << scan.mu1122_pairs[1] << ","
        << scan.mu1122_pairs[2] << "]";
  }
  out << ",\"certificates\":[";
  for (std::size_t i = 0; i < scan.certificates.size(); ++i) {
    if (i) out << ",";
    out << to_json(scan.certificates[i]);
  }
  out << "],\"implied_lower_bounds\":[";
  bool first = true;
  for (const auto& cert : scan.certificates) {
    if (!cert.concluded) continue;
    if (!first) out << ",";
    first = false;
    out << "{\"theorem\":\"" << theorem_name(cert.theorem)
        << "\",\"k\":" << cert.concluded->k
        << ",\"lower\":" << cert.concluded->lower << "}";
  }
  out << "]}";
  return out.str();
}

std::string search_report_json(const LinkDiagram& d, int k, int max_budget,
                               int workers, bool stable_ms) {
  SearchReport report = min_witness_size(d, k, max_budget, workers);
  return to_json(report, stable_ms);
}

std::string jin_report_json(const LinkDiagram& d) {
  auto deltas = jin_delta_scan(d);
  MuValue base = milnor_mu(d, {1, 1, 2, 2});
  std::ostringstream out;
  out << "{\"mu_1122\":" << base.value << ",\"entries\":[";
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (i) out << ",";
    out << "{\"crossing\":" << deltas[i].first
        << ",\"delta\":" << deltas[i].second << "}";
  }
  out << "]}";
  return out.str();
}

std::string validate_report_json(const LinkDiagram& d) {
  auto violations = validate(d);
  std::ostringstream out;
  out << "{\"violations\":[";
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) out << ",";
    out << "{\"invariant\":\"" << json_escape(violations[i].invariant)
        << "\",\"detail\":\"" << json_escape(violations[i].detail) << "\"}";
  }
  out << "]}";
  return out.str();
}

std::string catalog_report_json() {
  auto entries = catalog_entries();
  std::ostringstream out;
  out << "{\"entries\":[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out << ",";
    out << "\"" << json_escape(entries[i]) << "\"";
  }
  out << "]}";
  return out.str();
}

}  // namespace linkforge
