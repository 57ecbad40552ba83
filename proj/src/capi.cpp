#include "linkforge.h"

#include <cstdlib>
#include <cstring>
#include <set>
#include <string>
#include <vector>

#include "linkforge/bounds.hpp"
#include "linkforge/catalog.hpp"
#include "linkforge/diagram.hpp"
#include "linkforge/errors.hpp"
#include "linkforge/magnus.hpp"
#include "linkforge/milnor.hpp"
#include "linkforge/report.hpp"

struct lf_diagram {
  linkforge::LinkDiagram impl;
};

namespace {

thread_local std::string g_last_error;

lf_status status_of(const linkforge::Error& e) {
  return e.code() == linkforge::ErrorCode::CapacityExceeded ? LF_ERR_CAPACITY
                                                            : LF_ERR_INPUT;
}

template <typename Fn>
lf_status guarded(Fn&& fn) {
  try {
    fn();
    return LF_OK;
  } catch (const linkforge::Error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return LF_ERR_INTERNAL;
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lf_status require(bool ok, const char* message) {
  if (!ok) {
    g_last_error = message;
    return LF_ERR_INPUT;
  }
  return LF_OK;
}

}  // namespace

extern "C" {

const char* lf_version(void) { return "0.1.0"; }

const char* lf_last_error(void) { return g_last_error.c_str(); }

lf_status lf_diagram_parse(const char* pd_text, lf_diagram** out) {
  if (lf_status s = require(pd_text && out, "null argument")) return s;
  return guarded([&] {
    auto d = new lf_diagram{linkforge::parse_pd(pd_text)};
    *out = d;
  });
}

lf_status lf_diagram_from_catalog(const char* spec, lf_diagram** out) {
  if (lf_status s = require(spec && out, "null argument")) return s;
  return guarded([&] {
    auto d = new lf_diagram{linkforge::catalog_link(std::string(spec))};
    *out = d;
  });
}

void lf_diagram_free(lf_diagram* d) { delete d; }

int lf_diagram_components(const lf_diagram* d) {
  return d ? d->impl.component_count() : 0;
}

int lf_diagram_crossings(const lf_diagram* d) {
  return d ? d->impl.crossing_count() : 0;
}

int lf_diagram_unknot_components(const lf_diagram* d) {
  return d ? d->impl.unknot_components : 0;
}

lf_status lf_diagram_serialize(const lf_diagram* d, char** out_text) {
  if (lf_status s = require(d && out_text, "null argument")) return s;
  return guarded([&] { *out_text = copy_string(linkforge::serialize(d->impl)); });
}

lf_status lf_diagram_validate(const lf_diagram* d, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded(
      [&] { *out_json = copy_string(linkforge::validate_report_json(d->impl)); });
}

lf_status lf_diagram_apply_changes(const lf_diagram* d, const int* crossing_ids,
                                   size_t count, lf_diagram** out) {
  if (lf_status s = require(d && out && (crossing_ids || count == 0),
                            "null argument")) {
    return s;
  }
  return guarded([&] {
    std::set<int> ids(crossing_ids, crossing_ids + count);
    *out = new lf_diagram{linkforge::apply_changes(d->impl, ids)};
  });
}

lf_status lf_crossing_sign(const lf_diagram* d, int crossing_id, int* out_sign) {
  if (lf_status s = require(d && out_sign, "null argument")) return s;
  return guarded([&] { *out_sign = linkforge::crossing_sign(d->impl, crossing_id); });
}

lf_status lf_self_writhe(const lf_diagram* d, int component, int* out_writhe) {
  if (lf_status s = require(d && out_writhe, "null argument")) return s;
  return guarded([&] { *out_writhe = linkforge::self_writhe(d->impl, component); });
}

lf_status lf_linking_matrix(const lf_diagram* d, int64_t* out, size_t len) {
  if (lf_status s = require(d && out, "null argument")) return s;
  return guarded([&] {
    linkforge::LinkingMatrix m = linkforge::linking_matrix(d->impl);
    const size_t need = static_cast<size_t>(m.n) * m.n;
    if (len < need) {
      linkforge::raise(linkforge::ErrorCode::InvalidParams,
                       "matrix buffer needs " + std::to_string(need) +
                           " entries");
    }
    for (int i = 0; i < m.n; ++i) {
      for (int j = 0; j < m.n; ++j) out[i * m.n + j] = m.lk[i][j];
    }
  });
}

lf_status lf_mu(const lf_diagram* d, const int* index_seq, size_t len,
                int64_t* out_value, int64_t* out_delta) {
  if (lf_status s = require(d && index_seq && out_value && out_delta,
                            "null argument")) {
    return s;
  }
  return guarded([&] {
    std::vector<int> I(index_seq, index_seq + len);
    linkforge::MuValue v = linkforge::milnor_mu(d->impl, I);
    *out_value = v.value;
    *out_delta = v.indeterminacy;
  });
}

lf_status lf_mu_trivial_to_length(const lf_diagram* d, int k, int* out_trivial) {
  if (lf_status s = require(d && out_trivial, "null argument")) return s;
  return guarded(
      [&] { *out_trivial = linkforge::mu_trivial_to_length(d->impl, k) ? 1 : 0; });
}

lf_status lf_v2(const lf_diagram* d, int component, int64_t* out_value) {
  if (lf_status s = require(d && out_value, "null argument")) return s;
  return guarded([&] { *out_value = linkforge::v2(d->impl, component); });
}

lf_status lf_milnor_table_json(const lf_diagram* d, int k, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = copy_string(linkforge::to_json(linkforge::milnor_table(d->impl, k)));
  });
}

lf_status lf_cnk_bounds(int n, int k, int64_t* out_lower, int64_t* out_upper) {
  if (lf_status s = require(out_lower && out_upper, "null argument")) return s;
  return guarded([&] {
    auto [lo, hi] = linkforge::cnk_bounds(n, k);
    *out_lower = lo;
    *out_upper = hi;
  });
}

lf_status lf_squares_mod8(int residue, int* out_representable) {
  if (lf_status s = require(out_representable != nullptr, "null argument")) {
    return s;
  }
  return guarded([&] {
    *out_representable = linkforge::squares_mod8_representable(residue) ? 1 : 0;
  });
}

lf_status lf_invariants_json(const lf_diagram* d, int k, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = copy_string(linkforge::invariants_report_json(d->impl, k));
  });
}

lf_status lf_bounds_json(const lf_diagram* d, int k, int min_ordering,
                         char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = copy_string(
        linkforge::bounds_report_json(d->impl, k, min_ordering != 0));
  });
}

lf_status lf_obstructions_json(const lf_diagram* d, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = copy_string(linkforge::obstructions_report_json(d->impl));
  });
}

lf_status lf_search_json(const lf_diagram* d, int k, int max_budget,
                         int workers, int stable_ms, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded([&] {
    *out_json = copy_string(linkforge::search_report_json(
        d->impl, k, max_budget, workers, stable_ms != 0));
  });
}

lf_status lf_jin_scan_json(const lf_diagram* d, char** out_json) {
  if (lf_status s = require(d && out_json, "null argument")) return s;
  return guarded(
      [&] { *out_json = copy_string(linkforge::jin_report_json(d->impl)); });
}

lf_status lf_catalog_json(char** out_json) {
  if (lf_status s = require(out_json != nullptr, "null argument")) return s;
  return guarded([&] { *out_json = copy_string(linkforge::catalog_report_json()); });
}

lf_status lf_set_capacity(uint64_t max_monomials) {
  return guarded([&] { linkforge::MagnusSeries::set_capacity(max_monomials); });
}

uint64_t lf_capacity(void) { return linkforge::MagnusSeries::capacity(); }

void lf_string_free(char* text) { std::free(text); }

}  // extern "C"
