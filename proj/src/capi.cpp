#include "nesto/nesto_c.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "nesto/error.hpp"
#include "nesto/json_io.hpp"
#include "nesto/verify.hpp"

struct nesto_building_set {
  nesto::BuildingSet b;
};

namespace {

using nesto::Json;

constexpr const char* kVersion = "0.1.0";

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

nesto_options resolve(const nesto_options* opt) {
  nesto_options o;
  nesto_options_default(&o);
  if (opt) o = *opt;
  return o;
}

Json parse(const char* text) {
  if (!text) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "input is NULL");
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw nesto::Error(nesto::ErrorCode::ParseError, e.what());
  }
}

std::string envelope(const char* command, const std::string& kind, const nesto_options& o, Json result) {
  Json j{{"tool", "nesto"}, {"version", kVersion}, {"seed", o.seed}, {"command", command}, {"result", std::move(result)}};
  if (!kind.empty()) j["kind"] = kind;
  return j.dump(2) + "\n";
}

// Runs f, translating exceptions into status codes. f returns the status and
// fills `text`.
template <class F>
int guarded(char** out, F&& f) {
  if (!out) {
    last_error = "output pointer is NULL";
    return NESTO_E_INVALID_ARGUMENT;
  }
  *out = nullptr;
  try {
    std::string text;
    int status = f(text);
    *out = dup(text);
    last_error.clear();
    return status;
  } catch (const nesto::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return NESTO_E_INTERNAL;
  }
}

template <class F>
int guarded_plain(F&& f) {
  try {
    f();
    last_error.clear();
    return NESTO_OK;
  } catch (const nesto::Error& e) {
    last_error = e.what();
    return static_cast<int>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return NESTO_E_INTERNAL;
  }
}

const nesto::BuildingSet& need(const nesto_building_set* b) {
  if (!b) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "building set handle is NULL");
  return b->b;
}

std::string str_or(const char* s, const char* fallback) { return s ? s : fallback; }

Json extra_of(const char* extra) { return extra ? parse(extra) : Json::object(); }

class CapScope {
 public:
  explicit CapScope(const nesto_options& o) : saved_(nesto::max_n()) {
    if (o.max_n > 0) nesto::set_max_n(std::min(o.max_n, saved_));
  }
  ~CapScope() { nesto::set_max_n(saved_); }

 private:
  int saved_;
};

}  // namespace

extern "C" {

const char* nesto_version(void) { return kVersion; }

const char* nesto_status_name(int status) {
  if (status == NESTO_E_CHECK_FAILED) return "CheckFailed";
  if (status < 0 || status > static_cast<int>(nesto::ErrorCode::Internal)) return "Unknown";
  return nesto::error_name(static_cast<nesto::ErrorCode>(status));
}

const char* nesto_last_error(void) { return last_error.c_str(); }

void nesto_options_default(nesto_options* opt) {
  if (!opt) return;
  opt->max_n = 0;
  opt->seed = 7;
  opt->format = NESTO_FORMAT_JSON;
}

void nesto_string_free(char* s) { std::free(s); }

int nesto_bs_from_json(const char* json, nesto_building_set** out) {
  if (!out) return NESTO_E_INVALID_ARGUMENT;
  *out = nullptr;
  return guarded_plain([&] {
    nesto::BuildingSet b = nesto::building_set_from_json(parse(json));
    *out = new nesto_building_set{std::move(b)};
  });
}

void nesto_bs_free(nesto_building_set* b) { delete b; }

int nesto_bs_n(const nesto_building_set* b, int* out) {
  return guarded_plain([&] { *out = need(b).n(); });
}

int nesto_bs_size(const nesto_building_set* b, int* out) {
  return guarded_plain([&] { *out = static_cast<int>(need(b).size()); });
}

int nesto_bs_to_json(const nesto_building_set* b, char** out) {
  return guarded(out, [&](std::string& text) {
    text = nesto::to_json(need(b)).dump() + "\n";
    return NESTO_OK;
  });
}

int nesto_validate(const char* input_json, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    text = envelope("validate", "", o, nesto::validate_report(nesto::building_set_from_json(parse(input_json))));
    return NESTO_OK;
  });
}

int nesto_from_graph(const char* graph_json, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    nesto::DirectedGraph g = nesto::graph_from_json(parse(graph_json));
    text = envelope("from-graph", "", o, nesto::to_json(nesto::from_graph(g)));
    return NESTO_OK;
  });
}

int nesto_complex(const nesto_building_set* b, const char* kind, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "nested");
    if (k != "nested" && k != "extended") throw nesto::Error(nesto::ErrorCode::InvalidArgument, "complex: kind must be nested or extended");
    if (o.format == NESTO_FORMAT_DOT)
      text = nesto::render_dot(nesto::to_json(need(b)), "complex", k, o.seed, o.max_n);
    else if (o.format == NESTO_FORMAT_CSV)
      throw nesto::Error(nesto::ErrorCode::InvalidArgument, "no CSV rendering for complex");
    else
      text = envelope("complex", k, o, nesto::complex_report(need(b), k == "extended"));
    return NESTO_OK;
  });
}

int nesto_counts(const nesto_building_set* b, const char* kind, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "f");
    if (o.format == NESTO_FORMAT_CSV) {
      text = nesto::render_csv(nesto::to_json(need(b)), "counts", k);
      return NESTO_OK;
    }
    if (o.format == NESTO_FORMAT_DOT) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "no DOT rendering for counts");
    Json r = nesto::counts_report(need(b), k);
    text = envelope("counts", k, o, r);
    if (k == "ab" && !(r["identities"]["ok"].get<bool>() && r["recursions"]["ok"].get<bool>())) return NESTO_E_CHECK_FAILED;
    return NESTO_OK;
  });
}

int nesto_perms(const nesto_building_set* b, const char* kind, const char* extra_json, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "list");
    if (o.format == NESTO_FORMAT_DOT) {
      text = nesto::render_dot(nesto::to_json(need(b)), "perms", k, o.seed, o.max_n);
      return NESTO_OK;
    }
    if (o.format == NESTO_FORMAT_CSV) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "no CSV rendering for perms");
    Json r = nesto::perms_report(need(b), k, extra_of(extra_json));
    text = envelope("perms", k, o, r);
    if (k == "gamma-chordal" && !(r["h_equal"].get<bool>() && r["gamma_equal"].get<bool>())) return NESTO_E_CHECK_FAILED;
    return NESTO_OK;
  });
}

int nesto_order(const char* input_json, const char* kind, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "partial-weak");
    Json input = input_json ? parse(input_json) : Json::object();
    if (o.format == NESTO_FORMAT_DOT) {
      text = nesto::render_dot(input, "order", k, o.seed, o.max_n > 0 ? o.max_n : 3);
      return NESTO_OK;
    }
    if (o.format == NESTO_FORMAT_CSV) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "no CSV rendering for order");
    Json r = nesto::order_report(input, k, o.seed, o.max_n > 0 ? o.max_n : 3);
    text = envelope("order", k, o, r);
    if (k == "partial-weak" && !r["lattice"].get<bool>()) return NESTO_E_CHECK_FAILED;
    if (k == "shell" && !r["ok"].get<bool>()) return NESTO_E_CHECK_FAILED;
    if (k == "flip" && !(r["nested"]["acyclic"].get<bool>() && r["extended"]["acyclic"].get<bool>())) return NESTO_E_CHECK_FAILED;
    return NESTO_OK;
  });
}

int nesto_iso(const char* input_json, const char* kind, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "check");
    if (o.format != NESTO_FORMAT_JSON) throw nesto::Error(nesto::ErrorCode::InvalidArgument, "iso reports are JSON only");
    Json r = nesto::iso_report(parse(input_json), k);
    text = envelope("iso", k, o, r);
    return r["map_verified"].get<bool>() && r["isomorphic"].get<bool>() ? NESTO_OK : NESTO_E_CHECK_FAILED;
  });
}

int nesto_geom(const nesto_building_set* b, const char* kind, const char* extra_json, const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    CapScope cap(o);
    const std::string k = str_or(kind, "coords");
    if (o.format == NESTO_FORMAT_DOT) {
      text = nesto::render_dot(nesto::to_json(need(b)), "geom", k, o.seed, o.max_n);
      return NESTO_OK;
    }
    if (o.format == NESTO_FORMAT_CSV) {
      text = nesto::render_csv(nesto::to_json(need(b)), "geom", k);
      return NESTO_OK;
    }
    Json r = nesto::geom_report(need(b), k, extra_of(extra_json));
    text = envelope("geom", k, o, r);
    if (k == "stellar" && !r["matches_extended"].get<bool>()) return NESTO_E_CHECK_FAILED;
    if (k == "orient" && !r["acyclic"].get<bool>()) return NESTO_E_CHECK_FAILED;
    return NESTO_OK;
  });
}

int nesto_verify_all(const nesto_options* opt, char** out) {
  return guarded(out, [&](std::string& text) {
    nesto_options o = resolve(opt);
    nesto::VerifyOptions v;
    if (o.max_n > 0) v.max_n = o.max_n;
    v.seed = o.seed;
    auto results = nesto::verify_all(v);
    text = envelope("verify-all", "", o, nesto::verify_report(results, v));
    for (const auto& r : results)
      if (!r.pass) return NESTO_E_CHECK_FAILED;
    return NESTO_OK;
  });
}

}  // extern "C"
