#include <doctest.h>

#include <json.hpp>
#include <memory>
#include <string>

#include "nesto/nesto_c.h"

using nlohmann::json;

namespace {

struct Text {
  char* p = nullptr;
  ~Text() { nesto_string_free(p); }
  json parsed() const { return json::parse(p); }
};

struct BsDeleter {
  void operator()(nesto_building_set* b) const { nesto_bs_free(b); }
};
using Bs = std::unique_ptr<nesto_building_set, BsDeleter>;

Bs load(const char* text) {
  nesto_building_set* b = nullptr;
  REQUIRE(nesto_bs_from_json(text, &b) == NESTO_OK);
  return Bs(b);
}

constexpr const char* kK3 = R"({"n":3,"edges":[[1,2],[2,3],[1,3]],"undirected":true})";

}  // namespace

TEST_CASE("handles and basic queries") {
  CHECK(std::string(nesto_version()) == "0.1.0");
  Bs b = load(kK3);
  int n = 0, size = 0;
  CHECK(nesto_bs_n(b.get(), &n) == NESTO_OK);
  CHECK(nesto_bs_size(b.get(), &size) == NESTO_OK);
  CHECK(n == 3);
  CHECK(size == 7);
  Text t;
  CHECK(nesto_bs_to_json(b.get(), &t.p) == NESTO_OK);
  CHECK(t.parsed()["sets"].size() == 7);
  CHECK(nesto_bs_n(nullptr, &n) != NESTO_OK);
}

TEST_CASE("errors map to status codes") {
  nesto_building_set* b = nullptr;
  CHECK(nesto_bs_from_json("{not json", &b) == NESTO_E_PARSE);
  CHECK(b == nullptr);
  CHECK(nesto_bs_from_json(R"({"n":2,"sets":[[1],[1,2]]})", &b) == NESTO_E_MISSING_SINGLETON);
  CHECK(std::string(nesto_last_error()).find("MissingSingleton") != std::string::npos);
  CHECK(nesto_bs_from_json(R"({"n":3,"sets":[[1],[2],[3],[1,2],[2,3]]})", &b) == NESTO_E_UNION_CLOSURE);
  CHECK(std::string(nesto_status_name(NESTO_E_CHECK_FAILED)).size() > 0);

  Text t;
  CHECK(nesto_validate(R"({"n":2,"sets":[[1],[1,2]]})", nullptr, &t.p) == NESTO_E_MISSING_SINGLETON);
}

TEST_CASE("counts report") {
  Bs b = load(kK3);
  nesto_options o;
  nesto_options_default(&o);
  o.seed = 42;
  Text t;
  REQUIRE(nesto_counts(b.get(), "h", &o, &t.p) == NESTO_OK);
  json j = t.parsed();
  CHECK(j["result"]["h"] == json::array({1, 4, 1}));
  CHECK(j["seed"] == 42);
  CHECK(j["version"] == "0.1.0");
  CHECK(j["command"] == "counts");

  Text g;
  REQUIRE(nesto_counts(b.get(), "gamma", &o, &g.p) == NESTO_OK);
  CHECK(g.parsed()["result"]["gamma"] == json::array({1, 2}));

  Text bad;
  CHECK(nesto_counts(b.get(), "nope", &o, &bad.p) == NESTO_E_INVALID_ARGUMENT);
}

TEST_CASE("reports are reproducible") {
  Bs b = load(kK3);
  nesto_options o;
  nesto_options_default(&o);
  Text a, c;
  REQUIRE(nesto_complex(b.get(), "extended", &o, &a.p) == NESTO_OK);
  REQUIRE(nesto_complex(b.get(), "extended", &o, &c.p) == NESTO_OK);
  CHECK(std::string(a.p) == std::string(c.p));
  CHECK(a.parsed()["result"]["facets"].size() == 16);
}

TEST_CASE("alternate formats") {
  Bs b = load(kK3);
  nesto_options o;
  nesto_options_default(&o);
  o.format = NESTO_FORMAT_CSV;
  Text csv;
  REQUIRE(nesto_geom(b.get(), "coords", nullptr, &o, &csv.p) == NESTO_OK);
  CHECK(std::string(csv.p).find("0,4,3") != std::string::npos);
  o.format = NESTO_FORMAT_DOT;
  Text dot;
  REQUIRE(nesto_order(R"({"n":2})", "partial-weak", &o, &dot.p) == NESTO_OK);
  CHECK(std::string(dot.p).rfind("digraph", 0) == 0);
}

TEST_CASE("perms, iso and order commands") {
  nesto_options o;
  nesto_options_default(&o);
  Bs k2 = load(R"({"n":2,"sets":[[1],[2],[1,2]]})");
  Text list;
  REQUIRE(nesto_perms(k2.get(), "list", nullptr, &o, &list.p) == NESTO_OK);
  Text iso;
  REQUIRE(nesto_iso(R"({"n":3,"sets":[[1],[2],[3],[1,2],[1,2,3]]})", "interval", &o, &iso.p) == NESTO_OK);
  Text order;
  o.max_n = 3;
  REQUIRE(nesto_order(nullptr, "partial-weak", &o, &order.p) == NESTO_OK);
  Text stellar;
  Bs ex = load(R"({"n":3,"sets":[[1],[2],[3],[1,2],[1,2,3]]})");
  CHECK(nesto_geom(ex.get(), "stellar", nullptr, &o, &stellar.p) == NESTO_OK);
}

TEST_CASE("verify-all through the C API") {
  nesto_options o;
  nesto_options_default(&o);
  o.max_n = 3;
  Text t;
  int status = nesto_verify_all(&o, &t.p);
  REQUIRE(t.p != nullptr);
  json j = t.parsed();
  CHECK(j["result"]["criteria"].size() == 14);
  bool all = true;
  for (const auto& c : j["result"]["criteria"]) all = all && c["pass"].get<bool>();
  CHECK(status == (all ? NESTO_OK : NESTO_E_CHECK_FAILED));
}
