#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "swancalc/catalog/catalog.hpp"
#include "swancalc/error.hpp"

using namespace swancalc;
using namespace swancalc::catalog;

namespace {

json entry(std::string id, json params) {
  return {{"id", id}, {"kind", "curve-cover"}, {"checks", {"gos"}}, {"params", params}};
}

json as_params(int p, int n) {
  json num = json::array();
  for (int i = 0; i < n; ++i) num.push_back(0);
  num.push_back(1);
  return {{"p", p}, {"layers", {{{"type", "AS"}, {"num", num}}}}, {"boundary", {"inf"}}, {"character", {1}}};
}

}  // namespace

TEST(Catalog, BuiltinIsValid) {
  EXPECT_TRUE(validate(builtin_document()).empty());
  auto c = builtin();
  EXPECT_GE(c.entries.size(), 25u);
  EXPECT_TRUE(std::is_sorted(c.entries.begin(), c.entries.end(), [](const Entry& a, const Entry& b) { return a.id < b.id; }));
  std::set<std::string> kinds;
  for (auto& e : c.entries) kinds.insert(e.kind);
  EXPECT_EQ(kinds.size(), 6u);
}

TEST(Catalog, Diagnostics) {
  json doc{{"schema_version", 1}, {"entries", {entry("a", as_params(3, 2)), entry("a", as_params(3, 1))}}};
  auto d = validate(doc);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NE(d[0].message.find("duplicate id 'a'"), std::string::npos);
  EXPECT_NE(d[0].message.find("#1 and #2"), std::string::npos);

  json bad{{"schema_version", 1}, {"entries", {entry("as-p3-n3", as_params(3, 3))}}};
  auto e = validate(bad);
  ASSERT_EQ(e.size(), 1u);
  EXPECT_NE(e[0].message.find("pole order must be prime to p"), std::string::npos);
  EXPECT_THROW(parse(bad), InputError);

  json wrong{{"schema_version", 2}, {"entries", json::array()}};
  EXPECT_EQ(validate(wrong).size(), 1u);
  json kind{{"schema_version", 1}, {"entries", {{{"id", "x"}, {"kind", "curve-cover"}, {"checks", {"log"}}, {"params", as_params(3, 1)}}}}};
  EXPECT_EQ(validate(kind).size(), 1u);
  json valid{{"schema_version", 1}, {"entries", {entry("as-p3-n2", as_params(3, 2))}}};
  EXPECT_TRUE(validate(valid).empty());
}

TEST(Catalog, RunExamples) {
  auto c = builtin();
  RunOptions opt;
  opt.entries = {"as-p3-n2"};
  opt.checks = {"gos"};
  auto r = run(c, opt);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, Status::Pass);
  EXPECT_EQ(r[0].values.at("predicted"), -1);
  EXPECT_EQ(r[0].values.at("oracle"), -1);

  opt.entries = {"kummer-e4"};
  opt.checks = {"swan"};
  r = run(c, opt);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, Status::Pass);
  EXPECT_EQ(r[0].values.at("degree"), "0");

  opt.entries = {"missing"};
  EXPECT_THROW(run(c, opt), InputError);
  opt.entries = {};
  opt.checks = {"bogus"};
  EXPECT_THROW(run(c, opt), InputError);
}

TEST(Catalog, WrongExpectationFails) {
  auto c = builtin();
  auto e = *std::find_if(c.entries.begin(), c.entries.end(), [](const Entry& x) { return x.id == "as-p3-n2"; });
  e.expected["gos"] = {{"predicted", 5}, {"source", "wrong on purpose"}};
  auto r = run_check(e, "gos", RunOptions{});
  EXPECT_EQ(r.status, Status::Fail);
  EXPECT_NE(r.message.find("expected predicted=5"), std::string::npos);
  EXPECT_EQ(exit_code({r}), 1);
  e.params["p"] = 4;
  EXPECT_EQ(run_check(e, "gos", RunOptions{}).status, Status::InputError);
}

TEST(Catalog, FullRunIsDeterministic) {
  auto c = builtin();
  RunOptions a, b;
  a.precision = 64;
  b.precision = 128;
  auto ra = run(c, a);
  for (auto& r : ra) EXPECT_EQ(r.status, Status::Pass) << r.entry << " " << r.check << " " << r.message;
  EXPECT_EQ(exit_code(ra), 0);
  EXPECT_EQ(to_json(ra).dump(), to_json(run(c, a)).dump());
  EXPECT_EQ(to_json(ra).dump(), to_json(run(c, b)).dump());
}

TEST(Catalog, FieldOverride) {
  auto c = builtin();
  RunOptions opt;
  opt.field_p = 3;
  opt.field_k = 2;
  opt.checks = {"gos"};
  auto r = run(c, opt);
  EXPECT_FALSE(r.empty());
  for (auto& x : r) EXPECT_EQ(x.status, Status::Pass) << x.entry << " " << x.message;
}
