#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "chromalg/survey.hpp"

using namespace chromalg;

namespace {

IntPoly P(const std::string& s) { return parse_poly(s); }

std::vector<std::vector<int>> collect(int n, int l) {
  std::vector<std::vector<int>> out;
  enumerate_tuples(n, l, [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

}  // namespace

TEST_CASE("enumerate tuples") {
  auto t42 = collect(4, 2);
  REQUIRE(t42.size() == 4);
  CHECK(t42[0] == std::vector<int>{1, 1, 1, 1});
  CHECK(t42[1] == std::vector<int>{1, 1, 1, 2});
  CHECK(t42[2] == std::vector<int>{1, 1, 2, 2});
  CHECK(t42[3] == std::vector<int>{1, 2, 2, 2});

  auto t21 = collect(2, 1);
  REQUIRE(t21.size() == 1);
  CHECK(t21[0] == std::vector<int>{1, 1});

  // lexicographic and non-decreasing
  auto t35 = collect(3, 5);
  for (std::size_t i = 1; i < t35.size(); ++i) CHECK(t35[i - 1] < t35[i]);
  for (const auto& t : t35)
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1] <= t[i]);
}

TEST_CASE("count oracle") {
  CHECK(count_tuples(4, 30) == 37067);
  for (int n = 2; n <= 6; ++n)
    for (int l : {1, 2, 3, 5, 10, 30})
      CHECK(count_tuples(n, l) == Int(collect(n, l).size()));
}

TEST_CASE("survey records") {
  // (1,1,1,1) gives the reducible 5-cycle cubic
  SurveyRecord rec = survey_record_for({1, 1, 1, 1});
  CHECK(rec.factor == P("q^3-4q^2+6q-4"));
  CHECK_FALSE(rec.irreducible);
  CHECK_FALSE(rec.group.has_value());

  SurveyRecord irr = survey_record_for({1, 1, 1, 5});
  CHECK(irr.degree == 3);
  CHECK(irr.irreducible);
  REQUIRE(irr.group.has_value());
  CHECK(irr.group->name == "S3");
  CHECK(irr.group->order == 6);
}

TEST_CASE("survey run small and tally conservation") {
  std::vector<SurveyRecord> records;
  SurveyTally tally = survey_run(4, 5, std::nullopt,
                                 [&](const SurveyRecord& r) { records.push_back(r); });
  CHECK(tally.total == count_tuples(4, 5));
  CHECK(Int(records.size()) == count_tuples(4, 5));
  long long sum = tally.reducible + tally.ambiguous;
  for (const auto& [name, count] : tally.counts) sum += count;
  CHECK(sum == tally.total);
  CHECK(tally.ambiguous == 0);  // degree-3 rows classify exactly
}

TEST_CASE("shard equivalence") {
  SurveyTally whole = survey_run(4, 6, std::nullopt, {});
  std::vector<SurveyTally> parts;
  std::multiset<std::string> whole_records, shard_records;
  survey_run(4, 6, std::nullopt,
             [&](const SurveyRecord& r) { whole_records.insert(survey_record_to_json(r)); });
  for (int off = 0; off < 4; ++off)
    parts.push_back(survey_run(4, 6, Shard{off, 4}, [&](const SurveyRecord& r) {
      shard_records.insert(survey_record_to_json(r));
    }));
  SurveyTally merged = merge_tallies(parts);
  CHECK(merged.total == whole.total);
  CHECK(merged.reducible == whole.reducible);
  CHECK(merged.ambiguous == whole.ambiguous);
  CHECK(merged.counts == whole.counts);
  CHECK(whole_records == shard_records);
}

TEST_CASE("resume skips known tuples and reproduces the tally") {
  std::map<std::vector<int>, SurveyRecord> store;
  SurveyTally first =
      survey_run(4, 4, std::nullopt, [&](const SurveyRecord& r) { store[r.tuple] = r; });
  long long sink_calls = 0;
  SurveyTally second = survey_run(
      4, 4, std::nullopt, [&](const SurveyRecord&) { ++sink_calls; },
      [&](const std::vector<int>& t) -> std::optional<SurveyRecord> {
        auto it = store.find(t);
        if (it == store.end()) return std::nullopt;
        return it->second;
      });
  CHECK(sink_calls == 0);
  CHECK(second.total == first.total);
  CHECK(second.reducible == first.reducible);
  CHECK(second.counts == first.counts);

  // partial store: recompute only the missing ones
  store.erase(store.begin());
  sink_calls = 0;
  SurveyTally third = survey_run(
      4, 4, std::nullopt, [&](const SurveyRecord&) { ++sink_calls; },
      [&](const std::vector<int>& t) -> std::optional<SurveyRecord> {
        auto it = store.find(t);
        if (it == store.end()) return std::nullopt;
        return it->second;
      });
  CHECK(sink_calls == 1);
  CHECK(third.counts == first.counts);
}

TEST_CASE("record json round trip") {
  SurveyRecord manual;
  manual.tuple = {1, 1, 5};
  manual.degree = 2;
  manual.irreducible = true;
  manual.factor = P("q^2-7q+11");
  GaloisResult g;
  g.degree = 2;
  g.name = "C2";
  g.order = 2;
  manual.group = g;
  CHECK(survey_record_to_json(manual) ==
        "{\"degree\":2,\"factor\":\"x^2 - 7x + 11\",\"group\":\"C2\",\"order\":2,"
        "\"status\":\"irreducible\",\"tuple\":[1,1,5]}");

  SurveyRecord rec = survey_record_for({1, 1, 1, 5});
  std::string line = survey_record_to_json(rec);
  SurveyRecord back = survey_record_from_json(line);
  CHECK(back.tuple == rec.tuple);
  CHECK(back.irreducible == rec.irreducible);
  CHECK(back.factor == rec.factor);
  if (rec.group) CHECK(back.group->name == rec.group->name);

  SurveyTally t;
  t.n = 4;
  t.l = 30;
  t.total = 37067;
  t.reducible = 2581;
  t.counts = {{"S3", 34471}, {"C3", 15}};
  CHECK(survey_tally_line(t) == "total=37067 reducible=2581 S3=34471 C3=15");
  CHECK(survey_tally_to_json(t) ==
        "{\"ambiguous\":0,\"counts\":{\"C3\":15,\"S3\":34471},\"l\":30,\"n\":4,"
        "\"reducible\":2581,\"total\":37067}");
}
