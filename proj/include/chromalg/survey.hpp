#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chromalg/galois.hpp"

namespace chromalg {

/// One enumerated tuple: the interesting factor of R(a_1..a_n, 1), its
/// reducibility status, and the group label when irreducible.
struct SurveyRecord {
  std::vector<int> tuple;
  int degree = 0;
  bool irreducible = false;
  std::optional<GaloisResult> group;
  IntPoly factor;
};

struct SurveyTally {
  int n = 0;
  int l = 0;
  long long total = 0;
  long long reducible = 0;
  std::map<std::string, long long> counts;
  long long ambiguous = 0;
};

struct Shard {
  int offset = 0;
  int stride = 1;
};

/// Non-decreasing n-tuples of positive integers with gcd 1 and max entry <= l,
/// in lexicographic order.
void enumerate_tuples(int n, int l, const std::function<void(const std::vector<int>&)>& fn);

/// Möbius-inclusion-exclusion closed form for the tuple count.
Int count_tuples(int n, int l);

SurveyRecord survey_record_for(const std::vector<int>& tuple, int sample_budget = 2000);

using RecordSink = std::function<void(const SurveyRecord&)>;
using RecordLookup = std::function<std::optional<SurveyRecord>(const std::vector<int>&)>;

/// Runs the census over the tuple stream (optionally one stride class).
/// `lookup` supports resuming: tuples it answers are tallied without being
/// recomputed or re-emitted.
SurveyTally survey_run(int n, int l, std::optional<Shard> shard, const RecordSink& sink,
                       const RecordLookup& lookup = {}, int sample_budget = 2000);

SurveyTally merge_tallies(const std::vector<SurveyTally>& parts);

void tally_add(SurveyTally& tally, const SurveyRecord& record);

std::string survey_record_to_json(const SurveyRecord& record);
SurveyRecord survey_record_from_json(const std::string& line);
std::string survey_tally_to_json(const SurveyTally& tally);

/// "total=37067 reducible=2581 S3=34471 C3=15" (counts descending).
std::string survey_tally_line(const SurveyTally& tally);

}  // namespace chromalg
