#include "chromalg/survey.hpp"

#include <json.hpp>
#include <numeric>
#include <sstream>

#include "chromalg/factorization.hpp"
#include "chromalg/families.hpp"

namespace chromalg {

void enumerate_tuples(int n, int l, const std::function<void(const std::vector<int>&)>& fn) {
  if (n < 2 || l < 1) throw std::invalid_argument("enumerate_tuples: need n >= 2 and l >= 1");
  std::vector<int> tuple(static_cast<std::size_t>(n));
  std::function<void(int, int, int)> rec = [&](int pos, int lo, int g) {
    if (pos == n) {
      if (g == 1) fn(tuple);
      return;
    }
    for (int v = lo; v <= l; ++v) {
      tuple[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v, std::gcd(g, v));
    }
  };
  rec(0, 1, 0);
}

Int count_tuples(int n, int l) {
  if (n < 2 || l < 1) throw std::invalid_argument("count_tuples: need n >= 2 and l >= 1");
  // mu sieve up to l
  std::vector<int> mu(static_cast<std::size_t>(l) + 1, 1);
  std::vector<bool> composite(static_cast<std::size_t>(l) + 1, false);
  std::vector<int> primes;
  for (int i = 2; i <= l; ++i) {
    if (!composite[static_cast<std::size_t>(i)]) {
      primes.push_back(i);
      mu[static_cast<std::size_t>(i)] = -1;
    }
    for (int p : primes) {
      long long ip = static_cast<long long>(i) * p;
      if (ip > l) break;
      composite[static_cast<std::size_t>(ip)] = true;
      if (i % p == 0) {
        mu[static_cast<std::size_t>(ip)] = 0;
        break;
      }
      mu[static_cast<std::size_t>(ip)] = -mu[static_cast<std::size_t>(i)];
    }
  }
  auto binom = [](int a, int b) {
    Int r = 1;
    for (int i = 0; i < b; ++i) {
      r *= a - i;
      r /= i + 1;
    }
    return r;
  };
  Int total = 0;
  for (int d = 1; d <= l; ++d)
    if (mu[static_cast<std::size_t>(d)] != 0)
      total += Int(mu[static_cast<std::size_t>(d)]) * binom(l / d + n - 1, n);
  return total;
}

SurveyRecord survey_record_for(const std::vector<int>& tuple, int sample_budget) {
  SurveyRecord rec;
  rec.tuple = tuple;
  rec.factor = ring_interesting_factor(tuple);
  rec.degree = rec.factor.degree();
  Factorization fac = factor(rec.factor);
  rec.irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1 &&
                    fac.factors[0].first.degree() == rec.degree;
  if (rec.irreducible) rec.group = classify_assume_irreducible(rec.factor, sample_budget);
  return rec;
}

void tally_add(SurveyTally& tally, const SurveyRecord& record) {
  ++tally.total;
  if (!record.irreducible) {
    ++tally.reducible;
  } else if (!record.group->ambiguous_with.empty()) {
    ++tally.ambiguous;
  } else {
    ++tally.counts[record.group->name];
  }
}

SurveyTally survey_run(int n, int l, std::optional<Shard> shard, const RecordSink& sink,
                       const RecordLookup& lookup, int sample_budget) {
  if (n < 3) throw std::invalid_argument("survey_run: need n >= 3 for degree >= 2 factors");
  SurveyTally tally;
  tally.n = n;
  tally.l = l;
  long long index = -1;
  enumerate_tuples(n, l, [&](const std::vector<int>& tuple) {
    ++index;
    if (shard && index % shard->stride != shard->offset) return;
    if (lookup) {
      if (auto existing = lookup(tuple)) {
        tally_add(tally, *existing);
        return;
      }
    }
    SurveyRecord rec = survey_record_for(tuple, sample_budget);
    tally_add(tally, rec);
    if (sink) sink(rec);
  });
  return tally;
}

SurveyTally merge_tallies(const std::vector<SurveyTally>& parts) {
  SurveyTally out;
  for (const SurveyTally& part : parts) {
    out.n = part.n;
    out.l = part.l;
    out.total += part.total;
    out.reducible += part.reducible;
    out.ambiguous += part.ambiguous;
    for (const auto& [name, count] : part.counts) out.counts[name] += count;
  }
  return out;
}

std::string survey_record_to_json(const SurveyRecord& record) {
  nlohmann::json j;
  j["tuple"] = record.tuple;
  j["degree"] = record.degree;
  j["status"] = record.irreducible ? "irreducible" : "reducible";
  if (record.group) {
    j["group"] = record.group->name;
    j["order"] = record.group->order.convert_to<long long>();
    if (!record.group->ambiguous_with.empty())
      j["ambiguous_with"] = record.group->ambiguous_with;
  }
  j["factor"] = format_poly(record.factor);
  return j.dump();
}

SurveyRecord survey_record_from_json(const std::string& line) {
  nlohmann::json j = nlohmann::json::parse(line);
  SurveyRecord rec;
  rec.tuple = j.at("tuple").get<std::vector<int>>();
  rec.degree = j.at("degree").get<int>();
  rec.irreducible = j.at("status").get<std::string>() == "irreducible";
  rec.factor = parse_poly(j.at("factor").get<std::string>());
  if (rec.irreducible) {
    GaloisResult g;
    g.degree = rec.degree;
    g.name = j.at("group").get<std::string>();
    g.order = j.at("order").get<long long>();
    if (j.contains("ambiguous_with"))
      g.ambiguous_with = j.at("ambiguous_with").get<std::vector<std::string>>();
    rec.group = std::move(g);
  }
  return rec;
}

std::string survey_tally_to_json(const SurveyTally& tally) {
  nlohmann::json j;
  j["n"] = tally.n;
  j["l"] = tally.l;
  j["total"] = tally.total;
  j["reducible"] = tally.reducible;
  j["counts"] = nlohmann::json::object();
  for (const auto& [name, count] : tally.counts) j["counts"][name] = count;
  j["ambiguous"] = tally.ambiguous;
  return j.dump();
}

std::string survey_tally_line(const SurveyTally& tally) {
  std::ostringstream os;
  os << "total=" << tally.total << " reducible=" << tally.reducible;
  std::vector<std::pair<std::string, long long>> ordered(tally.counts.begin(),
                                                         tally.counts.end());
  std::sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  for (const auto& [name, count] : ordered) os << " " << name << "=" << count;
  if (tally.ambiguous > 0) os << " ambiguous=" << tally.ambiguous;
  return os.str();
}

}  // namespace chromalg
