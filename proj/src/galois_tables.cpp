#include <array>
#include <mutex>
#include <sstream>

#include "chromalg/galois.hpp"

namespace chromalg {

namespace {

// Cycle-type tallies for every transitive group of degree 2..7, enumerated
// from standard generators (see tests/test_galois.cpp for the regeneration
// oracle). Encoding: "partition-digits:count;..." with partitions descending.
struct RawTable {
  int degree;
  const char* name;
  long long order;
  const char* counts;
};

constexpr std::array<RawTable, 36> kRawTables{{
    {2, "C2", 2, "11:1;2:1"},
    {3, "C3", 3, "111:1;3:2"},
    {3, "S3", 6, "111:1;21:3;3:2"},
    {4, "C4", 4, "1111:1;22:1;4:2"},
    {4, "V4", 4, "1111:1;22:3"},
    {4, "D4", 8, "1111:1;211:2;22:3;4:2"},
    {4, "A4", 12, "1111:1;22:3;31:8"},
    {4, "S4", 24, "1111:1;211:6;22:3;31:8;4:6"},
    {5, "C5", 5, "11111:1;5:4"},
    {5, "D5", 10, "11111:1;221:5;5:4"},
    {5, "F5", 20, "11111:1;221:5;41:10;5:4"},
    {5, "A5", 60, "11111:1;221:15;311:20;5:24"},
    {5, "S5", 120, "11111:1;2111:10;221:15;311:20;32:20;41:30;5:24"},
    {6, "C6", 6, "111111:1;222:1;33:2;6:2"},
    {6, "S3(6)", 6, "111111:1;222:3;33:2"},
    {6, "D6", 12, "111111:1;2211:3;222:4;33:2;6:2"},
    {6, "A4(6)", 12, "111111:1;2211:3;33:8"},
    {6, "C3wrC2", 18, "111111:1;222:3;3111:4;33:4;6:6"},
    {6, "C2wrC3", 24, "111111:1;21111:3;2211:3;222:1;33:8;6:8"},
    {6, "S4(6c)", 24, "111111:1;2211:3;222:6;33:8;411:6"},
    {6, "S4(6d)", 24, "111111:1;2211:9;33:8;42:6"},
    {6, "F18:2", 36, "111111:1;2211:9;222:6;3111:4;33:4;6:12"},
    {6, "F36", 36, "111111:1;2211:9;3111:4;33:4;42:18"},
    {6, "S2wrS3", 48, "111111:1;21111:3;2211:9;222:7;33:8;411:6;42:6;6:8"},
    {6, "PSL(2,5)", 60, "111111:1;2211:15;33:20;51:24"},
    {6, "S3wrS2", 72, "111111:1;21111:6;2211:9;222:6;3111:4;321:12;33:4;42:18;6:12"},
    {6, "PGL(2,5)", 120, "111111:1;2211:15;222:10;33:20;411:30;51:24;6:20"},
    {6, "A6", 360, "111111:1;2211:45;3111:40;33:40;42:90;51:144"},
    {6, "S6", 720,
     "111111:1;21111:15;2211:45;222:15;3111:40;321:120;33:40;411:90;42:90;51:144;6:120"},
    {7, "C7", 7, "1111111:1;7:6"},
    {7, "D7", 14, "1111111:1;2221:7;7:6"},
    {7, "F21", 21, "1111111:1;331:14;7:6"},
    {7, "F42", 42, "1111111:1;2221:7;331:14;61:14;7:6"},
    {7, "PSL(3,2)", 168, "1111111:1;22111:21;331:56;421:42;7:48"},
    {7, "A7", 2520, "1111111:1;22111:105;31111:70;322:210;331:280;421:630;511:504;7:720"},
    {7, "S7", 5040,
     "1111111:1;211111:21;22111:105;2221:105;31111:70;3211:420;322:210;331:280;4111:210;"
     "421:630;43:420;511:504;52:504;61:840;7:720"},
}};

bool type_even(const std::vector<int>& type) {
  int parity = 0;
  for (int part : type) parity ^= (part - 1) & 1;
  return parity == 0;
}

CycleTypeEntry parse_entry(const RawTable& raw) {
  CycleTypeEntry e;
  e.name = raw.name;
  e.order = raw.order;
  std::istringstream is(raw.counts);
  std::string item;
  while (std::getline(is, item, ';')) {
    auto colon = item.find(':');
    std::vector<int> type;
    for (char ch : item.substr(0, colon)) type.push_back(ch - '0');
    e.counts[type] = std::stoll(item.substr(colon + 1));
  }
  e.inside_alternating = true;
  for (const auto& [type, count] : e.counts)
    if (!type_even(type)) e.inside_alternating = false;
  return e;
}

}  // namespace

const CycleTypeTable& cycle_type_table(int degree) {
  if (degree < 2 || degree > 7)
    throw DegreeOutOfRange("cycle_type_table: only degrees 2..7 are built in");
  static std::array<CycleTypeTable, 6> tables;
  static std::once_flag once;
  std::call_once(once, [] {
    for (int d = 2; d <= 7; ++d) tables[static_cast<std::size_t>(d - 2)].degree = d;
    for (const RawTable& raw : kRawTables)
      tables[static_cast<std::size_t>(raw.degree - 2)].entries.push_back(parse_entry(raw));
  });
  return tables[static_cast<std::size_t>(degree - 2)];
}

}  // namespace chromalg
