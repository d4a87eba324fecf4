// End-to-end checks of the chromalg binary (path injected by CMake).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CHROMALG_CLI_PATH) + " " + args + " 2>/dev/null";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

const char* kGoldenHelp =
    "chromalg: exact chromatic polynomials, factorization, Galois groups, and\n"
    "chromatic-root realization search\n"
    "Usage: chromalg [OPTIONS] SUBCOMMAND\n"
    "\n"
    "Options:\n"
    "  -h,--help                   Print this help message and exit\n"
    "  --json                      emit JSON instead of text\n"
    "\n"
    "Subcommands:\n"
    "  poly                        exact polynomial operations (variable x; q accepted)\n"
    "  graph                       graph-file operations\n"
    "  family                      closed-form family polynomials\n"
    "  factor                      factor into irreducibles over Q\n"
    "  galois                      identify the Galois group\n"
    "  standardize                 translate to the standard form\n"
    "  exclude                     forbidden-interval shift exclusion\n"
    "  realize-quadratic           realize a quadratic integer as a chromatic root\n"
    "  search                      search family instances for the target\n"
    "  survey                      Galois census over rings of cliques\n";

}  // namespace

TEST_CASE("golden help") {
  auto r = run("--help");
  CHECK(r.exit_code == 0);
  CHECK(r.out == kGoldenHelp);
}

TEST_CASE("exit codes") {
  CHECK(run("family ring 1,1,1,5 --interesting").exit_code == 0);
  CHECK(run("no-such-subcommand").exit_code == 2);
  CHECK(run("poly disc").exit_code == 2);             // missing argument
  CHECK(run("standardize \"2x+1\"").exit_code == 1);  // domain error
  CHECK(run("poly divrem \"x^2+1\" \"x-1\"").exit_code == 1);
  CHECK(run("galois \"x^2-1\"").exit_code == 1);  // reducible
}

TEST_CASE("paper examples through the CLI") {
  CHECK(run("family ring 1,1,1,5 --interesting").out == "q^2 - 7q + 11\n");
  CHECK(run("exclude \"x^2+x-1\" --max-shift 5").out ==
        "excluded: 0 1 2\ncandidate: 3 (not excluded; chromatic-root status inconclusive)\n");
  CHECK(run("standardize \"x^2-7x+11\"").out == "standard: x^2 + x - 1\nshift: 4\n");
  CHECK(run("search \"x^2+x-1\" --family ring --max-entry 8 --max-shift 10").out ==
        "family ring:1,1,1,5  factor x^2 - 7x + 11  shift 4  vertices 8\n");
  CHECK(run("poly cyclotomic 6").out == "x^2 - x + 1\n");
  CHECK(run("poly stirling2 3 2").out == "3\n");
  CHECK(run("realize-quadratic --disc 5").out ==
        "family ring:1,1,1,5  factor x^2 - 7x + 11  shift 4  vertices 8\n");
}

TEST_CASE("json outputs parse against the declared schemas") {
  auto fac = nlohmann::json::parse(run("--json factor \"x^5-1\"").out);
  CHECK(fac["content"] == "1");
  CHECK(fac["factors"].size() == 2);
  CHECK(fac["factors"][0]["poly"] == "x - 1");
  CHECK(fac["factors"][0]["mult"] == 1);

  auto gal = nlohmann::json::parse(run("--json galois \"x^2-7x+11\"").out);
  CHECK(gal["degree"] == 2);
  CHECK(gal["name"] == "C2");
  CHECK(gal["order"] == 2);
  CHECK(gal["ambiguous_with"].is_array());

  auto excl = nlohmann::json::parse(run("--json exclude \"x^2+x-1\" --max-shift 5").out);
  CHECK(excl["excluded"] == nlohmann::json::parse("[0,1,2]"));
  CHECK(excl["candidate"] == 3);

  auto real = nlohmann::json::parse(run("--json realize-quadratic --disc 5").out);
  CHECK(real["family"] == "ring:1,1,1,5");
  CHECK(real["factor"] == "x^2 - 7x + 11");
  CHECK(real["shift"] == 4);
  CHECK(real["vertices"] == 8);

  auto poly = nlohmann::json::parse(run("--json poly cyclotomic 6").out);
  CHECK(poly == nlohmann::json::parse("[\"1\",\"-1\",\"1\"]"));
}

TEST_CASE("graph file and stdin") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/chromalg_cli_graph.txt";
  {
    std::ofstream f(path);
    f << "# subdivided K6\n7\n";
    for (int u = 0; u < 6; ++u)
      for (int v = u + 1; v < 6; ++v)
        if (!(u == 0 && v == 1)) f << u << " " << v << "\n";
    f << "0 6\n1 6\n";
  }
  // q(q-1)(q-2)(q-3)^3(q-4), expanded
  CHECK(run("graph chromatic " + path).out ==
        "q^7 - 16q^6 + 104q^5 - 350q^4 + 639q^3 - 594q^2 + 216q\n");
  std::remove(path.c_str());
}

TEST_CASE("polynomial @file indirection") {
  std::string path = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                     "/chromalg_cli_poly.txt";
  {
    std::ofstream f(path);
    f << "x^2 - 7x + 11\n";
  }
  CHECK(run("poly disc @" + path).out == "5\n");
  std::remove(path.c_str());
}

TEST_CASE("survey cli with resume and sharding") {
  std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  std::string path = dir + "/chromalg_cli_survey.jsonl";
  std::remove(path.c_str());
  auto first = run("survey --n 4 --max 5 --out " + path);
  CHECK(first.exit_code == 0);
  auto again = run("survey --n 4 --max 5 --out " + path);
  CHECK(again.out == first.out);

  std::string wpath = dir + "/chromalg_cli_survey_w.jsonl";
  std::remove(wpath.c_str());
  auto workers = run("survey --n 4 --max 5 --out " + wpath + " --workers 3");
  CHECK(workers.out == first.out);

  // worker output file is byte-identical to the single-threaded one
  std::ifstream a(path), b(wpath);
  std::string sa((std::istreambuf_iterator<char>(a)), std::istreambuf_iterator<char>());
  std::string sb((std::istreambuf_iterator<char>(b)), std::istreambuf_iterator<char>());
  CHECK(sa == sb);

  std::string spath = dir + "/chromalg_cli_survey_s.jsonl";
  std::remove(spath.c_str());
  auto shard0 = run("survey --n 4 --max 5 --out " + spath + " --shard 0/2");
  auto shard1 = run("survey --n 4 --max 5 --out " + spath + " --shard 1/2");
  CHECK(shard0.exit_code == 0);
  CHECK(shard1.exit_code == 0);
  auto merged = run("survey --n 4 --max 5 --out " + spath);
  CHECK(merged.out == first.out);

  auto jt = nlohmann::json::parse(run("--json survey --n 4 --max 5 --out " + path).out);
  CHECK(jt["total"] == 63);
  CHECK(jt["reducible"].is_number());
  CHECK(jt["counts"].is_object());
  std::remove(path.c_str());
  std::remove(wpath.c_str());
  std::remove(spath.c_str());
}

TEST_CASE("acceptance scenarios drive through the CLI alone") {
  // gen-theta root-power law: f(x^n) = 0 mod g(x), all via pipes
  auto g = run("family gentheta 3 2 --g-poly");
  auto f = run("family gentheta 3 2 --f-poly");
  CHECK(g.out == "x^6 - x^5 + x - 1\n");
  std::string fn = run("poly compose \"" + f.out.substr(0, f.out.size() - 1) + "\" \"x^2\"").out;
  auto rem = run("poly divrem \"" + fn.substr(0, fn.size() - 1) + "\" \"" +
                 g.out.substr(0, g.out.size() - 1) + "\"");
  CHECK(rem.exit_code == 0);  // exact division certifies divisibility

  // engine vs brute force on a family instance, via --graph
  std::string dir = std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp";
  std::string gpath = dir + "/chromalg_cli_theta.txt";
  {
    std::ofstream out(gpath);
    out << run("family theta 2 3 --graph").out;
  }
  auto pg = run("graph chromatic " + gpath);
  CHECK(pg.out == run("family theta 2 3 --full").out);
  auto counted = run("graph count " + gpath + " 3");
  auto evaluated = run("poly eval \"" + pg.out.substr(0, pg.out.size() - 1) + "\" 3");
  CHECK(counted.out == evaluated.out);
  std::remove(gpath.c_str());

  // cycle factor = shifted cyclotomic (criterion 11 shape); compare in x-form
  std::string phi14 = run("poly cyclotomic 14").out;
  auto cyc = run("poly compose \"" + phi14.substr(0, phi14.size() - 1) + "\" \"q-1\"");
  std::string ring8 = run("family ring 1,1,1,1,1,1,1,1 --interesting").out;
  auto ring8x = run("poly format \"" + ring8.substr(0, ring8.size() - 1) + "\"");
  CHECK(cyc.out == ring8x.out);

  // the D5 row reached through family + galois
  auto d5poly = run("family ring 1,4,4,9,9,9,25 --interesting");
  auto d5 = run("galois \"" + d5poly.out.substr(0, d5poly.out.size() - 1) + "\"");
  CHECK(d5.out == "D5 (order 10) via frobenius-mc, 2000 samples\n");
}

TEST_CASE("deterministic output") {
  for (const char* cmd :
       {"factor \"x^8-1\"", "galois \"x^5-x-1\" --samples 300",
        "search \"x^2-2\" --family ring --max-entry 8 --max-shift 10"}) {
    auto a = run(cmd);
    auto b = run(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}
