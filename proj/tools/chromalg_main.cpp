// chromalg: exact chromatic-root algebra toolkit (CLI frontend).
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "chromalg/conjecture.hpp"
#include "chromalg/factorization.hpp"
#include "chromalg/families.hpp"
#include "chromalg/galois.hpp"
#include "chromalg/graphs.hpp"
#include "chromalg/intpoly.hpp"
#include "chromalg/survey.hpp"

namespace {

using namespace chromalg;

// Polynomial arguments accept the text grammar, a JSON coefficient array, or
// @file indirection.
IntPoly poly_arg(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::runtime_error("cannot open polynomial file: " + arg.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_poly(buf.str());
  }
  return parse_poly(arg);
}

std::string read_graph_source(const std::string& path) {
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::runtime_error("empty entry in list: " + text);
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw std::runtime_error("empty list");
  return out;
}

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_int_list(item));
  if (out.empty()) throw std::runtime_error("empty set list");
  return out;
}

Bound parse_bound(const std::string& text, bool low) {
  if (text == "-inf" || text == "-oo") return Bound::minus_infinity();
  if (text == "inf" || text == "+inf" || text == "oo") return Bound::plus_infinity();
  if (text.empty()) return low ? Bound::minus_infinity() : Bound::plus_infinity();
  return Bound::at(Rational::parse(text));
}

void emit_poly(const IntPoly& p, bool json, char var) {
  std::cout << (json ? poly_to_json(p) : format_poly(p, var)) << "\n";
}

void emit_graph(const Graph& g) {
  std::cout << g.n << "\n";
  for (auto [u, v] : g.edges) std::cout << u << " " << v << "\n";
}

struct SurveyOptions {
  int n = 0;
  int max = 0;
  std::string out;
  std::string shard;
  int workers = 1;
  int samples = 2000;
};

int run_survey(const SurveyOptions& opt, bool json) {
  std::optional<Shard> shard;
  if (!opt.shard.empty()) {
    auto slash = opt.shard.find('/');
    if (slash == std::string::npos) throw std::runtime_error("--shard expects i/w");
    shard = Shard{std::stoi(opt.shard.substr(0, slash)), std::stoi(opt.shard.substr(slash + 1))};
    if (shard->stride < 1 || shard->offset < 0 || shard->offset >= shard->stride)
      throw std::runtime_error("--shard expects 0 <= i < w");
  }

  // resume: previously written records are tallied, not recomputed
  std::map<std::vector<int>, SurveyRecord> known;
  {
    std::ifstream in(opt.out);
    std::string line;
    while (in && std::getline(in, line)) {
      if (line.empty()) continue;
      SurveyRecord rec = survey_record_from_json(line);
      known.emplace(rec.tuple, std::move(rec));
    }
  }
  RecordLookup lookup = [&known](const std::vector<int>& t) -> std::optional<SurveyRecord> {
    auto it = known.find(t);
    if (it == known.end()) return std::nullopt;
    return it->second;
  };

  std::ofstream out(opt.out, std::ios::app);
  if (!out) throw std::runtime_error("cannot open output file: " + opt.out);

  SurveyTally tally;
  if (opt.workers <= 1 || shard) {
    tally = survey_run(opt.n, opt.max, shard,
                       [&out](const SurveyRecord& r) { out << survey_record_to_json(r) << "\n"; },
                       lookup, opt.samples);
  } else {
    std::vector<std::vector<SurveyRecord>> buckets(static_cast<std::size_t>(opt.workers));
    std::vector<SurveyTally> parts(static_cast<std::size_t>(opt.workers));
    std::vector<std::thread> pool;
    for (int w = 0; w < opt.workers; ++w) {
      pool.emplace_back([&, w] {
        parts[static_cast<std::size_t>(w)] = survey_run(
            opt.n, opt.max, Shard{w, opt.workers},
            [&buckets, w](const SurveyRecord& r) {
              buckets[static_cast<std::size_t>(w)].push_back(r);
            },
            lookup, opt.samples);
      });
    }
    for (auto& t : pool) t.join();
    tally = merge_tallies(parts);
    std::vector<SurveyRecord> all;
    for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
    // enumeration order is lexicographic in the tuple
    std::sort(all.begin(), all.end(),
              [](const SurveyRecord& a, const SurveyRecord& b) { return a.tuple < b.tuple; });
    for (const SurveyRecord& r : all) out << survey_record_to_json(r) << "\n";
  }
  std::cout << (json ? survey_tally_to_json(tally) : survey_tally_line(tally)) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chromalg: exact chromatic polynomials, factorization, Galois groups, and\n"
               "chromatic-root realization search"};
  app.name("chromalg");
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON instead of text");

  // ---- poly ----------------------------------------------------------------
  auto* poly = app.add_subcommand("poly", "exact polynomial operations (variable x; q accepted)");
  poly->require_subcommand(1);
  std::string pa, pb;
  auto add_fg = [&](CLI::App* cmd) {
    cmd->add_option("f", pa, "first polynomial")->required();
    cmd->add_option("g", pb, "second polynomial")->required();
  };
  auto* padd = poly->add_subcommand("add", "f + g");
  add_fg(padd);
  auto* psub = poly->add_subcommand("sub", "f - g");
  add_fg(psub);
  auto* pmul = poly->add_subcommand("mul", "f * g");
  add_fg(pmul);
  auto* pdiv = poly->add_subcommand("divrem", "divide f by g (exact unless --pseudo)");
  add_fg(pdiv);
  bool pseudo = false;
  pdiv->add_flag("--pseudo", pseudo, "pseudo-division with lc(g)^k multiplier");
  auto* pshift = poly->add_subcommand("shift", "Taylor shift f(x+a)");
  std::string shift_a;
  pshift->add_option("f", pa, "polynomial")->required();
  pshift->add_option("a", shift_a, "integer shift")->required();
  auto* pdisc = poly->add_subcommand("disc", "discriminant of f");
  pdisc->add_option("f", pa, "polynomial")->required();
  auto* psturm = poly->add_subcommand("sturm", "count distinct real roots in an interval");
  std::string lo_s, hi_s;
  bool lo_closed = false, hi_open = false;
  psturm->add_option("f", pa, "squarefree polynomial")->required();
  psturm->add_option("--lo", lo_s, "lower bound (rational or -inf)");
  psturm->add_option("--hi", hi_s, "upper bound (rational or inf)");
  psturm->add_flag("--lo-closed", lo_closed, "include the lower endpoint (default open)");
  psturm->add_flag("--hi-open", hi_open, "exclude the upper endpoint (default closed)");
  auto* pcyc = poly->add_subcommand("cyclotomic", "n-th cyclotomic polynomial");
  int cyc_n = 0;
  pcyc->add_option("n", cyc_n, "index")->required();
  auto* pfall = poly->add_subcommand("falling", "falling factorial q(q-1)...(q-k+1)");
  int fall_k = 0;
  pfall->add_option("k", fall_k, "factor count")->required();
  auto* pstir = poly->add_subcommand("stirling2", "Stirling number of the second kind");
  int st_m = 0, st_k = 0;
  pstir->add_option("m", st_m, "set size")->required();
  pstir->add_option("k", st_k, "part count")->required();
  auto* proots = poly->add_subcommand("roots", "numeric complex roots (Durand-Kerner)");
  double tol = 1e-10;
  proots->add_option("f", pa, "polynomial")->required();
  proots->add_option("--tol", tol, "convergence tolerance");
  auto* pfmt = poly->add_subcommand("format", "parse and reprint in canonical form");
  pfmt->add_option("f", pa, "polynomial")->required();
  auto* pcomp = poly->add_subcommand("compose", "f(g(x))");
  add_fg(pcomp);
  auto* peval = poly->add_subcommand("eval", "evaluate f at an integer");
  std::string eval_at;
  peval->add_option("f", pa, "polynomial")->required();
  peval->add_option("v", eval_at, "integer argument")->required();

  // ---- graph ---------------------------------------------------------------
  auto* graph = app.add_subcommand("graph", "graph-file operations");
  graph->require_subcommand(1);
  auto* gchrom = graph->add_subcommand("chromatic", "chromatic polynomial by deletion-contraction");
  std::string graph_file;
  int cap = 18;
  gchrom->add_option("file", graph_file, "graph file ('-' for stdin)")->required();
  gchrom->add_option("--cap", cap, "vertex cap (default 18)");
  auto* gcount = graph->add_subcommand("count", "brute-force proper colouring count");
  int count_q = 0;
  gcount->add_option("file", graph_file, "graph file ('-' for stdin)")->required();
  gcount->add_option("q", count_q, "colour count (<= 6; n <= 8)")->required();

  // ---- family --------------------------------------------------------------
  auto* family = app.add_subcommand("family", "closed-form family polynomials");
  family->require_subcommand(1);
  bool interesting = false, full = false;
  std::string ring_sizes, set_list;
  int fam_a = 0, fam_b = 0, biclique_n = 0;
  auto* fring = family->add_subcommand("ring", "ring of cliques R(a_0,...,a_{k-1})");
  fring->add_option("sizes", ring_sizes, "comma-separated clique sizes")->required();
  auto* fbic = family->add_subcommand("biclique", "two cliques joined through sets F_i");
  fbic->add_option("--n", biclique_n, "size of clique C")->required();
  fbic->add_option("--sets", set_list, "semicolon-separated subsets, e.g. \"0,1;2,3\"")->required();
  auto* fkmn = family->add_subcommand("kmn", "complete bipartite K_{m,n}");
  fkmn->add_option("m", fam_a, "left part")->required();
  fkmn->add_option("n", fam_b, "right part")->required();
  auto* fth = family->add_subcommand("theta", "theta graph with p paths of length s");
  fth->add_option("s", fam_a, "path length")->required();
  fth->add_option("p", fam_b, "path count")->required();
  auto* fgt = family->add_subcommand("gentheta", "generalised theta with paths ns-n+1..ns");
  fgt->add_option("s", fam_a, "length parameter")->required();
  fgt->add_option("n", fam_b, "path count")->required();
  bool graph_out = false, g_poly = false, f_poly = false;
  for (CLI::App* cmd : {fring, fbic, fkmn, fth, fgt}) {
    cmd->add_flag("--interesting", interesting, "print the interesting factor");
    cmd->add_flag("--full", full, "print the full chromatic polynomial (default)");
    cmd->add_flag("--graph", graph_out, "print the instance in graph-file format");
  }
  fgt->add_flag("--g-poly", g_poly, "print g(x) = x^ns - x^(ns-1) + x^(n-1) - 1");
  fgt->add_flag("--f-poly", f_poly, "print f(x) = (x^s-1)^n - x^(n-1)(x^(s-1)-1)^n");

  // ---- factor / galois / standardize ---------------------------------------
  auto* factor_cmd = app.add_subcommand("factor", "factor into irreducibles over Q");
  factor_cmd->add_option("poly", pa, "polynomial")->required();
  auto* galois_cmd = app.add_subcommand("galois", "identify the Galois group");
  int samples = 2000;
  galois_cmd->add_option("poly", pa, "irreducible polynomial")->required();
  galois_cmd->add_option("--samples", samples, "Frobenius sample budget (default 2000)");
  auto* std_cmd = app.add_subcommand("standardize", "translate to the standard form");
  std_cmd->add_option("poly", pa, "monic polynomial")->required();

  // ---- exclude / realize-quadratic / search ---------------------------------
  auto* excl_cmd = app.add_subcommand("exclude", "forbidden-interval shift exclusion");
  int max_shift = 0;
  excl_cmd->add_option("poly", pa, "monic irreducible target")->required();
  excl_cmd->add_option("--max-shift", max_shift, "largest shift to test")->required();
  auto* real_cmd = app.add_subcommand("realize-quadratic",
                                      "realize a quadratic integer as a chromatic root");
  std::string disc_s;
  real_cmd->add_option("poly", pa, "monic irreducible quadratic");
  real_cmd->add_option("--disc", disc_s, "discriminant (0 or 1 mod 4, non-square)");
  auto* search_cmd = app.add_subcommand("search", "search family instances for the target");
  std::string search_family = "ring";
  int max_entry = 0, max_n = 0, cycles_k = 0, search_shift = 0;
  search_cmd->add_option("poly", pa, "monic irreducible target")->required();
  search_cmd->add_option("--family", search_family, "ring | biclique (default ring)");
  search_cmd->add_option("--max-entry", max_entry, "ring entry bound");
  search_cmd->add_option("--max-n", max_n, "biclique clique bound");
  search_cmd->add_option("--cycles", cycles_k, "also search cycles up to this length");
  search_cmd->add_option("--max-shift", search_shift, "largest shift to report")->required();

  // ---- survey ---------------------------------------------------------------
  auto* survey_cmd = app.add_subcommand("survey", "Galois census over rings of cliques");
  SurveyOptions sopt;
  survey_cmd->add_option("--n", sopt.n, "tuple length")->required();
  survey_cmd->add_option("--max", sopt.max, "entry bound l")->required();
  survey_cmd->add_option("--out", sopt.out, "JSONL output file (resumable)")->required();
  survey_cmd->add_option("--shard", sopt.shard, "process indices i mod w, as i/w");
  survey_cmd->add_option("--workers", sopt.workers, "in-process parallel shards");
  survey_cmd->add_option("--samples", sopt.samples, "Frobenius budget for degree >= 5");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (padd->parsed()) emit_poly(poly_arg(pa) + poly_arg(pb), json, 'x');
    if (psub->parsed()) emit_poly(poly_arg(pa) - poly_arg(pb), json, 'x');
    if (pmul->parsed()) emit_poly(poly_arg(pa) * poly_arg(pb), json, 'x');
    if (pdiv->parsed()) {
      DivRem d = divrem(poly_arg(pa), poly_arg(pb),
                        pseudo ? DivMode::pseudo : DivMode::exact);
      if (json) {
        std::cout << "{\"quotient\":" << poly_to_json(d.quotient)
                  << ",\"remainder\":" << poly_to_json(d.remainder) << ",\"multiplier\":\""
                  << d.multiplier << "\"}\n";
      } else {
        std::cout << "quotient: " << format_poly(d.quotient) << "\n"
                  << "remainder: " << format_poly(d.remainder) << "\n";
        if (d.multiplier != 1) std::cout << "multiplier: " << d.multiplier << "\n";
      }
    }
    if (pshift->parsed()) emit_poly(shift(poly_arg(pa), Int(shift_a)), json, 'x');
    if (pdisc->parsed()) {
      Int d = discriminant(poly_arg(pa));
      std::cout << (json ? "{\"value\":\"" + d.str() + "\"}" : d.str()) << "\n";
    }
    if (psturm->parsed()) {
      long count = sturm_count(poly_arg(pa), parse_bound(lo_s, true), parse_bound(hi_s, false),
                               !lo_closed, hi_open);
      std::cout << (json ? "{\"count\":" + std::to_string(count) + "}" : std::to_string(count))
                << "\n";
    }
    if (pcyc->parsed()) emit_poly(cyclotomic(cyc_n), json, 'x');
    if (pfall->parsed()) emit_poly(falling_factorial(fall_k), json, 'q');
    if (pstir->parsed()) {
      Int v = stirling2(st_m, st_k);
      std::cout << (json ? "{\"value\":\"" + v.str() + "\"}" : v.str()) << "\n";
    }
    if (proots->parsed()) {
      auto roots = numeric_roots(poly_arg(pa), tol);
      std::ostringstream os;
      os.precision(12);
      if (json) {
        os << "[";
        for (std::size_t i = 0; i < roots.size(); ++i)
          os << (i ? "," : "") << "[" << roots[i].real() << "," << roots[i].imag() << "]";
        os << "]";
      } else {
        for (auto z : roots) os << z.real() << " " << z.imag() << "\n";
      }
      std::cout << os.str() << (json ? "\n" : "");
    }
    if (pfmt->parsed()) emit_poly(poly_arg(pa), json, 'x');
    if (pcomp->parsed()) emit_poly(compose(poly_arg(pa), poly_arg(pb)), json, 'x');
    if (peval->parsed()) {
      Int v = poly_arg(pa).eval(Int(eval_at));
      std::cout << (json ? "{\"value\":\"" + v.str() + "\"}" : v.str()) << "\n";
    }

    if (gchrom->parsed())
      emit_poly(chromatic_polynomial(parse_graph(read_graph_source(graph_file)), cap), json, 'q');
    if (gcount->parsed()) {
      Int v = count_colourings(parse_graph(read_graph_source(graph_file)), count_q);
      std::cout << (json ? "{\"value\":\"" + v.str() + "\"}" : v.str()) << "\n";
    }

    if (fring->parsed() && graph_out) {
      emit_graph(build(RingSpec{parse_int_list(ring_sizes)}));
    } else if (fring->parsed()) {
      std::vector<int> sizes = parse_int_list(ring_sizes);
      if (interesting && !full) {
        auto it = std::find(sizes.begin(), sizes.end(), 1);
        if (it == sizes.end())
          throw std::runtime_error("ring --interesting needs a clique of size 1 (Read's form)");
        std::vector<int> rest(it + 1, sizes.end());
        rest.insert(rest.end(), sizes.begin(), it);
        emit_poly(ring_interesting_factor(rest), json, 'q');
      } else {
        auto it = std::find(sizes.begin(), sizes.end(), 1);
        if (it != sizes.end()) {
          std::vector<int> rest(it + 1, sizes.end());
          rest.insert(rest.end(), sizes.begin(), it);
          emit_poly(ring_full(rest), json, 'q');
        } else {
          emit_poly(chromatic_polynomial(build(RingSpec{sizes})), json, 'q');
        }
      }
    }
    if (fbic->parsed()) {
      if (graph_out) {
        emit_graph(build(BicliqueSpec{biclique_n, parse_sets(set_list)}));
      } else {
        auto bp = biclique_polynomial(biclique_n, parse_sets(set_list));
        emit_poly(interesting && !full ? bp.interesting : bp.full, json, 'q');
      }
    }
    if (fkmn->parsed()) {
      if (graph_out)
        emit_graph(build(CompleteBipartiteSpec{fam_a, fam_b}));
      else
        emit_poly(interesting && !full ? complete_bipartite_F(fam_a, fam_b)
                                       : complete_bipartite_full(fam_a, fam_b),
                  json, 'q');
    }
    if (fth->parsed()) {
      if (graph_out)
        emit_graph(build(ThetaSpec{fam_a, fam_b}));
      else if (interesting && !full)
        emit_poly(theta_G(fam_a, fam_b), json, 'x');  // in x = 1-q
      else
        emit_poly(theta_full(fam_a, fam_b), json, 'q');
    }
    if (fgt->parsed()) {
      if (graph_out)
        emit_graph(build(GenThetaSpec{fam_a, fam_b}));
      else if (g_poly)
        emit_poly(gen_theta_g(fam_a, fam_b), json, 'x');
      else if (f_poly)
        emit_poly(gen_theta_f(fam_a, fam_b), json, 'x');
      else if (interesting && !full)
        emit_poly(gen_theta_interesting(fam_a, fam_b), json, 'x');  // in x = 1-q
      else
        emit_poly(gen_theta_chromatic(fam_a, fam_b), json, 'q');
    }

    if (factor_cmd->parsed()) {
      Factorization fac = factor(poly_arg(pa));
      if (json) {
        std::cout << factorization_to_json(fac) << "\n";
      } else {
        std::cout << "content: " << fac.content << "\n";
        for (const auto& [g, m] : fac.factors)
          std::cout << format_poly(g) << (m > 1 ? " ^ " + std::to_string(m) : "") << "\n";
      }
    }
    if (galois_cmd->parsed()) {
      GaloisResult r = classify(poly_arg(pa), samples);
      if (json) {
        std::cout << galois_result_to_json(r) << "\n";
      } else {
        std::cout << r.name;
        if (r.order != 0) std::cout << " (order " << r.order << ")";
        std::cout << " via " << r.method;
        if (r.samples > 0) std::cout << ", " << r.samples << " samples";
        if (!r.ambiguous_with.empty()) {
          std::cout << ", ambiguous with:";
          for (const auto& g : r.ambiguous_with) std::cout << " " << g;
        }
        std::cout << "\n";
      }
    }
    if (std_cmd->parsed()) {
      ShiftResult r = standardize(poly_arg(pa));
      if (json)
        std::cout << "{\"standard\":\"" << format_poly(r.standard) << "\",\"shift\":" << r.shift
                  << "}\n";
      else
        std::cout << "standard: " << format_poly(r.standard) << "\nshift: " << r.shift << "\n";
    }

    if (excl_cmd->parsed()) {
      AlgebraicTarget target(poly_arg(pa));
      ExclusionReport rep = exclusion_min_shift(target, max_shift);
      if (json) {
        std::cout << "{\"excluded\":[";
        for (std::size_t i = 0; i < rep.excluded.size(); ++i)
          std::cout << (i ? "," : "") << rep.excluded[i];
        std::cout << "],\"candidate\":";
        if (rep.min_candidate)
          std::cout << *rep.min_candidate;
        else
          std::cout << "null";
        std::cout << "}\n";
      } else {
        std::cout << "excluded:";
        for (int t : rep.excluded) std::cout << " " << t;
        std::cout << "\n";
        if (rep.min_candidate)
          std::cout << "candidate: " << *rep.min_candidate
                    << " (not excluded; chromatic-root status inconclusive)\n";
        else
          std::cout << "candidate: none within bound\n";
      }
    }
    if (real_cmd->parsed()) {
      RealizationResult r = disc_s.empty() ? realize_quadratic(AlgebraicTarget(poly_arg(pa)))
                                           : realize_quadratic_disc(Int(disc_s));
      std::cout << (json ? realization_to_json(r)
                         : "family " + family_to_string(r.family) + "  factor " +
                               format_poly(r.factor) + "  shift " + r.shift.str() + "  vertices " +
                               std::to_string(r.vertex_count))
                << "\n";
    }
    if (search_cmd->parsed()) {
      SearchBounds bounds;
      if (search_family == "ring")
        bounds.ring_max_entry = max_entry;
      else if (search_family == "biclique")
        bounds.biclique_max_n = max_n ? max_n : max_entry;
      else
        throw std::runtime_error("unknown search family: " + search_family);
      bounds.cycles_max_k = cycles_k;
      auto results = search_alpha_n(AlgebraicTarget(poly_arg(pa)), bounds, search_shift);
      if (json) {
        std::cout << "[";
        for (std::size_t i = 0; i < results.size(); ++i)
          std::cout << (i ? "," : "") << realization_to_json(results[i]);
        std::cout << "]\n";
      } else if (results.empty()) {
        std::cout << "not found within bounds\n";
      } else {
        for (const auto& r : results)
          std::cout << "family " << family_to_string(r.family) << "  factor "
                    << format_poly(r.factor) << "  shift " << r.shift << "  vertices "
                    << r.vertex_count << "\n";
      }
    }
    if (survey_cmd->parsed()) return run_survey(sopt, json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
