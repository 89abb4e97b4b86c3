#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

#include "invsum/isomorphism.hpp"
#include "invsum/report.hpp"
#include "invsum/search.hpp"
#include "invsum/verify.hpp"

namespace invsum::cli {

namespace {

struct Output {
  bool json = false;
  bool pretty = false;
};

class Clock {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(std::ostream& out, const Output& o, const json& env) {
  if (o.json) {
    out << env.dump() << '\n';
  } else {
    out << pretty(env);
  }
}

std::vector<std::size_t> parse_perm(const std::string& text) {
  std::vector<std::size_t> perm;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const auto v = std::stoll(tok, &used);
    if (used != tok.size() || v < 0) throw ParseError("bad permutation entry '" + tok + "'", 0);
    perm.push_back(static_cast<std::size_t>(v));
  }
  return perm;
}

std::vector<Value> parse_ints(const std::string& text, std::size_t want) {
  std::vector<Value> v;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    v.push_back(std::stoll(tok, &used));
    if (used != tok.size()) throw ParseError("bad integer '" + tok + "'", 0);
  }
  if (v.size() != want) throw ParseError("expected " + std::to_string(want) + " integers", 0);
  return v;
}

bool planar_literal(const std::string& s) { return s.find('(') != std::string::npos; }

// Either carrier, as a sorted list with a doubling count.
struct Carrier {
  std::vector<Value> ints;
  std::vector<Point> points;
  bool planar = false;
  std::int64_t doubling = 0;
  std::size_t size() const { return planar ? points.size() : ints.size(); }
  std::string text;
};

Carrier load_carrier(const std::string& text) {
  Carrier c;
  if (planar_literal(text)) {
    const auto p = parse_planar(text);
    c.planar = true;
    c.points.assign(p.points().begin(), p.points().end());
    c.doubling = planar_sumset_stats(p).doubling;
    c.text = render(p);
  } else {
    const auto a = parse_set(text);
    c.ints.assign(a.begin(), a.end());
    c.doubling = stats(a).doubling;
    c.text = render(a);
  }
  return c;
}

template <class T>
std::vector<T> apply_perm(const std::vector<T>& v, const std::vector<std::size_t>& perm) {
  std::vector<T> out;
  for (auto i : perm) out.push_back(v.at(i));
  return out;
}

bool check_f2(const Carrier& src, const Carrier& img, const std::vector<std::size_t>& perm,
              F2Method m) {
  if (src.size() != img.size()) throw NotBijection("source and image sizes differ");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] != i) throw NotBijection("permutation is not a bijection onto the image");
  }
  if (perm.size() != img.size()) throw NotBijection("permutation has the wrong length");
  if (!src.planar && !img.planar) {
    return is_f2_isomorphism(std::span<const Value>(src.ints),
                             std::span<const Value>(apply_perm(img.ints, perm)), m);
  }
  if (!src.planar) {
    return is_f2_isomorphism(std::span<const Value>(src.ints),
                             std::span<const Point>(apply_perm(img.points, perm)), m);
  }
  if (!img.planar) {
    return is_f2_isomorphism(std::span<const Point>(src.points),
                             std::span<const Value>(apply_perm(img.ints, perm)), m);
  }
  return is_f2_isomorphism(std::span<const Point>(src.points),
                           std::span<const Point>(apply_perm(img.points, perm)), m);
}

std::vector<ClaimId> parse_claims(const std::string& text) {
  if (text == "all") return all_claims();
  std::vector<ClaimId> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto c = parse_claim(tok);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  if (out.empty()) throw std::invalid_argument("no claims given");
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inverse sumset toolkit: sumsets, AP/BP covers, F2-isomorphisms, sweeps, search",
               "invsum"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  Output o;
  auto* json_flag = app.add_flag("--json", o.json, "Single-line JSON envelope");
  app.add_flag("--pretty", o.pretty, "Indented text view of the envelope (default)")
      ->excludes(json_flag);

  std::function<int()> action;

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Full structure report for one set");
  std::string set_text;
  AnalyzeOptions aopts;
  std::string engine = "auto";
  analyze_cmd->add_option("set", set_text, "Set literal, e.g. 0-12,45,57")->required();
  analyze_cmd->add_option("--theta", aopts.theta, "Triangle margin in (0, 1/4)")
      ->check(CLI::Range(0.0, 0.25));
  analyze_cmd->add_option("--alpha", aopts.alpha, "Ratio ceiling for weak_conjecture, in (3, 10/3)");
  analyze_cmd->add_option("--max-modulus", aopts.max_residue_modulus, "Residue moduli 1..d")
      ->check(CLI::Range(1, 64));
  analyze_cmd->add_option("--engine", engine, "Sumset engine: auto|sparse|bitset|fft");
  analyze_cmd->callback([&] {
    action = [&] {
      Clock clock;
      const auto a = parse_set(set_text);
      aopts.sumset.engine = parse_engine(engine);
      const auto r = analyze(a, aopts);
      emit(out, o,
           envelope("analyze", json{{"set", set_text}, {"theta", aopts.theta}}, r,
                    clock.elapsed_ms()));
      return ExitCode::ok;
    };
  });

  // cover
  auto* cover_cmd = app.add_subcommand("cover", "Minimal AP and BP covers");
  std::optional<Value> cover_budget;
  cover_cmd->add_option("set", set_text, "Set literal")->required();
  cover_cmd->add_option("--budget", cover_budget, "Return the first BP of total length <= budget");
  cover_cmd->callback([&] {
    action = [&] {
      Clock clock;
      const auto a = parse_set(set_text);
      const auto bp = cover_budget ? bp_cover_within(a, *cover_budget) : bp_cover(a);
      json result{{"k", a.size()},
                  {"ap", ap_cover(a)},
                  {"bp", bp ? json(*bp) : json(nullptr)}};
      json input{{"set", set_text}};
      if (cover_budget) input["budget"] = *cover_budget;
      emit(out, o, envelope("cover", input, result, clock.elapsed_ms()));
      return ExitCode::ok;
    };
  });

  // iso
  auto* iso_cmd = app.add_subcommand("iso", "Check F2-isomorphisms, embeddings and F2-progressions");
  std::string iso_src, iso_img, iso_perm, iso_method = "fingerprint", iso_prog;
  bool iso_embed = false;
  iso_cmd->add_option("source", iso_src, "Set literal or planar literal (x,y);(x,y)");
  iso_cmd->add_option("image", iso_img, "Target set; the map pairs sorted source with --perm of it");
  iso_cmd->add_option("--perm", iso_perm, "Comma-separated permutation of target indices");
  iso_cmd->add_option("--method", iso_method, "fingerprint|definitional")
      ->check(CLI::IsMember({"fingerprint", "definitional"}));
  iso_cmd->add_flag("--embed", iso_embed, "Embed source into two lines via its minimal BP");
  iso_cmd->add_option("--progression", iso_prog, "x0,x1,x2,b1,b2: report the F2 rank");
  iso_cmd->callback([&] {
    action = [&]() -> int {
      Clock clock;
      const auto method =
          iso_method == "definitional" ? F2Method::definitional : F2Method::fingerprint;
      if (!iso_prog.empty()) {
        const auto v = parse_ints(iso_prog, 5);
        const F2Progression p{v[0], v[1], v[2], v[3], v[4]};
        json result{{"rank", std::string(to_string(f2_rank(p)))}, {"image", p.image()}};
        emit(out, o, envelope("iso", json{{"progression", iso_prog}}, result, clock.elapsed_ms()));
        return ExitCode::ok;
      }
      if (iso_src.empty()) throw CLI::ValidationError("iso", "needs a source set");
      if (iso_embed) {
        const auto a = parse_set(iso_src);
        const auto c = bp_cover(a);
        json result{{"bp", c ? json(*c) : json(nullptr)}};
        if (c) {
          const auto e = embed_bp_as_two_lines(*c, a);
          const std::vector<Value> src(a.begin(), a.end());
          result["embedding"] = e;
          result["f2_isomorphism"] =
              is_f2_isomorphism(std::span<const Value>(src), std::span<const Point>(e.image),
                                method);
          result["doubling"] = stats(a).doubling;
          result["planar_doubling"] = planar_sumset_stats(e.points).doubling;
        }
        emit(out, o, envelope("iso", json{{"source", iso_src}, {"embed", true}}, result,
                              clock.elapsed_ms()));
        return ExitCode::ok;
      }
      if (iso_img.empty()) throw CLI::ValidationError("iso", "needs an image set");
      const auto src = load_carrier(iso_src);
      const auto img = load_carrier(iso_img);
      std::vector<std::size_t> perm;
      if (iso_perm.empty()) {
        perm.resize(img.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      } else {
        perm = parse_perm(iso_perm);
      }
      const bool f2 = check_f2(src, img, perm, method);
      json result{{"f2_isomorphism", f2},
                  {"method", iso_method},
                  {"source_doubling", src.doubling},
                  {"image_doubling", img.doubling}};
      emit(out, o,
           envelope("iso", json{{"source", src.text}, {"image", img.text}, {"perm", perm}},
                    result, clock.elapsed_ms()));
      return ExitCode::ok;
    };
  });

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "Sweep every canonical set against the claims");
  SweepOptions sopts;
  std::string claims_text = "freiman_small_b,3k3,main";
  verify_cmd->add_option("--max-span", sopts.max_span, "Largest max of a normalized set")
      ->check(CLI::Range(Value{1}, kMaxEnumerableSpan));
  verify_cmd->add_option("--claims", claims_text,
                     "Comma list of freiman_small_b,3k3,main,bp_subset,weak_conjecture or all");
  verify_cmd->add_option("--workers", sopts.workers, "OpenMP threads")->check(CLI::Range(1, 1024));
  verify_cmd->add_option("--alpha", sopts.alpha, "Ratio ceiling for weak_conjecture");
  verify_cmd->add_option("--max-sets", sopts.max_sets, "Resource ceiling on enumerated sets");
  verify_cmd->callback([&] {
    action = [&] {
      Clock clock;
      sopts.claims = parse_claims(claims_text);
      const auto s = sweep(sopts);
      json claims = json::array();
      for (auto c : sopts.claims) claims.push_back(std::string(to_string(c)));
      emit(out, o,
           envelope("verify",
                    json{{"max_span", sopts.max_span}, {"claims", claims}, {"workers", sopts.workers}},
                    s, clock.elapsed_ms()));
      return s.total_violations() > 0 ? ExitCode::violation : ExitCode::ok;
    };
  });

  // search
  auto* search_cmd = app.add_subcommand("search", "Frontier search for structure-failing k-sets");
  SearchOptions fopts;
  bool jsonl = false;
  std::optional<std::int64_t> b_limit;
  search_cmd->add_option("--k", fopts.k, "Set size")->check(CLI::Range(Value{3}, Value{64}));
  search_cmd->add_option("--max-span", fopts.max_span, "Largest max of a normalized set");
  search_cmd->add_option("--seed", fopts.seed, "Master seed of the randomized fallback");
  search_cmd->add_option("--budget", fopts.budget, "DFS nodes or local-search evaluations");
  search_cmd->add_option("--workers", fopts.workers, "OpenMP threads")->check(CLI::Range(1, 1024));
  search_cmd->add_option("--max-records", fopts.max_records, "Keep at most this many records");
  search_cmd->add_option("--steps", fopts.steps_per_restart, "Local moves per restart");
  search_cmd->add_option("--b-limit", b_limit, "Largest b tried exhaustively");
  search_cmd->add_flag("--randomized", fopts.force_randomized, "Skip the exhaustive attempt");
  search_cmd->add_flag("--jsonl", jsonl, "One JSON record per line, no envelope");
  search_cmd->callback([&] {
    action = [&] {
      Clock clock;
      fopts.b_limit = b_limit;
      const auto r = frontier_search(fopts);
      const bool counterexample = std::any_of(r.records.begin(), r.records.end(),
                                              [](const SearchRecord& x) { return x.applicable; });
      if (jsonl) {
        for (const auto& rec : r.records) out << json(rec).dump() << '\n';
      } else {
        emit(out, o,
             envelope("search",
                      json{{"k", fopts.k},
                           {"max_span", fopts.max_span},
                           {"seed", fopts.seed},
                           {"budget", fopts.budget},
                           {"workers", fopts.workers}},
                      r, clock.elapsed_ms()));
      }
      return counterexample ? ExitCode::violation : ExitCode::ok;
    };
  });

  // examples
  auto* examples_cmd = app.add_subcommand("examples", "Materialize the example families");
  std::string family = "all";
  Value family_span = 400;
  examples_cmd->add_option("--family", family, "ex12|ex15|ex16|all")
      ->check(CLI::IsMember({"ex12", "ex15", "ex16", "all"}));
  examples_cmd->add_option("--max-span", family_span, "Largest member span")
      ->check(CLI::Range(Value{1}, Value{1} << 20));
  examples_cmd->callback([&] {
    action = [&] {
      Clock clock;
      std::vector<Family> fams = {Family::ex12, Family::ex15, Family::ex16};
      if (family != "all") fams = {parse_family(family)};
      json rows = json::array();
      bool all_match = true;
      for (auto f : fams) {
        for (const auto& r : family_table(f, family_span)) {
          all_match = all_match && r.stats.deficiency_b == r.expected_b;
          rows.push_back(r);
        }
      }
      emit(out, o,
           envelope("examples", json{{"family", family}, {"max_span", family_span}},
                    json{{"rows", rows}, {"all_match", all_match}}, clock.elapsed_ms()));
      return all_match ? ExitCode::ok : ExitCode::violation;
    };
  });

  // histogram
  auto* histogram_cmd = app.add_subcommand("histogram", "Doubling-ratio histogram of canonical sets");
  Value hist_span = 10;
  std::int64_t buckets = 8;
  int hist_workers = 1;
  std::size_t hist_max_sets = 5'000'000;
  bool csv = false;
  histogram_cmd->add_option("--max-span", hist_span, "Largest max of a normalized set")
      ->check(CLI::Range(Value{1}, kMaxEnumerableSpan));
  histogram_cmd->add_option("--buckets", buckets, "Buckets per unit ratio")
      ->check(CLI::Range(1, 1000));
  histogram_cmd->add_option("--workers", hist_workers, "OpenMP threads")->check(CLI::Range(1, 1024));
  histogram_cmd->add_option("--max-sets", hist_max_sets, "Resource ceiling on enumerated sets");
  histogram_cmd->add_flag("--csv", csv, "CSV rows instead of a report");
  histogram_cmd->callback([&] {
    action = [&] {
      Clock clock;
      const auto h = ratio_histogram(hist_span, buckets, hist_workers, hist_max_sets);
      if (csv) {
        out << histogram_csv(h);
      } else {
        emit(out, o,
             envelope("histogram", json{{"max_span", hist_span}, {"buckets_per_unit", buckets}},
                      h, clock.elapsed_ms()));
      }
      return ExitCode::ok;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  try {
    return action();
  } catch (const ResourceCeiling& e) {
    err << "invsum: resource ceiling: " << e.what() << '\n';
    return ExitCode::ceiling;
  } catch (const SumOverflow& e) {
    err << "invsum: resource ceiling: " << e.what() << '\n';
    return ExitCode::ceiling;
  } catch (const ParseError& e) {
    err << "invsum: parse error at byte " << e.offset() << ": " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const CLI::Error& e) {
    err << "invsum: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::invalid_argument& e) {
    err << "invsum: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::out_of_range& e) {
    err << "invsum: " << e.what() << '\n';
    return ExitCode::usage;
  } catch (const std::domain_error& e) {
    err << "invsum: " << e.what() << '\n';
    return ExitCode::usage;
  }
}

}  // namespace invsum::cli
