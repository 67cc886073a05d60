#include "dyck/cli.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "dyck/error.hpp"
#include "dyck/germ.hpp"
#include "dyck/graph.hpp"
#include "dyck/nest.hpp"
#include "dyck/oracle.hpp"
#include "dyck/signature.hpp"
#include "dyck/update.hpp"

namespace dyck::cli {
namespace {

using nlohmann::ordered_json;

void emit_objects(const std::string &what, int k, long long count,
                  const std::string &format, std::ostream &out) {
  const auto &germs = enumerate_germs(k);
  long long limit = static_cast<long long>(germs.size());
  if (count >= 0) limit = std::min(limit, count);
  std::string key = what.substr(0, what.size() - 1);
  for (long long m = 0; m < limit; ++m) {
    std::string value;
    if (what == "germs") {
      value = germ_to_string(germs[m]);
    } else {
      dyck_nest nest = nest_for_germ(germs[m]);
      if (what == "nests")
        value = nest_to_string(nest);
      else if (what == "words")
        value = nest_to_word(nest).bits;
      else
        value = signature_to_string(encode(nest));
    }
    if (format == "csv") {
      out << m << "," << value << "\n";
    } else if (format == "jsonl") {
      ordered_json j;
      j["k"] = k;
      j["m"] = m;
      j[key] = value;
      out << j.dump() << "\n";
    } else if (format == "bfile") {
      out << m << " " << value << "\n";
    } else {
      out << value << "\n";
    }
  }
}

void emit_updates(long long count, const std::string &format,
                  std::ostream &out) {
  auto records = update_stream(count);
  for (const auto &rec : records) {
    std::string alpha = rgs_to_string(rec.alpha);
    std::string kind = rec.kind == update_case::B ? "B" : "C";
    if (format == "csv") {
      if (rec.sentinel())
        out << rec.o << "," << alpha << ",,,,\n";
      else
        out << rec.o << "," << alpha << "," << rec.i << "," << rec.g << ","
            << kind << "," << rec.h << "\n";
    } else if (format == "jsonl") {
      ordered_json j;
      j["o"] = rec.o;
      j["rgs"] = alpha;
      if (rec.sentinel()) {
        j["i"] = nullptr;
        j["g"] = nullptr;
        j["case"] = nullptr;
        j["h"] = nullptr;
      } else {
        j["i"] = rec.i;
        j["g"] = rec.g;
        j["case"] = kind;
        j["h"] = rec.h;
      }
      out << j.dump() << "\n";
    } else if (format == "bfile") {
      // the root record carries no h value, so the b-file starts at index 1
      if (!rec.sentinel()) out << rec.o << " " << rec.h << "\n";
    } else {
      if (rec.sentinel())
        out << rec.o << " " << alpha << " - - - -\n";
      else
        out << rec.o << " " << alpha << " " << rec.i << " " << rec.g << " "
            << kind << " " << rec.h << "\n";
    }
  }
}

void emit_sequence(const std::string &id, long long count,
                   const std::string &format, std::ostream &out) {
  std::vector<std::string> values;
  if (id == "A000108") {
    for (long long m = 0; m < count; ++m)
      values.push_back(std::to_string(catalan(static_cast<int>(m))));
  } else {
    auto stream = rgs_stream(count);
    for (const auto &r : stream) values.push_back(rgs_to_string(r));
  }
  for (long long m = 0; m < static_cast<long long>(values.size()); ++m) {
    if (format == "plain") {
      out << values[m] << "\n";
    } else if (format == "csv") {
      out << m << "," << values[m] << "\n";
    } else if (format == "jsonl") {
      ordered_json j;
      j["id"] = id;
      j["m"] = m;
      j["value"] = values[m];
      out << j.dump() << "\n";
    } else {
      out << m << " " << values[m] << "\n";
    }
  }
}

void emit_graph(const std::string &op, const std::string &bits, int color,
                int k, std::ostream &out) {
  if (op == "class") {
    if (bits.empty()) throw CLI::ValidationError("graph: --op class needs --bits");
    auto info = cyclic_class(bits);
    out << info.canonical << "\n" << info.t << "\n";
    for (const auto &m : info.members) out << m << "\n";
  } else if (op == "dihedral") {
    if (bits.empty())
      throw CLI::ValidationError("graph: --op dihedral needs --bits");
    for (const auto &m : dihedral_class(bits)) out << m << "\n";
  } else if (op == "arc") {
    if (bits.empty() || color < 0)
      throw CLI::ValidationError("graph: --op arc needs --bits and --color");
    auto arc = modular_arc(bits, color);
    out << arc.first << " " << arc.second.class_rank << " " << arc.second.t
        << " " << (arc.second.upper ? "upper" : "lower") << "\n";
  } else if (op == "lexical") {
    if (bits.empty() || color < 0)
      throw CLI::ValidationError("graph: --op lexical needs --bits and --color");
    auto edges = lexical_edges(bits, color);
    out << bits << " " << edges.v << "\n";
    out << edges.w << " " << edges.aleph_u << "\n";
  } else {
    if (k < 1) throw CLI::ValidationError("graph: --op census needs --k");
    long long total = catalan(k);
    for (long long m = 0; m < total; ++m)
      out << m << "," << retrieve(m, 0, k) << "\n";
  }
}

int cmd_verify(const std::string &suite, int jobs, bool with_time,
               std::ostream &out) {
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names.push_back(suite);
  std::vector<verification_report> reports(names.size());
  auto run_one = [&](std::size_t idx) {
    try {
      reports[idx] = run_suite(names[idx]);
    } catch (const std::exception &e) {
      reports[idx].suite = names[idx];
      reports[idx].failures.push_back(std::string("aborted: ") + e.what());
    }
  };
  if (jobs <= 1 || names.size() <= 1) {
    for (std::size_t idx = 0; idx < names.size(); ++idx) run_one(idx);
  } else {
    std::atomic<std::size_t> next{0};
    std::size_t workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), names.size());
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t idx; (idx = next++) < names.size();) run_one(idx);
      });
    for (auto &t : pool) t.join();
  }
  bool ok = true;
  for (const auto &rep : reports) {
    out << rep.to_json(with_time) << "\n";
    ok = ok && rep.pass();
  }
  return ok ? 0 : 1;
}

int cmd_bench(int k, const std::string &strategy, int reps, bool check,
              std::ostream &out) {
  bench_strategy strat = strategy == "castling" ? bench_strategy::castling
                                                : bench_strategy::signature_replay;
  bench_report best{};
  for (int r = 0; r < reps; ++r) {
    bench_report rep = run_bench(k, strat);
    if (r == 0 || rep.walk_seconds < best.walk_seconds) best = rep;
  }
  ordered_json j;
  j["k"] = best.k;
  j["strategy"] = strategy;
  j["steps"] = best.steps;
  j["entry_writes"] = best.entry_writes;
  j["undo_writes"] = best.undo_writes;
  j["moved_positions"] = best.moved_positions;
  j["avg_moved"] = best.avg_moved;
  int code = 0;
  if (check) {
    std::vector<signature> a, b;
    run_bench(k, bench_strategy::signature_replay, &a);
    run_bench(k, bench_strategy::castling, &b);
    bool match = a == b;
    j["streams_match"] = match;
    if (!match) code = 1;
  }
  ordered_json timing;
  timing["setup_seconds"] = best.setup_seconds;
  timing["walk_seconds"] = best.walk_seconds;
  timing["steps_per_second"] = best.steps_per_second;
  j["nondeterministic"] = timing;
  out << j.dump() << "\n";
  return code;
}

void emit_path(const std::string &word, int k, long long rank_value,
               std::ostream &out) {
  std::string bits = word;
  if (bits.empty()) {
    if (k < 1 || rank_value < 0)
      throw CLI::ValidationError("path-data: give --word or both --k and --rank");
    bits = retrieve(rank_value, 0, k);
  }
  anchored_word w = word_from_bits(bits);
  for (const auto &point : path_steps(w))
    out << point.first << "," << point.second << "\n";
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"generator and toolkit for anchored Dyck words"};
  app.require_subcommand(1);

  int code = 0;
  const std::vector<std::string> formats = {"plain", "csv", "jsonl", "bfile"};

  int obj_k = 0;
  long long obj_count = -1;
  std::string obj_format = "plain";
  for (const std::string what : {"germs", "nests", "words", "signatures"}) {
    std::string blurb =
        what == "germs"        ? "list k-germs in natural order"
        : what == "nests"      ? "list Dyck nests in natural order"
        : what == "words"      ? "list anchored Dyck words in natural order"
                               : "list signatures in natural order";
    auto *sub = app.add_subcommand(what, blurb);
    sub->add_option("--k", obj_k, "order (number of value pairs)")
        ->required()
        ->check(CLI::Range(2, 64));
    sub->add_option("--count", obj_count, "emit only the first COUNT records");
    sub->add_option("--format", obj_format, "plain | csv | jsonl | bfile")
        ->check(CLI::IsMember(formats));
    sub->callback([&, what] { emit_objects(what, obj_k, obj_count, obj_format, out); });
  }

  long long upd_count = 42;
  std::string upd_format = "plain";
  auto *upd = app.add_subcommand("updates", "stream one-entry update records");
  upd->add_option("--count", upd_count, "number of records, root included")
      ->required()
      ->check(CLI::Range(1LL, 1000000000LL));
  upd->add_option("--format", upd_format, "plain | csv | jsonl | bfile")
      ->check(CLI::IsMember(formats));
  upd->callback([&] { emit_updates(upd_count, upd_format, out); });

  std::string oeis_id;
  long long oeis_count = 8;
  std::string oeis_format = "bfile";
  auto *oeis = app.add_subcommand("oeis", "export a supported integer sequence");
  oeis->add_option("--id", oeis_id, "A000108 | A239903")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"A000108", "A239903"}));
  oeis->add_option("--count", oeis_count, "number of terms, from index 0")
      ->required()
      ->check(CLI::Range(1LL, 1000000000LL));
  oeis->add_option("--format", oeis_format, "plain | csv | jsonl | bfile")
      ->check(CLI::IsMember(formats));
  oeis->callback([&] { emit_sequence(oeis_id, oeis_count, oeis_format, out); });

  std::string graph_op, graph_bits;
  int graph_color = -1, graph_k = 0;
  auto *graph = app.add_subcommand("graph", "query classes, arcs, and matchings");
  graph->add_option("--op", graph_op, "class | dihedral | arc | lexical | census")
      ->required()
      ->check(CLI::IsMember(
          std::vector<std::string>{"class", "dihedral", "arc", "lexical", "census"}));
  graph->add_option("--bits", graph_bits, "vertex as a bit string");
  graph->add_option("--color", graph_color, "arc color in [0,k]");
  graph->add_option("--k", graph_k, "order, for census");
  graph->callback([&] { emit_graph(graph_op, graph_bits, graph_color, graph_k, out); });

  int ret_k = 0, ret_t = 0;
  long long ret_rank = -1;
  std::string ret_mode = "odd", ret_level = "lower";
  bool ret_all = false;
  auto *ret = app.add_subcommand("retrieve", "vertex from class rank and translation");
  ret->add_option("--k", ret_k, "order")->required()->check(CLI::Range(1, 64));
  ret->add_option("--rank", ret_rank, "class rank in natural order")->required();
  ret->add_option("--t", ret_t, "translation in [0,n)");
  ret->add_option("--mode", ret_mode, "odd | middle")
      ->check(CLI::IsMember(std::vector<std::string>{"odd", "middle"}));
  ret->add_option("--level", ret_level, "lower | upper (middle mode only)")
      ->check(CLI::IsMember(std::vector<std::string>{"lower", "upper"}));
  ret->add_flag("--all", ret_all, "print the whole class, one line per translation");
  ret->callback([&] {
    bool middle = ret_mode == "middle";
    bool upper = ret_level == "upper";
    if (ret_all) {
      for (int s = 0; s < 2 * ret_k + 1; ++s)
        out << retrieve(ret_rank, s, ret_k, middle, upper) << "\n";
    } else {
      out << retrieve(ret_rank, ret_t, ret_k, middle, upper) << "\n";
    }
  });

  std::string ver_suite = "all";
  int ver_jobs = 1;
  bool ver_time = false;
  auto *ver = app.add_subcommand("verify", "run exhaustive verification suites");
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  ver->add_option("--suite", ver_suite, "suite name, or all")
      ->check(CLI::IsMember(suite_choices));
  ver->add_option("--jobs", ver_jobs, "run suites in parallel")
      ->check(CLI::Range(1, 64));
  ver->add_flag("--time", ver_time, "include wall-clock seconds in the report");
  ver->callback([&] { code = cmd_verify(ver_suite, ver_jobs, ver_time, out); });

  int bench_k = 0, bench_reps = 1;
  std::string bench_strategy;
  bool bench_check = false;
  auto *bench = app.add_subcommand("bench", "walk the full tree and time it");
  bench->add_option("--k", bench_k, "order")->required()->check(CLI::Range(2, 64));
  bench->add_option("--strategy", bench_strategy, "signature | castling")
      ->required()
      ->check(CLI::IsMember(std::vector<std::string>{"signature", "castling"}));
  bench->add_option("--reps", bench_reps, "repetitions, best walk kept")
      ->check(CLI::Range(1, 1000));
  bench->add_flag("--check", bench_check,
                  "also compare both strategies' signature streams");
  bench->callback(
      [&] { code = cmd_bench(bench_k, bench_strategy, bench_reps, bench_check, out); });

  std::string path_word;
  int path_k = 0;
  long long path_rank = -1;
  auto *path = app.add_subcommand("path-data", "lattice path points for plotting");
  path->add_option("--word", path_word, "anchored word as a bit string");
  path->add_option("--k", path_k, "order, with --rank");
  path->add_option("--rank", path_rank, "class rank, with --k");
  path->callback([&] { emit_path(path_word, path_k, path_rank, out); });

  std::vector<const char *> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dyckgen");
  for (const auto &a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success &e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return 2;
  } catch (const error &e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return code;
}

int run(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

} // namespace dyck::cli
