#include "maniplex/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "maniplex/analysis.hpp"
#include "maniplex/census.hpp"
#include "maniplex/constructions.hpp"
#include "maniplex/errors.hpp"
#include "maniplex/serialize.hpp"

namespace maniplex {

namespace {

// Output files are written whole via a temporary and renamed into place, so
// readers never observe a partial file.
void write_file(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out << content;
  }
  fs::rename(tmp, target);
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    write_file(path, content);
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  json j;
  in >> j;
  return j;
}

unsigned default_threads() {
  if (const char* env = std::getenv("MANIPLEX_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

std::string render_rep(const StringRep& rep, const std::string& format) {
  ManiplexSummary s = summarize(rep);
  if (format == "csv") return csv_header() + "\n" + csv_row(rep, s) + "\n";
  if (format == "text") return summary_text(s) + "\n";
  return summary_json(rep, s).dump() + "\n";
}

struct CommonOpts {
  std::string output;
  std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("-o,--output", opts.output, "write the result to this path (atomically)");
  cmd->add_option("--format", opts.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"string representations of PSL(2,q) / PGL(2,q) and their maniplexes"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand(
      "construct", "build a representation (--class1 p [--extend] | --class2 p)");
  uint32_t class1_p = 0, class2_p = 0;
  std::string construct_extend_file;
  bool extend_flag = false;
  CommonOpts construct_opts;
  construct->add_option("--class1", class1_p, "type {3,p} map over PSL(2,p), p = 1 (mod 12)");
  construct->add_option("--class2", class2_p,
                        "rank-4 rep with A5 facet group, p = +-1 (mod 20), p != 19");
  auto* extend_opt =
      construct->add_option("--extend", construct_extend_file,
                            "extend to rank 4 (bare with --class1, or give a rank-3 rep file)");
  extend_opt->expected(0, 1);
  add_common(construct, construct_opts);

  // extend
  auto* extend_cmd = app.add_subcommand("extend", "extend a rank-3 rep file to rank 4");
  std::string extend_file;
  CommonOpts extend_opts;
  extend_cmd->add_option("file", extend_file, "rank-3 representation file")->required();
  add_common(extend_cmd, extend_opts);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a representation file");
  std::string validate_file;
  bool no_generation = false;
  CommonOpts validate_opts;
  validate_cmd->add_option("file", validate_file, "representation file")->required();
  validate_cmd->add_flag("--no-generation", no_generation, "skip the generation check");
  add_common(validate_cmd, validate_opts);

  // info
  auto* info_cmd = app.add_subcommand("info", "summarize a representation file");
  std::string info_file, flag_graph_path;
  CommonOpts info_opts;
  info_cmd->add_option("file", info_file, "representation file")->required();
  info_cmd->add_option("--flag-graph", flag_graph_path,
                       "also write the flag adjacency edge list (q <= 13)");
  add_common(info_cmd, info_opts);

  // census
  auto* census_cmd = app.add_subcommand("census", "enumerate all reps up to isomorphism");
  uint32_t census_q = 0, census_rank = 4;
  std::string census_family = "psl";
  unsigned threads = default_threads();
  CommonOpts census_opts;
  census_cmd->add_option("-q", census_q, "prime power order of the field")->required();
  census_cmd->add_option("--family", census_family, "psl or pgl")
      ->check(CLI::IsMember({"psl", "pgl"}));
  census_cmd->add_option("--rank", census_rank, "rank of the representations")
      ->check(CLI::IsMember({3, 4, 5}));
  census_cmd->add_option("--threads", threads, "worker threads for the search");
  add_common(census_cmd, census_opts);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run the structural theorem checks");
  uint32_t verify_q = 0;
  std::string verify_family = "psl";
  unsigned verify_threads = default_threads();
  CommonOpts verify_opts;
  verify_opts.format = "text";
  verify_cmd->add_option("-q", verify_q, "prime power order of the field")->required();
  verify_cmd->add_option("--family", verify_family, "psl or pgl")
      ->check(CLI::IsMember({"psl", "pgl"}));
  verify_cmd->add_option("--threads", verify_threads, "worker threads for the search");
  add_common(verify_cmd, verify_opts);

  std::vector<const char*> argv;
  argv.push_back("maniplex");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed()) {
      const bool has_extend = extend_opt->count() > 0;
      const int modes = (class1_p ? 1 : 0) + (class2_p ? 1 : 0) +
                        (!construct_extend_file.empty() ? 1 : 0);
      if (modes != 1) {
        err << "usage error: pick exactly one of --class1, --class2, --extend <file>\n";
        return 2;
      }
      StringRep rep = [&] {
        if (class1_p) {
          StringRep rank3 = class1_map(class1_p);
          return has_extend ? extend_map(rank3) : rank3;
        }
        if (class2_p) {
          if (has_extend) throw PreconditionFailed("--class2 already produces a rank-4 rep");
          return class2_rank4(class2_p);
        }
        return extend_map(rep_from_json(load_json(construct_extend_file)));
      }();
      emit(construct_opts.output, render_rep(rep, construct_opts.format), out);
      return 0;
    }

    if (extend_cmd->parsed()) {
      StringRep rep = extend_map(rep_from_json(load_json(extend_file)));
      emit(extend_opts.output, render_rep(rep, extend_opts.format), out);
      return 0;
    }

    if (validate_cmd->parsed()) {
      StringRep rep = rep_from_json(load_json(validate_file));
      ValidationReport report = validate(rep, !no_generation);
      emit(validate_opts.output, validation_json(report).dump() + "\n", out);
      return report.ok ? 0 : 1;
    }

    if (info_cmd->parsed()) {
      StringRep rep = rep_from_json(load_json(info_file));
      ValidationReport report = validate(rep, true);
      if (!report.ok) {
        err << "invalid representation: " << validation_json(report).dump() << "\n";
        return 1;
      }
      if (!flag_graph_path.empty()) {
        std::ostringstream graph;
        write_flag_graph(rep, graph);
        write_file(flag_graph_path, graph.str());
      }
      emit(info_opts.output, render_rep(rep, info_opts.format), out);
      return 0;
    }

    if (census_cmd->parsed()) {
      ContextPtr ctx = GroupContext::enumerate(census_q, family_from_string(census_family));
      CensusResult result = search(ctx, census_rank, threads);
      std::ostringstream body;
      if (census_opts.format == "csv") {
        body << csv_header() << "\n";
        for (const auto& rep : result.reps) body << csv_row(rep, summarize(rep)) << "\n";
      } else if (census_opts.format == "text") {
        body << "census q=" << result.q << " family=" << to_string(result.family)
             << " rank=" << result.rank << ": " << result.reps.size() << " rep(s)\n";
        for (const auto& rep : result.reps) body << "  " << summary_text(summarize(rep)) << "\n";
      } else {
        for (const auto& rep : result.reps)
          body << summary_json(rep, summarize(rep)).dump() << "\n";
      }
      emit(census_opts.output, body.str(), out);
      if (census_opts.output.empty())
        err << stats_json(result.stats).dump() << "\n";
      else
        write_file(census_opts.output + ".stats.json", stats_json(result.stats).dump() + "\n");
      return 0;
    }

    if (verify_cmd->parsed()) {
      ContextPtr ctx = GroupContext::enumerate(verify_q, family_from_string(verify_family));
      TheoremReport report = verify_structure(ctx, verify_threads);
      std::string body = verify_opts.format == "json" ? theorem_report_json(report).dump() + "\n"
                                                      : theorem_report_text(report);
      emit(verify_opts.output, body, out);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "error: malformed input: " << e.what() << "\n";
    return 1;
  }

  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace maniplex
