#include "cli_app.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rlslp/builder.hpp"
#include "rlslp/error.hpp"
#include "rlslp/index_file.hpp"
#include "rlslp/ipm.hpp"
#include "rlslp/lce.hpp"
#include "rlslp/selftest.hpp"
#include "rlslp/text_codec.hpp"

namespace rlslp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kSelftestFailed = 1;
constexpr int kBadInput = 2;
constexpr int kBadQuery = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Pos parse_pos(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    throw UsageError("expected a non-negative integer, got '" + s + "'");
  }
  try {
    return std::stoull(s);
  } catch (const std::out_of_range&) {
    throw UsageError("integer out of range: '" + s + "'");
  }
}

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::RatioViolation:
    case ErrorCode::OutOfRange:
      return kBadQuery;
    default:
      return kBadInput;
  }
}

// Runs one query given as words, e.g. {"ipm", "0", "3", "2", "7"}.
std::string answer(const Grammar& g, const std::vector<std::string>& words) {
  if (words.empty()) throw UsageError("empty query");
  const std::string& kind = words.front();
  auto need = [&](std::size_t k) {
    if (words.size() != k + 1) {
      throw UsageError(kind + " takes " + std::to_string(k) + " positions, got " + std::to_string(words.size() - 1));
    }
  };
  if (kind == "lce" || kind == "revlce") {
    need(2);
    const Pos i = parse_pos(words[1]), j = parse_pos(words[2]);
    return std::to_string(kind == "lce" ? lce(g, i, j) : rev_lce(g, i, j));
  }
  if (kind == "ipm") {
    need(4);
    const Fragment x{parse_pos(words[1]), parse_pos(words[2])};
    const Fragment y{parse_pos(words[3]), parse_pos(words[4])};
    const Progression p = ipm_query(g, x, y);
    return std::to_string(p.start) + " " + std::to_string(p.diff) + " " + std::to_string(p.count);
  }
  throw UsageError("unknown query '" + kind + "' (expected lce, revlce or ipm)");
}

std::vector<std::string> split_words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> words;
  for (std::string w; is >> w;) words.push_back(w);
  return words;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::vector<unsigned> parse_alphabets(const std::string& list) {
  std::vector<unsigned> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');) {
    const Pos a = parse_pos(item);
    if (a < 1 || a > 26) throw UsageError("alphabet sizes must be between 1 and 26");
    out.push_back(static_cast<unsigned>(a));
  }
  if (out.empty()) throw UsageError("empty alphabet list");
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compressed string index with LCE and internal pattern matching queries", "rlslp"};
  app.require_subcommand(1);

  std::string input, text, output;
  std::uint64_t seed = 0;
  bool utf8 = false;
  CLI::App* build_cmd = app.add_subcommand("build", "Build an index from a text");
  auto* input_opt = build_cmd->add_option("--input", input, "File holding the text");
  auto* text_opt = build_cmd->add_option("--text", text, "The text itself");
  input_opt->excludes(text_opt);
  build_cmd->add_option("--output", output, "Where to write the index")->required();
  build_cmd->add_option("--seed", seed, "Seed for the pair-round coin flips");
  build_cmd->add_flag("--utf8", utf8, "Read the text as UTF-8 code points instead of bytes");

  std::string index, batch;
  std::vector<std::string> words;
  CLI::App* query_cmd = app.add_subcommand("query", "Answer queries against an index");
  query_cmd->add_option("--index", index, "Index file")->required();
  query_cmd->add_option("--batch", batch, "File with one query per line");
  query_cmd->add_option("query", words, "lce I J | revlce I J | ipm XB XE YB YE");

  CLI::App* stats_cmd = app.add_subcommand("stats", "Print grammar statistics");
  stats_cmd->add_option("--index", index, "Index file")->required();

  selftest::Options st;
  std::string alphabets = "1,2,4,26";
  CLI::App* self_cmd = app.add_subcommand("selftest", "Cross-check random queries against brute force");
  self_cmd->add_option("--trials", st.trials, "Number of random texts");
  self_cmd->add_option("--max-len", st.max_len, "Largest text length (at most 512)");
  self_cmd->add_option("--alphabet", alphabets, "Comma separated alphabet sizes");
  self_cmd->add_option("--seed", st.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (*build_cmd) {
      if (input.empty() && !text_opt->count()) throw UsageError("build needs --input or --text");
      const std::string raw = input.empty() ? text : read_file(input);
      std::u32string decoded;
      try {
        decoded = utf8 ? decode_utf8(raw) : decode_bytes(raw);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const Grammar g = build(decoded, seed);
      save_index_file(g, output);
      out << "text_length " << g.text_len() << "\nsymbols " << g.size() << "\nrounds " << g.rounds()
          << "\nseed " << g.seed() << "\n";
      return kOk;
    }
    if (*query_cmd) {
      const Grammar g = load_index_file(index);
      if (batch.empty() == words.empty()) throw UsageError("give either a query or --batch");
      if (!words.empty()) {
        out << answer(g, words) << "\n";
        return kOk;
      }
      std::istringstream lines(read_file(batch));
      int status = kOk;
      for (std::string line; std::getline(lines, line);) {
        const std::vector<std::string> q = split_words(line);
        if (q.empty() || q.front().starts_with("#")) continue;
        try {
          out << answer(g, q) << "\n";
        } catch (const Error& e) {
          out << "error " << to_string(e.code()) << "\n";
          status = std::max(status, code_for(e));
        }
      }
      return status;
    }
    if (*stats_cmd) {
      const Grammar g = load_index_file(index);
      std::size_t terminals = 0, pairs = 0, powers = 0;
      for (SymbolId id = 0; id < g.size(); ++id) {
        switch (g[id].kind()) {
          case SymbolKind::Terminal: ++terminals; break;
          case SymbolKind::Pair: ++pairs; break;
          case SymbolKind::Power: ++powers; break;
        }
      }
      out << "text_length " << g.text_len() << "\nsymbols " << g.size() << "\nterminals " << terminals
          << "\npairs " << pairs << "\npowers " << powers << "\nrounds " << g.rounds() << "\nseed " << g.seed()
          << "\n";
      return kOk;
    }
    if (*self_cmd) {
      st.alphabets = parse_alphabets(alphabets);
      const selftest::Report rep = selftest::run(st);
      out << "texts " << rep.texts << "\nchecks " << rep.checks << "\n";
      if (!rep.ok) {
        out << "FAILED " << rep.failure << "\n";
        return kSelftestFailed;
      }
      out << "ok\n";
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return code_for(e);
  }
  return kBadInput;
}

}  // namespace rlslp::cli
