#include "rlslp/index_file.hpp"

#include <fstream>
#include <sstream>

#include "rlslp/error.hpp"

namespace rlslp {

namespace {

constexpr const char* kMagic = "RLSLP1";
constexpr unsigned kVersion = 1;

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::BadIndexFile, what); }

}  // namespace

void save_index(const Grammar& g, std::ostream& out) {
  out << kMagic << ' ' << kVersion << ' ' << g.seed() << ' ' << g.rounds() << ' ' << g.text_len() << ' '
      << g.size() << ' ' << g.start() << '\n';
  for (SymbolId id = 0; id < g.size(); ++id) {
    const SymbolRecord& rec = g[id];
    out << id << ' ';
    switch (rec.kind()) {
      case SymbolKind::Terminal:
        out << "T " << rec.codepoint();
        break;
      case SymbolKind::Pair:
        out << "P " << rec.left() << ' ' << rec.right() << ' ' << rec.level();
        break;
      case SymbolKind::Power:
        out << "R " << rec.base() << ' ' << rec.exponent() << ' ' << rec.level();
        break;
    }
    out << '\n';
  }
}

std::string save_index(const Grammar& g) {
  std::ostringstream os;
  save_index(g, os);
  return os.str();
}

Grammar load_index(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) bad("missing header");
  std::istringstream head(line);
  std::string magic;
  unsigned version = 0;
  std::uint64_t seed = 0, rounds = 0, text_len = 0, count = 0, start = 0;
  if (!(head >> magic >> version >> seed >> rounds >> text_len >> count >> start)) bad("malformed header");
  if (magic != kMagic) bad("not an index file");
  if (version != kVersion) bad("unsupported index version " + std::to_string(version));
  if (count == 0 || start >= count) bad("start symbol out of range");

  SymbolTable table;
  try {
    for (std::uint64_t expect = 0; expect < count; ++expect) {
      if (!std::getline(in, line)) bad("truncated symbol table");
      std::istringstream ls(line);
      std::uint64_t id = 0;
      std::string kind;
      if (!(ls >> id >> kind) || id != expect) bad("symbol ids must be contiguous from 0");
      std::uint64_t a = 0, b = 0, level = 0;
      SymbolId got = 0;
      if (kind == "T") {
        if (!(ls >> a) || a > 0x10FFFF) bad("bad terminal line " + std::to_string(id));
        if (table.find_terminal(static_cast<Codepoint>(a))) bad("duplicate symbol " + std::to_string(id));
        got = table.intern_terminal(static_cast<Codepoint>(a));
      } else if (kind == "P" || kind == "R") {
        if (!(ls >> a >> b >> level)) bad("bad symbol line " + std::to_string(id));
        if (a >= id || (kind == "P" && b >= id)) bad("symbol " + std::to_string(id) + " refers forward");
        if (level > rounds) bad("symbol " + std::to_string(id) + " above the round count");
        const bool dup = kind == "P" ? table.find_pair(static_cast<SymbolId>(a), static_cast<SymbolId>(b)).has_value()
                                     : table.find_power(static_cast<SymbolId>(a), b).has_value();
        if (dup) bad("duplicate symbol " + std::to_string(id));
        got = kind == "P" ? table.intern_pair(static_cast<SymbolId>(a), static_cast<SymbolId>(b),
                                              static_cast<Level>(level))
                          : table.intern_power(static_cast<SymbolId>(a), b, static_cast<Level>(level));
      } else {
        bad("unknown symbol kind '" + kind + "'");
      }
      std::string extra;
      if (ls >> extra) bad("trailing data on symbol line " + std::to_string(id));
      if (got != id) bad("duplicate symbol " + std::to_string(id));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadIndexFile) throw;
    bad(std::string("invalid symbol: ") + e.what());
  }
  if (in >> line) bad("trailing data after symbol table");

  Grammar g(std::move(table), static_cast<SymbolId>(start), static_cast<Level>(rounds), seed);
  if (g.text_len() != text_len) bad("text length does not match the start symbol");
  if (g.level(g.start()) > g.rounds()) bad("start symbol above the round count");
  return g;
}

Grammar load_index_string(const std::string& data) {
  std::istringstream in(data);
  return load_index(in);
}

void save_index_file(const Grammar& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::BadIndexFile, "cannot open " + path + " for writing");
  save_index(g, out);
  if (!out) throw Error(ErrorCode::BadIndexFile, "failed writing " + path);
}

Grammar load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::BadIndexFile, "cannot open " + path);
  return load_index(in);
}

}  // namespace rlslp
