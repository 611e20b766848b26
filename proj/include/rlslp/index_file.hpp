#ifndef RLSLP_INDEX_FILE_HPP
#define RLSLP_INDEX_FILE_HPP

#include <iosfwd>
#include <string>

#include "rlslp/grammar.hpp"

namespace rlslp {

/// Text serialisation of a grammar:
///
///   RLSLP1 1 <seed> <rounds> <text_len> <symbol_count> <start>
///   <id> T <codepoint>
///   <id> P <left> <right> <level>
///   <id> R <base> <exponent> <level>
///
/// one symbol per line in id order. Saving is deterministic.
void save_index(const Grammar& g, std::ostream& out);
std::string save_index(const Grammar& g);

/// Parses and validates an index; throws Error(BadIndexFile) on any defect.
Grammar load_index(std::istream& in);
Grammar load_index_string(const std::string& data);

void save_index_file(const Grammar& g, const std::string& path);
Grammar load_index_file(const std::string& path);

}  // namespace rlslp

#endif
