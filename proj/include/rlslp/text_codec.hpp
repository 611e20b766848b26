#ifndef RLSLP_TEXT_CODEC_HPP
#define RLSLP_TEXT_CODEC_HPP

#include <string>
#include <string_view>

namespace rlslp {

/// One symbol per byte.
std::u32string decode_bytes(std::string_view bytes);

/// One symbol per code point; throws std::invalid_argument on malformed UTF-8.
std::u32string decode_utf8(std::string_view bytes);

std::string encode_utf8(std::u32string_view text);

}  // namespace rlslp

#endif
