#include "podkeeper/base64.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace podkeeper::base64 {

namespace {

constexpr char kUrlTab[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789-_";
constexpr char kStdTab[] =
    "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";

constexpr std::array<std::int8_t, 256> make_inverse(const char* tab) {
  std::array<std::int8_t, 256> inv{};
  for (auto& v : inv) v = -1;
  for (int i = 0; i < 64; ++i) inv[static_cast<unsigned char>(tab[i])] = static_cast<std::int8_t>(i);
  return inv;
}

const std::array<std::int8_t, 256> kUrlInv = make_inverse(kUrlTab);
const std::array<std::int8_t, 256> kStdInv = make_inverse(kStdTab);

std::string encode(std::string_view data, const char* tab) {
  std::string out;
  out.reserve((data.size() + 2) / 3 * 4);
  unsigned buf = 0;
  int bits = 0;
  for (unsigned char ch : data) {
    buf = (buf << 8) | ch;
    bits += 8;
    while (bits >= 6) {
      bits -= 6;
      out.push_back(tab[(buf >> bits) & 0x3f]);
    }
  }
  if (bits > 0) {
    out.push_back(tab[(buf << (6 - bits)) & 0x3f]);
  }
  return out;
}

std::string decode(std::string_view text, const std::array<std::int8_t, 256>& inv) {
  if (text.size() % 4 == 1) {
    throw std::invalid_argument("base64: impossible length");
  }
  std::string out;
  out.reserve(text.size() * 3 / 4);
  unsigned buf = 0;
  int bits = 0;
  for (unsigned char ch : text) {
    std::int8_t v = inv[ch];
    if (v < 0) throw std::invalid_argument("base64: invalid character");
    buf = (buf << 6) | static_cast<unsigned>(v);
    bits += 6;
    if (bits >= 8) {
      bits -= 8;
      out.push_back(static_cast<char>((buf >> bits) & 0xff));
    }
  }
  // Trailing bits must be zero, otherwise two distinct encodings would
  // decode to the same bytes.
  if ((buf & ((1u << bits) - 1)) != 0) {
    throw std::invalid_argument("base64: non-canonical trailing bits");
  }
  return out;
}

}  // namespace

std::string encode_url(std::string_view data) { return encode(data, kUrlTab); }

std::string decode_url(std::string_view text) { return decode(text, kUrlInv); }

std::string encode_std(std::string_view data) {
  std::string out = encode(data, kStdTab);
  while (out.size() % 4 != 0) out.push_back('=');
  return out;
}

std::string decode_std(std::string_view text) {
  while (!text.empty() && text.back() == '=') text.remove_suffix(1);
  return decode(text, kStdInv);
}

}  // namespace podkeeper::base64
