#include "proxnet/pseudonym.hpp"

#include <openssl/evp.h>

#include <array>
#include <cctype>

namespace proxnet {

namespace {

bool is_hex(char c) {
  return std::isxdigit(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

std::string canonicalize_mac(std::string_view raw) {
  std::string digits;
  digits.reserve(12);
  char sep = 0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    char c = raw[i];
    if (c == ':' || c == '-') {
      if (sep == 0) sep = c;
      if (c != sep || digits.empty() || digits.size() % 2 != 0) {
        throw ValidationError("malformed hardware address \"" + std::string(raw) + "\"");
      }
      continue;
    }
    if (!is_hex(c)) {
      throw ValidationError("malformed hardware address \"" + std::string(raw) + "\"");
    }
    digits.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  }
  if (digits.size() != 12) {
    throw ValidationError("hardware address \"" + std::string(raw) +
                          "\" must have 12 hexadecimal digits");
  }
  std::string canonical;
  canonical.reserve(17);
  for (std::size_t i = 0; i < 12; i += 2) {
    if (!canonical.empty()) canonical.push_back(':');
    canonical.push_back(digits[i]);
    canonical.push_back(digits[i + 1]);
  }
  return canonical;
}

bool is_canonical_mac(std::string_view text) {
  if (text.size() != 17) return false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i % 3 == 2) {
      if (text[i] != ':') return false;
    } else if (!(std::isdigit(static_cast<unsigned char>(text[i])) ||
                 (text[i] >= 'A' && text[i] <= 'F'))) {
      return false;
    }
  }
  return true;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest computation failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

std::string pseudonymize_mac(std::string_view raw, std::string_view salt) {
  std::string canonical = canonicalize_mac(raw);
  canonical.append(salt);
  return sha256_hex(canonical);
}

bool is_pseudonym(std::string_view text) {
  if (text.size() != 64) return false;
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

}  // namespace proxnet
