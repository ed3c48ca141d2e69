#pragma once

#include <string>
#include <string_view>

#include "proxnet/errors.hpp"

namespace proxnet {

// Canonical hardware-address form: uppercase hex, colon separators
// ("AA:BB:CC:DD:EE:FF"). Accepts ':' or '-' separated and bare 12-digit
// input in any case. Throws ValidationError otherwise.
std::string canonicalize_mac(std::string_view raw);

bool is_canonical_mac(std::string_view text);

// SHA-256 of data, rendered as 64 lowercase hex digits.
std::string sha256_hex(std::string_view data);

// Salted pseudonym of a hardware address: sha256(canonical || salt).
// Deterministic for a given (address, salt); the raw address never needs
// to be persisted once this has been computed.
std::string pseudonymize_mac(std::string_view raw, std::string_view salt);

// True for strings shaped like a pseudonym (64 lowercase hex digits).
bool is_pseudonym(std::string_view text);

}  // namespace proxnet
