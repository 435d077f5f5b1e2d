#pragma once

#include <string>
#include <string_view>

namespace podkeeper::base64 {

// Unpadded URL-safe alphabet (token segments).
std::string encode_url(std::string_view data);
// Strict decoder: rejects invalid characters, padding characters and
// non-zero trailing bits. Throws std::invalid_argument.
std::string decode_url(std::string_view text);

// Standard alphabet with '=' padding (file upload bodies).
std::string encode_std(std::string_view data);
std::string decode_std(std::string_view text);

}  // namespace podkeeper::base64
