#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace podkeeper::fsutil {

// Whole-file read; throws Error(io_error) when unreadable.
std::string read_file(const std::filesystem::path& path);

// Write via temp file + rename so readers never observe partial content.
// mode600 restricts the file to the owner (secret-bearing stores).
void write_file_atomic(const std::filesystem::path& path, std::string_view content,
                       bool mode600 = false);

// Cryptographic random bytes / identifiers.
std::string random_bytes(std::size_t n);
std::string random_alnum(std::size_t n);
std::string to_hex(std::string_view bytes);
std::string from_hex(std::string_view hex);

}  // namespace podkeeper::fsutil
