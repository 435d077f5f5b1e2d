#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <shared_mutex>
#include <string>
#include <string_view>

namespace podkeeper::authsvc {

struct UserAccount {
  std::string username;
  // "pbkdf2-sha256$<iterations>$<salt b64url>$<derived key b64url>".
  // The algorithm name travels with the digest so stored digests survive
  // parameter changes.
  std::string password_digest;
  std::int64_t created_at = 0;  // unix seconds, UTC
};

struct UserInfo {
  std::string username;
  std::int64_t created_at = 0;
};

// Signed bearer token. Serialized form is header.payload.signature with
// unpadded base64url segments; the header segment always starts with "ey".
struct AuthToken {
  std::string subject;
  std::int64_t issued_at = 0;
  std::int64_t expires_at = 0;
  std::string serialized;

  std::string_view signature() const;  // third segment
};

struct AuthConfig {
  std::chrono::seconds token_ttl{4 * 3600};
  int pbkdf2_iterations = 10000;
  // 32-byte key as lowercase hex; empty means load-or-generate in the data
  // directory (ephemeral when running without one).
  std::string signing_key_hex;
};

bool valid_username(std::string_view username);

std::int64_t current_unix_time();

// Account store plus token issue/verify. Reads run concurrently; mutations
// are serialized. With a data directory the store persists to accounts.json
// and the signing key to signing.key.
class AuthService {
 public:
  explicit AuthService(std::filesystem::path data_dir = {}, AuthConfig config = {});

  UserAccount create_user(const std::string& username, const std::string& password,
                          std::int64_t now = current_unix_time());
  AuthToken issue_token(const std::string& username, const std::string& password,
                        std::int64_t now) const;
  // Returns the subject iff the signature is valid and now < expires_at.
  std::string verify_token(const std::string& serialized, std::int64_t now) const;
  UserInfo get_userinfo(const std::string& subject) const;

  bool user_exists(const std::string& username) const;
  std::size_t user_count() const;
  std::chrono::seconds token_ttl() const { return config_.token_ttl; }

 private:
  void load();
  void save_locked() const;
  std::string sign(std::string_view signing_input) const;

  std::filesystem::path data_dir_;
  AuthConfig config_;
  std::string signing_key_;  // raw 32 bytes
  std::map<std::string, UserAccount> accounts_;
  mutable std::shared_mutex mutex_;
};

}  // namespace podkeeper::authsvc
