#include "podkeeper/authsvc/auth_service.hpp"

#include <openssl/evp.h>
#include <openssl/hmac.h>

#include <charconv>
#include <ctime>
#include <vector>

#include <nlohmann/json.hpp>

#include "podkeeper/base64.hpp"
#include "podkeeper/errors.hpp"
#include "podkeeper/fsutil.hpp"

namespace podkeeper::authsvc {

namespace {

using nlohmann::json;

constexpr int kStoreFormatVersion = 1;
constexpr std::size_t kKeyBytes = 32;
constexpr std::size_t kSaltBytes = 16;
constexpr std::size_t kDerivedKeyBytes = 32;
constexpr const char* kHashAlgorithm = "pbkdf2-sha256";

std::string hmac_sha256(std::string_view key, std::string_view message) {
  unsigned char mac[EVP_MAX_MD_SIZE];
  unsigned mac_len = 0;
  HMAC(EVP_sha256(), key.data(), static_cast<int>(key.size()),
       reinterpret_cast<const unsigned char*>(message.data()), message.size(), mac,
       &mac_len);
  return std::string(reinterpret_cast<char*>(mac), mac_len);
}

std::string pbkdf2_sha256(std::string_view password, std::string_view salt,
                          int iterations) {
  std::string dk(kDerivedKeyBytes, '\0');
  int rc = PKCS5_PBKDF2_HMAC(password.data(), static_cast<int>(password.size()),
                             reinterpret_cast<const unsigned char*>(salt.data()),
                             static_cast<int>(salt.size()), iterations, EVP_sha256(),
                             static_cast<int>(dk.size()),
                             reinterpret_cast<unsigned char*>(dk.data()));
  if (rc != 1) {
    throw Error(Errc::internal, "key derivation failure");
  }
  return dk;
}

std::string make_digest(std::string_view password, int iterations) {
  std::string salt = fsutil::random_bytes(kSaltBytes);
  std::string dk = pbkdf2_sha256(password, salt, iterations);
  return std::string(kHashAlgorithm) + "$" + std::to_string(iterations) + "$" +
         base64::encode_url(salt) + "$" + base64::encode_url(dk);
}

bool constant_time_equal(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  unsigned char diff = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff |= static_cast<unsigned char>(a[i]) ^ static_cast<unsigned char>(b[i]);
  }
  return diff == 0;
}

bool verify_digest(std::string_view password, std::string_view digest) {
  // algorithm $ iterations $ salt $ dk
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (parts.size() < 4) {
    std::size_t dollar = digest.find('$', start);
    if (dollar == std::string_view::npos) {
      parts.push_back(digest.substr(start));
      break;
    }
    parts.push_back(digest.substr(start, dollar - start));
    start = dollar + 1;
  }
  if (parts.size() != 4 || parts[0] != kHashAlgorithm) return false;
  int iterations = 0;
  auto [p, ec] = std::from_chars(parts[1].data(), parts[1].data() + parts[1].size(),
                                 iterations);
  if (ec != std::errc{} || p != parts[1].data() + parts[1].size() || iterations <= 0) {
    return false;
  }
  try {
    std::string salt = base64::decode_url(parts[2]);
    std::string expected = base64::decode_url(parts[3]);
    return constant_time_equal(pbkdf2_sha256(password, salt, iterations), expected);
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::string header_segment() {
  static const std::string segment =
      base64::encode_url(json{{"alg", "HS256-like"}, {"typ", "TOK"}}.dump());
  return segment;
}

}  // namespace

bool valid_username(std::string_view username) {
  if (username.empty() || username.size() > 64) return false;
  for (char c : username) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::int64_t current_unix_time() {
  return static_cast<std::int64_t>(std::time(nullptr));
}

std::string_view AuthToken::signature() const {
  std::size_t dot = serialized.rfind('.');
  if (dot == std::string::npos) return {};
  return std::string_view(serialized).substr(dot + 1);
}

AuthService::AuthService(std::filesystem::path data_dir, AuthConfig config)
    : data_dir_(std::move(data_dir)), config_(std::move(config)) {
  if (config_.token_ttl.count() <= 0) {
    throw Error(Errc::bad_request, "token_ttl must be positive");
  }
  if (!config_.signing_key_hex.empty()) {
    signing_key_ = fsutil::from_hex(config_.signing_key_hex);
    if (signing_key_.size() != kKeyBytes) {
      throw Error(Errc::bad_request, "signing key must be 32 bytes");
    }
  }
  load();
}

void AuthService::load() {
  if (data_dir_.empty()) {
    if (signing_key_.empty()) signing_key_ = fsutil::random_bytes(kKeyBytes);
    return;
  }
  std::filesystem::create_directories(data_dir_);
  auto key_path = data_dir_ / "signing.key";
  if (signing_key_.empty()) {
    if (std::filesystem::exists(key_path)) {
      signing_key_ = fsutil::from_hex(fsutil::read_file(key_path));
      if (signing_key_.size() != kKeyBytes) {
        throw Error(Errc::io_error, "corrupt signing key at " + key_path.string());
      }
    } else {
      signing_key_ = fsutil::random_bytes(kKeyBytes);
      fsutil::write_file_atomic(key_path, fsutil::to_hex(signing_key_), true);
    }
  }
  auto store_path = data_dir_ / "accounts.json";
  if (!std::filesystem::exists(store_path)) return;
  json doc = json::parse(fsutil::read_file(store_path), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() ||
      doc.value("format_version", -1) != kStoreFormatVersion ||
      !doc.contains("accounts") || !doc["accounts"].is_array()) {
    throw Error(Errc::io_error, "corrupt account store at " + store_path.string());
  }
  for (const auto& entry : doc["accounts"]) {
    UserAccount account;
    account.username = entry.at("username").get<std::string>();
    account.password_digest = entry.at("password_digest").get<std::string>();
    account.created_at = entry.at("created_at").get<std::int64_t>();
    accounts_[account.username] = std::move(account);
  }
}

void AuthService::save_locked() const {
  if (data_dir_.empty()) return;
  json accounts = json::array();
  for (const auto& [name, account] : accounts_) {
    accounts.push_back({{"username", account.username},
                        {"password_digest", account.password_digest},
                        {"created_at", account.created_at}});
  }
  json doc{{"format_version", kStoreFormatVersion}, {"accounts", std::move(accounts)}};
  fsutil::write_file_atomic(data_dir_ / "accounts.json", doc.dump(2) + "\n", true);
}

UserAccount AuthService::create_user(const std::string& username,
                                     const std::string& password, std::int64_t now) {
  if (!valid_username(username)) {
    throw Error(Errc::invalid_username,
                "username must match [a-z0-9_]{1,64}: '" + username + "'");
  }
  if (password.empty()) {
    throw Error(Errc::bad_request, "password must be non-empty");
  }
  std::unique_lock lock(mutex_);
  if (accounts_.contains(username)) {
    throw Error(Errc::duplicate_user, "user '" + username + "' already exists");
  }
  UserAccount account{username, make_digest(password, config_.pbkdf2_iterations), now};
  accounts_[username] = account;
  save_locked();
  return account;
}

std::string AuthService::sign(std::string_view signing_input) const {
  return base64::encode_url(hmac_sha256(signing_key_, signing_input));
}

AuthToken AuthService::issue_token(const std::string& username,
                                   const std::string& password,
                                   std::int64_t now) const {
  {
    std::shared_lock lock(mutex_);
    auto it = accounts_.find(username);
    // Unknown user and wrong password are indistinguishable from outside.
    if (it == accounts_.end() || !verify_digest(password, it->second.password_digest)) {
      throw Error(Errc::bad_credentials, "invalid username or password");
    }
  }
  AuthToken token;
  token.subject = username;
  token.issued_at = now;
  token.expires_at = now + config_.token_ttl.count();
  json payload{{"sub", username}, {"iat", token.issued_at}, {"exp", token.expires_at}};
  std::string signing_input = header_segment() + "." + base64::encode_url(payload.dump());
  token.serialized = signing_input + "." + sign(signing_input);
  return token;
}

std::string AuthService::verify_token(const std::string& serialized,
                                      std::int64_t now) const {
  std::size_t first = serialized.find('.');
  std::size_t second = first == std::string::npos ? std::string::npos
                                                  : serialized.find('.', first + 1);
  if (first == std::string::npos || second == std::string::npos ||
      serialized.find('.', second + 1) != std::string::npos) {
    throw Error(Errc::token_malformed, "token must have exactly three segments");
  }
  std::string_view view(serialized);
  std::string_view header_seg = view.substr(0, first);
  std::string_view payload_seg = view.substr(first + 1, second - first - 1);
  std::string_view signature_seg = view.substr(second + 1);
  if (header_seg.empty() || payload_seg.empty() || signature_seg.empty()) {
    throw Error(Errc::token_malformed, "token has an empty segment");
  }

  std::string header_text, payload_text, signature;
  try {
    header_text = base64::decode_url(header_seg);
    payload_text = base64::decode_url(payload_seg);
    signature = base64::decode_url(signature_seg);
  } catch (const std::invalid_argument& e) {
    throw Error(Errc::token_malformed, std::string("token segment: ") + e.what());
  }

  json header = json::parse(header_text, nullptr, false);
  json payload = json::parse(payload_text, nullptr, false);
  if (header.is_discarded() || payload.is_discarded() ||
      header != json{{"alg", "HS256-like"}, {"typ", "TOK"}} || !payload.is_object() ||
      !payload.contains("sub") || !payload["sub"].is_string() ||
      !payload.contains("iat") || !payload["iat"].is_number_integer() ||
      !payload.contains("exp") || !payload["exp"].is_number_integer()) {
    throw Error(Errc::token_malformed, "token header or payload is not well-formed");
  }

  std::string signing_input = std::string(view.substr(0, second));
  if (!constant_time_equal(hmac_sha256(signing_key_, signing_input), signature)) {
    throw Error(Errc::token_tampered, "token signature mismatch");
  }
  if (now >= payload["exp"].get<std::int64_t>()) {
    throw Error(Errc::token_expired, "token expired");
  }
  return payload["sub"].get<std::string>();
}

UserInfo AuthService::get_userinfo(const std::string& subject) const {
  std::shared_lock lock(mutex_);
  auto it = accounts_.find(subject);
  if (it == accounts_.end()) {
    throw Error(Errc::unknown_user, "no such user '" + subject + "'");
  }
  return UserInfo{it->second.username, it->second.created_at};
}

bool AuthService::user_exists(const std::string& username) const {
  std::shared_lock lock(mutex_);
  return accounts_.contains(username);
}

std::size_t AuthService::user_count() const {
  std::shared_lock lock(mutex_);
  return accounts_.size();
}

}  // namespace podkeeper::authsvc
