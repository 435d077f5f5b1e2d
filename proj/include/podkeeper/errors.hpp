#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace podkeeper {

// Error codes shared by the service library, the wire protocol and the CLI.
// errc_name() yields the stable identifier used in error response bodies.
enum class Errc {
  // accounts and tokens
  duplicate_user,
  invalid_username,
  bad_credentials,
  unknown_user,
  token_missing,
  token_malformed,
  token_tampered,
  token_expired,
  // pod registry
  duplicate_pod_id,
  unknown_template,
  invalid_pod_id,
  pod_not_found,
  forbidden,
  pod_not_ready,
  pod_already_deleted,
  cannot_downgrade_owner,
  invalid_transition,
  // query language
  lex_error,
  parse_error,
  unbound_variable,
  // graph engine
  write_in_read_only_mode,
  delete_with_relationships,
  exec_error,
  source_unavailable,
  csv_malformed,
  unknown_column,
  io_error,
  snapshot_version_unsupported,
  snapshot_corrupt,
  // gateway and client
  bind_error,
  data_dir_error,
  unknown_host,
  unknown_pod,
  not_found,
  bad_request,
  connection_failed,
  internal,
};

const char* errc_name(Errc code);

// Reverse lookup for wire bodies; unknown names map to Errc::internal.
Errc errc_from_name(std::string_view name);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}
  Error(Errc code, std::string message, int line, int column)
      : std::runtime_error(std::move(message)),
        code_(code),
        line_(line),
        column_(column) {}

  Errc code() const noexcept { return code_; }
  // 1-based position for lex/parse errors; 0 when not positional.
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  Errc code_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace podkeeper
