#include "podkeeper/errors.hpp"

#include <array>
#include <utility>

namespace podkeeper {

namespace {

constexpr std::array<std::pair<Errc, const char*>, 37> kNames{{
    {Errc::duplicate_user, "DUPLICATE_USER"},
    {Errc::invalid_username, "INVALID_USERNAME"},
    {Errc::bad_credentials, "BAD_CREDENTIALS"},
    {Errc::unknown_user, "UNKNOWN_USER"},
    {Errc::token_missing, "TOKEN_MISSING"},
    {Errc::token_malformed, "TOKEN_MALFORMED"},
    {Errc::token_tampered, "TOKEN_TAMPERED"},
    {Errc::token_expired, "TOKEN_EXPIRED"},
    {Errc::duplicate_pod_id, "DUPLICATE_POD_ID"},
    {Errc::unknown_template, "UNKNOWN_TEMPLATE"},
    {Errc::invalid_pod_id, "INVALID_POD_ID"},
    {Errc::pod_not_found, "POD_NOT_FOUND"},
    {Errc::forbidden, "FORBIDDEN"},
    {Errc::pod_not_ready, "POD_NOT_READY"},
    {Errc::pod_already_deleted, "POD_ALREADY_DELETED"},
    {Errc::cannot_downgrade_owner, "CANNOT_DOWNGRADE_OWNER"},
    {Errc::invalid_transition, "INVALID_TRANSITION"},
    {Errc::lex_error, "LEX_ERROR"},
    {Errc::parse_error, "PARSE_ERROR"},
    {Errc::unbound_variable, "UNBOUND_VARIABLE"},
    {Errc::write_in_read_only_mode, "WRITE_IN_READ_ONLY_MODE"},
    {Errc::delete_with_relationships, "DELETE_WITH_RELATIONSHIPS"},
    {Errc::exec_error, "EXEC_ERROR"},
    {Errc::source_unavailable, "SOURCE_UNAVAILABLE"},
    {Errc::csv_malformed, "CSV_MALFORMED"},
    {Errc::unknown_column, "UNKNOWN_COLUMN"},
    {Errc::io_error, "IO_ERROR"},
    {Errc::snapshot_version_unsupported, "SNAPSHOT_VERSION_UNSUPPORTED"},
    {Errc::snapshot_corrupt, "SNAPSHOT_CORRUPT"},
    {Errc::bind_error, "BIND_ERROR"},
    {Errc::data_dir_error, "DATA_DIR_ERROR"},
    {Errc::unknown_host, "UNKNOWN_HOST"},
    {Errc::unknown_pod, "UNKNOWN_POD"},
    {Errc::not_found, "NOT_FOUND"},
    {Errc::bad_request, "BAD_REQUEST"},
    {Errc::connection_failed, "CONNECTION_FAILED"},
    {Errc::internal, "INTERNAL"},
}};

}  // namespace

const char* errc_name(Errc code) {
  for (const auto& [c, name] : kNames) {
    if (c == code) return name;
  }
  return "INTERNAL";
}

Errc errc_from_name(std::string_view name) {
  for (const auto& [c, n] : kNames) {
    if (name == n) return c;
  }
  return Errc::internal;
}

}  // namespace podkeeper
