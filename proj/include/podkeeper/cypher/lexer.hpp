#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace podkeeper::cypher {

enum class TokenKind {
  kw_match,
  kw_merge,
  kw_create,
  kw_return,
  kw_where,
  kw_limit,
  kw_delete,
  kw_detach,
  kw_set,
  kw_load,
  kw_csv,
  kw_with,
  kw_headers,
  kw_from,
  kw_as,
  kw_and,
  kw_or,
  kw_not,
  kw_true,
  kw_false,
  kw_null,
  kw_count,
  identifier,
  string_lit,
  int_lit,
  float_lit,
  lparen,
  rparen,
  lbrace,
  rbrace,
  lbracket,
  rbracket,
  colon,
  comma,
  dot,
  semicolon,
  eq,
  ne,
  lt,
  le,
  gt,
  ge,
  dash,
  arrow_right,  // ->
  arrow_left,   // <-
  end_of_input,
};

const char* token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind = TokenKind::end_of_input;
  std::string text;  // raw spelling (keywords keep source case)
  int line = 1;
  int column = 1;
  // Decoded payloads for literal tokens.
  std::int64_t int_value = 0;
  double float_value = 0.0;
  std::string string_value;
};

// Keywords fold case; identifiers do not. String literals use single quotes
// with \' \\ \n \t escapes. Throws Error(lex_error) with a 1-based position.
std::vector<Token> tokenize(std::string_view input);

}  // namespace podkeeper::cypher
