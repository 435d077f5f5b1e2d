#include "podkeeper/cypher/lexer.hpp"

#include <cctype>
#include <charconv>
#include <map>

#include "podkeeper/errors.hpp"

namespace podkeeper::cypher {

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

const std::map<std::string, TokenKind>& keyword_table() {
  static const std::map<std::string, TokenKind> table{
      {"match", TokenKind::kw_match},     {"merge", TokenKind::kw_merge},
      {"create", TokenKind::kw_create},   {"return", TokenKind::kw_return},
      {"where", TokenKind::kw_where},     {"limit", TokenKind::kw_limit},
      {"delete", TokenKind::kw_delete},   {"detach", TokenKind::kw_detach},
      {"set", TokenKind::kw_set},         {"load", TokenKind::kw_load},
      {"csv", TokenKind::kw_csv},         {"with", TokenKind::kw_with},
      {"headers", TokenKind::kw_headers}, {"from", TokenKind::kw_from},
      {"as", TokenKind::kw_as},           {"and", TokenKind::kw_and},
      {"or", TokenKind::kw_or},           {"not", TokenKind::kw_not},
      {"true", TokenKind::kw_true},       {"false", TokenKind::kw_false},
      {"null", TokenKind::kw_null},       {"count", TokenKind::kw_count},
  };
  return table;
}

bool ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }

class Lexer {
 public:
  explicit Lexer(std::string_view input) : input_(input) {}

  std::vector<Token> run() {
    std::vector<Token> tokens;
    while (true) {
      skip_whitespace();
      if (pos_ >= input_.size()) break;
      tokens.push_back(next_token());
    }
    Token eof;
    eof.kind = TokenKind::end_of_input;
    eof.line = line_;
    eof.column = column_;
    tokens.push_back(std::move(eof));
    return tokens;
  }

 private:
  [[noreturn]] void fail(const std::string& message, int line, int column) {
    throw Error(Errc::lex_error,
                message + " at line " + std::to_string(line) + ", column " +
                    std::to_string(column),
                line, column);
  }

  char peek(std::size_t off = 0) const {
    return pos_ + off < input_.size() ? input_[pos_ + off] : '\0';
  }

  char advance() {
    char c = input_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }

  void skip_whitespace() {
    while (pos_ < input_.size()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        advance();
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int column) {
    Token t;
    t.kind = kind;
    t.text = std::string(input_.substr(start, pos_ - start));
    t.line = line;
    t.column = column;
    return t;
  }

  Token next_token() {
    int line = line_;
    int column = column_;
    std::size_t start = pos_;
    char c = advance();
    switch (c) {
      case '(': return make(TokenKind::lparen, start, line, column);
      case ')': return make(TokenKind::rparen, start, line, column);
      case '{': return make(TokenKind::lbrace, start, line, column);
      case '}': return make(TokenKind::rbrace, start, line, column);
      case '[': return make(TokenKind::lbracket, start, line, column);
      case ']': return make(TokenKind::rbracket, start, line, column);
      case ':': return make(TokenKind::colon, start, line, column);
      case ',': return make(TokenKind::comma, start, line, column);
      case '.': return make(TokenKind::dot, start, line, column);
      case ';': return make(TokenKind::semicolon, start, line, column);
      case '=': return make(TokenKind::eq, start, line, column);
      case '<':
        if (peek() == '>') {
          advance();
          return make(TokenKind::ne, start, line, column);
        }
        if (peek() == '=') {
          advance();
          return make(TokenKind::le, start, line, column);
        }
        if (peek() == '-') {
          advance();
          return make(TokenKind::arrow_left, start, line, column);
        }
        return make(TokenKind::lt, start, line, column);
      case '>':
        if (peek() == '=') {
          advance();
          return make(TokenKind::ge, start, line, column);
        }
        return make(TokenKind::gt, start, line, column);
      case '-':
        if (peek() == '>') {
          advance();
          return make(TokenKind::arrow_right, start, line, column);
        }
        return make(TokenKind::dash, start, line, column);
      case '\'': return string_literal(start, line, column);
      default:
        if (c >= '0' && c <= '9') return number(start, line, column);
        if (ident_start(c)) return identifier_or_keyword(start, line, column);
        fail("illegal character", line, column);
    }
  }

  Token string_literal(std::size_t start, int line, int column) {
    std::string value;
    while (true) {
      if (pos_ >= input_.size() || peek() == '\n') {
        fail("unterminated string literal", line, column);
      }
      char c = advance();
      if (c == '\'') break;
      if (c == '\\') {
        if (pos_ >= input_.size()) fail("unterminated string literal", line, column);
        char esc = advance();
        switch (esc) {
          case '\'': value.push_back('\''); break;
          case '\\': value.push_back('\\'); break;
          case 'n': value.push_back('\n'); break;
          case 't': value.push_back('\t'); break;
          default: fail("unknown escape sequence", line_, column_ - 2);
        }
      } else {
        value.push_back(c);
      }
    }
    Token t = make(TokenKind::string_lit, start, line, column);
    t.string_value = std::move(value);
    return t;
  }

  Token number(std::size_t start, int line, int column) {
    bool is_float = false;
    while (peek() >= '0' && peek() <= '9') advance();
    if (peek() == '.' && peek(1) >= '0' && peek(1) <= '9') {
      is_float = true;
      advance();
      while (peek() >= '0' && peek() <= '9') advance();
    }
    if (peek() == 'e' || peek() == 'E') {
      char after = peek(1);
      char after2 = peek(2);
      if ((after >= '0' && after <= '9') ||
          ((after == '+' || after == '-') && after2 >= '0' && after2 <= '9')) {
        is_float = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
        while (peek() >= '0' && peek() <= '9') advance();
      }
    }
    std::string_view text = input_.substr(start, pos_ - start);
    if (is_float) {
      Token t = make(TokenKind::float_lit, start, line, column);
      t.float_value = std::stod(std::string(text));
      return t;
    }
    std::int64_t value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || p != text.data() + text.size()) {
      fail("integer literal out of range", line, column);
    }
    Token t = make(TokenKind::int_lit, start, line, column);
    t.int_value = value;
    return t;
  }

  Token identifier_or_keyword(std::size_t start, int line, int column) {
    while (pos_ < input_.size() && ident_char(peek())) advance();
    std::string_view text = input_.substr(start, pos_ - start);
    const auto& table = keyword_table();
    auto it = table.find(to_lower(text));
    Token t = make(it != table.end() ? it->second : TokenKind::identifier, start, line,
                   column);
    return t;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

const char* token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::kw_match: return "MATCH";
    case TokenKind::kw_merge: return "MERGE";
    case TokenKind::kw_create: return "CREATE";
    case TokenKind::kw_return: return "RETURN";
    case TokenKind::kw_where: return "WHERE";
    case TokenKind::kw_limit: return "LIMIT";
    case TokenKind::kw_delete: return "DELETE";
    case TokenKind::kw_detach: return "DETACH";
    case TokenKind::kw_set: return "SET";
    case TokenKind::kw_load: return "LOAD";
    case TokenKind::kw_csv: return "CSV";
    case TokenKind::kw_with: return "WITH";
    case TokenKind::kw_headers: return "HEADERS";
    case TokenKind::kw_from: return "FROM";
    case TokenKind::kw_as: return "AS";
    case TokenKind::kw_and: return "AND";
    case TokenKind::kw_or: return "OR";
    case TokenKind::kw_not: return "NOT";
    case TokenKind::kw_true: return "true";
    case TokenKind::kw_false: return "false";
    case TokenKind::kw_null: return "null";
    case TokenKind::kw_count: return "count";
    case TokenKind::identifier: return "identifier";
    case TokenKind::string_lit: return "string";
    case TokenKind::int_lit: return "integer";
    case TokenKind::float_lit: return "float";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lbracket: return "'['";
    case TokenKind::rbracket: return "']'";
    case TokenKind::colon: return "':'";
    case TokenKind::comma: return "','";
    case TokenKind::dot: return "'.'";
    case TokenKind::semicolon: return "';'";
    case TokenKind::eq: return "'='";
    case TokenKind::ne: return "'<>'";
    case TokenKind::lt: return "'<'";
    case TokenKind::le: return "'<='";
    case TokenKind::gt: return "'>'";
    case TokenKind::ge: return "'>='";
    case TokenKind::dash: return "'-'";
    case TokenKind::arrow_right: return "'->'";
    case TokenKind::arrow_left: return "'<-'";
    case TokenKind::end_of_input: return "end of input";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view input) { return Lexer(input).run(); }

}  // namespace podkeeper::cypher
