#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace podkeeper::cypher {

// Property/literal value: null, boolean, 64-bit integer, 64-bit float or
// string. Equality is exact (type and value); the executor applies numeric
// coercion where the query semantics call for it.
struct Literal {
  std::variant<std::monostate, bool, std::int64_t, double, std::string> value;

  Literal() = default;
  static Literal null() { return {}; }
  static Literal boolean(bool b) { return Literal{{b}}; }
  static Literal integer(std::int64_t i) { return Literal{{i}}; }
  static Literal floating(double d) { return Literal{{d}}; }
  static Literal string(std::string s) { return Literal{{std::move(s)}}; }

  bool is_null() const { return std::holds_alternative<std::monostate>(value); }
  const std::string* as_string() const { return std::get_if<std::string>(&value); }

  friend bool operator==(const Literal&, const Literal&) = default;
};

// Reference to a CSV column of the active LOAD CSV row variable.
struct RowRef {
  std::string row_var;
  std::string column;
  friend bool operator==(const RowRef&, const RowRef&) = default;
};

using PropValue = std::variant<Literal, RowRef>;
// Written order is preserved; render emits properties as authored.
using PropertyList = std::vector<std::pair<std::string, PropValue>>;

struct NodePattern {
  std::optional<std::string> variable;
  std::vector<std::string> labels;
  PropertyList properties;
  friend bool operator==(const NodePattern&, const NodePattern&) = default;
};

enum class RelDirection { left_to_right, right_to_left };

struct RelPattern {
  std::optional<std::string> variable;
  std::optional<std::string> rel_type;  // required in CREATE/MERGE patterns
  RelDirection direction = RelDirection::left_to_right;
  PropertyList properties;
  friend bool operator==(const RelPattern&, const RelPattern&) = default;
};

struct PathStep {
  RelPattern rel;
  NodePattern node;
  friend bool operator==(const PathStep&, const PathStep&) = default;
};

struct PathPattern {
  NodePattern head;
  std::vector<PathStep> steps;
  friend bool operator==(const PathPattern&, const PathPattern&) = default;
};

struct PropAccess {
  std::string variable;
  std::string key;
  friend bool operator==(const PropAccess&, const PropAccess&) = default;
};

enum class CmpOp { eq, ne, lt, le, gt, ge };

using Operand = std::variant<Literal, PropAccess>;

// Boolean expression tree for WHERE. Comparisons are the leaves; AND/OR
// hold two children, NOT holds one.
struct Expr {
  enum class Kind { comparison, logical_and, logical_or, logical_not };
  Kind kind = Kind::comparison;
  Operand lhs;
  CmpOp op = CmpOp::eq;
  Operand rhs;
  std::vector<Expr> children;
  friend bool operator==(const Expr&, const Expr&) = default;
};

// RETURN item: a variable, a property access, or count(...) over either.
struct ReturnItem {
  bool is_count = false;
  std::variant<std::string, PropAccess> target;
  friend bool operator==(const ReturnItem&, const ReturnItem&) = default;
};

struct MatchPart {
  std::vector<PathPattern> patterns;
  std::optional<Expr> where;
  friend bool operator==(const MatchPart&, const MatchPart&) = default;
};

struct MatchStmt {
  MatchPart match;
  std::vector<ReturnItem> items;
  std::optional<std::int64_t> limit;
  friend bool operator==(const MatchStmt&, const MatchStmt&) = default;
};

struct CreateStmt {
  std::vector<PathPattern> patterns;
  friend bool operator==(const CreateStmt&, const CreateStmt&) = default;
};

struct MergeStmt {
  PathPattern pattern;
  friend bool operator==(const MergeStmt&, const MergeStmt&) = default;
};

struct DeleteStmt {
  MatchPart match;
  bool detach = false;
  std::vector<std::string> targets;
  friend bool operator==(const DeleteStmt&, const DeleteStmt&) = default;
};

struct SetAssignment {
  PropAccess target;
  Operand value;
  friend bool operator==(const SetAssignment&, const SetAssignment&) = default;
};

struct SetStmt {
  MatchPart match;
  std::vector<SetAssignment> assignments;
  friend bool operator==(const SetStmt&, const SetStmt&) = default;
};

using LoadCsvClause = std::variant<MergeStmt, CreateStmt>;

struct LoadCsvStmt {
  std::string source_url;
  std::string row_var;
  std::vector<LoadCsvClause> body;
  friend bool operator==(const LoadCsvStmt&, const LoadCsvStmt&) = default;
};

using CypherStatement =
    std::variant<CreateStmt, MergeStmt, MatchStmt, DeleteStmt, SetStmt, LoadCsvStmt>;

bool is_write_statement(const CypherStatement& stmt);

}  // namespace podkeeper::cypher
