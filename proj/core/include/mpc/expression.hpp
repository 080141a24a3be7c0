#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

namespace mpc {

// A token drawn from {1, ..., m}. The bound is checked at construction.
class Token {
 public:
  Token(std::uint64_t value, std::uint64_t max_token);

  std::uint64_t value() const noexcept { return value_; }

 private:
  std::uint64_t value_;
};

enum class NodeKind { Leaf, Sum, Product };

// Immutable binary tree of sums and products over positive integer tokens.
// Copies share structure, so passing by value is cheap.
class Expression {
 public:
  static Expression leaf(std::uint64_t token);
  static Expression leaf(Token token) { return leaf(token.value()); }
  static Expression sum(Expression left, Expression right);
  static Expression product(Expression left, Expression right);

  NodeKind kind() const noexcept;
  bool is_leaf() const noexcept { return kind() == NodeKind::Leaf; }

  // Leaf token; RangeError on an inner node.
  std::uint64_t token() const;
  // Children; RangeError on a leaf.
  const Expression& left() const;
  const Expression& right() const;

  std::size_t token_count() const noexcept;
  // Largest leaf token in the tree.
  std::uint64_t max_token() const noexcept;

 private:
  struct Node;
  explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// Value of the tree. Throws OverflowError if any intermediate result leaves
// the unsigned 64-bit range.
std::uint64_t evaluate(const Expression& e);

// Infix text with `*` and `+`, no whitespace, parentheses only around sums
// that appear as operands of a product.
std::string render(const Expression& e);

// Grammar:
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := digit+ | '(' expr ')'
// Operators associate to the left. When max_token is given, every literal
// must lie in 1..max_token. Throws ParseError (with position) on bad syntax
// and RangeError on a literal outside the token range.
Expression parse(std::string_view text, std::optional<std::uint64_t> max_token = std::nullopt);

}  // namespace mpc
