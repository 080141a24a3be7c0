#include "mpc/expression.hpp"

#include <algorithm>
#include <cctype>

#include "mpc/error.hpp"

namespace mpc {

Token::Token(std::uint64_t value, std::uint64_t max_token) : value_(value) {
  if (value < 1 || value > max_token) {
    throw RangeError("token " + std::to_string(value) + " outside 1.." +
                     std::to_string(max_token));
  }
}

struct Expression::Node {
  NodeKind kind;
  std::uint64_t token = 0;
  std::optional<Expression> left;
  std::optional<Expression> right;
  std::size_t token_count = 1;
  std::uint64_t max_token = 0;
};

Expression Expression::leaf(std::uint64_t token) {
  if (token < 1) throw RangeError("leaf token must be positive");
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Leaf;
  node->token = token;
  node->max_token = token;
  return Expression(std::move(node));
}

Expression Expression::sum(Expression left, Expression right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Sum;
  node->token_count = left.token_count() + right.token_count();
  node->max_token = std::max(left.max_token(), right.max_token());
  node->left = std::move(left);
  node->right = std::move(right);
  return Expression(std::move(node));
}

Expression Expression::product(Expression left, Expression right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Product;
  node->token_count = left.token_count() + right.token_count();
  node->max_token = std::max(left.max_token(), right.max_token());
  node->left = std::move(left);
  node->right = std::move(right);
  return Expression(std::move(node));
}

NodeKind Expression::kind() const noexcept { return node_->kind; }

std::uint64_t Expression::token() const {
  if (node_->kind != NodeKind::Leaf) throw RangeError("token() on an inner node");
  return node_->token;
}

const Expression& Expression::left() const {
  if (node_->kind == NodeKind::Leaf) throw RangeError("left() on a leaf");
  return *node_->left;
}

const Expression& Expression::right() const {
  if (node_->kind == NodeKind::Leaf) throw RangeError("right() on a leaf");
  return *node_->right;
}

std::size_t Expression::token_count() const noexcept { return node_->token_count; }

std::uint64_t Expression::max_token() const noexcept { return node_->max_token; }

std::uint64_t evaluate(const Expression& e) {
  switch (e.kind()) {
    case NodeKind::Leaf:
      return e.token();
    case NodeKind::Sum: {
      std::uint64_t out = 0;
      if (__builtin_add_overflow(evaluate(e.left()), evaluate(e.right()), &out)) {
        throw OverflowError("sum exceeds 64-bit range");
      }
      return out;
    }
    case NodeKind::Product: {
      std::uint64_t out = 0;
      if (__builtin_mul_overflow(evaluate(e.left()), evaluate(e.right()), &out)) {
        throw OverflowError("product exceeds 64-bit range");
      }
      return out;
    }
  }
  return 0;
}

namespace {

void render_into(const Expression& e, std::string& out) {
  switch (e.kind()) {
    case NodeKind::Leaf:
      out += std::to_string(e.token());
      return;
    case NodeKind::Sum:
      render_into(e.left(), out);
      out += '+';
      render_into(e.right(), out);
      return;
    case NodeKind::Product:
      for (const Expression* side : {&e.left(), &e.right()}) {
        if (side != &e.left()) out += '*';
        const bool wrap = side->kind() == NodeKind::Sum;
        if (wrap) out += '(';
        render_into(*side, out);
        if (wrap) out += ')';
      }
      return;
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::optional<std::uint64_t> max_token)
      : text_(text), max_token_(max_token) {}

  Expression run() {
    if (text_.empty()) throw ParseError("empty expression", 0);
    Expression e = expr();
    if (pos_ != text_.size()) throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  Expression expr() {
    Expression acc = term();
    while (peek() == '+') {
      ++pos_;
      acc = Expression::sum(std::move(acc), term());
    }
    return acc;
  }

  Expression term() {
    Expression acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = Expression::product(std::move(acc), factor());
    }
    return acc;
  }

  Expression factor() {
    if (peek() == '(') {
      const std::size_t open = pos_++;
      Expression inner = expr();
      if (peek() != ')') throw ParseError("unbalanced '(' opened at " + std::to_string(open), pos_);
      ++pos_;
      return inner;
    }
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected digit or '('", pos_);
    }
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (__builtin_mul_overflow(value, 10u, &value) || __builtin_add_overflow(value, digit, &value)) {
        throw ParseError("literal exceeds 64-bit range", start);
      }
      ++pos_;
    }
    if (value == 0) throw ParseError("token must be positive", start);
    if (max_token_) return Expression::leaf(Token(value, *max_token_));
    return Expression::leaf(value);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  std::string_view text_;
  std::optional<std::uint64_t> max_token_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const Expression& e) {
  std::string out;
  render_into(e, out);
  return out;
}

Expression parse(std::string_view text, std::optional<std::uint64_t> max_token) {
  return Parser(text, max_token).run();
}

}  // namespace mpc
