#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace histo {

/// A parsed arithmetic expression in the variables x and y.
///
/// Grammar: + - * / ^ (right-assoc), unary minus, parentheses, numbers,
/// constants pi and e, and the functions sin cos tan exp log sqrt abs tanh atan.
class Expression {
 public:
  // Throws ParseError (line 1, message carries the column).
  static Expression parse(std::string_view text);

  double operator()(double x, double y) const;
  const std::string& text() const { return text_; }

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

}  // namespace histo
