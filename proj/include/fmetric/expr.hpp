#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace fmetric {

/// Arithmetic expression in the variables x and y.
///
/// Grammar: numbers, x, y, e, pi, unary +/-, + - * / ^ (right associative),
/// parentheses, and the functions abs exp log sqrt sin cos tan min max pow.
class Expression {
public:
    struct Node;

    /// Throws ParseError with the offending position.
    static Expression parse(std::string_view text);

    double operator()(double x, double y = 0.0) const;

    bool uses_x() const noexcept { return uses_x_; }
    bool uses_y() const noexcept { return uses_y_; }
    const std::string& text() const noexcept { return text_; }

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
    bool uses_x_ = false;
    bool uses_y_ = false;
};

}  // namespace fmetric
