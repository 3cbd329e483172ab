#pragma once

#include <memory>
#include <string>

namespace cloudsim {

/// Small closed-form expression grammar for initial conditions,
/// boundary data, and the T̄ profile: numeric literals, + - * / ^,
/// parentheses, unary minus, sin/cos/exp/sqrt/abs, constant pi, and the
/// variables x, y, p, t. Parsed once, evaluated per sample.
class Expression {
public:
    /// Throws std::invalid_argument with position info on syntax errors.
    static Expression parse(const std::string& text);

    double eval(double x, double y, double p, double t) const;
    const std::string& text() const { return text_; }

    Expression() = default;

    struct Node;

private:
    std::shared_ptr<const Node> root_;
    std::string text_;
};

}  // namespace cloudsim
