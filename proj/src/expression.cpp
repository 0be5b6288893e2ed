#include <bcapprox/expression.hpp>

#include <cmath>

namespace bc
{

struct Expression::Node {
    Op op;
    cplx value{};
    int exponent = 0;
    std::vector<Expression> args;
    std::vector<cplx> poles;
};

Expression Expression::constant(cplx value)
{
    return Expression(std::make_shared<const Node>(Node{Op::constant, value, 0, {}, {}}));
}

Expression Expression::variable()
{
    return Expression(std::make_shared<const Node>(Node{Op::variable, {}, 0, {}, {}}));
}

Expression Expression::divide(Expression num, Expression den, std::vector<cplx> poles)
{
    return Expression(
        std::make_shared<const Node>(Node{Op::div, {}, 0, {std::move(num), std::move(den)}, std::move(poles)}));
}

Expression Expression::power(Expression base, int exponent)
{
    return Expression(std::make_shared<const Node>(Node{Op::pow, {}, exponent, {std::move(base)}, {}}));
}

Expression Expression::exponential(Expression arg)
{
    return Expression(std::make_shared<const Node>(Node{Op::exp, {}, 0, {std::move(arg)}, {}}));
}

Expression Expression::compose(Expression outer, Expression inner)
{
    return Expression(std::make_shared<const Node>(Node{Op::compose, {}, 0, {std::move(outer), std::move(inner)}, {}}));
}

Expression operator+(Expression a, Expression b)
{
    return Expression(std::make_shared<const Expression::Node>(
        Expression::Node{Expression::Op::add, {}, 0, {std::move(a), std::move(b)}, {}}));
}

Expression operator-(Expression a, Expression b)
{
    return Expression(std::make_shared<const Expression::Node>(
        Expression::Node{Expression::Op::sub, {}, 0, {std::move(a), std::move(b)}, {}}));
}

Expression operator-(Expression a)
{
    return Expression(
        std::make_shared<const Expression::Node>(Expression::Node{Expression::Op::neg, {}, 0, {std::move(a)}, {}}));
}

Expression operator*(Expression a, Expression b)
{
    return Expression(std::make_shared<const Expression::Node>(
        Expression::Node{Expression::Op::mul, {}, 0, {std::move(a), std::move(b)}, {}}));
}

cplx Expression::operator()(cplx z) const
{
    const Node &n = *node_;
    switch (n.op) {
    case Op::constant:
        return n.value;
    case Op::variable:
        return z;
    case Op::add:
        return n.args[0](z) + n.args[1](z);
    case Op::sub:
        return n.args[0](z) - n.args[1](z);
    case Op::neg:
        return -n.args[0](z);
    case Op::mul:
        return n.args[0](z) * n.args[1](z);
    case Op::div:
        return n.args[0](z) / n.args[1](z);
    case Op::pow: {
        const cplx base = n.args[0](z);
        cplx acc = 1.0;
        cplx b = n.exponent < 0 ? 1.0 / base : base;
        for (unsigned e = static_cast<unsigned>(std::abs(n.exponent)); e != 0; e >>= 1) {
            if (e & 1u)
                acc *= b;
            b *= b;
        }
        return acc;
    }
    case Op::exp:
        return std::exp(n.args[0](z));
    case Op::compose:
        return n.args[0](n.args[1](z));
    }
    return {};
}

Expression::Op Expression::op() const
{
    return node_->op;
}

cplx Expression::value() const
{
    return node_->value;
}

int Expression::exponent() const
{
    return node_->exponent;
}

const std::vector<Expression> &Expression::args() const
{
    return node_->args;
}

const std::vector<cplx> &Expression::declared_poles() const
{
    return node_->poles;
}

std::vector<cplx> Expression::all_declared_poles() const
{
    std::vector<cplx> out(node_->poles);
    for (const auto &a : node_->args) {
        const auto sub = a.all_declared_poles();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

} // namespace bc
