#ifndef BCAPPROX_EXPRESSION_HPP
#define BCAPPROX_EXPRESSION_HPP

#include <memory>
#include <vector>

#include <bcapprox/bicomplex.hpp>

namespace bc
{

// Immutable expression tree in one complex variable z.
//
// Division nodes may declare the locations (in the z-plane) where the
// expression has poles; approximation jobs reject functions whose declared
// poles fall inside the region.
class Expression
{
public:
    enum class Op { constant, variable, add, sub, neg, mul, div, pow, exp, compose };

    Expression() : Expression(constant(0.0)) {}

    static Expression constant(cplx value);
    static Expression variable();
    static Expression divide(Expression num, Expression den, std::vector<cplx> poles = {});
    static Expression power(Expression base, int exponent);
    static Expression exponential(Expression arg);
    // outer(inner(z)); the variable of `outer` stands for the value of `inner`.
    static Expression compose(Expression outer, Expression inner);

    friend Expression operator+(Expression a, Expression b);
    friend Expression operator-(Expression a, Expression b);
    friend Expression operator-(Expression a);
    friend Expression operator*(Expression a, Expression b);
    friend Expression operator/(Expression a, Expression b) { return divide(std::move(a), std::move(b)); }

    cplx operator()(cplx z) const;

    Op op() const;
    cplx value() const;  // constant nodes
    int exponent() const; // pow nodes
    const std::vector<Expression> &args() const;
    const std::vector<cplx> &declared_poles() const; // div nodes

    // Declared poles of every division node in the tree.
    std::vector<cplx> all_declared_poles() const;

private:
    struct Node;
    explicit Expression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

// Product-type function F = F1 e1 + F2 e2, one expression per slot.
struct FunctionSpec {
    Expression f1;
    Expression f2;

    const Expression &slot(int l) const { return l == 0 ? f1 : f2; }
    Bicomplex operator()(const Bicomplex &z) const
    {
        return Bicomplex::idempotent(f1(z.beta1()), f2(z.beta2()));
    }
};

} // namespace bc

#endif
