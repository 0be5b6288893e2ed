#include <bcapprox/pade.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

namespace bc
{

namespace
{

using Matrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<cplx, Eigen::Dynamic, 1>;

cplx horner(const std::vector<cplx> &p, cplx z)
{
    cplx acc{};
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * z + *it;
    return acc;
}

// Rows m+1 .. m+n of the Toeplitz matrix T(i, j) = c[i - j], columns 0 .. n.
Matrix toeplitz_block(std::span<const cplx> c, int row0, int rows, int cols)
{
    Matrix t = Matrix::Zero(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            const int k = row0 + i - j;
            if (k >= 0)
                t(i, j) = c[static_cast<std::size_t>(k)];
        }
    return t;
}

} // namespace

cplx PadeApproximant::operator()(cplx z) const
{
    return horner(numerator, z) / horner(denominator, z);
}

PadeApproximant robust_pade(std::span<const cplx> coeffs, int m, int n, double tol)
{
    if (m < 0 || n < 0 || coeffs.size() < static_cast<std::size_t>(m + n + 1)) {
        throw DomainError("robust_pade: need at least m + n + 1 coefficients");
    }
    const std::span<const cplx> c = coeffs.first(static_cast<std::size_t>(m + n + 1));

    double norm2 = 0.0, norm_inf = 0.0, head_inf = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
        const double a = std::abs(c[k]);
        norm2 += a * a;
        norm_inf = std::max(norm_inf, a);
        if (k <= static_cast<std::size_t>(m))
            head_inf = std::max(head_inf, a);
    }
    norm2 = std::sqrt(norm2);
    const double ts = tol * norm2;

    PadeApproximant r;
    if (head_inf <= tol * norm_inf) {
        r.numerator = {cplx{}};
        r.denominator = {cplx{1.0}};
        return r;
    }

    Vector b;
    while (true) {
        if (n == 0) {
            b = Vector::Ones(1);
            break;
        }
        const Matrix block = toeplitz_block(c, m + 1, n, n + 1);
        Eigen::JacobiSVD<Matrix> svd(block);
        const auto &s = svd.singularValues();
        int rho = 0;
        for (Eigen::Index k = 0; k < s.size(); ++k)
            if (s(k) > ts)
                ++rho;
        if (rho == n) {
            // Null vector, then one reweighted pass for a better-conditioned solve.
            Eigen::JacobiSVD<Matrix> full(block, Eigen::ComputeFullV);
            Vector v = full.matrixV().col(n);
            Vector w(n + 1);
            for (int k = 0; k <= n; ++k)
                w(k) = std::abs(v(k)) + std::sqrt(std::numeric_limits<double>::epsilon());
            const Matrix scaled = block * w.asDiagonal();
            Eigen::JacobiSVD<Matrix> again(scaled, Eigen::ComputeFullV);
            b = w.asDiagonal() * again.matrixV().col(n);
            b /= b.norm();
            break;
        }
        m -= n - rho;
        n = rho;
    }

    const Matrix head = toeplitz_block(c, 0, m + 1, n + 1);
    Vector a = head * b;

    std::vector<cplx> num(a.data(), a.data() + a.size());
    std::vector<cplx> den(b.data(), b.data() + b.size());

    // Strip leading zeros of the denominator (common factors z^lam).
    std::size_t lam = 0;
    while (lam + 1 < den.size() && std::abs(den[lam]) <= tol)
        ++lam;
    den.erase(den.begin(), den.begin() + static_cast<std::ptrdiff_t>(lam));
    num.erase(num.begin(), num.begin() + static_cast<std::ptrdiff_t>(std::min(lam, num.size())));
    while (den.size() > 1 && std::abs(den.back()) <= tol)
        den.pop_back();
    while (num.size() > 1 && std::abs(num.back()) <= ts)
        num.pop_back();
    if (num.empty())
        num.push_back(cplx{});

    const cplx lead = den.front();
    for (auto &x : num)
        x /= lead;
    for (auto &x : den)
        x /= lead;

    r.numerator = std::move(num);
    r.denominator = std::move(den);
    return r;
}

} // namespace bc
