#include "brt/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace brt {

std::string to_string(const Scalar& x)
{
    // mpq canonical form already drops a unit denominator
    return x.get_str();
}

Scalar parse_scalar(std::string_view s)
{
    std::string t(s);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    size_t b = 0;
    while (b < t.size() && std::isspace(static_cast<unsigned char>(t[b]))) ++b;
    t = t.substr(b);
    if (t.empty()) throw std::invalid_argument("empty scalar");
    size_t slash = t.find('/');
    auto is_int = [](const std::string& u) {
        size_t k = (!u.empty() && (u[0] == '-' || u[0] == '+')) ? 1 : 0;
        if (k >= u.size()) return false;
        for (; k < u.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(u[k]))) return false;
        return true;
    };
    std::string num = t.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : t.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num = num.substr(1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("bad scalar '" + t + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + t + "'");
    Scalar r(n, d);
    r.canonicalize();
    return r;
}

Matrix Matrix::identity(int n)
{
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const
{
    for (const auto& x : a)
        if (sgn(x) != 0) return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const
{
    return rows == o.rows && cols == o.cols && a == o.a;
}

Matrix operator*(const Matrix& x, const Matrix& y)
{
    if (x.cols != y.rows) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix z(x.rows, y.cols);
    Scalar t;
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k) {
            const Scalar& xik = x(i, k);
            if (sgn(xik) == 0) continue;
            for (int j = 0; j < y.cols; ++j) {
                const Scalar& ykj = y(k, j);
                if (sgn(ykj) == 0) continue;
                t = xik * ykj;
                z(i, j) += t;
            }
        }
    return z;
}

Matrix operator+(const Matrix& x, const Matrix& y)
{
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix z = x;
    for (size_t k = 0; k < z.a.size(); ++k) z.a[k] += y.a[k];
    return z;
}

Matrix operator-(const Matrix& x, const Matrix& y)
{
    if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("matrix difference: shape mismatch");
    Matrix z = x;
    for (size_t k = 0; k < z.a.size(); ++k) z.a[k] -= y.a[k];
    return z;
}

Matrix operator*(const Scalar& s, const Matrix& x)
{
    Matrix z = x;
    for (auto& v : z.a) v *= s;
    return z;
}

Matrix transpose(const Matrix& x)
{
    Matrix z(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) z(j, i) = x(i, j);
    return z;
}

namespace {

// in-place reduced row echelon form; returns pivot columns
std::vector<int> rref(Matrix& m)
{
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int p = -1;
        for (int i = r; i < m.rows; ++i)
            if (sgn(m(i, c)) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
        Scalar inv = 1 / m(r, c);
        for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (int j = c; j < m.cols; ++j)
                if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

} // namespace

int rank(Matrix m)
{
    return static_cast<int>(rref(m).size());
}

Matrix inverse(const Matrix& m)
{
    if (m.rows != m.cols) throw std::invalid_argument("inverse of non-square matrix");
    return solve(m, Matrix::identity(m.rows));
}

Matrix solve(const Matrix& x, const Matrix& b)
{
    if (x.rows != x.cols || b.rows != x.rows) throw std::invalid_argument("solve: shape mismatch");
    int n = x.rows;
    Matrix aug(n, n + b.cols);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = x(i, j);
        for (int j = 0; j < b.cols; ++j) aug(i, n + j) = b(i, j);
    }
    auto piv = rref(aug);
    if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] != n - 1))
        throw std::domain_error("singular matrix");
    Matrix y(n, b.cols);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < b.cols; ++j) y(i, j) = aug(i, n + j);
    return y;
}

Matrix nullspace(const Matrix& m)
{
    Matrix r = m;
    auto piv = rref(r);
    std::vector<bool> is_piv(m.cols, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<int> free;
    for (int c = 0; c < m.cols; ++c)
        if (!is_piv[c]) free.push_back(c);
    Matrix ns(m.cols, static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        int f = free[k];
        ns(f, static_cast<int>(k)) = 1;
        for (size_t i = 0; i < piv.size(); ++i) ns(piv[i], static_cast<int>(k)) = -r(static_cast<int>(i), f);
    }
    return ns;
}

Scalar trace(const Matrix& m)
{
    Scalar t = 0;
    for (int i = 0; i < std::min(m.rows, m.cols); ++i) t += m(i, i);
    return t;
}

Matrix vstack(const std::vector<Matrix>& parts)
{
    if (parts.empty()) return {};
    int cols = parts[0].cols, rows = 0;
    for (const auto& p : parts) {
        if (p.cols != cols) throw std::invalid_argument("vstack: column mismatch");
        rows += p.rows;
    }
    Matrix z(rows, cols);
    int r0 = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows; ++i)
            for (int j = 0; j < cols; ++j) z(r0 + i, j) = p(i, j);
        r0 += p.rows;
    }
    return z;
}

Matrix hstack(const std::vector<Matrix>& parts)
{
    if (parts.empty()) return {};
    std::vector<Matrix> t;
    for (const auto& p : parts) t.push_back(transpose(p));
    return transpose(vstack(t));
}

} // namespace brt
