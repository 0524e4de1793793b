#include "brt/element.hpp"

#include <stdexcept>

namespace brt {

void AlgebraElement::add(const Diagram& d, const Scalar& v)
{
    if (d.n != n) throw std::invalid_argument("diagram size does not match the element");
    if (sgn(v) == 0) return;
    auto [it, fresh] = coeffs.emplace(d, v);
    if (!fresh) {
        it->second += v;
        if (sgn(it->second) == 0) coeffs.erase(it);
    }
}

Scalar AlgebraElement::at(const Diagram& d) const
{
    auto it = coeffs.find(d);
    return it == coeffs.end() ? Scalar(0) : it->second;
}

AlgebraElement AlgebraElement::delta(const Diagram& d)
{
    AlgebraElement f(d.kind, d.n);
    f.add(d, 1);
    return f;
}

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b)
{
    if (a.kind != b.kind || a.n != b.n) throw std::invalid_argument("element chain/size mismatch");
    AlgebraElement c = a;
    for (const auto& [d, v] : b.coeffs) c.add(d, v);
    return c;
}

AlgebraElement operator*(const Scalar& c, const AlgebraElement& a)
{
    AlgebraElement out(a.kind, a.n);
    for (const auto& [d, v] : a.coeffs) out.add(d, c * v);
    return out;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const Scalar& q)
{
    if (a.kind != b.kind || a.n != b.n) throw std::invalid_argument("element chain/size mismatch");
    AlgebraElement c(a.kind, a.n);
    std::vector<Scalar> qpow{1};
    for (const auto& [x, u] : a.coeffs)
        for (const auto& [y, v] : b.coeffs) {
            auto p = diagram_mul(x, y);
            while (static_cast<int>(qpow.size()) <= p.loops) qpow.push_back(qpow.back() * q);
            p.diagram.kind = a.kind;
            c.add(p.diagram, u * v * qpow[p.loops]);
        }
    return c;
}

AlgebraElement random_element(ChainKind kind, int n, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coef(-9, 9);
    AlgebraElement f(kind, n);
    for (const auto& d : enumerate_diagrams(kind, n)) f.add(d, coef(rng));
    return f;
}

} // namespace brt
