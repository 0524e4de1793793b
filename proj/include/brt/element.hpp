#pragma once

#include "brt/diagrams.hpp"
#include "brt/scalar.hpp"

#include <map>
#include <random>

namespace brt {

// f = sum f(d) d over the diagram basis; zero coefficients are never stored
struct AlgebraElement {
    ChainKind kind = ChainKind::Brauer;
    int n = 0;
    std::map<Diagram, Scalar> coeffs;

    AlgebraElement() = default;
    AlgebraElement(ChainKind k, int size) : kind(k), n(size) {}

    void add(const Diagram& d, const Scalar& v);
    Scalar at(const Diagram& d) const;
    static AlgebraElement delta(const Diagram& d);
    bool operator==(const AlgebraElement&) const = default;
};

AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b);
AlgebraElement operator*(const Scalar& c, const AlgebraElement& a);
// product in the algebra: loops become powers of q
AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, const Scalar& q);

// every basis diagram gets an independent coefficient in -9..9
AlgebraElement random_element(ChainKind kind, int n, std::mt19937_64& rng);

} // namespace brt
