#pragma once

#include "brt/combinat.hpp"

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace brt {

// perfect matching on 2n points. Internally 0-based: top row 0..n-1, bottom row n..2n-1.
// Strings and pair lists use 1-based points (top 1..n, bottom n+1..2n).
struct Diagram {
    ChainKind kind = ChainKind::Brauer;
    int n = 0;
    std::vector<int> mate;

    static Diagram identity(ChainKind kind, int n);
    // 1-based pairs; validates the kind's constraints
    static Diagram from_pairs(ChainKind kind, int n, const std::vector<std::pair<int, int>>& pairs);
    // "1-4,2-3,5-6"; n is inferred from the largest point
    static Diagram parse(ChainKind kind, const std::string& s);
    // top j joined to bottom images[j-1] (1-based images)
    static Diagram permutation(const std::vector<int>& images);

    std::vector<std::pair<int, int>> pairs() const;
    std::string str() const;
    bool is_permutation() const;
    bool is_planar() const;
    // last top and last bottom point joined, i.e. the image of a size n-1 diagram
    bool in_subalgebra() const;
    Diagram restrict() const;
    Diagram extend() const;
    int top_partner(int j) const { return mate[j - 1]; } // 0-based result

    bool operator==(const Diagram& o) const { return n == o.n && mate == o.mate; }
    auto operator<=>(const Diagram& o) const
    {
        if (auto c = n <=> o.n; c != 0) return c;
        return mate <=> o.mate;
    }
};

struct LoopProduct {
    Diagram diagram;
    int loops = 0;
    bool operator==(const LoopProduct&) const = default;
};

// x drawn on top of y
LoopProduct diagram_mul(const Diagram& x, const Diagram& y);

struct Token {
    char type = 'r'; // 'r' or 'e'
    int i = 1;
    auto operator<=>(const Token&) const = default;
    std::string str() const { return std::string(1, type) + "_" + std::to_string(i); }
};

struct GeneratorWord {
    std::vector<Token> tokens;
    // "id" for the empty word, otherwise e.g. "r_1e_2e_3"
    std::string str() const;
    static GeneratorWord parse(const std::string& s);
    bool operator==(const GeneratorWord&) const = default;
};

Diagram generator(ChainKind kind, Token t, int n);
LoopProduct evaluate(ChainKind kind, const GeneratorWord& w, int n);

// lhs = q^power * rhs
struct Relation {
    std::string name;
    GeneratorWord lhs, rhs;
    int power = 0;
};

std::vector<Relation> relations(ChainKind kind, int n);

struct RelationReport {
    int checked = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

RelationReport check_relations(ChainKind kind, int n);

std::vector<GeneratorWord> factor_set(ChainKind kind, int n);

struct Factorization {
    GeneratorWord y;
    Diagram b;     // size n, lies in the size n-1 subalgebra
    int index = 0; // position of y in factor_set
};

// d = y*b with zero loops, first admissible y in factor_set order
Factorization factor_map(const Diagram& d);
GeneratorWord word_of(const Diagram& d);

// basis diagrams in ascending order
std::vector<Diagram> enumerate_diagrams(ChainKind kind, int n);

} // namespace brt
