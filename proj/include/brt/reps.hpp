#pragma once

#include "brt/combinat.hpp"
#include "brt/diagrams.hpp"
#include "brt/element.hpp"
#include "brt/pathalg.hpp"
#include "brt/scalar.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace brt {

// the chosen q is not generic enough for the construction
struct ParameterError : std::domain_error {
    using std::domain_error::domain_error;
};

// generator data on the two-step paths mu -> . -> nu around level i
struct LocalBlock {
    Token token;
    int level = 0;            // i, the token index
    int mu = 0;               // vertex index at level i-1
    int nu = 0;               // vertex index at level i+1
    std::vector<int> middles; // level-i vertices adjacent to both, canonical order
    Matrix m;
};

using BlockKey = std::tuple<char, int, int, int>; // token type, i, mu, nu

struct AdaptedRep {
    ChainKind kind = ChainKind::Brauer;
    int n = 0;
    Scalar q;
    BratteliDiagram bratteli{ChainKind::Brauer, 0};
    std::map<BlockKey, LocalBlock> blocks;
    // gens[k][v][token]: level-k irreducible v, every token with index < k.
    // the oracle fills only level n
    std::vector<std::vector<std::map<Token, Matrix>>> gens;

    const Matrix& generator(Token t, VertexRef v) const;
    const LocalBlock& block(Token t, int mu, int nu) const;
};

// tokens r_1.., e_1.. of the size-n algebra, in that order
std::vector<Token> chain_tokens(ChainKind kind, int n);

// exact specialization of the chain; throws ParameterError when q is not generic
AdaptedRep build_rep(ChainKind kind, int n, const Scalar& q);
std::vector<LocalBlock> local_blocks(ChainKind kind, int n, const Scalar& q);

Matrix assemble_matrix(const AdaptedRep& rep, Token t, VertexRef v);
// product of generator matrices along word_of(d)
Matrix rep_of_diagram(const AdaptedRep& rep, const Diagram& d, VertexRef v);

// decomposes the left-regular representation directly (small sizes only)
AdaptedRep oracle_irreps(ChainKind kind, int n, const Scalar& q);

// true when some diagonal change of basis carries every matrix of a onto b
bool diagonal_equivalent(const std::map<Token, Matrix>& a, const std::map<Token, Matrix>& b);

// tau = sum over irreducibles of the trace
Scalar trace_tau(const AdaptedRep& rep, const AlgebraElement& a);

struct DualBasis {
    std::vector<Diagram> basis;
    // a_j* = sum_k coef(k, j) a_k
    Matrix coef;
};

// throws ParameterError when the trace form is degenerate
DualBasis gram_dual(const AdaptedRep& rep);
// Gram inversion is dense; beyond these sizes it is refused
bool within_gram_limit(ChainKind kind, int n);

struct SemisimpleReport {
    int dim = 0;
    bool checked = false;        // false beyond the Gram limit
    int regular_rank = 0;        // trace form of the left-regular representation
    bool rep_built = false;
    std::string rep_error;
    int tau_rank = 0;
    int transform_rank = 0;
    bool nondegenerate() const
    {
        return checked && regular_rank == dim && rep_built && tau_rank == dim && transform_rank == dim;
    }
};

SemisimpleReport verify_semisimple(ChainKind kind, int n, const Scalar& q);

// left-regular representation on the diagram basis, column j = image of basis[j]
Matrix regular_matrix(const std::vector<Diagram>& basis, const Diagram& d, const Scalar& q);

} // namespace brt
