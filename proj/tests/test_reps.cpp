#include "doctest.h"

#include "brt/reps.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace brt;

namespace {

const Scalar q0(10, 3);

Matrix word_matrix(const AdaptedRep& rep, const GeneratorWord& w, VertexRef v)
{
    Matrix m = Matrix::identity(static_cast<int>(rep.bratteli.dim(v)));
    for (Token t : w.tokens) m = m * rep.generator(t, v);
    return m;
}

Scalar qpow(const Scalar& q, int k)
{
    Scalar x = 1;
    for (int j = 0; j < k; ++j) x *= q;
    return x;
}

} // namespace

TEST_CASE("Brauer n=2 one-dimensional irreducibles")
{
    auto rep = build_rep(ChainKind::Brauer, 2, q0);
    const auto& b = rep.bratteli;
    auto check = [&](const Partition& p, Scalar r, Scalar e) {
        VertexRef v{2, b.find(2, p)};
        CHECK(rep.generator({'r', 1}, v) == Scalar(r) * Matrix::identity(1));
        CHECK(rep.generator({'e', 1}, v) == Scalar(e) * Matrix::identity(1));
    };
    check(Partition{}, 1, q0);
    check(Partition{2}, 1, 0);
    check(Partition{1, 1}, -1, 0);
    VertexRef empty{2, b.find(2, Partition{})};
    CHECK(rep_of_diagram(rep, generator(ChainKind::Brauer, {'e', 1}, 2), empty)(0, 0) == q0);
    CHECK(rep_of_diagram(rep, Diagram::identity(ChainKind::Brauer, 2), empty) == Matrix::identity(1));
}

TEST_CASE("Temperley-Lieb n=2 eigenvalues")
{
    auto rep = build_rep(ChainKind::TemperleyLieb, 2, q0);
    std::vector<Scalar> ev;
    for (int v = 0; v < rep.bratteli.level_size(2); ++v) ev.push_back(rep.generator({'e', 1}, {2, v})(0, 0));
    std::sort(ev.begin(), ev.end());
    CHECK(ev == std::vector<Scalar>{0, q0});
}

TEST_CASE("relations hold at the matrix level")
{
    struct Case {
        ChainKind kind;
        int n;
    };
    for (auto c : {Case{ChainKind::SymmetricGroup, 5}, Case{ChainKind::Brauer, 4}, Case{ChainKind::TemperleyLieb, 6}}) {
        auto rep = build_rep(c.kind, c.n, q0);
        for (int m = 2; m <= c.n; ++m)
            for (const auto& rel : relations(c.kind, m))
                for (int v = 0; v < rep.bratteli.level_size(m); ++v) {
                    VertexRef vr{m, v};
                    CHECK_MESSAGE(word_matrix(rep, rel.lhs, vr) == qpow(rep.q, rel.power) * word_matrix(rep, rel.rhs, vr),
                                  rel.name);
                }
    }
}

TEST_CASE("adaptedness and block locality")
{
    for (auto kind : {ChainKind::SymmetricGroup, ChainKind::Brauer, ChainKind::TemperleyLieb}) {
        int n = kind == ChainKind::TemperleyLieb ? 7 : 5;
        auto rep = build_rep(kind, n, q0);
        const auto& b = rep.bratteli;
        for (int v = 0; v < b.level_size(n); ++v) {
            GtIndex gt(b, {n, v});
            for (Token t : chain_tokens(kind, n)) {
                const Matrix& m = rep.generator(t, {n, v});
                CHECK(m == assemble_matrix(rep, t, {n, v}));
                for (int r = 0; r < m.rows; ++r)
                    for (int c = 0; c < m.cols; ++c) {
                        Path pr = gt.path(r), pc = gt.path(c);
                        pr[t.i] = pc[t.i] = -1;
                        if (pr != pc) CHECK(sgn(m(r, c)) == 0);
                    }
                if (t.i >= n - 1) continue;
                // block equal to the level n-1 matrix of the same generator
                for (int r = 0; r < m.rows; ++r)
                    for (int c = 0; c < m.cols; ++c) {
                        const Path& pr = gt.path(r);
                        const Path& pc = gt.path(c);
                        if (pr[n - 1] != pc[n - 1]) continue;
                        GtIndex low(b, {n - 1, pr[n - 1]});
                        int lr = low.index(Path(pr.begin(), pr.end() - 1));
                        int lc = low.index(Path(pc.begin(), pc.end() - 1));
                        CHECK(m(r, c) == rep.generator(t, {n - 1, pr[n - 1]})(lr, lc));
                    }
            }
        }
        for (const auto& [key, lb] : rep.blocks) {
            CHECK(lb.m.rows == static_cast<int>(lb.middles.size()));
            for (int w : lb.middles) {
                CHECK(b.adjacent(lb.level - 1, lb.mu, w));
                CHECK(b.adjacent(lb.level, w, lb.nu));
            }
        }
    }
}

TEST_CASE("assemble_matrix errors")
{
    auto rep = build_rep(ChainKind::Brauer, 3, q0);
    CHECK_THROWS_AS(assemble_matrix(rep, {'r', 3}, {3, 0}), std::out_of_range);
    CHECK_THROWS_AS(assemble_matrix(rep, {'r', 1}, {3, 99}), std::out_of_range);
    CHECK_THROWS_AS(build_rep(ChainKind::BMWStructural, 3, q0), std::invalid_argument);
}

TEST_CASE("rep_of_diagram is multiplicative")
{
    std::mt19937 rng(3);
    for (auto kind : {ChainKind::Brauer, ChainKind::TemperleyLieb, ChainKind::SymmetricGroup}) {
        for (int n = 1; n <= 5; ++n) {
            auto rep = build_rep(kind, n, q0);
            auto basis = enumerate_diagrams(kind, n);
            std::vector<std::pair<int, int>> pairs;
            if (n <= 3) {
                for (size_t i = 0; i < basis.size(); ++i)
                    for (size_t j = 0; j < basis.size(); ++j) pairs.emplace_back(i, j);
            } else {
                std::uniform_int_distribution<int> pick(0, static_cast<int>(basis.size()) - 1);
                for (int k = 0; k < 30; ++k) pairs.emplace_back(pick(rng), pick(rng));
            }
            for (int v = 0; v < rep.bratteli.level_size(n); ++v) {
                VertexRef vr{n, v};
                std::map<int, Matrix> cache;
                auto img = [&](int i) -> const Matrix& {
                    auto it = cache.find(i);
                    if (it == cache.end()) it = cache.emplace(i, rep_of_diagram(rep, basis[i], vr)).first;
                    return it->second;
                };
                for (auto [i, j] : pairs) {
                    auto p = oracle::mul(basis[i], basis[j]);
                    CHECK(img(i) * img(j) == qpow(rep.q, p.loops) * rep_of_diagram(rep, p.diagram, vr));
                }
            }
        }
    }
}

TEST_CASE("two factorizations give the same matrix")
{
    auto rep = build_rep(ChainKind::Brauer, 4, q0);
    auto d = Diagram::parse(ChainKind::Brauer, "1-3,2-4,5-6,7-8");
    std::vector<std::pair<GeneratorWord, Diagram>> found;
    for (const char* w : {"r_1e_2e_3", "r_2e_3"}) {
        auto y = evaluate(ChainKind::Brauer, GeneratorWord::parse(w), 4).diagram;
        for (const auto& b : enumerate_diagrams(ChainKind::Brauer, 4)) {
            if (!b.in_subalgebra()) continue;
            auto p = diagram_mul(y, b);
            if (p.loops == 0 && p.diagram == d) {
                found.emplace_back(GeneratorWord::parse(w), b);
                break;
            }
        }
    }
    REQUIRE(found.size() == 2);
    for (int v = 0; v < rep.bratteli.level_size(4); ++v) {
        VertexRef vr{4, v};
        Matrix a = word_matrix(rep, found[0].first, vr) * rep_of_diagram(rep, found[0].second, vr);
        Matrix b = word_matrix(rep, found[1].first, vr) * rep_of_diagram(rep, found[1].second, vr);
        CHECK(a == b);
        CHECK(a == rep_of_diagram(rep, d, vr));
    }
}

TEST_CASE("regular representation oracle")
{
    struct Case {
        ChainKind kind;
        int n;
    };
    for (auto c : {Case{ChainKind::Brauer, 2}, Case{ChainKind::Brauer, 3}, Case{ChainKind::Brauer, 4},
                   Case{ChainKind::TemperleyLieb, 4}, Case{ChainKind::TemperleyLieb, 6}, Case{ChainKind::SymmetricGroup, 4}}) {
        auto orc = oracle_irreps(c.kind, c.n, q0);
        auto rep = build_rep(c.kind, c.n, q0);
        std::uint64_t sq = 0;
        for (int v = 0; v < rep.bratteli.level_size(c.n); ++v) {
            const auto& g = orc.gens[c.n][v];
            int d = g.empty() ? 1 : g.begin()->second.rows;
            CHECK(static_cast<std::uint64_t>(d) == rep.bratteli.dim(c.n, v));
            sq += static_cast<std::uint64_t>(d) * d;
            CHECK(diagonal_equivalent(g, rep.gens[c.n][v]));
        }
        CHECK(sq == rep.bratteli.algebra_dim(c.n));
    }
    auto orc = oracle_irreps(ChainKind::Brauer, 2, q0);
    std::set<std::pair<Scalar, Scalar>> got;
    for (int v = 0; v < 3; ++v) got.emplace(orc.gens[2][v].at({'r', 1})(0, 0), orc.gens[2][v].at({'e', 1})(0, 0));
    CHECK(got == std::set<std::pair<Scalar, Scalar>>{{1, q0}, {1, 0}, {-1, 0}});
}

TEST_CASE("diagonal equivalence detects genuine differences")
{
    Matrix a(2, 2), b(2, 2);
    a(0, 1) = 2;
    a(1, 0) = 3;
    b(0, 1) = 1;
    b(1, 0) = 6;
    CHECK(diagonal_equivalent({{Token{'r', 1}, a}}, {{Token{'r', 1}, b}}));
    b(1, 0) = 5;
    CHECK_FALSE(diagonal_equivalent({{Token{'r', 1}, a}}, {{Token{'r', 1}, b}}));
}

TEST_CASE("trace form and dual basis")
{
    std::mt19937_64 rng(5);
    struct Case {
        ChainKind kind;
        int n;
    };
    for (auto c : {Case{ChainKind::Brauer, 2}, Case{ChainKind::Brauer, 3}, Case{ChainKind::TemperleyLieb, 3},
                   Case{ChainKind::TemperleyLieb, 5}}) {
        auto rep = build_rep(c.kind, c.n, q0);
        Scalar sum_d = 0;
        for (int v = 0; v < rep.bratteli.level_size(c.n); ++v) sum_d += rep.bratteli.dim(c.n, v);
        CHECK(trace_tau(rep, AlgebraElement::delta(Diagram::identity(c.kind, c.n))) == sum_d);

        auto dual = gram_dual(rep);
        int dim = static_cast<int>(dual.basis.size());
        for (int j = 0; j < dim; ++j) {
            AlgebraElement aj(c.kind, c.n);
            for (int k = 0; k < dim; ++k) aj.add(dual.basis[k], dual.coef(k, j));
            for (int i = 0; i < dim; ++i) {
                auto prod = multiply(AlgebraElement::delta(dual.basis[i]), aj, rep.q);
                CHECK(trace_tau(rep, prod) == (i == j ? 1 : 0));
            }
        }
        for (int k = 0; k < 5; ++k) {
            auto f = random_element(c.kind, c.n, rng), g = random_element(c.kind, c.n, rng);
            CHECK(trace_tau(rep, multiply(f, g, rep.q)) == trace_tau(rep, multiply(g, f, rep.q)));
        }
    }
    CHECK_THROWS_AS(gram_dual(build_rep(ChainKind::Brauer, 5, q0)), std::length_error);
}

TEST_CASE("semisimplicity report")
{
    auto r = verify_semisimple(ChainKind::Brauer, 3, q0);
    CHECK(r.nondegenerate());
    CHECK(r.regular_rank == 15);

    auto z = verify_semisimple(ChainKind::TemperleyLieb, 4, 0);
    CHECK_FALSE(z.nondegenerate());
    CHECK(z.regular_rank < z.dim);
    CHECK_FALSE(z.rep_built);

    auto s = verify_semisimple(ChainKind::SymmetricGroup, 4, 0);
    CHECK(s.nondegenerate());

    auto big = verify_semisimple(ChainKind::Brauer, 6, q0);
    CHECK_FALSE(big.checked);
}

TEST_CASE("parameter errors")
{
    // q = 3 has no rational t with t + 1/t = q
    CHECK_THROWS_AS(build_rep(ChainKind::TemperleyLieb, 3, 3), ParameterError);
    // q = 2 makes two Brauer eigenvalue labels collide at level 3
    CHECK_THROWS_AS(build_rep(ChainKind::Brauer, 3, 2), ParameterError);
    // q = 1: the cell modules still diagonalize, but the algebra is not semisimple
    CHECK_NOTHROW(build_rep(ChainKind::Brauer, 3, 1));
    auto r = verify_semisimple(ChainKind::Brauer, 3, 1);
    CHECK(r.rep_built);
    CHECK(r.regular_rank < r.dim);
    CHECK(r.transform_rank < r.dim);
    CHECK_FALSE(r.nondegenerate());
}
