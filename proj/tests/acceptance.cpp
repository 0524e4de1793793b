// One PASS/FAIL line per acceptance criterion; exit status is the number of failures.
#include "brt/combinat.hpp"
#include "brt/diagrams.hpp"
#include "brt/reps.hpp"
#include "brt/transform.hpp"
#include "oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace brt;

namespace {

const Scalar q0(10, 3);

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;
    void fail(const std::string& why)
    {
        pass = false;
        notes.push_back(why);
    }
};

Scalar qpow(const Scalar& q, int k)
{
    Scalar x = 1;
    for (int j = 0; j < k; ++j) x *= q;
    return x;
}

mpz_class big(long long v) { return mpz_class(std::to_string(v)); }

mpz_class brauer_bound(int n) { return mpz_class(4 * n * n - n + 4) * big(oracle::double_factorial(n)); }

mpq_class tl_bound(int n)
{
    mpq_class b(mpz_class(n * n * n + 9 * n * n + 8 * n - 12) * big(oracle::catalan(n)), 6);
    b.canonicalize();
    return b;
}

Outcome dims()
{
    Outcome o;
    for (int n = 1; n <= 7; ++n) {
        BratteliDiagram b(ChainKind::Brauer, n);
        if (b.algebra_dim(n) != static_cast<std::uint64_t>(oracle::double_factorial(n)))
            o.fail("Brauer n=" + std::to_string(n));
    }
    for (int n = 1; n <= 12; ++n) {
        BratteliDiagram b(ChainKind::TemperleyLieb, n);
        if (b.algebra_dim(n) != static_cast<std::uint64_t>(oracle::catalan(n))) o.fail("TL n=" + std::to_string(n));
    }
    return o;
}

void matrix_relations(ChainKind kind, int n, Outcome& o)
{
    auto rep = build_rep(kind, n, q0);
    for (int m = 2; m <= n; ++m)
        for (const auto& rel : relations(kind, m))
            for (int v = 0; v < rep.bratteli.level_size(m); ++v) {
                VertexRef vr{m, v};
                auto prod = [&](const GeneratorWord& w) {
                    Matrix x = Matrix::identity(static_cast<int>(rep.bratteli.dim(vr)));
                    for (Token t : w.tokens) x = x * rep.generator(t, vr);
                    return x;
                };
                if (prod(rel.lhs) != qpow(rep.q, rel.power) * prod(rel.rhs))
                    o.fail(to_string(kind) + " matrix " + rel.name + " at level " + std::to_string(m));
            }
}

Outcome relations_suite()
{
    Outcome o;
    for (int n = 2; n <= 5; ++n)
        for (const auto& f : check_relations(ChainKind::Brauer, n).failures) o.fail("Brauer n=" + std::to_string(n) + ": " + f);
    for (int n = 2; n <= 8; ++n)
        for (const auto& f : check_relations(ChainKind::TemperleyLieb, n).failures) o.fail("TL n=" + std::to_string(n) + ": " + f);
    matrix_relations(ChainKind::Brauer, 4, o);
    matrix_relations(ChainKind::TemperleyLieb, 6, o);
    return o;
}

void totality(ChainKind kind, int n, Outcome& o, int& count)
{
    for (const auto& d : enumerate_diagrams(kind, n)) {
        ++count;
        auto f = factor_map(d);
        auto y = evaluate(kind, f.y, n);
        auto p = oracle::mul(y.diagram, f.b);
        if (!f.b.in_subalgebra() || y.loops || p.loops || !(p.diagram == d)) o.fail(to_string(kind) + " " + d.str());
    }
}

Outcome factor_totality()
{
    Outcome o;
    int br = 0, tl = 0;
    totality(ChainKind::Brauer, 5, o, br);
    for (int n = 1; n <= 8; ++n) totality(ChainKind::TemperleyLieb, n, o, tl);
    if (br != 945) o.fail("expected 945 Brauer diagrams, saw " + std::to_string(br));
    o.notes.push_back(std::to_string(br) + " Brauer, " + std::to_string(tl) + " TL diagrams");
    return o;
}

struct Measured {
    std::uint64_t max_mul = 0, max_add_minus_mul = 0;
    bool adds_ok = true;
};

// criteria 4 and 5 share the random inputs
std::map<std::pair<ChainKind, int>, Measured> measured;

Outcome transform_equality()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::vector<std::pair<ChainKind, int>> cases;
    for (int n = 2; n <= 5; ++n) cases.emplace_back(ChainKind::Brauer, n);
    for (int n = 2; n <= 8; ++n) cases.emplace_back(ChainKind::TemperleyLieb, n);
    int total = 0;
    for (auto [kind, n] : cases) {
        auto rep = build_rep(kind, n, q0);
        FourierEngine e(rep);
        auto& m = measured[{kind, n}];
        for (int t = 0; t < 100; ++t) {
            auto f = random_element(kind, n, rng);
            auto a = e.naive(f), b = e.sov(f);
            ++total;
            if (a.image != b.image) o.fail(to_string(kind) + " n=" + std::to_string(n) + " trial " + std::to_string(t));
            m.max_mul = std::max(m.max_mul, b.ops.mul);
            if (b.ops.add > b.ops.mul) m.adds_ok = false;
        }
    }
    o.notes.push_back(std::to_string(total) + " inputs");
    return o;
}

Outcome bound_conformance()
{
    Outcome o;
    std::ostringstream os;
    for (const auto& [key, m] : measured) {
        auto [kind, n] = key;
        mpq_class bound = kind == ChainKind::Brauer ? mpq_class(brauer_bound(n)) : tl_bound(n);
        std::string tag = to_string(kind) + " n=" + std::to_string(n);
        if (mpq_class(mpz_class(std::to_string(m.max_mul))) > bound) o.fail(tag + ": " + std::to_string(m.max_mul) + " > " + bound.get_str());
        if (!m.adds_ok) o.fail(tag + ": additions exceed multiplications");
        if ((kind == ChainKind::Brauer && n == 4) || (kind == ChainKind::TemperleyLieb && n == 4))
            os << tag << " " << m.max_mul << "<=" << bound.get_str() << " ";
    }
    if (measured.empty()) o.fail("no measurements");
    o.notes.push_back(os.str());
    return o;
}

Outcome hom_counts()
{
    Outcome o;
    int ratio_fail = 0, ratio_checked = 0;
    for (auto [kind, nmax] : {std::pair{ChainKind::Brauer, 5}, std::pair{ChainKind::TemperleyLieb, 8}}) {
        BratteliDiagram b(kind, nmax);
        for (int n = 2; n <= nmax; ++n) {
            mpq_class dim_n(mpz_class(b.algebra_dim(n)));
            for (int i = 2; i <= n; ++i) {
                std::string tag = to_string(kind) + " n=" + std::to_string(n) + " i=" + std::to_string(i);
                auto closed = hom_count_closed(b, i, n);
                if (closed != hom_count_brute(b, h_quiver(i, n), n)) o.fail(tag + ": closed form != enumeration");
                mpq_class cor = kind == ChainKind::Brauer
                                    ? mpq_class(16 * i - 17, 2 * n - 1) * dim_n
                                    : mpq_class((4 * i - 6 + 2 * i * i) * (n + 1) * n, i * 2 * n * (2 * n - 1)) * dim_n;
                if (mpq_class(mpz_class(std::to_string(closed))) > cor) o.fail(tag + ": corollary bound");
                mpq_class ratio(mpz_class(std::to_string(b.algebra_dim(n - 1))) * mpz_class(std::to_string(hom_count_closed(b, i, i))),
                                mpz_class(std::to_string(b.algebra_dim(i - 1))));
                ratio.canonicalize();
                ++ratio_checked;
                if (mpq_class(mpz_class(std::to_string(closed))) != ratio) {
                    if (ratio_fail++ == 0)
                        o.fail("ratio identity: " + tag + " #Hom=" + std::to_string(closed) + " vs " + ratio.get_str());
                }
            }
        }
    }
    if (ratio_fail > 1) o.notes.push_back("ratio identity fails at " + std::to_string(ratio_fail) + " of " + std::to_string(ratio_checked) + " (n,i)");
    return o;
}

Outcome inversion()
{
    Outcome o;
    std::mt19937_64 rng(77);
    std::vector<std::pair<ChainKind, int>> cases{{ChainKind::Brauer, 2}, {ChainKind::Brauer, 3}};
    for (int n = 2; n <= 5; ++n) cases.emplace_back(ChainKind::TemperleyLieb, n);
    for (auto [kind, n] : cases) {
        auto rep = build_rep(kind, n, q0);
        auto dual = gram_dual(rep);
        FourierEngine e(rep);
        for (int t = 0; t < 20; ++t) {
            auto f = random_element(kind, n, rng);
            if (inverse_ft(e.sov(f).image, rep, dual) != f) o.fail(to_string(kind) + " n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome convolution()
{
    Outcome o;
    std::mt19937_64 rng(99);
    for (auto [kind, n] : {std::pair{ChainKind::Brauer, 3}, std::pair{ChainKind::TemperleyLieb, 4}}) {
        auto rep = build_rep(kind, n, q0);
        for (int t = 0; t < 20; ++t) {
            auto f = random_element(kind, n, rng), g = random_element(kind, n, rng);
            auto r = convolution_check(f, g, rep);
            if (!r.ok()) o.fail(to_string(kind) + " pair " + std::to_string(t));
        }
    }
    return o;
}

Outcome bmw()
{
    Outcome o;
    for (int n = 1; n <= 7; ++n)
        if (!BratteliDiagram(ChainKind::BMWStructural, n).same_structure(BratteliDiagram(ChainKind::Brauer, n)))
            o.fail("diagram differs at n=" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        if (sov_plan(ChainKind::BMWStructural, n).predicted_total != sov_plan(ChainKind::Brauer, n).predicted_total)
            o.fail("plan differs at n=" + std::to_string(n));
    return o;
}

Outcome completeness()
{
    Outcome o;
    std::vector<std::pair<ChainKind, int>> cases;
    for (int n = 1; n <= 4; ++n) cases.emplace_back(ChainKind::Brauer, n);
    for (int n = 1; n <= 6; ++n) cases.emplace_back(ChainKind::TemperleyLieb, n);
    for (auto [kind, n] : cases) {
        auto rep = build_rep(kind, n, q0);
        auto basis = enumerate_diagrams(kind, n);
        int dim = static_cast<int>(basis.size());
        Matrix f(dim, dim);
        for (int j = 0; j < dim; ++j) {
            int row = 0;
            for (int v = 0; v < rep.bratteli.level_size(n); ++v)
                for (const auto& x : rep_of_diagram(rep, basis[j], {n, v}).a) f(row++, j) = x;
            if (row != dim) o.fail("block sizes do not add up");
        }
        if (rank(f) != dim) o.fail(to_string(kind) + " n=" + std::to_string(n) + " rank deficient");
    }
    return o;
}

} // namespace

int main()
{
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "dimension identities", dims},
        {2, "relation suites (diagram and matrix level)", relations_suite},
        {3, "factor-set totality", factor_totality},
        {4, "SOV equals naive transform", transform_equality},
        {5, "operation counts within published bounds", bound_conformance},
        {6, "Hom counts, Hom bounds, ratio identity", hom_counts},
        {7, "inversion round trip", inversion},
        {8, "convolution isomorphism", convolution},
        {9, "BMW structure and plan", bmw},
        {10, "completeness of the irreducible set", completeness},
    };
    int failures = 0;
    for (const auto& c : all) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name;
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << secs;
        std::cout << " [" << t.str() << " s]";
        for (size_t k = 0; k < o.notes.size() && k < 4; ++k) std::cout << " | " << o.notes[k];
        std::cout << "\n";
    }
    return failures;
}
