#include "brt/verify.hpp"

#include "brt/diagrams.hpp"
#include "brt/transform.hpp"

#include <random>
#include <stdexcept>

namespace brt {

namespace {

Scalar power(const Scalar& q, int k)
{
    Scalar x = 1;
    for (int j = 0; j < k; ++j) x *= q;
    return x;
}

SuiteResult relations_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "relations";
    auto diag = check_relations(o.kind, o.n);
    r.failures = diag.failures;
    int matrix_checks = 0;
    if (o.n <= 6) {
        auto rep = build_rep(o.kind, o.n, o.q);
        for (int m = 2; m <= o.n; ++m)
            for (const auto& rel : relations(o.kind, m))
                for (int v = 0; v < rep.bratteli.level_size(m); ++v) {
                    VertexRef vr{m, v};
                    auto prod = [&](const GeneratorWord& w) {
                        Matrix x = Matrix::identity(static_cast<int>(rep.bratteli.dim(vr)));
                        for (Token t : w.tokens) x = x * rep.generator(t, vr);
                        return x;
                    };
                    ++matrix_checks;
                    if (prod(rel.lhs) != power(rep.q, rel.power) * prod(rel.rhs))
                        r.failures.push_back("matrix level: " + rel.name + " at " + rep.bratteli.level(m)[v].str());
                }
    }
    r.summary = std::to_string(diag.checked) + " diagram checks, " + std::to_string(matrix_checks) + " matrix checks";
    return r;
}

SuiteResult factor_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "factor-set";
    auto all = enumerate_diagrams(o.kind, o.n);
    for (const auto& d : all) {
        auto f = factor_map(d);
        if (!f.b.in_subalgebra()) r.failures.push_back(d.str() + ": b not in the subalgebra");
        auto y = evaluate(o.kind, f.y, o.n);
        auto p = diagram_mul(y.diagram, f.b);
        if (y.loops != 0 || p.loops != 0 || !(p.diagram == d)) r.failures.push_back(d.str() + ": factorization does not replay");
    }
    r.summary = std::to_string(all.size()) + " diagrams, |Y| = " + std::to_string(factor_set(o.kind, o.n).size());
    return r;
}

SuiteResult hom_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "hom-counts";
    BratteliDiagram b(o.kind, o.n);
    auto bounds = paper_bounds(o.kind, o.n);
    int checks = 0;
    for (int i = 2; i <= o.n; ++i) {
        auto c = hom_count_closed(b, i, o.n);
        ++checks;
        if (c != hom_count_brute(b, h_quiver(i, o.n), o.n))
            r.failures.push_back("closed form differs from enumeration at i=" + std::to_string(i));
        if (bounds.available) {
            if (mpq_class(mpz_class(c)) > bounds.stages[i - 2].second)
                r.failures.push_back("corollary bound violated at i=" + std::to_string(i));
            BratteliDiagram bi(o.kind, i);
            if (mpq_class(mpz_class(hom_count_closed(bi, i, i))) > hom_lemma_bound(bi, i))
                r.failures.push_back("Hom bound violated at i=" + std::to_string(i));
        }
    }
    r.summary = std::to_string(checks) + " stages";
    return r;
}

SuiteResult ratio_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "hom-ratio";
    BratteliDiagram b(o.kind, o.n);
    for (int i = 2; i <= o.n; ++i) {
        mpq_class lhs(mpz_class(hom_count_closed(b, i, o.n)));
        mpq_class rhs(mpz_class(b.algebra_dim(o.n - 1)) * mpz_class(hom_count_closed(b, i, i)), mpz_class(b.algebra_dim(i - 1)));
        rhs.canonicalize();
        if (lhs != rhs)
            r.failures.push_back("i=" + std::to_string(i) + ": #Hom = " + lhs.get_str() + " but dim ratio * #Hom(H_i^i) = " + rhs.get_str());
    }
    r.summary = "#Hom(H_i^n) = dim(A_{n-1})/dim(A_{i-1}) * #Hom(H_i^i)";
    return r;
}

SuiteResult roundtrip_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "roundtrip";
    if (!within_gram_limit(o.kind, o.n)) {
        r.skipped = true;
        r.summary = "beyond the dual-basis size limit";
        return r;
    }
    auto rep = build_rep(o.kind, o.n, o.q);
    auto dual = gram_dual(rep);
    FourierEngine e(rep);
    std::mt19937_64 rng(o.seed);
    for (int t = 0; t < o.trials; ++t) {
        auto f = random_element(o.kind, o.n, rng);
        if (inverse_ft(e.sov(f).image, rep, dual) != f) r.failures.push_back("trial " + std::to_string(t) + " not recovered");
    }
    r.summary = std::to_string(o.trials) + " random elements";
    return r;
}

SuiteResult bounds_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "bounds";
    auto rep = build_rep(o.kind, o.n, o.q);
    auto plan = sov_plan(o.kind, o.n, rep.bratteli);
    FourierEngine e(rep);
    std::mt19937_64 rng(o.seed);
    std::uint64_t worst = 0;
    for (int t = 0; t < o.trials; ++t) {
        auto f = random_element(o.kind, o.n, rng);
        auto a = e.naive(f), b = e.sov(f);
        worst = std::max(worst, b.ops.mul);
        std::string tag = "trial " + std::to_string(t) + ": ";
        if (a.image != b.image) r.failures.push_back(tag + "SOV and naive images differ");
        if (b.ops.add > b.ops.mul) r.failures.push_back(tag + "more additions than multiplications");
        if (mpq_class(mpz_class(b.ops.mul)) > plan.predicted_total) r.failures.push_back(tag + "multiplications exceed the plan");
        if (plan.paper.available && mpq_class(mpz_class(b.ops.mul)) > plan.paper.total)
            r.failures.push_back(tag + "multiplications exceed the published bound");
    }
    if (plan.paper.available && plan.predicted_total > plan.paper.total) r.failures.push_back("plan exceeds the published bound");
    r.summary = "max sov mul " + std::to_string(worst) + ", predicted " + plan.predicted_total.get_str() +
                (plan.paper.available ? ", bound " + plan.paper.total.get_str() : "");
    return r;
}

SuiteResult semisimple_suite(const VerifyOptions& o)
{
    SuiteResult r;
    r.name = "semisimple";
    auto rep = verify_semisimple(o.kind, o.n, o.q);
    if (!rep.checked) {
        r.skipped = true;
        r.summary = "beyond the Gram size limit";
        return r;
    }
    if (!rep.nondegenerate()) {
        std::string why = "rank regular " + std::to_string(rep.regular_rank) + ", tau " + std::to_string(rep.tau_rank) + ", transform " +
                          std::to_string(rep.transform_rank) + " of " + std::to_string(rep.dim);
        if (!rep.rep_error.empty()) why += " (" + rep.rep_error + ")";
        r.failures.push_back(why);
    }
    r.summary = "dim " + std::to_string(rep.dim);
    return r;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"relations", "factor-set", "hom-counts", "hom-ratio", "roundtrip", "bounds", "semisimple"};
    return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& o)
{
    if (name == "relations") return relations_suite(o);
    if (name == "factor-set") return factor_suite(o);
    if (name == "hom-counts") return hom_suite(o);
    if (name == "hom-ratio") return ratio_suite(o);
    if (name == "roundtrip") return roundtrip_suite(o);
    if (name == "bounds") return bounds_suite(o);
    if (name == "semisimple") return semisimple_suite(o);
    throw std::invalid_argument("unknown suite '" + name + "'");
}

} // namespace brt
