#include "doctest.h"

#include "brt/diagrams.hpp"
#include "oracles.hpp"

#include <random>
#include <set>

using namespace brt;

namespace {

Diagram word(ChainKind k, const std::string& w, int n)
{
    return evaluate(k, GeneratorWord::parse(w), n).diagram;
}

} // namespace

TEST_CASE("products from the figures")
{
    auto x = Diagram::permutation({3, 4, 2, 1}); // (1324)
    auto y = Diagram::permutation({4, 2, 1, 3}); // (143)
    auto p = diagram_mul(x, y);
    CHECK(p.diagram == Diagram::permutation({1, 3, 2, 4}));
    CHECK(p.loops == 0);

    for (int n = 2; n <= 5; ++n) {
        auto e1 = generator(ChainKind::Brauer, {'e', 1}, n);
        auto sq = diagram_mul(e1, e1);
        CHECK(sq.diagram == e1);
        CHECK(sq.loops == 1);
    }
    for (const auto& d : enumerate_diagrams(ChainKind::Brauer, 3)) {
        auto p2 = diagram_mul(Diagram::identity(ChainKind::Brauer, 3), d);
        CHECK(p2.diagram == d);
        CHECK(p2.loops == 0);
    }
    CHECK_THROWS_AS(diagram_mul(Diagram::identity(ChainKind::Brauer, 2), Diagram::identity(ChainKind::Brauer, 3)),
                    std::invalid_argument);
}

TEST_CASE("generators")
{
    CHECK(generator(ChainKind::Brauer, {'r', 1}, 2).str() == "1-4,2-3");
    CHECK(generator(ChainKind::Brauer, {'e', 1}, 2).str() == "1-2,3-4");
    CHECK(generator(ChainKind::TemperleyLieb, {'e', 2}, 3).str() == "1-4,2-3,5-6");
    CHECK_THROWS_AS(generator(ChainKind::Brauer, {'r', 3}, 3), std::out_of_range);
    CHECK_THROWS_AS(generator(ChainKind::SymmetricGroup, {'e', 1}, 3), std::invalid_argument);
    CHECK_THROWS_AS(generator(ChainKind::TemperleyLieb, {'r', 1}, 3), std::invalid_argument);
}

TEST_CASE("canonical strings")
{
    auto d = Diagram::parse(ChainKind::Brauer, "1-3,2-4,5-6,7-8");
    CHECK(d.n == 4);
    CHECK(d.str() == "1-3,2-4,5-6,7-8");
    CHECK_THROWS_AS(Diagram::parse(ChainKind::Brauer, "2-4,1-3,5-6,7-8"), std::invalid_argument);
    CHECK_THROWS_AS(Diagram::parse(ChainKind::Brauer, "1-2,1-3"), std::invalid_argument);
    CHECK_THROWS_AS(Diagram::parse(ChainKind::TemperleyLieb, "1-3,2-4,5-6,7-8"), std::invalid_argument);
    CHECK_THROWS_AS(Diagram::parse(ChainKind::SymmetricGroup, "1-2,3-4"), std::invalid_argument);
    CHECK(GeneratorWord::parse("r_1e_2e_3").str() == "r_1e_2e_3");
    CHECK(GeneratorWord::parse("id").tokens.empty());
}

TEST_CASE("multiplication agrees with the union-find oracle")
{
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_diagrams(ChainKind::Brauer, n);
        for (const auto& x : all)
            for (const auto& y : all) CHECK(diagram_mul(x, y) == oracle::mul(x, y));
    }
    std::mt19937 rng(7);
    for (int n : {4, 5, 6}) {
        auto all = enumerate_diagrams(ChainKind::Brauer, n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int t = 0; t < 300; ++t) {
            const auto& x = all[pick(rng)];
            const auto& y = all[pick(rng)];
            CHECK(diagram_mul(x, y) == oracle::mul(x, y));
        }
    }
}

TEST_CASE("associativity with loop counts")
{
    auto triple = [](const Diagram& a, const Diagram& b, const Diagram& c) {
        auto ab = diagram_mul(a, b);
        auto l = diagram_mul(ab.diagram, c);
        auto bc = diagram_mul(b, c);
        auto r = diagram_mul(a, bc.diagram);
        return l.diagram == r.diagram && ab.loops + l.loops == bc.loops + r.loops;
    };
    for (int n = 1; n <= 3; ++n) {
        auto all = enumerate_diagrams(ChainKind::Brauer, n);
        bool ok = true;
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) ok = ok && triple(a, b, c);
        CHECK(ok);
    }
    std::mt19937 rng(11);
    for (int n : {4, 5}) {
        auto all = enumerate_diagrams(ChainKind::Brauer, n);
        std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
        for (int t = 0; t < 500; ++t) CHECK(triple(all[pick(rng)], all[pick(rng)], all[pick(rng)]));
    }
}

TEST_CASE("basis sizes")
{
    for (int n = 0; n <= 6; ++n) CHECK(static_cast<long long>(enumerate_diagrams(ChainKind::Brauer, n).size()) == oracle::double_factorial(n));
    for (int n = 0; n <= 10; ++n) CHECK(static_cast<long long>(enumerate_diagrams(ChainKind::TemperleyLieb, n).size()) == oracle::catalan(n));
    long long f = 1;
    for (int n = 1; n <= 6; ++n) {
        f *= n;
        CHECK(static_cast<long long>(enumerate_diagrams(ChainKind::SymmetricGroup, n).size()) == f);
    }
    // the planar ones among all Brauer diagrams are exactly the TL basis
    for (int n = 1; n <= 5; ++n) {
        std::vector<Diagram> planar;
        for (auto d : enumerate_diagrams(ChainKind::Brauer, n))
            if (d.is_planar()) {
                d.kind = ChainKind::TemperleyLieb;
                planar.push_back(d);
            }
        CHECK(planar == enumerate_diagrams(ChainKind::TemperleyLieb, n));
    }
}

TEST_CASE("planarity is closed under products")
{
    for (int n = 1; n <= 5; ++n) {
        auto all = enumerate_diagrams(ChainKind::TemperleyLieb, n);
        bool ok = true;
        for (const auto& x : all)
            for (const auto& y : all) ok = ok && diagram_mul(x, y).diagram.is_planar();
        CHECK(ok);
    }
}

TEST_CASE("defining relations")
{
    for (int n = 2; n <= 5; ++n) {
        auto r = check_relations(ChainKind::Brauer, n);
        CHECK(r.ok());
        CHECK(r.checked > 0);
    }
    for (int n = 2; n <= 8; ++n) CHECK(check_relations(ChainKind::TemperleyLieb, n).ok());
    for (int n = 2; n <= 6; ++n) CHECK(check_relations(ChainKind::SymmetricGroup, n).ok());

    auto l = evaluate(ChainKind::Brauer, GeneratorWord::parse("r_1e_2e_1"), 3);
    auto r = evaluate(ChainKind::Brauer, GeneratorWord::parse("r_2e_1"), 3);
    CHECK(l == r);
    CHECK(l.loops == 0);
    CHECK(word(ChainKind::Brauer, "r_1r_3", 4) == word(ChainKind::Brauer, "r_3r_1", 4));
    auto t = evaluate(ChainKind::TemperleyLieb, GeneratorWord::parse("e_2e_1e_2"), 3);
    CHECK(t.diagram == generator(ChainKind::TemperleyLieb, {'e', 2}, 3));
    CHECK(t.loops == 0);
}

TEST_CASE("factor sets")
{
    auto strs = [](const std::vector<GeneratorWord>& ws) {
        std::vector<std::string> s;
        for (const auto& w : ws) s.push_back(w.str());
        return s;
    };
    auto br4 = strs(factor_set(ChainKind::Brauer, 4));
    CHECK(std::vector<std::string>(br4.end() - 6, br4.end()) ==
          std::vector<std::string>{"e_1e_2e_3", "r_1e_2e_3", "r_1r_2e_3", "e_2e_3", "r_2e_3", "e_3"});
    CHECK(std::vector<std::string>(br4.begin(), br4.begin() + 4) ==
          std::vector<std::string>{"id", "r_1r_2r_3", "r_2r_3", "r_3"});
    CHECK(strs(factor_set(ChainKind::TemperleyLieb, 3)) == std::vector<std::string>{"id", "e_2", "e_1e_2"});
    CHECK(strs(factor_set(ChainKind::Brauer, 2)) == std::vector<std::string>{"id", "r_1", "e_1"});
    CHECK(strs(factor_set(ChainKind::SymmetricGroup, 3)) == std::vector<std::string>{"id", "r_1r_2", "r_2"});
}

TEST_CASE("factor_map examples")
{
    auto d = Diagram::parse(ChainKind::Brauer, "1-3,2-4,5-6,7-8");
    auto f = factor_map(d);
    CHECK(f.y.str() == "r_1e_2e_3");
    // the other prefix also factors d
    auto alt = evaluate(ChainKind::Brauer, GeneratorWord::parse("r_2e_3"), 4).diagram;
    bool found = false;
    for (const auto& b : enumerate_diagrams(ChainKind::Brauer, 4))
        if (b.in_subalgebra()) {
            auto p = diagram_mul(alt, b);
            found = found || (p.diagram == d && p.loops == 0);
        }
    CHECK(found);

    for (const auto& s : enumerate_diagrams(ChainKind::SymmetricGroup, 4)) {
        Diagram sb = s;
        sb.kind = ChainKind::Brauer;
        CHECK(factor_map(sb).index < 4);
        CHECK(factor_map(s).b.is_permutation());
    }
    auto low = generator(ChainKind::Brauer, {'e', 1}, 3);
    CHECK(factor_map(low).y.tokens.empty());
    CHECK(factor_map(low).b == low);
}

TEST_CASE("factor_map is total and loop free")
{
    auto check_all = [](ChainKind k, int n) {
        bool ok = true;
        for (const auto& d : enumerate_diagrams(k, n)) {
            auto f = factor_map(d);
            auto y = evaluate(k, f.y, n);
            auto p = diagram_mul(y.diagram, f.b);
            ok = ok && p.diagram == d && y.loops + p.loops == 0 && f.b.in_subalgebra();
            if (k == ChainKind::TemperleyLieb) ok = ok && f.b.is_planar();
        }
        return ok;
    };
    for (int n = 1; n <= 5; ++n) CHECK(check_all(ChainKind::Brauer, n));
    for (int n = 1; n <= 8; ++n) CHECK(check_all(ChainKind::TemperleyLieb, n));
    for (int n = 1; n <= 5; ++n) CHECK(check_all(ChainKind::SymmetricGroup, n));
}

TEST_CASE("word_of replays every diagram")
{
    CHECK(word_of(Diagram::identity(ChainKind::Brauer, 4)).tokens.empty());
    CHECK(word_of(generator(ChainKind::Brauer, {'e', 1}, 2)).str() == "e_1");
    for (auto [k, n] : {std::pair{ChainKind::Brauer, 4}, {ChainKind::Brauer, 5}, {ChainKind::TemperleyLieb, 7},
                        {ChainKind::SymmetricGroup, 5}}) {
        size_t bound = 0;
        for (int m = 2; m <= n; ++m) {
            size_t longest = 0;
            for (const auto& w : factor_set(k, m)) longest = std::max(longest, w.tokens.size());
            bound += longest;
        }
        bool ok = true;
        for (const auto& d : enumerate_diagrams(k, n)) {
            auto w = word_of(d);
            auto e = evaluate(k, w, n);
            ok = ok && e.diagram == d && e.loops == 0 && w.tokens.size() <= bound;
        }
        CHECK(ok);
    }
}
