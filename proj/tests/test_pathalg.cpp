#include "doctest.h"

#include "brt/pathalg.hpp"

#include <random>

using namespace brt;

namespace {

PathAlgebraElement random_element(const BratteliDiagram& b, int level, std::mt19937& rng, int density = 3)
{
    PathAlgebraElement a;
    a.level = level;
    std::uniform_int_distribution<int> coef(-9, 9), pick(0, density);
    for (int v = 0; v < b.level_size(level); ++v) {
        auto ps = enumerate_paths(b, {level, v});
        for (const auto& p : ps)
            for (const auto& q : ps)
                if (pick(rng) == 0) a.add({p, q}, coef(rng));
    }
    return a;
}

// brute force: every vertex sequence with consecutive adjacency
int brute_count(const BratteliDiagram& b, VertexRef v)
{
    int count = 0;
    std::vector<int> cur{0};
    auto rec = [&](auto&& self) -> void {
        int lv = static_cast<int>(cur.size()) - 1;
        if (lv == v.level) {
            count += cur.back() == v.index;
            return;
        }
        for (int w = 0; w < b.level_size(lv + 1); ++w)
            if (b.adjacent(lv, cur.back(), w)) {
                cur.push_back(w);
                self(self);
                cur.pop_back();
            }
    };
    rec(rec);
    return count;
}

} // namespace

TEST_CASE("path enumeration examples")
{
    BratteliDiagram br(ChainKind::Brauer, 3);
    int one = br.find(3, Partition{1});
    auto ps = enumerate_paths(br, {3, one});
    REQUIRE(ps.size() == 3);
    // canonical order at level 2 is [2], [1,1], []
    CHECK(br.level(2)[ps[0][2]] == Partition{2});
    CHECK(br.level(2)[ps[1][2]] == Partition{1, 1});
    CHECK(br.level(2)[ps[2][2]] == Partition{});
    CHECK(enumerate_paths(br, {0, 0}).size() == 1);
    CHECK(enumerate_paths(br, {0, 0})[0] == Path{0});

    BratteliDiagram tl(ChainKind::TemperleyLieb, 4);
    CHECK(enumerate_paths(tl, {4, tl.find(4, Partition{2, 2})}).size() == 2);

    GtIndex g(br, {3, one});
    for (int k = 0; k < 3; ++k) CHECK(g.index(g.path(k)) == k);
    CHECK(g.index(Path{0, 0, 0, 0}) == -1 + (g.path(0) == Path{0, 0, 0, 0}));
    GtIndex g2(br, {3, one});
    CHECK(g.paths() == g2.paths());
}

TEST_CASE("path counts match dims and brute force")
{
    for (auto kind : {ChainKind::SymmetricGroup, ChainKind::Brauer, ChainKind::TemperleyLieb}) {
        int n = kind == ChainKind::TemperleyLieb ? 8 : 5;
        BratteliDiagram b(kind, n);
        for (int i = 0; i <= n; ++i) {
            std::uint64_t total = 0;
            for (int v = 0; v < b.level_size(i); ++v) {
                auto ps = enumerate_paths(b, {i, v});
                CHECK(ps.size() == b.dim(i, v));
                CHECK(static_cast<int>(ps.size()) == brute_count(b, {i, v}));
                CHECK(std::is_sorted(ps.begin(), ps.end()));
                total += ps.size() * ps.size();
            }
            CHECK(total == b.algebra_dim(i));
        }
    }
}

TEST_CASE("path algebra product")
{
    BratteliDiagram b(ChainKind::Brauer, 4);
    int one = b.find(3, Partition{1});
    auto ps = enumerate_paths(b, {3, one});
    PathAlgebraElement x, y;
    x.level = y.level = 3;
    x.add({ps[0], ps[1]}, 2);
    y.add({ps[1], ps[2]}, Scalar(3, 5));
    auto z = pa_mul(x, y);
    REQUIRE(z.coeffs.size() == 1);
    CHECK(z.coeffs.at({ps[0], ps[2]}) == Scalar(6, 5));
    CHECK(pa_mul(y, x).coeffs.empty());

    auto e = pa_identity(b, 2);
    CHECK(pa_mul(e, e) == e);

    PathAlgebraElement w;
    w.level = 2;
    CHECK_THROWS_AS(pa_mul(x, w), std::invalid_argument);

    std::mt19937 rng(7);
    for (int t = 0; t < 10; ++t) {
        auto a = random_element(b, 3, rng), c = random_element(b, 3, rng), d = random_element(b, 3, rng);
        CHECK(pa_mul(pa_mul(a, c), d) == pa_mul(a, pa_mul(c, d)));
        auto id = pa_identity(b, 3);
        CHECK(pa_mul(id, a) == a);
        CHECK(pa_mul(a, id) == a);
        // block form turns the product into matrix products
        auto fa = to_blocks(b, a), fc = to_blocks(b, c), fac = to_blocks(b, pa_mul(a, c));
        for (size_t v = 0; v < fa.blocks.size(); ++v) CHECK(fa.blocks[v] * fc.blocks[v] == fac.blocks[v]);
        CHECK(from_blocks(b, fa) == a);
    }
}

TEST_CASE("embedding")
{
    BratteliDiagram b(ChainKind::Brauer, 4);
    for (int i = 0; i < 4; ++i) CHECK(embed(b, pa_identity(b, i)) == pa_identity(b, i + 1));

    PathAlgebraElement p;
    p.level = 1;
    p.add({Path{0, 0}, Path{0, 0}}, 1);
    auto e = embed(b, p);
    CHECK(e.coeffs.size() == 3);
    for (const auto& [k, v] : e.coeffs) CHECK(k.p == k.q);

    CHECK_THROWS_AS(embed(b, pa_identity(b, 4)), std::out_of_range);

    std::mt19937 rng(11);
    for (int t = 0; t < 10; ++t) {
        auto x = random_element(b, 3, rng), y = random_element(b, 3, rng);
        CHECK(embed(b, pa_mul(x, y)) == pa_mul(embed(b, x), embed(b, y)));
        if (!x.coeffs.empty()) CHECK(!embed(b, x).coeffs.empty());
    }
}
