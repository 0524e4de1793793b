#include "brt/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace brt {

int QuiverShape::find(const std::string& name) const
{
    for (size_t k = 0; k < vertices.size(); ++k)
        if (vertices[k].name == name) return static_cast<int>(k);
    return -1;
}

int QuiverShape::add_vertex(const std::string& name, int grade)
{
    int k = find(name);
    if (k >= 0) {
        if (vertices[k].grade != grade)
            throw std::invalid_argument("vertex '" + name + "' given two grades");
        return k;
    }
    vertices.push_back({name, grade});
    return static_cast<int>(vertices.size()) - 1;
}

void QuiverShape::add_arrow(const std::string& s, int gs, const std::string& t, int gt, const std::string& label)
{
    if (gt <= gs) throw std::invalid_argument("arrow " + s + "->" + t + " does not increase grade");
    int a = add_vertex(s, gs);
    int b = add_vertex(t, gt);
    arrows.push_back({a, b, label});
}

int QuiverShape::top_grade() const
{
    int g = 0;
    for (const auto& v : vertices) g = std::max(g, v.grade);
    return g;
}

namespace {

using ArrowKey = std::tuple<std::string, std::string, std::string>;

struct KeyedArrow {
    ArrowKey key;
    int gs, gt;
};

std::vector<KeyedArrow> keyed(const QuiverShape& q)
{
    std::vector<KeyedArrow> out;
    for (const auto& a : q.arrows) {
        const auto& s = q.vertices[a.source];
        const auto& t = q.vertices[a.target];
        out.push_back({{s.name, t.name, a.label}, s.grade, t.grade});
    }
    return out;
}

void check_gradings(const QuiverShape& a, const QuiverShape& b)
{
    for (const auto& v : a.vertices) {
        int k = b.find(v.name);
        if (k >= 0 && b.vertices[k].grade != v.grade)
            throw std::invalid_argument("incompatible gradings at vertex '" + v.name + "'");
    }
}

QuiverShape combine(const QuiverShape& a, const QuiverShape& b, bool keep_common)
{
    check_gradings(a, b);
    auto ka = keyed(a), kb = keyed(b);
    std::set<ArrowKey> sa, sb;
    for (const auto& x : ka) sa.insert(x.key);
    for (const auto& x : kb) sb.insert(x.key);
    QuiverShape out;
    std::set<ArrowKey> seen;
    auto emit = [&](const KeyedArrow& x) {
        if (!seen.insert(x.key).second) return;
        out.add_arrow(std::get<0>(x.key), x.gs, std::get<1>(x.key), x.gt, std::get<2>(x.key));
    };
    for (const auto& x : ka)
        if (keep_common || !sb.count(x.key)) emit(x);
    for (const auto& x : kb)
        if (keep_common || !sa.count(x.key)) emit(x);
    return out;
}

} // namespace

QuiverShape symdiff(const QuiverShape& a, const QuiverShape& b)
{
    return combine(a, b, false);
}

QuiverShape quiver_union(const QuiverShape& a, const QuiverShape& b)
{
    return combine(a, b, true);
}

QuiverShape contract_series(const QuiverShape& q)
{
    // work on (source, target) pairs by name; labels of merged arrows get joined
    struct A {
        std::string s, t, label;
        int gs, gt;
    };
    std::vector<A> arrows;
    for (const auto& a : q.arrows)
        arrows.push_back({q.vertices[a.source].name, q.vertices[a.target].name, a.label,
                          q.vertices[a.source].grade, q.vertices[a.target].grade});
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& v : q.vertices) {
            int in = -1, out = -1, nin = 0, nout = 0;
            for (int k = 0; k < static_cast<int>(arrows.size()); ++k) {
                if (arrows[k].t == v.name) { in = k; ++nin; }
                if (arrows[k].s == v.name) { out = k; ++nout; }
            }
            if (nin != 1 || nout != 1) continue;
            A merged{arrows[in].s, arrows[out].t, arrows[in].label + "." + arrows[out].label, arrows[in].gs,
                     arrows[out].gt};
            arrows.erase(arrows.begin() + std::max(in, out));
            arrows.erase(arrows.begin() + std::min(in, out));
            arrows.push_back(merged);
            changed = true;
            break;
        }
    }
    QuiverShape out;
    for (const auto& a : arrows) out.add_arrow(a.s, a.gs, a.t, a.gt, a.label);
    return out;
}

bool isomorphic(const QuiverShape& a, const QuiverShape& b)
{
    int nv = static_cast<int>(a.vertices.size());
    if (nv != static_cast<int>(b.vertices.size()) || a.arrows.size() != b.arrows.size()) return false;
    std::map<std::pair<int, int>, int> eb;
    for (const auto& x : b.arrows) ++eb[{x.source, x.target}];
    std::vector<int> img(nv, -1);
    std::vector<bool> used(nv, false);
    std::function<bool(int)> go = [&](int v) -> bool {
        if (v == nv) {
            std::map<std::pair<int, int>, int> ea;
            for (const auto& x : a.arrows) ++ea[{img[x.source], img[x.target]}];
            return ea == eb;
        }
        for (int w = 0; w < nv; ++w) {
            if (used[w] || b.vertices[w].grade != a.vertices[v].grade) continue;
            used[w] = true;
            img[v] = w;
            if (go(v + 1)) return true;
            used[w] = false;
        }
        return false;
    };
    return go(0);
}

QuiverShape h_quiver(int i, int n)
{
    if (i < 2 || i > n) throw std::invalid_argument("stage i must satisfy 2 <= i <= n");
    // names follow the root / beta (old path) / alpha (new path) labelling
    const std::string root = "0";
    const std::string b2 = i == 2 ? root : "beta_" + std::to_string(i - 2);
    const std::string b1 = "beta_" + std::to_string(i - 1);
    const std::string bn = i == n ? b1 : "beta_" + std::to_string(n - 1);
    const std::string a1 = "alpha_" + std::to_string(i - 1);
    const std::string a0 = "alpha_" + std::to_string(i);
    QuiverShape h;
    h.add_arrow(root, 0, a1, i - 1);
    h.add_arrow(a1, i - 1, a0, i);
    h.add_arrow(b2, i - 2, b1, i - 1);
    if (i != n) h.add_arrow(b1, i - 1, bn, n - 1);
    h.add_arrow(b2, i - 2, a1, i - 1, i == 2 ? "cross" : "");
    h.add_arrow(b1, i - 1, a0, i);
    h.add_arrow(root, 0, bn, n - 1, "long");
    return h;
}

std::vector<QuiverShape> sigma_quivers(int n)
{
    if (n < 2) throw std::invalid_argument("sigma_quivers needs n >= 2");
    auto b = [](int k) { return "b" + std::to_string(k); };
    auto t = [](int k) { return "t" + std::to_string(k); };
    std::vector<QuiverShape> out;
    QuiverShape f;
    for (int k = 0; k + 1 <= n - 1; ++k) f.add_arrow(b(k), k, b(k + 1), k + 1);
    f.add_arrow(b(0), 0, b(n - 1), n - 1, "long");
    // start of the new row, and the cross arrow the first factor consumes
    f.add_arrow(b(0), 0, t(1), 1, "row");
    f.add_arrow(b(0), 0, t(1), 1);
    out.push_back(f);
    for (int k = 2; k <= n; ++k) {
        QuiverShape d;
        d.add_arrow(b(k - 2), k - 2, b(k - 1), k - 1);
        d.add_arrow(b(k - 1), k - 1, t(k), k);
        d.add_arrow(b(k - 2), k - 2, t(k - 1), k - 1);
        d.add_arrow(t(k - 1), k - 1, t(k), k);
        out.push_back(d);
    }
    return out;
}

std::uint64_t hom_count_brute(const BratteliDiagram& b, const QuiverShape& h, int n)
{
    if (h.top_grade() > n || n > b.depth()) throw std::invalid_argument("quiver exceeds diagram depth");
    int nv = static_cast<int>(h.vertices.size());
    std::vector<int> order(nv);
    for (int k = 0; k < nv; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return h.vertices[x].grade < h.vertices[y].grade; });

    // explicit path walk; deliberately not the dynamic-programming table
    std::map<std::tuple<int, int, int, int>, std::uint64_t> memo;
    std::function<std::uint64_t(int, int, int, int)> walk = [&](int gl, int gv, int tl, int tv) -> std::uint64_t {
        if (gl == tl) return gv == tv ? 1 : 0;
        auto key = std::make_tuple(gl, gv, tl, tv);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::uint64_t c = 0;
        for (int w : b.up(gl, gv)) c += walk(gl + 1, w, tl, tv);
        memo[key] = c;
        return c;
    };

    std::vector<int> img(nv, -1);
    std::function<std::uint64_t(int)> go = [&](int k) -> std::uint64_t {
        if (k == nv) {
            std::uint64_t prod = 1;
            for (const auto& a : h.arrows) {
                prod *= walk(h.vertices[a.source].grade, img[a.source], h.vertices[a.target].grade, img[a.target]);
                if (prod == 0) return 0;
            }
            return prod;
        }
        int v = order[k];
        std::uint64_t total = 0;
        for (int w = 0; w < b.level_size(h.vertices[v].grade); ++w) {
            img[v] = w;
            // prune on arrows whose endpoints are both placed
            bool dead = false;
            for (const auto& a : h.arrows) {
                if ((a.source == v || a.target == v) && img[a.source] >= 0 && img[a.target] >= 0 &&
                    walk(h.vertices[a.source].grade, img[a.source], h.vertices[a.target].grade, img[a.target]) == 0) {
                    dead = true;
                    break;
                }
            }
            if (!dead) total += go(k + 1);
        }
        img[v] = -1;
        return total;
    };
    return go(0);
}

std::uint64_t hom_count_closed(const BratteliDiagram& b, int i, int n)
{
    if (i < 2 || i > n) throw std::invalid_argument("stage i must satisfy 2 <= i <= n");
    if (n > b.depth()) throw std::invalid_argument("diagram too shallow");
    std::uint64_t total = 0;
    for (int a1 = 0; a1 < b.level_size(i - 1); ++a1)
        for (int a0 = 0; a0 < b.level_size(i); ++a0) {
            std::uint64_t m_aa = b.M({i, a0}, {i - 1, a1});
            if (!m_aa) continue;
            for (int b2 = 0; b2 < b.level_size(i - 2); ++b2) {
                std::uint64_t m_ab2 = b.M({i - 1, a1}, {i - 2, b2});
                if (!m_ab2) continue;
                for (int b1 = 0; b1 < b.level_size(i - 1); ++b1) {
                    std::uint64_t t = m_aa * m_ab2 * b.M({i - 1, b1}, {i - 2, b2}) * b.M({i, a0}, {i - 1, b1});
                    if (!t) continue;
                    for (int bn = 0; bn < b.level_size(n - 1); ++bn)
                        total += t * b.M({n - 1, bn}, {i - 1, b1}) * b.dim(i - 1, a1) * b.dim(n - 1, bn);
                }
            }
        }
    return total;
}

mpq_class hom_lemma_bound(const BratteliDiagram& b, int i)
{
    if (i < 2 || i > b.depth()) throw std::invalid_argument("stage out of range");
    mpq_class lead(mpz_class(b.algebra_dim(i - 1)) * mpz_class(b.algebra_dim(i - 1)), mpz_class(b.algebra_dim(i - 2)));
    lead.canonicalize();
    mpq_class sum = 0;
    bool brauer = b.kind() == ChainKind::Brauer || b.kind() == ChainKind::BMWStructural;
    for (int v = 0; v < b.level_size(i - 1); ++v) {
        mpz_class j = jump(b.level(i - 1)[v]);
        mpz_class d = mpz_class(b.dim(i - 1, v));
        mpz_class w = brauer ? mpz_class(4 * j * j + 2 * j + 1) : mpz_class(j * j);
        sum += w * d * d;
    }
    if (brauer) lead *= 2;
    return lead + sum;
}

} // namespace brt
