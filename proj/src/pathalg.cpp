#include "brt/pathalg.hpp"

#include <functional>
#include <stdexcept>

namespace brt {

std::vector<Path> enumerate_paths(const BratteliDiagram& b, VertexRef v)
{
    if (v.level < 0 || v.level > b.depth() || v.index < 0 || v.index >= b.level_size(v.level))
        throw std::out_of_range("invalid vertex");
    std::vector<Path> out;
    Path cur{0};
    std::function<void()> rec = [&]() {
        int lv = static_cast<int>(cur.size()) - 1;
        if (lv == v.level) {
            if (cur.back() == v.index) out.push_back(cur);
            return;
        }
        for (int w : b.up(lv, cur.back())) {
            if (b.M(v, {lv + 1, w}) == 0) continue;
            cur.push_back(w);
            rec();
            cur.pop_back();
        }
    };
    rec();
    // up-lists are already in index order, so this is lexicographic
    return out;
}

GtIndex::GtIndex(const BratteliDiagram& b, VertexRef v) : paths_(enumerate_paths(b, v))
{
    for (int k = 0; k < size(); ++k) lookup_[paths_[k]] = k;
}

int GtIndex::index(const Path& p) const
{
    auto it = lookup_.find(p);
    return it == lookup_.end() ? -1 : it->second;
}

void PathAlgebraElement::add(const PathPair& k, const Scalar& v)
{
    if (sgn(v) == 0) return;
    auto [it, fresh] = coeffs.emplace(k, v);
    if (!fresh) {
        it->second += v;
        if (sgn(it->second) == 0) coeffs.erase(it);
    }
}

PathAlgebraElement pa_identity(const BratteliDiagram& b, int level)
{
    PathAlgebraElement e;
    e.level = level;
    for (int v = 0; v < b.level_size(level); ++v)
        for (const auto& p : enumerate_paths(b, {level, v})) e.add({p, p}, 1);
    return e;
}

PathAlgebraElement pa_mul(const PathAlgebraElement& a, const PathAlgebraElement& b)
{
    if (a.level != b.level) throw std::invalid_argument("path algebra level mismatch");
    // index b by its first path
    std::map<Path, std::vector<std::pair<const Path*, const Scalar*>>> by_first;
    for (const auto& [k, v] : b.coeffs) by_first[k.p].emplace_back(&k.q, &v);
    PathAlgebraElement c;
    c.level = a.level;
    for (const auto& [k, v] : a.coeffs) {
        auto it = by_first.find(k.q);
        if (it == by_first.end()) continue;
        for (auto [q2, w] : it->second) c.add({k.p, *q2}, v * *w);
    }
    return c;
}

PathAlgebraElement pa_add(const PathAlgebraElement& a, const PathAlgebraElement& b)
{
    if (a.level != b.level) throw std::invalid_argument("path algebra level mismatch");
    PathAlgebraElement c = a;
    for (const auto& [k, v] : b.coeffs) c.add(k, v);
    return c;
}

PathAlgebraElement embed(const BratteliDiagram& b, const PathAlgebraElement& a)
{
    if (a.level + 1 > b.depth()) throw std::out_of_range("embedding beyond diagram depth");
    PathAlgebraElement c;
    c.level = a.level + 1;
    for (const auto& [k, v] : a.coeffs)
        for (int w : b.up(a.level, k.p.back())) {
            Path p = k.p, q = k.q;
            p.push_back(w);
            q.push_back(w);
            c.add({p, q}, v);
        }
    return c;
}

BlockForm to_blocks(const BratteliDiagram& b, const PathAlgebraElement& a)
{
    BlockForm f;
    f.level = a.level;
    std::vector<GtIndex> idx;
    for (int v = 0; v < b.level_size(a.level); ++v) {
        idx.emplace_back(b, VertexRef{a.level, v});
        f.blocks.emplace_back(idx.back().size(), idx.back().size());
    }
    for (const auto& [k, v] : a.coeffs) {
        int end = k.p.back();
        f.blocks[end](idx[end].index(k.p), idx[end].index(k.q)) = v;
    }
    return f;
}

PathAlgebraElement from_blocks(const BratteliDiagram& b, const BlockForm& f)
{
    PathAlgebraElement a;
    a.level = f.level;
    if (static_cast<int>(f.blocks.size()) != b.level_size(f.level)) throw std::invalid_argument("block count mismatch");
    for (int v = 0; v < b.level_size(f.level); ++v) {
        GtIndex idx(b, {f.level, v});
        const auto& m = f.blocks[v];
        if (m.rows != idx.size() || m.cols != idx.size()) throw std::invalid_argument("block size mismatch");
        for (int r = 0; r < m.rows; ++r)
            for (int c = 0; c < m.cols; ++c) a.add({idx.path(r), idx.path(c)}, m(r, c));
    }
    return a;
}

} // namespace brt
