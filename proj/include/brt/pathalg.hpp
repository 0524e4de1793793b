#pragma once

#include "brt/combinat.hpp"
#include "brt/scalar.hpp"

#include <compare>
#include <map>
#include <vector>

namespace brt {

// vertex index at each level 0..i
using Path = std::vector<int>;

// all root -> v paths, lexicographic in the canonical vertex order
std::vector<Path> enumerate_paths(const BratteliDiagram& b, VertexRef v);

// fixed bijection between the paths to v and 0..d_v-1
class GtIndex {
public:
    GtIndex(const BratteliDiagram& b, VertexRef v);
    int size() const { return static_cast<int>(paths_.size()); }
    const Path& path(int k) const { return paths_.at(k); }
    int index(const Path& p) const; // -1 when p does not end at v
    const std::vector<Path>& paths() const { return paths_; }

private:
    std::vector<Path> paths_;
    std::map<Path, int> lookup_;
};

struct PathPair {
    Path p, q;
    // endpoint-major ordering
    auto operator<=>(const PathPair& o) const
    {
        if (auto c = p.back() <=> o.p.back(); c != 0) return c;
        if (auto c = p <=> o.p; c != 0) return c;
        return q <=> o.q;
    }
    bool operator==(const PathPair&) const = default;
};

struct PathAlgebraElement {
    int level = 0;
    std::map<PathPair, Scalar> coeffs; // no zero entries

    void add(const PathPair& k, const Scalar& v);
    bool operator==(const PathAlgebraElement&) const = default;
};

PathAlgebraElement pa_identity(const BratteliDiagram& b, int level);
PathAlgebraElement pa_mul(const PathAlgebraElement& a, const PathAlgebraElement& b);
PathAlgebraElement pa_add(const PathAlgebraElement& a, const PathAlgebraElement& b);
PathAlgebraElement embed(const BratteliDiagram& b, const PathAlgebraElement& a);

// one d_v x d_v matrix per level vertex, rows/cols in GtIndex order
struct BlockForm {
    int level = 0;
    std::vector<Matrix> blocks;
    bool operator==(const BlockForm&) const = default;
};

BlockForm to_blocks(const BratteliDiagram& b, const PathAlgebraElement& a);
PathAlgebraElement from_blocks(const BratteliDiagram& b, const BlockForm& f);

} // namespace brt
