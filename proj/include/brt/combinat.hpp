#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace brt {

enum class ChainKind { SymmetricGroup, Brauer, TemperleyLieb, BMWStructural };

std::string to_string(ChainKind k);
// accepts sn, brauer, tl, bmw
ChainKind parse_chain(const std::string& s);

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    Partition(std::initializer_list<int> p) : parts(p) {}
    explicit Partition(std::vector<int> p);

    int size() const;
    int rows() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    int part(int r) const { return r < rows() ? parts[r] : 0; }
    std::string str() const;

    auto operator<=>(const Partition&) const = default;
};

int jump(const Partition& p);
// canonical vertex order within a level: larger size first, then reverse lexicographic
bool canonical_less(const Partition& a, const Partition& b);
bool legal_vertex(ChainKind kind, const Partition& p, int level);
// level-i successors of p (a level-(i-1) vertex), canonical order
std::vector<Partition> branch(ChainKind kind, const Partition& p, int i);

struct VertexRef {
    int level = 0;
    int index = 0;
    auto operator<=>(const VertexRef&) const = default;
};

class BratteliDiagram {
public:
    BratteliDiagram(ChainKind kind, int n);

    ChainKind kind() const { return kind_; }
    int depth() const { return n_; }
    const std::vector<Partition>& level(int i) const { return levels_.at(i); }
    int level_size(int i) const { return static_cast<int>(levels_.at(i).size()); }
    // -1 when absent
    int find(int i, const Partition& p) const;
    // (index at i-1, index at i), for 1 <= i <= depth
    const std::vector<std::pair<int, int>>& edges(int i) const { return edges_.at(i); }
    const std::vector<int>& up(int i, int v) const { return up_.at(i).at(v); }
    const std::vector<int>& down(int i, int v) const { return down_.at(i).at(v); }
    // below at level i, above at level i+1
    bool adjacent(int i, int below, int above) const;

    std::uint64_t dim(int i, int v) const { return dims_.at(i).at(v); }
    std::uint64_t dim(VertexRef r) const { return dim(r.level, r.index); }
    std::uint64_t algebra_dim(int i) const;
    // number of directed paths gamma -> rho; throws std::out_of_range on bad vertices
    std::uint64_t M(VertexRef rho, VertexRef gamma) const;

    size_t vertex_count() const;
    size_t edge_count() const;

    // same levels, edges and dims; the kind label is ignored
    bool same_structure(const BratteliDiagram& o) const;

private:
    void check(VertexRef r) const;

    ChainKind kind_;
    int n_;
    std::vector<std::vector<Partition>> levels_;
    std::vector<std::vector<std::pair<int, int>>> edges_;
    std::vector<std::vector<std::vector<int>>> up_, down_;
    std::vector<std::vector<std::uint64_t>> dims_;
    // mtab_[j][l - j][g][r] = paths from (j,g) to (l,r)
    std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>> mtab_;
};

std::string to_dot(const BratteliDiagram& b);

// graded quiver used for the Hom counts
struct QuiverShape {
    struct Vertex {
        std::string name;
        int grade;
    };
    struct Arrow {
        int source;
        int target;
        std::string label;
    };
    std::vector<Vertex> vertices;
    std::vector<Arrow> arrows;

    int find(const std::string& name) const;
    // returns the existing index for a repeated name; throws on a grade clash
    int add_vertex(const std::string& name, int grade);
    // adds endpoints as needed; throws unless grade strictly increases
    void add_arrow(const std::string& s, int gs, const std::string& t, int gt, const std::string& label = "");
    int top_grade() const;
    bool empty() const { return arrows.empty() && vertices.empty(); }
};

// induced quiver on the symmetric difference / union of arrow sets.
// arrows are identified by (source name, target name, label)
QuiverShape symdiff(const QuiverShape& a, const QuiverShape& b);
QuiverShape quiver_union(const QuiverShape& a, const QuiverShape& b);
// splices out vertices with exactly one arrow in and one out; Hom counts are unchanged
QuiverShape contract_series(const QuiverShape& q);
// grade-preserving isomorphism (small quivers only)
bool isomorphic(const QuiverShape& a, const QuiverShape& b);

// the stage-i quiver H_i^n of the Brauer/TL schedule, 2 <= i <= n
QuiverShape h_quiver(int i, int n);
// component quivers in sigma order: [0] belongs to the level-(n-1) remainder F,
// [k-1] (k >= 2) to the factor family at frame (k-2, k)
std::vector<QuiverShape> sigma_quivers(int n);

std::uint64_t hom_count_brute(const BratteliDiagram& b, const QuiverShape& h, int n);
std::uint64_t hom_count_closed(const BratteliDiagram& b, int i, int n);
// closed upper bound on #Hom(H_i^i) (Brauer or TL)
mpq_class hom_lemma_bound(const BratteliDiagram& b, int i);

mpz_class odd_double_factorial(int n); // (2n-1)!!
mpz_class catalan(int n);
mpz_class factorial(int n);
mpz_class algebra_dimension(ChainKind kind, int n);

struct BoundReport {
    ChainKind kind;
    int n = 0;
    bool available = false; // no published bound for the symmetric group chain here
    mpz_class dim;
    mpq_class reduced;      // bound on ops / dim
    mpq_class total;        // reduced * dim
    // (i, bound on #Hom(H_i^n)) for 2 <= i <= n
    std::vector<std::pair<int, mpq_class>> stages;
};

BoundReport paper_bounds(ChainKind kind, int n);

// all vectors indexed by level 0..n; m_max[i] = max M between levels i and i-1 (entry 0 unused),
// factor_sizes[j] = |B_j| (entry 0 unused)
mpq_class general_bound(const std::vector<mpz_class>& dims, const std::vector<mpz_class>& m_max,
                        const std::vector<mpz_class>& irrep_counts, const std::vector<mpz_class>& factor_sizes);

} // namespace brt
