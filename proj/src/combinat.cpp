#include "brt/combinat.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace brt {

namespace {

mpq_class frac(const mpz_class& a, const mpz_class& b)
{
    mpq_class r(a, b);
    r.canonicalize();
    return r;
}

} // namespace

std::string to_string(ChainKind k)
{
    switch (k) {
    case ChainKind::SymmetricGroup: return "sn";
    case ChainKind::Brauer: return "brauer";
    case ChainKind::TemperleyLieb: return "tl";
    case ChainKind::BMWStructural: return "bmw";
    }
    return "?";
}

ChainKind parse_chain(const std::string& s)
{
    if (s == "sn") return ChainKind::SymmetricGroup;
    if (s == "brauer") return ChainKind::Brauer;
    if (s == "tl") return ChainKind::TemperleyLieb;
    if (s == "bmw") return ChainKind::BMWStructural;
    throw std::invalid_argument("unknown chain '" + s + "'");
}

Partition::Partition(std::vector<int> p) : parts(std::move(p))
{
    for (size_t k = 0; k < parts.size(); ++k) {
        if (parts[k] < 1 || (k > 0 && parts[k] > parts[k - 1]))
            throw std::invalid_argument("not a partition");
    }
}

int Partition::size() const
{
    int s = 0;
    for (int x : parts) s += x;
    return s;
}

std::string Partition::str() const
{
    std::string s = "[";
    for (size_t k = 0; k < parts.size(); ++k) {
        if (k) s += ',';
        s += std::to_string(parts[k]);
    }
    return s + "]";
}

int jump(const Partition& p)
{
    int j = 0;
    for (int r = 0; r < p.rows(); ++r)
        if (p.part(r) > p.part(r + 1)) ++j;
    return j;
}

bool canonical_less(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return a.size() > b.size();
    return a.parts > b.parts;
}

bool legal_vertex(ChainKind kind, const Partition& p, int level)
{
    if (level < 0) return false;
    int s = p.size();
    switch (kind) {
    case ChainKind::SymmetricGroup: return s == level;
    case ChainKind::TemperleyLieb: return s == level && p.rows() <= 2;
    case ChainKind::Brauer:
    case ChainKind::BMWStructural: return s <= level && (level - s) % 2 == 0;
    }
    return false;
}

namespace {

std::vector<Partition> add_box(const Partition& p)
{
    std::vector<Partition> out;
    for (int r = 0; r <= p.rows(); ++r) {
        if (r > 0 && p.part(r - 1) <= p.part(r)) continue;
        std::vector<int> q = p.parts;
        if (r == p.rows()) q.push_back(1);
        else ++q[r];
        out.emplace_back(std::move(q));
    }
    return out;
}

std::vector<Partition> remove_box(const Partition& p)
{
    std::vector<Partition> out;
    for (int r = 0; r < p.rows(); ++r) {
        if (p.part(r) <= p.part(r + 1)) continue;
        std::vector<int> q = p.parts;
        if (--q[r] == 0) q.pop_back();
        out.emplace_back(std::move(q));
    }
    return out;
}

} // namespace

std::vector<Partition> branch(ChainKind kind, const Partition& p, int i)
{
    if (!legal_vertex(kind, p, i - 1))
        throw std::invalid_argument("invalid vertex " + p.str() + " at level " + std::to_string(i - 1));
    std::vector<Partition> out = add_box(p);
    if (kind == ChainKind::TemperleyLieb)
        std::erase_if(out, [](const Partition& q) { return q.rows() > 2; });
    if (kind == ChainKind::Brauer || kind == ChainKind::BMWStructural) {
        auto rm = remove_box(p);
        out.insert(out.end(), rm.begin(), rm.end());
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

BratteliDiagram::BratteliDiagram(ChainKind kind, int n) : kind_(kind), n_(n)
{
    if (n < 0) throw std::invalid_argument("negative depth");
    levels_.push_back({Partition{}});
    edges_.emplace_back();
    for (int i = 1; i <= n; ++i) {
        std::vector<Partition> lv;
        for (const auto& p : levels_[i - 1])
            for (auto& q : branch(kind, p, i))
                if (std::find(lv.begin(), lv.end(), q) == lv.end()) lv.push_back(q);
        std::sort(lv.begin(), lv.end(), canonical_less);
        levels_.push_back(lv);
        std::vector<std::pair<int, int>> es;
        for (int a = 0; a < static_cast<int>(levels_[i - 1].size()); ++a)
            for (const auto& q : branch(kind, levels_[i - 1][a], i))
                es.emplace_back(a, find(i, q));
        std::sort(es.begin(), es.end());
        edges_.push_back(es);
    }
    up_.resize(n + 1);
    down_.resize(n + 1);
    dims_.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
        up_[i].assign(levels_[i].size(), {});
        down_[i].assign(levels_[i].size(), {});
        dims_[i].assign(levels_[i].size(), 0);
    }
    dims_[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (auto [a, b] : edges_[i]) {
            up_[i - 1][a].push_back(b);
            down_[i][b].push_back(a);
            dims_[i][b] += dims_[i - 1][a];
        }
    // path counts between every pair of levels, by dynamic programming
    mtab_.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        auto& row = mtab_[j];
        size_t sj = levels_[j].size();
        row.resize(n - j + 1);
        row[0].assign(sj, std::vector<std::uint64_t>(sj, 0));
        for (size_t g = 0; g < sj; ++g) row[0][g][g] = 1;
        for (int l = j + 1; l <= n; ++l) {
            row[l - j].assign(sj, std::vector<std::uint64_t>(levels_[l].size(), 0));
            for (size_t g = 0; g < sj; ++g)
                for (auto [a, b] : edges_[l]) row[l - j][g][b] += row[l - j - 1][g][a];
        }
    }
}

int BratteliDiagram::find(int i, const Partition& p) const
{
    if (i < 0 || i > n_) return -1;
    const auto& lv = levels_[i];
    auto it = std::find(lv.begin(), lv.end(), p);
    return it == lv.end() ? -1 : static_cast<int>(it - lv.begin());
}

bool BratteliDiagram::adjacent(int i, int below, int above) const
{
    const auto& u = up(i, below);
    return std::find(u.begin(), u.end(), above) != u.end();
}

std::uint64_t BratteliDiagram::algebra_dim(int i) const
{
    std::uint64_t s = 0;
    for (auto d : dims_.at(i)) s += d * d;
    return s;
}

void BratteliDiagram::check(VertexRef r) const
{
    if (r.level < 0 || r.level > n_ || r.index < 0 || r.index >= level_size(r.level))
        throw std::out_of_range("invalid vertex (" + std::to_string(r.level) + "," + std::to_string(r.index) + ")");
}

std::uint64_t BratteliDiagram::M(VertexRef rho, VertexRef gamma) const
{
    check(rho);
    check(gamma);
    if (gamma.level > rho.level) throw std::invalid_argument("M(rho, gamma) needs level(gamma) <= level(rho)");
    return mtab_[gamma.level][rho.level - gamma.level][gamma.index][rho.index];
}

size_t BratteliDiagram::vertex_count() const
{
    size_t s = 0;
    for (const auto& l : levels_) s += l.size();
    return s;
}

size_t BratteliDiagram::edge_count() const
{
    size_t s = 0;
    for (const auto& e : edges_) s += e.size();
    return s;
}

bool BratteliDiagram::same_structure(const BratteliDiagram& o) const
{
    return n_ == o.n_ && levels_ == o.levels_ && edges_ == o.edges_ && dims_ == o.dims_;
}

std::string to_dot(const BratteliDiagram& b)
{
    std::ostringstream os;
    os << "digraph bratteli {\n";
    for (int i = 0; i <= b.depth(); ++i)
        for (int v = 0; v < b.level_size(i); ++v)
            os << "  v" << i << "_" << v << " [label=\"" << i << ":" << b.level(i)[v].str() << "\"];\n";
    for (int i = 1; i <= b.depth(); ++i)
        for (auto [a, c] : b.edges(i))
            os << "  v" << i - 1 << "_" << a << " -> v" << i << "_" << c << ";\n";
    os << "}\n";
    return os.str();
}

mpz_class odd_double_factorial(int n)
{
    mpz_class r = 1;
    for (int k = 1; k <= 2 * n - 1; k += 2) r *= k;
    return r;
}

mpz_class catalan(int n)
{
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), 2 * n, n);
    return r / (n + 1);
}

mpz_class factorial(int n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class algebra_dimension(ChainKind kind, int n)
{
    switch (kind) {
    case ChainKind::SymmetricGroup: return factorial(n);
    case ChainKind::TemperleyLieb: return catalan(n);
    default: return odd_double_factorial(n);
    }
}

BoundReport paper_bounds(ChainKind kind, int n)
{
    if (n < 1) throw std::invalid_argument("paper_bounds needs n >= 1");
    BoundReport r;
    r.kind = kind;
    r.n = n;
    r.dim = algebra_dimension(kind, n);
    if (kind == ChainKind::SymmetricGroup) return r;
    r.available = true;
    if (kind == ChainKind::TemperleyLieb) {
        r.reduced = frac(n * n * n + 9 * n * n + 8 * n - 12, 6);
        for (int i = 2; i <= n; ++i)
            r.stages.emplace_back(i, frac((4 * i - 6 + 2 * i * i) * (n + 1) * n, i * 2 * n * (2 * n - 1)) * r.dim);
    } else {
        r.reduced = 4 * n * n - n + 4;
        for (int i = 2; i <= n; ++i) r.stages.emplace_back(i, frac(16 * i - 17, 2 * n - 1) * r.dim);
    }
    r.total = r.reduced * r.dim;
    return r;
}

mpq_class general_bound(const std::vector<mpz_class>& dims, const std::vector<mpz_class>& m_max,
                        const std::vector<mpz_class>& irrep_counts, const std::vector<mpz_class>& factor_sizes)
{
    size_t len = dims.size();
    if (len == 0 || m_max.size() != len || irrep_counts.size() != len || factor_sizes.size() != len)
        throw std::invalid_argument("general_bound: inputs must all cover levels 0..n");
    int n = static_cast<int>(len) - 1;
    mpq_class sum = 0;
    for (int k = 1; k <= n; ++k)
        for (int i = 2; i <= k; ++i) {
            mpq_class t = m_max[i - 1] * m_max[i - 1] * irrep_counts[i - 2];
            t *= frac(dims[i], dims[i - 1]);
            t *= frac(dims[k - 1], dims[k]);
            for (int j = i; j <= k; ++j) t *= factor_sizes[j];
            sum += t;
        }
    return sum * dims[n];
}

} // namespace brt
