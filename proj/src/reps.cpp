#include "brt/reps.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace brt {

namespace {

std::string vertex_name(const BratteliDiagram& b, int level, int v)
{
    return b.level(level)[v].str() + "@" + std::to_string(level);
}

// the box of b missing from a (b has exactly one more box)
std::pair<int, int> added_box(const Partition& a, const Partition& b)
{
    for (int r = 0; r < b.rows(); ++r)
        if (b.part(r) == a.part(r) + 1) return {r, a.part(r)};
    throw std::logic_error("partitions do not differ by one box");
}

int content(std::pair<int, int> box) { return box.second - box.first; }

std::vector<int> middles(const BratteliDiagram& b, int i, int mu, int nu)
{
    std::vector<int> out;
    for (int w : b.up(i - 1, mu))
        if (b.adjacent(i, w, nu)) out.push_back(w);
    return out;
}

// Young's seminormal form for s_i on the frame (mu, nu)
Matrix seminormal_block(const BratteliDiagram& b, int i, int mu, int nu, const std::vector<int>& mids)
{
    const auto& lo = b.level(i - 1)[mu];
    const auto& hi = b.level(i + 1)[nu];
    auto axial = [&](int w) {
        const auto& mid = b.level(i)[w];
        return content(added_box(mid, hi)) - content(added_box(lo, mid));
    };
    if (mids.size() == 1) {
        Matrix m(1, 1);
        int a = axial(mids[0]);
        if (a != 1 && a != -1) throw std::logic_error("single middle with non-adjacent boxes");
        m(0, 0) = a; // same row: +1, same column: -1
        return m;
    }
    if (mids.size() != 2) throw std::logic_error("symmetric group frame with more than two middles");
    int a0 = axial(mids[0]);
    int p = a0 > 0 ? 0 : 1, pp = 1 - p;
    Scalar a = a0 > 0 ? a0 : -a0;
    Matrix m(2, 2);
    m(p, p) = 1 / a;
    m(pp, pp) = -1 / a;
    m(pp, p) = 1;
    m(p, pp) = 1 - 1 / (a * a);
    return m;
}

// incremental row echelon span over Scalar
class SpanBuilder {
public:
    explicit SpanBuilder(int dim) : dim_(dim) {}
    bool add(std::vector<Scalar> v)
    {
        for (size_t k = 0; k < rows_.size(); ++k) {
            const Scalar& c = v[pivots_[k]];
            if (sgn(c) == 0) continue;
            Scalar f = c;
            for (int j = 0; j < dim_; ++j)
                if (sgn(rows_[k][j]) != 0) v[j] -= f * rows_[k][j];
        }
        int p = 0;
        while (p < dim_ && sgn(v[p]) == 0) ++p;
        if (p == dim_) return false;
        Scalar inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        // keep earlier rows reduced against the new pivot
        for (auto& r : rows_) {
            if (sgn(r[p]) == 0) continue;
            Scalar f = r[p];
            for (int j = 0; j < dim_; ++j)
                if (sgn(v[j]) != 0) r[j] -= f * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    int size() const { return static_cast<int>(rows_.size()); }

private:
    int dim_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivots_;
};

std::vector<Scalar> column(const Matrix& m, int c)
{
    std::vector<Scalar> v(m.rows);
    for (int r = 0; r < m.rows; ++r) v[r] = m(r, c);
    return v;
}

Matrix from_columns(const std::vector<std::vector<Scalar>>& cols, int rows)
{
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int c = 0; c < m.cols; ++c)
        for (int r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    return m;
}

bool is_scalar_matrix(const Matrix& m, Scalar& value)
{
    value = m.rows ? m(0, 0) : Scalar(0);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j)
            if (m(i, j) != (i == j ? value : Scalar(0))) return false;
    return true;
}

// basis of the common eigenspace of ops[k] with eigenvalues labels[k]
Matrix joint_eigenspace(const std::vector<Matrix>& ops, const std::vector<Scalar>& labels, int dim)
{
    Matrix k = Matrix::identity(dim);
    for (size_t j = 0; j < ops.size() && k.cols > 0; ++j) {
        Matrix shifted = ops[j];
        for (int d = 0; d < dim; ++d) shifted(d, d) -= labels[j];
        Matrix n = nullspace(shifted * k);
        k = k * n;
    }
    return k;
}

// s_{jk} and e_{jk} on m points (1-based, j < k)
Diagram transposition(int m, int j, int k)
{
    std::vector<int> img(m);
    for (int p = 0; p < m; ++p) img[p] = p + 1;
    std::swap(img[j - 1], img[k - 1]);
    Diagram d = Diagram::permutation(img);
    d.kind = ChainKind::Brauer;
    return d;
}

Diagram contraction(int m, int j, int k)
{
    std::vector<std::pair<int, int>> pairs{{j, k}, {m + j, m + k}};
    for (int p = 1; p <= m; ++p)
        if (p != j && p != k) pairs.emplace_back(p, m + p);
    return Diagram::from_pairs(ChainKind::Brauer, m, pairs);
}

// t with t + 1/t = q, needed for the Hecke-style Jucys-Murphy elements
Scalar hecke_t(const Scalar& q)
{
    Scalar disc = q * q - 4;
    if (sgn(disc) <= 0) throw ParameterError("q = " + to_string(q) + ": Temperley-Lieb construction needs q = t + 1/t with rational t != +-1");
    mpz_class num = disc.get_num(), den = disc.get_den();
    mpz_class rn = sqrt(num), rd = sqrt(den);
    if (rn * rn != num || rd * rd != den)
        throw ParameterError("q = " + to_string(q) + ": Temperley-Lieb construction needs q = t + 1/t with rational t");
    Scalar t = (q + Scalar(rn, rd)) / 2;
    t.canonicalize();
    return t;
}

// cell module of the level-m vertex lam: half diagrams (arcs + free points) tensored with
// an irreducible of the symmetric group on the free points
class CellModule {
public:
    CellModule(ChainKind kind, int m, const Partition& lam, const Scalar& q, const AdaptedRep* sym)
        : kind_(kind), m_(m), q_(q), sym_(sym)
    {
        int arcs = kind == ChainKind::TemperleyLieb ? lam.part(1) : (m - lam.size()) / 2;
        free_ = m - 2 * arcs;
        if (kind == ChainKind::Brauer) {
            spin_ = {free_, sym->bratteli.find(free_, lam)};
            spin_dim_ = static_cast<int>(sym->bratteli.dim(spin_));
        }
        std::vector<int> h(m, -2);
        std::function<void(int, int)> rec = [&](int p, int left) {
            while (p < m && h[p] != -2) ++p;
            if (p == m) {
                if (left == 0 && (kind != ChainKind::TemperleyLieb || planar(h))) {
                    index_[h] = static_cast<int>(halves_.size());
                    halves_.push_back(h);
                }
                return;
            }
            int used_free = 0;
            for (int x : h) used_free += x == -1;
            if (used_free < free_) {
                h[p] = -1;
                rec(p + 1, left);
                h[p] = -2;
            }
            if (left > 0)
                for (int r = p + 1; r < m; ++r) {
                    if (h[r] != -2) continue;
                    h[p] = r;
                    h[r] = p;
                    rec(p + 1, left - 1);
                    h[p] = h[r] = -2;
                }
        };
        rec(0, arcs);
    }

    int dim() const { return static_cast<int>(halves_.size()) * spin_dim_; }

    Matrix act(const Diagram& d) const
    {
        Matrix out(dim(), dim());
        std::vector<Scalar> qpow{1};
        for (size_t hi = 0; hi < halves_.size(); ++hi) {
            const auto& h = halves_[hi];
            std::vector<int> res(m_, -2), perm;
            std::vector<char> seen(m_, 0);
            int free_out = 0;
            for (int p = 0; p < m_; ++p) {
                if (res[p] != -2) continue;
                int x = d.mate[p];
                if (x < m_) {
                    res[p] = x;
                    res[x] = p;
                    continue;
                }
                int j = x - m_;
                while (true) {
                    seen[j] = 1;
                    if (h[j] == -1) {
                        res[p] = -1;
                        ++free_out;
                        perm.push_back(free_rank(h, j) + 1);
                        break;
                    }
                    int jj = h[j];
                    seen[jj] = 1;
                    int y = d.mate[jj + m_];
                    if (y < m_) {
                        res[p] = y;
                        res[y] = p;
                        break;
                    }
                    j = y - m_;
                }
            }
            if (free_out < free_) continue; // free points got joined: acts by zero
            int loops = 0;
            for (int j = 0; j < m_; ++j) {
                if (seen[j]) continue;
                ++loops;
                int c = j;
                do {
                    seen[c] = 1;
                    int cc = h[c];
                    seen[cc] = 1;
                    c = d.mate[cc + m_] - m_;
                } while (c != j);
            }
            while (static_cast<int>(qpow.size()) <= loops) qpow.push_back(qpow.back() * q_);
            int ho = index_.at(res);
            Matrix s = spin_matrix(perm);
            for (int a = 0; a < spin_dim_; ++a)
                for (int b = 0; b < spin_dim_; ++b)
                    if (sgn(s(a, b)) != 0) out(ho * spin_dim_ + a, static_cast<int>(hi) * spin_dim_ + b) += qpow[loops] * s(a, b);
        }
        return out;
    }

private:
    static bool planar(const std::vector<int>& h)
    {
        for (int a = 0; a < static_cast<int>(h.size()); ++a) {
            int b = h[a];
            if (b <= a) continue;
            for (int c = a + 1; c < b; ++c)
                if (h[c] < a || h[c] > b) return false; // free inside or crossing
        }
        return true;
    }

    static int free_rank(const std::vector<int>& h, int j)
    {
        int r = 0;
        for (int k = 0; k < j; ++k) r += h[k] == -1;
        return r;
    }

    Matrix spin_matrix(const std::vector<int>& perm) const
    {
        if (kind_ == ChainKind::TemperleyLieb) {
            for (size_t a = 0; a < perm.size(); ++a)
                if (perm[a] != static_cast<int>(a) + 1) throw std::logic_error("planar action permuted free points");
            return Matrix::identity(1);
        }
        auto it = spin_cache_.find(perm);
        if (it != spin_cache_.end()) return it->second;
        Matrix s = perm.empty() ? Matrix::identity(1) : rep_of_diagram(*sym_, Diagram::permutation(perm), spin_);
        spin_cache_.emplace(perm, s);
        return s;
    }

    ChainKind kind_;
    int m_;
    Scalar q_;
    const AdaptedRep* sym_;
    int free_ = 0;
    VertexRef spin_;
    int spin_dim_ = 1;
    std::vector<std::vector<int>> halves_;
    std::map<std::vector<int>, int> index_;
    mutable std::map<std::vector<int>, Matrix> spin_cache_;
};

// Jucys-Murphy elements y_1..y_m through an action map
std::vector<Matrix> jm_elements(ChainKind kind, int m, int dim, const Scalar& t, const std::function<Matrix(const Diagram&)>& act)
{
    std::vector<Matrix> y;
    if (kind == ChainKind::TemperleyLieb) {
        Matrix l = Matrix::identity(dim);
        y.push_back(l);
        for (int k = 1; k < m; ++k) {
            Matrix g = t * Matrix::identity(dim) - act(generator(kind, Token{'e', k}, m));
            l = g * l * g;
            y.push_back(l);
        }
        return y;
    }
    for (int k = 1; k <= m; ++k) {
        Matrix s(dim, dim);
        for (int j = 1; j < k; ++j) {
            s = s + act(transposition(m, j, k));
            if (kind == ChainKind::Brauer) s = s - act(contraction(m, j, k));
        }
        y.push_back(s);
    }
    return y;
}

void check_supported(ChainKind kind)
{
    if (kind == ChainKind::BMWStructural) throw std::invalid_argument("no representation data for the BMW chain (structural support only)");
}

void build_symmetric(AdaptedRep& rep)
{
    const auto& b = rep.bratteli;
    for (int i = 1; i < rep.n; ++i)
        for (int mu = 0; mu < b.level_size(i - 1); ++mu)
            for (int nu = 0; nu < b.level_size(i + 1); ++nu) {
                auto mids = middles(b, i, mu, nu);
                if (mids.empty()) continue;
                LocalBlock lb{Token{'r', i}, i, mu, nu, mids, seminormal_block(b, i, mu, nu, mids)};
                rep.blocks.emplace(BlockKey{'r', i, mu, nu}, std::move(lb));
            }
    for (int k = 0; k <= rep.n; ++k) {
        rep.gens.emplace_back(b.level_size(k));
        for (int v = 0; v < b.level_size(k); ++v)
            for (Token t : chain_tokens(rep.kind, k)) rep.gens[k][v][t] = assemble_matrix(rep, t, {k, v});
    }
}

// one level of the Gel'fand-Tsetlin adaptation for the diagram chains
void adapt_level(AdaptedRep& rep, int m, const Scalar& t, const AdaptedRep* sym, std::vector<std::vector<Scalar>>& casimir)
{
    const auto& b = rep.bratteli;
    auto tokens = chain_tokens(rep.kind, m);
    rep.gens.emplace_back(b.level_size(m));
    casimir.emplace_back(b.level_size(m));
    for (int lam = 0; lam < b.level_size(m); ++lam) {
        CellModule mod(rep.kind, m, b.level(m)[lam], rep.q, sym);
        int dim = mod.dim();
        if (dim != static_cast<int>(b.dim(m, lam))) throw std::logic_error("cell module dimension mismatch at " + vertex_name(b, m, lam));
        auto act = [&](const Diagram& d) { return mod.act(d); };
        auto y = jm_elements(rep.kind, m, dim, t, act);
        Matrix cas(dim, dim);
        for (const auto& yk : y) cas = cas + yk;
        if (!is_scalar_matrix(cas, casimir[m][lam])) throw std::logic_error("Casimir not central on " + vertex_name(b, m, lam));

        GtIndex gt(b, {m, lam});
        std::vector<std::vector<Scalar>> cols;
        for (const auto& p : gt.paths()) {
            std::vector<Scalar> labels;
            for (int k = 1; k <= m; ++k) labels.push_back(casimir[k][p[k]] - casimir[k - 1][p[k - 1]]);
            Matrix e = joint_eigenspace(y, labels, dim);
            if (e.cols != 1) {
                std::ostringstream os;
                os << "q = " << to_string(rep.q) << " is not generic: joint eigenspace of dimension " << e.cols << " at "
                   << vertex_name(b, m, lam);
                throw ParameterError(os.str());
            }
            cols.push_back(column(e, 0));
        }
        Matrix s = from_columns(cols, dim), sinv;
        try {
            sinv = inverse(s);
        } catch (const std::domain_error&) {
            throw ParameterError("q = " + to_string(rep.q) + ": eigenvectors dependent at " + vertex_name(b, m, lam));
        }
        std::map<Token, Matrix> x;
        for (Token tk : tokens) x[tk] = sinv * mod.act(generator(rep.kind, tk, m)) * s;

        // rescale so the restriction to each level-(m-1) block reproduces the lower level exactly
        std::vector<Scalar> scale(dim, 0);
        std::vector<int> group(dim), local(dim);
        std::map<int, GtIndex> lower;
        for (int p = 0; p < dim; ++p) {
            const Path& path = gt.path(p);
            group[p] = path[m - 1];
            auto it = lower.try_emplace(group[p], b, VertexRef{m - 1, group[p]}).first;
            local[p] = it->second.index(Path(path.begin(), path.end() - 1));
        }
        for (int p0 = 0; p0 < dim; ++p0) {
            if (sgn(scale[p0]) != 0) continue;
            scale[p0] = 1;
            std::vector<int> queue{p0};
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int p = queue[qi];
                for (Token tk : chain_tokens(rep.kind, m - 1)) {
                    const Matrix& r = rep.gens[m - 1][group[p]].at(tk);
                    for (int qq = 0; qq < dim; ++qq) {
                        if (group[qq] != group[p] || sgn(scale[qq]) != 0) continue;
                        const Scalar& target = r(local[qq], local[p]);
                        if (sgn(target) == 0) continue;
                        const Scalar& have = x[tk](qq, p);
                        if (sgn(have) == 0) throw std::logic_error("support mismatch while normalizing " + vertex_name(b, m, lam));
                        scale[qq] = scale[p] * have / target;
                        queue.push_back(qq);
                    }
                }
            }
        }
        for (auto& [tk, mat] : x)
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c)
                    if (sgn(mat(r, c)) != 0) mat(r, c) = mat(r, c) * scale[c] / scale[r];

        for (Token tk : tokens) {
            const Matrix& mat = x[tk];
            if (tk.i < m - 1) {
                for (int r = 0; r < dim; ++r)
                    for (int c = 0; c < dim; ++c) {
                        Scalar want = group[r] == group[c] ? rep.gens[m - 1][group[r]].at(tk)(local[r], local[c]) : Scalar(0);
                        if (mat(r, c) != want) throw std::logic_error("restriction is not adapted at " + vertex_name(b, m, lam));
                    }
                continue;
            }
            // top token: read off the two-step frame blocks
            std::map<int, std::vector<std::vector<char>>> filled;
            for (int r = 0; r < dim; ++r)
                for (int c = 0; c < dim; ++c) {
                    const Path& pr = gt.path(r);
                    const Path& pc = gt.path(c);
                    bool same_prefix = std::equal(pr.begin(), pr.begin() + (m - 1), pc.begin());
                    if (!same_prefix) {
                        if (sgn(mat(r, c)) != 0) throw std::logic_error("generator not block-local at " + vertex_name(b, m, lam));
                        continue;
                    }
                    int mu = pr[m - 2];
                    BlockKey key{tk.type, m - 1, mu, lam};
                    auto it = rep.blocks.find(key);
                    if (it == rep.blocks.end()) {
                        auto mids = middles(b, m - 1, mu, lam);
                        int sz = static_cast<int>(mids.size());
                        it = rep.blocks.emplace(key, LocalBlock{tk, m - 1, mu, lam, mids, Matrix(sz, sz)}).first;
                        filled[mu].assign(sz, std::vector<char>(sz, 0));
                    }
                    auto& lb = it->second;
                    int a = static_cast<int>(std::find(lb.middles.begin(), lb.middles.end(), pr[m - 1]) - lb.middles.begin());
                    int bb = static_cast<int>(std::find(lb.middles.begin(), lb.middles.end(), pc[m - 1]) - lb.middles.begin());
                    auto& f = filled[mu];
                    if (!f[a][bb]) {
                        lb.m(a, bb) = mat(r, c);
                        f[a][bb] = 1;
                    } else if (lb.m(a, bb) != mat(r, c)) {
                        throw std::logic_error("frame block depends on the path prefix at " + vertex_name(b, m, lam));
                    }
                }
        }
        rep.gens[m][lam] = std::move(x);
    }
}

} // namespace

const Matrix& AdaptedRep::generator(Token t, VertexRef v) const
{
    if (v.level < 0 || v.level >= static_cast<int>(gens.size()) || v.index < 0 ||
        v.index >= static_cast<int>(gens[v.level].size()))
        throw std::out_of_range("no representation data at this vertex");
    auto it = gens[v.level][v.index].find(t);
    if (it == gens[v.level][v.index].end()) throw std::out_of_range("unknown token " + t.str() + " at this level");
    return it->second;
}

const LocalBlock& AdaptedRep::block(Token t, int mu, int nu) const
{
    auto it = blocks.find(BlockKey{t.type, t.i, mu, nu});
    if (it == blocks.end()) throw std::out_of_range("no local block for " + t.str());
    return it->second;
}

std::vector<Token> chain_tokens(ChainKind kind, int n)
{
    std::vector<Token> out;
    if (kind != ChainKind::TemperleyLieb)
        for (int i = 1; i < n; ++i) out.push_back({'r', i});
    if (kind != ChainKind::SymmetricGroup)
        for (int i = 1; i < n; ++i) out.push_back({'e', i});
    return out;
}

AdaptedRep build_rep(ChainKind kind, int n, const Scalar& q)
{
    check_supported(kind);
    if (n < 0) throw std::invalid_argument("negative size");
    AdaptedRep rep;
    rep.kind = kind;
    rep.n = n;
    rep.q = kind == ChainKind::SymmetricGroup ? Scalar(1) : q;
    rep.bratteli = BratteliDiagram(kind, n);
    if (kind == ChainKind::SymmetricGroup) {
        build_symmetric(rep);
        return rep;
    }
    Scalar t = 0;
    if (kind == ChainKind::TemperleyLieb && n >= 2) t = hecke_t(q);
    AdaptedRep sym;
    if (kind == ChainKind::Brauer) sym = build_rep(ChainKind::SymmetricGroup, n, 1);
    std::vector<std::vector<Scalar>> casimir{{Scalar(0)}};
    rep.gens.emplace_back(1);
    for (int m = 1; m <= n; ++m) adapt_level(rep, m, t, &sym, casimir);
    // the blocks alone must regenerate every stored matrix
    for (int m = 2; m <= n; ++m)
        for (int v = 0; v < rep.bratteli.level_size(m); ++v)
            for (const auto& [tk, mat] : rep.gens[m][v])
                if (assemble_matrix(rep, tk, {m, v}) != mat) throw std::logic_error("assembled matrix disagrees with the adapted one");
    return rep;
}

std::vector<LocalBlock> local_blocks(ChainKind kind, int n, const Scalar& q)
{
    auto rep = build_rep(kind, n, q);
    std::vector<LocalBlock> out;
    for (auto& [k, lb] : rep.blocks) out.push_back(lb);
    return out;
}

Matrix assemble_matrix(const AdaptedRep& rep, Token t, VertexRef v)
{
    const auto& b = rep.bratteli;
    if (v.level < 0 || v.level > b.depth() || v.index < 0 || v.index >= b.level_size(v.level))
        throw std::out_of_range("unknown vertex");
    if (t.i < 1 || t.i >= v.level) throw std::out_of_range("token " + t.str() + " is not below this vertex");
    GtIndex gt(b, v);
    int d = gt.size();
    Matrix out(d, d);
    // paths that agree off level i share a key
    std::map<Path, std::vector<int>> classes;
    for (int p = 0; p < d; ++p) {
        Path key = gt.path(p);
        key[t.i] = -1;
        classes[key].push_back(p);
    }
    for (const auto& [key, members] : classes) {
        const LocalBlock& lb = rep.block(t, key[t.i - 1], key[t.i + 1]);
        auto pos = [&](int p) {
            int w = gt.path(p)[t.i];
            return static_cast<int>(std::find(lb.middles.begin(), lb.middles.end(), w) - lb.middles.begin());
        };
        for (int r : members)
            for (int c : members) out(r, c) = lb.m(pos(r), pos(c));
    }
    return out;
}

Matrix rep_of_diagram(const AdaptedRep& rep, const Diagram& d, VertexRef v)
{
    if (d.n != v.level) throw std::invalid_argument("diagram size does not match the vertex level");
    Diagram dd = d;
    dd.kind = rep.kind;
    if (rep.kind == ChainKind::TemperleyLieb && !d.is_planar()) throw std::invalid_argument("diagram is not planar");
    if (rep.kind == ChainKind::SymmetricGroup && !d.is_permutation()) throw std::invalid_argument("diagram is not a permutation");
    auto w = word_of(dd);
    int dim = static_cast<int>(rep.bratteli.dim(v));
    Matrix out = Matrix::identity(dim);
    for (auto it = w.tokens.rbegin(); it != w.tokens.rend(); ++it) out = rep.generator(*it, v) * out;
    int loops = evaluate(rep.kind, w, d.n).loops;
    if (loops > 0) {
        Scalar s = 1;
        for (int k = 0; k < loops; ++k) s /= rep.q;
        out = s * out;
    }
    return out;
}

Matrix regular_matrix(const std::vector<Diagram>& basis, const Diagram& d, const Scalar& q)
{
    std::map<Diagram, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    int n = static_cast<int>(basis.size());
    Matrix out(n, n);
    for (int j = 0; j < n; ++j) {
        auto p = diagram_mul(d, basis[j]);
        Scalar c = 1;
        for (int k = 0; k < p.loops; ++k) c *= q;
        out(index.at(p.diagram), j) += c;
    }
    return out;
}

AdaptedRep oracle_irreps(ChainKind kind, int n, const Scalar& q)
{
    check_supported(kind);
    AdaptedRep rep;
    rep.kind = kind;
    rep.n = n;
    rep.q = kind == ChainKind::SymmetricGroup ? Scalar(1) : q;
    rep.bratteli = BratteliDiagram(kind, n);
    const auto& b = rep.bratteli;
    Scalar t = 0;
    if (kind == ChainKind::TemperleyLieb && n >= 2) t = hecke_t(q);

    auto basis = enumerate_diagrams(kind, n);
    int big = static_cast<int>(basis.size());
    auto tokens = chain_tokens(kind, n);
    std::map<Token, Matrix> reg;
    for (Token tk : tokens) reg[tk] = regular_matrix(basis, generator(kind, tk, n), rep.q);
    auto reg_y = jm_elements(kind, n, big, t, [&](const Diagram& d) { return regular_matrix(basis, d, rep.q); });

    // eigenvalue of the k-th Jucys-Murphy element along one edge, from box contents
    auto label = [&](int k, int u, int v) -> Scalar {
        const auto& lo = b.level(k - 1)[u];
        const auto& hi = b.level(k)[v];
        if (hi.size() > lo.size()) {
            int c = content(added_box(lo, hi));
            if (kind != ChainKind::TemperleyLieb) return c;
            Scalar x = 1;
            for (int j = 0; j < 2 * std::abs(c); ++j) x *= t;
            return c >= 0 ? x : 1 / x;
        }
        return 1 - rep.q - content(added_box(hi, lo));
    };
    auto labels_of = [&](const Path& p) {
        std::vector<Scalar> ls;
        for (int k = 1; k <= n; ++k) ls.push_back(label(k, p[k - 1], p[k]));
        return ls;
    };

    rep.gens.assign(n + 1, {});
    rep.gens[n].resize(b.level_size(n));
    for (int lam = 0; lam < b.level_size(n); ++lam) {
        GtIndex gt(b, {n, lam});
        int d = gt.size();
        Matrix e = joint_eigenspace(reg_y, labels_of(gt.path(0)), big);
        if (e.cols == 0) throw ParameterError("q = " + to_string(rep.q) + ": empty eigenspace in the regular representation");
        // the submodule generated by one eigenvector is a copy of the irreducible
        SpanBuilder span(big);
        std::vector<std::vector<Scalar>> gens_cols{column(e, 0)};
        span.add(gens_cols[0]);
        for (size_t k = 0; k < gens_cols.size(); ++k) {
            Matrix v = from_columns({gens_cols[k]}, big);
            for (Token tk : tokens) {
                auto w = column(reg[tk] * v, 0);
                if (span.add(w)) gens_cols.push_back(w);
            }
        }
        if (static_cast<int>(gens_cols.size()) != d)
            throw ParameterError("q = " + to_string(rep.q) + ": regular decomposition failed at " + vertex_name(b, n, lam));
        Matrix basis_m = from_columns(gens_cols, big);
        Matrix bt = transpose(basis_m);
        Matrix proj = inverse(bt * basis_m) * bt; // left inverse on the submodule
        auto restrict_op = [&](const Matrix& op) { return proj * (op * basis_m); };
        std::vector<Matrix> y;
        for (const auto& yk : reg_y) y.push_back(restrict_op(yk));
        std::vector<std::vector<Scalar>> cols;
        for (const auto& p : gt.paths()) {
            Matrix ev = joint_eigenspace(y, labels_of(p), d);
            if (ev.cols != 1) throw ParameterError("q = " + to_string(rep.q) + " is not generic for the regular decomposition");
            cols.push_back(column(ev, 0));
        }
        Matrix s = from_columns(cols, d);
        Matrix sinv = inverse(s);
        for (Token tk : tokens) rep.gens[n][lam][tk] = sinv * restrict_op(reg[tk]) * s;
    }
    return rep;
}

bool diagonal_equivalent(const std::map<Token, Matrix>& a, const std::map<Token, Matrix>& b)
{
    if (a.size() != b.size()) return false;
    int d = -1;
    for (const auto& [tk, m] : a) {
        auto it = b.find(tk);
        if (it == b.end() || it->second.rows != m.rows || it->second.cols != m.cols || m.rows != m.cols) return false;
        d = m.rows;
    }
    if (d < 0) return true;
    // b = D^-1 a D, i.e. b(r,c) = a(r,c) s_c / s_r
    std::vector<Scalar> s(d, 0);
    for (int p0 = 0; p0 < d; ++p0) {
        if (sgn(s[p0]) != 0) continue;
        s[p0] = 1;
        std::vector<int> queue{p0};
        for (size_t k = 0; k < queue.size(); ++k) {
            int p = queue[k];
            for (const auto& [tk, ma] : a) {
                const Matrix& mb = b.at(tk);
                for (int r = 0; r < d; ++r) {
                    if (sgn(s[r]) != 0) continue;
                    if (sgn(ma(r, p)) != 0 && sgn(mb(r, p)) != 0) {
                        s[r] = ma(r, p) * s[p] / mb(r, p);
                        queue.push_back(r);
                    } else if (sgn(ma(p, r)) != 0 && sgn(mb(p, r)) != 0) {
                        s[r] = mb(p, r) * s[p] / ma(p, r);
                        queue.push_back(r);
                    }
                }
            }
        }
    }
    for (const auto& [tk, ma] : a) {
        const Matrix& mb = b.at(tk);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                if (mb(r, c) != ma(r, c) * s[c] / s[r]) return false;
    }
    return true;
}

Scalar trace_tau(const AdaptedRep& rep, const AlgebraElement& a)
{
    if (a.n != rep.n) throw std::invalid_argument("element size does not match the representation");
    Scalar tau = 0;
    int n = rep.n;
    for (const auto& [d, c] : a.coeffs)
        for (int v = 0; v < rep.bratteli.level_size(n); ++v) tau += c * trace(rep_of_diagram(rep, d, {n, v}));
    return tau;
}

bool within_gram_limit(ChainKind kind, int n)
{
    switch (kind) {
    case ChainKind::Brauer: return n <= 4;
    case ChainKind::TemperleyLieb: return n <= 6;
    case ChainKind::SymmetricGroup: return n <= 5;
    default: return false;
    }
}

namespace {

// rho(d) for every basis diagram and every level-n irreducible
std::vector<std::vector<Matrix>> all_images(const AdaptedRep& rep, const std::vector<Diagram>& basis)
{
    std::vector<std::vector<Matrix>> img;
    for (const auto& d : basis) {
        img.emplace_back();
        for (int v = 0; v < rep.bratteli.level_size(rep.n); ++v) img.back().push_back(rep_of_diagram(rep, d, {rep.n, v}));
    }
    return img;
}

Matrix tau_gram(const std::vector<std::vector<Matrix>>& img)
{
    int dim = static_cast<int>(img.size());
    Matrix g(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            Scalar s = 0;
            for (size_t v = 0; v < img[i].size(); ++v) {
                const Matrix& x = img[i][v];
                const Matrix& y = img[j][v];
                for (int r = 0; r < x.rows; ++r)
                    for (int c = 0; c < x.cols; ++c)
                        if (sgn(x(r, c)) != 0 && sgn(y(c, r)) != 0) s += x(r, c) * y(c, r);
            }
            g(i, j) = s;
        }
    return g;
}

} // namespace

DualBasis gram_dual(const AdaptedRep& rep)
{
    if (!within_gram_limit(rep.kind, rep.n)) throw std::length_error("dual basis is limited to small sizes");
    DualBasis out;
    out.basis = enumerate_diagrams(rep.kind, rep.n);
    Matrix g = tau_gram(all_images(rep, out.basis));
    try {
        out.coef = inverse(g);
    } catch (const std::domain_error&) {
        throw ParameterError("trace form is degenerate at q = " + to_string(rep.q));
    }
    return out;
}

SemisimpleReport verify_semisimple(ChainKind kind, int n, const Scalar& q)
{
    check_supported(kind);
    SemisimpleReport r;
    r.dim = static_cast<int>(algebra_dimension(kind, n).get_si());
    if (!within_gram_limit(kind, n)) return r;
    r.checked = true;
    Scalar qq = kind == ChainKind::SymmetricGroup ? Scalar(1) : q;
    auto basis = enumerate_diagrams(kind, n);
    std::map<Diagram, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);
    auto qpow = [&](int c) {
        Scalar x = 1;
        for (int k = 0; k < c; ++k) x *= qq;
        return x;
    };
    // trace of left multiplication by each basis diagram
    std::vector<Scalar> tr(basis.size());
    for (size_t z = 0; z < basis.size(); ++z)
        for (const auto& x : basis) {
            auto p = diagram_mul(basis[z], x);
            if (p.diagram == x) tr[z] += qpow(p.loops);
        }
    Matrix g(r.dim, r.dim);
    for (int i = 0; i < r.dim; ++i)
        for (int j = 0; j < r.dim; ++j) {
            auto p = diagram_mul(basis[i], basis[j]);
            g(i, j) = qpow(p.loops) * tr[index.at(p.diagram)];
        }
    r.regular_rank = rank(g);
    try {
        auto rep = build_rep(kind, n, q);
        r.rep_built = true;
        auto img = all_images(rep, basis);
        r.tau_rank = rank(tau_gram(img));
        Matrix f(r.dim, r.dim);
        for (int j = 0; j < r.dim; ++j) {
            int row = 0;
            for (const auto& m : img[j])
                for (const auto& x : m.a) f(row++, j) = x;
        }
        r.transform_rank = rank(f);
    } catch (const ParameterError& e) {
        r.rep_error = e.what();
    }
    return r;
}

} // namespace brt
