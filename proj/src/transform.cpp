#include "brt/transform.hpp"

#include <set>
#include <stdexcept>

namespace brt {

namespace {

// dense matrix with a structural support mask; counts follow the mask, not the values
struct Masked {
    int n = 0;
    std::vector<Scalar> a;
    std::vector<char> nz;

    explicit Masked(int size = 0) : n(size), a(static_cast<size_t>(size) * size), nz(a.size(), 0) {}
    size_t at(int r, int c) const { return static_cast<size_t>(r) * n + c; }
};

struct SparseRows {
    std::vector<std::vector<std::pair<int, Scalar>>> rows;
};

// per level-k vertex: where each path sits inside its level-(k-1) block
struct EmbedInfo {
    std::vector<int> group, local;
};

std::vector<std::string> family_of(ChainKind kind, int i)
{
    std::string r = "r_" + std::to_string(i), e = "e_" + std::to_string(i);
    switch (kind) {
    case ChainKind::TemperleyLieb: return {"id", e};
    case ChainKind::SymmetricGroup: return {"id", r};
    default: return {"id", r, e};
    }
}

void check_kind_match(const AlgebraElement& f, const AdaptedRep& rep)
{
    if (rep.kind == ChainKind::BMWStructural) throw std::invalid_argument("transforms are not available for the BMW chain");
    if (f.kind != rep.kind || f.n != rep.n) throw std::invalid_argument("element and representation disagree on chain or size");
}

} // namespace

struct FourierEngine::Impl {
    const AdaptedRep& rep;
    // [level][vertex][token]
    std::vector<std::vector<std::map<Token, SparseRows>>> sparse;
    std::vector<std::vector<EmbedInfo>> embed;
    std::vector<std::vector<GeneratorWord>> words;
    mutable std::map<Diagram, Factorization> factors;
    mutable std::map<Diagram, std::vector<Matrix>> images;

    explicit Impl(const AdaptedRep& r) : rep(r)
    {
        const auto& b = rep.bratteli;
        int n = rep.n;
        if (static_cast<int>(rep.gens.size()) != n + 1) throw std::invalid_argument("representation lacks lower levels");
        sparse.resize(n + 1);
        embed.resize(n + 1);
        words.resize(n + 1);
        for (int k = 1; k <= n; ++k) {
            if (static_cast<int>(rep.gens[k].size()) != b.level_size(k)) throw std::invalid_argument("representation lacks lower levels");
            words[k] = factor_set(rep.kind, k);
            for (int v = 0; v < b.level_size(k); ++v) {
                GtIndex gt(b, {k, v});
                EmbedInfo info;
                std::map<int, GtIndex> lower;
                for (const auto& p : gt.paths()) {
                    int g = p[k - 1];
                    auto it = lower.try_emplace(g, b, VertexRef{k - 1, g}).first;
                    info.group.push_back(g);
                    info.local.push_back(it->second.index(Path(p.begin(), p.end() - 1)));
                }
                embed[k].push_back(std::move(info));
                std::map<Token, SparseRows> toks;
                for (const auto& [t, m] : rep.gens[k][v]) {
                    SparseRows s;
                    s.rows.resize(m.rows);
                    for (int r = 0; r < m.rows; ++r)
                        for (int c = 0; c < m.cols; ++c)
                            if (sgn(m(r, c)) != 0) s.rows[r].emplace_back(c, m(r, c));
                    toks.emplace(t, std::move(s));
                }
                sparse[k].push_back(std::move(toks));
            }
        }
    }

    const Factorization& factor(const Diagram& d) const
    {
        auto it = factors.find(d);
        if (it != factors.end()) return it->second;
        Diagram dd = d;
        dd.kind = rep.kind;
        auto f = factor_map(dd);
        if (f.index < 0) throw std::logic_error("factor_map failed");
        return factors.emplace(d, std::move(f)).first->second;
    }

    const std::vector<Matrix>& image(const Diagram& d) const
    {
        auto it = images.find(d);
        if (it != images.end()) return it->second;
        std::vector<Matrix> img;
        for (int v = 0; v < rep.bratteli.level_size(rep.n); ++v) img.push_back(rep_of_diagram(rep, d, {rep.n, v}));
        return images.emplace(d, std::move(img)).first->second;
    }

    // Y = rho(t) X, touching only the rows the generator mixes
    Masked apply(const SparseRows& t, const Masked& x, OpCounter& ops) const
    {
        Masked y(x.n);
        for (int r = 0; r < x.n; ++r)
            for (int c = 0; c < x.n; ++c) {
                int terms = 0;
                Scalar& acc = y.a[y.at(r, c)];
                for (const auto& [k, val] : t.rows[r]) {
                    size_t src = x.at(k, c);
                    if (!x.nz[src]) continue;
                    if (terms == 0)
                        acc = val * x.a[src];
                    else
                        acc += val * x.a[src];
                    ++terms;
                }
                if (terms) {
                    y.nz[y.at(r, c)] = 1;
                    ops.mul += terms;
                    ops.add += terms - 1;
                }
            }
        return y;
    }

    void accumulate(Masked& acc, const Masked& x, OpCounter& ops) const
    {
        for (size_t p = 0; p < acc.a.size(); ++p) {
            if (!x.nz[p]) continue;
            if (acc.nz[p]) {
                acc.a[p] += x.a[p];
                ++ops.add;
            } else {
                acc.a[p] = x.a[p];
                acc.nz[p] = 1;
            }
        }
    }

    struct Node {
        int terminal = -1;
        std::map<Token, Node> children;
    };

    // level-k transform of f (diagrams of size k); one masked block per level-k vertex
    std::vector<Masked> transform(int k, const std::map<Diagram, Scalar>& f, std::vector<OpCounter>& by_level) const
    {
        const auto& b = rep.bratteli;
        if (k <= 1) {
            std::vector<Masked> out(b.level_size(k), Masked(1));
            for (const auto& [d, c] : f) {
                out[0].a[0] = c;
                out[0].nz[0] = 1;
            }
            return out;
        }
        std::map<int, std::map<Diagram, Scalar>> buckets;
        for (const auto& [d, c] : f) {
            const auto& fac = factor(d);
            buckets[fac.index].emplace(fac.b.restrict(), c);
        }
        std::map<int, std::vector<Masked>> sub;
        Node root;
        for (const auto& [y, fy] : buckets) {
            sub.emplace(y, transform(k - 1, fy, by_level));
            Node* node = &root;
            for (Token t : words[k][y].tokens) node = &node->children[t];
            node->terminal = y;
        }
        std::vector<Masked> out;
        OpCounter& ops = by_level[k];
        for (int v = 0; v < b.level_size(k); ++v) {
            const auto& info = embed[k][v];
            int d = static_cast<int>(info.group.size());
            auto embed_block = [&](const std::vector<Masked>& fy) {
                Masked e(d);
                for (int r = 0; r < d; ++r)
                    for (int c = 0; c < d; ++c) {
                        if (info.group[r] != info.group[c]) continue;
                        const Masked& src = fy[info.group[r]];
                        size_t s = src.at(info.local[r], info.local[c]);
                        if (!src.nz[s]) continue;
                        e.a[e.at(r, c)] = src.a[s];
                        e.nz[e.at(r, c)] = 1;
                    }
                return e;
            };
            out.push_back(eval_node(root, k, v, sub, embed_block, ops));
        }
        return out;
    }

    // Horner over the prefix tree: V(node) = E_node + sum_t rho(t) V(child)
    template <class Embed>
    Masked eval_node(const Node& node, int k, int v, const std::map<int, std::vector<Masked>>& sub, Embed& embed_block,
                     OpCounter& ops) const
    {
        int d = static_cast<int>(embed[k][v].group.size());
        Masked acc = node.terminal >= 0 ? embed_block(sub.at(node.terminal)) : Masked(d);
        for (const auto& [t, child] : node.children) {
            Masked x = eval_node(child, k, v, sub, embed_block, ops);
            accumulate(acc, apply(sparse[k][v].at(t), x, ops), ops);
        }
        return acc;
    }
};

FourierEngine::FourierEngine(const AdaptedRep& rep) : rep_(rep), impl_(std::make_unique<Impl>(rep))
{
    if (rep.kind == ChainKind::BMWStructural) throw std::invalid_argument("transforms are not available for the BMW chain");
}

FourierEngine::~FourierEngine() = default;

TransformResult FourierEngine::naive(const AlgebraElement& f) const
{
    check_kind_match(f, rep_);
    const auto& b = rep_.bratteli;
    int n = rep_.n;
    TransformResult res;
    res.image.level = n;
    std::vector<std::vector<char>> nz;
    for (int v = 0; v < b.level_size(n); ++v) {
        int d = static_cast<int>(b.dim(n, v));
        res.image.blocks.emplace_back(d, d);
        nz.emplace_back(static_cast<size_t>(d) * d, 0);
    }
    for (const auto& [dg, c] : f.coeffs) {
        const auto& img = impl_->image(dg);
        for (int v = 0; v < b.level_size(n); ++v) {
            auto& blk = res.image.blocks[v];
            for (size_t p = 0; p < blk.a.size(); ++p) {
                if (sgn(img[v].a[p]) == 0) continue;
                ++res.ops.mul;
                if (nz[v][p]) {
                    blk.a[p] += c * img[v].a[p];
                    ++res.ops.add;
                } else {
                    blk.a[p] = c * img[v].a[p];
                    nz[v][p] = 1;
                }
            }
        }
    }
    return res;
}

TransformResult FourierEngine::sov(const AlgebraElement& f) const
{
    check_kind_match(f, rep_);
    if (rep_.n < 1) throw std::invalid_argument("transform needs n >= 1");
    TransformResult res;
    res.by_level.assign(rep_.n + 1, {});
    auto blocks = impl_->transform(rep_.n, f.coeffs, res.by_level);
    res.image.level = rep_.n;
    for (auto& m : blocks) {
        Matrix out(m.n, m.n);
        for (size_t p = 0; p < m.a.size(); ++p)
            if (m.nz[p]) out.a[p] = m.a[p];
        res.image.blocks.push_back(std::move(out));
    }
    for (const auto& o : res.by_level) res.ops += o;
    return res;
}

TransformResult fft_naive(const AlgebraElement& f, const AdaptedRep& rep)
{
    FourierEngine e(rep);
    return e.naive(f);
}

TransformResult fft_sov(const AlgebraElement& f, const AdaptedRep& rep, const SovPlan& plan)
{
    if (plan.kind != rep.kind || plan.n != rep.n) throw std::invalid_argument("plan does not match the representation");
    FourierEngine e(rep);
    return e.sov(f);
}

SovPlan sov_plan(ChainKind kind, int n, const BratteliDiagram& b)
{
    if (n < 1) throw std::invalid_argument("sov_plan needs n >= 1");
    if (b.depth() < n) throw std::invalid_argument("diagram too shallow for the plan");
    SovPlan plan;
    plan.kind = kind;
    plan.n = n;
    plan.dim = algebra_dimension(kind, n);
    plan.paper = paper_bounds(kind, n);
    // the BMW schedule is the Brauer one: same diagram, same factor words
    ChainKind words_kind = kind == ChainKind::BMWStructural ? ChainKind::Brauer : kind;
    plan.reduced_by_level.assign(n + 1, 0);
    for (int k = 2; k <= n; ++k) {
        // each factor word as a tuple over positions 1..k-1 ('.' = id)
        std::vector<std::string> tuples;
        for (const auto& w : factor_set(words_kind, k)) {
            std::string t(k - 1, '.');
            for (Token tk : w.tokens) t[tk.i - 1] = tk.type;
            tuples.push_back(t);
        }
        mpq_class level_cost = 0;
        for (int i = 2; i <= k; ++i) {
            std::set<std::string> tails;
            for (const auto& t : tuples) tails.insert(t.substr(i - 2));
            SovStage s;
            s.level = k;
            s.stage = i;
            s.family = family_of(kind, i - 1);
            s.shape = h_quiver(i, k);
            s.w_size = tails.size();
            s.hom = hom_count_closed(b, i, k);
            s.cost = mpz_class(s.w_size) * mpz_class(s.hom);
            level_cost += s.cost;
            plan.stages.push_back(std::move(s));
        }
        mpq_class dk(mpz_class(b.algebra_dim(k)));
        plan.reduced_by_level[k] = plan.reduced_by_level[k - 1] + level_cost / dk;
        plan.reduced_by_level[k].canonicalize();
    }
    plan.predicted_reduced = plan.reduced_by_level[n];
    plan.predicted_total = plan.predicted_reduced * plan.dim;
    plan.predicted_total.canonicalize();
    return plan;
}

SovPlan sov_plan(ChainKind kind, int n)
{
    return sov_plan(kind, n, BratteliDiagram(kind, n));
}

AlgebraElement inverse_ft(const FourierImage& img, const AdaptedRep& rep, const DualBasis& dual)
{
    const auto& b = rep.bratteli;
    int n = rep.n;
    if (img.level != n || static_cast<int>(img.blocks.size()) != b.level_size(n))
        throw std::invalid_argument("image does not match the representation");
    int dim = static_cast<int>(dual.basis.size());
    if (dual.coef.rows != dim || dim == 0) throw std::invalid_argument("dual basis unavailable");
    // t_k = tau(F rho(a_k)), then f(a_i) = sum_k coef(k,i) t_k
    std::vector<Scalar> t(dim);
    for (int k = 0; k < dim; ++k)
        for (int v = 0; v < b.level_size(n); ++v) {
            Matrix r = rep_of_diagram(rep, dual.basis[k], {n, v});
            const Matrix& f = img.blocks[v];
            for (int x = 0; x < f.rows; ++x)
                for (int y = 0; y < f.cols; ++y)
                    if (sgn(f(x, y)) != 0 && sgn(r(y, x)) != 0) t[k] += f(x, y) * r(y, x);
        }
    AlgebraElement out(rep.kind, n);
    for (int i = 0; i < dim; ++i) {
        Scalar s = 0;
        for (int k = 0; k < dim; ++k)
            if (sgn(dual.coef(k, i)) != 0) s += dual.coef(k, i) * t[k];
        out.add(dual.basis[i], s);
    }
    return out;
}

ConvolutionReport convolution_check(const AlgebraElement& f, const AlgebraElement& g, const AdaptedRep& rep)
{
    FourierEngine e(rep);
    auto ff = e.naive(f).image, fg = e.naive(g).image;
    auto fp = e.naive(multiply(f, g, rep.q)).image;
    ConvolutionReport r;
    for (size_t v = 0; v < ff.blocks.size(); ++v) {
        ++r.blocks;
        if (ff.blocks[v] * fg.blocks[v] != fp.blocks[v])
            r.mismatches.push_back("block " + rep.bratteli.level(rep.n)[v].str());
    }
    return r;
}

} // namespace brt
