#include "brt/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace brt {

namespace {

void check_kind(ChainKind kind)
{
    if (kind == ChainKind::BMWStructural)
        throw std::invalid_argument("bmw chain carries no diagram arithmetic");
}

void validate(const Diagram& d)
{
    if (d.kind == ChainKind::SymmetricGroup && !d.is_permutation())
        throw std::invalid_argument("diagram " + d.str() + " is not a permutation");
    if (d.kind == ChainKind::TemperleyLieb && !d.is_planar())
        throw std::invalid_argument("diagram " + d.str() + " is not planar");
}

} // namespace

Diagram Diagram::identity(ChainKind kind, int n)
{
    check_kind(kind);
    Diagram d;
    d.kind = kind;
    d.n = n;
    d.mate.resize(2 * n);
    for (int k = 0; k < n; ++k) {
        d.mate[k] = n + k;
        d.mate[n + k] = k;
    }
    return d;
}

Diagram Diagram::from_pairs(ChainKind kind, int n, const std::vector<std::pair<int, int>>& pairs)
{
    check_kind(kind);
    Diagram d;
    d.kind = kind;
    d.n = n;
    d.mate.assign(2 * n, -1);
    for (auto [a, b] : pairs) {
        if (a < 1 || b < 1 || a > 2 * n || b > 2 * n || a == b)
            throw std::invalid_argument("bad pair " + std::to_string(a) + "-" + std::to_string(b));
        if (d.mate[a - 1] >= 0 || d.mate[b - 1] >= 0)
            throw std::invalid_argument("point used twice in pair " + std::to_string(a) + "-" + std::to_string(b));
        d.mate[a - 1] = b - 1;
        d.mate[b - 1] = a - 1;
    }
    for (int m : d.mate)
        if (m < 0) throw std::invalid_argument("matching is not perfect");
    validate(d);
    return d;
}

Diagram Diagram::parse(ChainKind kind, const std::string& s)
{
    std::vector<std::pair<int, int>> pairs;
    std::stringstream ss(s);
    std::string item;
    int top = 0;
    while (std::getline(ss, item, ',')) {
        auto dash = item.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad diagram string '" + s + "'");
        int a = 0, b = 0;
        try {
            a = std::stoi(item.substr(0, dash));
            b = std::stoi(item.substr(dash + 1));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad diagram string '" + s + "'");
        }
        pairs.emplace_back(a, b);
        top = std::max({top, a, b});
    }
    if (top % 2) throw std::invalid_argument("odd point count in '" + s + "'");
    Diagram d = from_pairs(kind, top / 2, pairs);
    if (d.str() != s) throw std::invalid_argument("diagram string '" + s + "' is not canonical");
    return d;
}

Diagram Diagram::permutation(const std::vector<int>& images)
{
    int n = static_cast<int>(images.size());
    std::vector<std::pair<int, int>> pairs;
    for (int j = 0; j < n; ++j) pairs.emplace_back(j + 1, n + images[j]);
    return from_pairs(ChainKind::SymmetricGroup, n, pairs);
}

std::vector<std::pair<int, int>> Diagram::pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int p = 0; p < 2 * n; ++p)
        if (p < mate[p]) out.emplace_back(p + 1, mate[p] + 1);
    return out;
}

std::string Diagram::str() const
{
    std::string s;
    for (auto [a, b] : pairs()) {
        if (!s.empty()) s += ',';
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s;
}

bool Diagram::is_permutation() const
{
    for (int k = 0; k < n; ++k)
        if (mate[k] < n) return false;
    return true;
}

bool Diagram::is_planar() const
{
    // read points around the boundary: top left to right, then bottom right to left
    auto pos = [this](int p) { return p < n ? p : 3 * n - 1 - p; };
    std::vector<std::pair<int, int>> arcs;
    for (int p = 0; p < 2 * n; ++p)
        if (p < mate[p]) {
            int a = pos(p), b = pos(mate[p]);
            arcs.emplace_back(std::min(a, b), std::max(a, b));
        }
    for (auto [a, b] : arcs)
        for (auto [c, e] : arcs)
            if (a < c && c < b && b < e) return false;
    return true;
}

bool Diagram::in_subalgebra() const
{
    return n >= 1 && mate[n - 1] == 2 * n - 1;
}

Diagram Diagram::restrict() const
{
    if (!in_subalgebra()) throw std::invalid_argument("diagram " + str() + " is not in the subalgebra");
    Diagram d;
    d.kind = kind;
    d.n = n - 1;
    d.mate.resize(2 * (n - 1));
    auto shrink = [this](int p) { return p < n ? p : p - 1; };
    for (int p = 0; p < 2 * n; ++p) {
        if (p == n - 1 || p == 2 * n - 1) continue;
        d.mate[shrink(p)] = shrink(mate[p]);
    }
    return d;
}

Diagram Diagram::extend() const
{
    Diagram d;
    d.kind = kind;
    d.n = n + 1;
    d.mate.resize(2 * (n + 1));
    auto grow = [this](int p) { return p < n ? p : p + 1; };
    for (int p = 0; p < 2 * n; ++p) d.mate[grow(p)] = grow(mate[p]);
    d.mate[n] = 2 * n + 1;
    d.mate[2 * n + 1] = n;
    return d;
}

LoopProduct diagram_mul(const Diagram& x, const Diagram& y)
{
    if (x.n != y.n) throw std::invalid_argument("diagram size mismatch");
    int n = x.n;
    LoopProduct out;
    out.diagram.kind = x.kind == y.kind ? x.kind : ChainKind::Brauer;
    out.diagram.n = n;
    out.diagram.mate.assign(2 * n, -1);
    // middle row k is x's bottom n+k and y's top k
    std::vector<bool> seen(n, false);
    // walk from an outer point; side 0 = x, 1 = y
    auto walk = [&](int side, int p) {
        for (;;) {
            int q = side == 0 ? x.mate[p] : y.mate[p];
            if (side == 0) {
                if (q < n) return q; // top of result
                seen[q - n] = true;
                side = 1;
                p = q - n;
            } else {
                if (q >= n) return q; // bottom of result
                seen[q] = true;
                side = 0;
                p = q + n;
            }
        }
    };
    for (int p = 0; p < n; ++p) {
        if (out.diagram.mate[p] >= 0) continue;
        int q = walk(0, p);
        out.diagram.mate[p] = q;
        out.diagram.mate[q] = p;
    }
    for (int p = n; p < 2 * n; ++p) {
        if (out.diagram.mate[p] >= 0) continue;
        int q = walk(1, p);
        out.diagram.mate[p] = q;
        out.diagram.mate[q] = p;
    }
    // whatever is left in the middle closes up into loops
    for (int k = 0; k < n; ++k) {
        if (seen[k]) continue;
        ++out.loops;
        int m = k;
        bool via_y = true;
        do {
            seen[m] = true;
            m = via_y ? y.mate[m] : x.mate[n + m] - n;
            via_y = !via_y;
        } while (!(m == k && via_y));
    }
    return out;
}

std::string GeneratorWord::str() const
{
    if (tokens.empty()) return "id";
    std::string s;
    for (const auto& t : tokens) s += t.str();
    return s;
}

GeneratorWord GeneratorWord::parse(const std::string& s)
{
    GeneratorWord w;
    if (s == "id" || s.empty()) return w;
    size_t k = 0;
    while (k < s.size()) {
        if ((s[k] != 'r' && s[k] != 'e') || k + 2 >= s.size() || s[k + 1] != '_')
            throw std::invalid_argument("bad generator word '" + s + "'");
        Token t;
        t.type = s[k];
        size_t e = k + 2;
        while (e < s.size() && std::isdigit(static_cast<unsigned char>(s[e]))) ++e;
        if (e == k + 2) throw std::invalid_argument("bad generator word '" + s + "'");
        t.i = std::stoi(s.substr(k + 2, e - k - 2));
        w.tokens.push_back(t);
        k = e;
    }
    return w;
}

Diagram generator(ChainKind kind, Token t, int n)
{
    check_kind(kind);
    if (t.i < 1 || t.i > n - 1) throw std::out_of_range("generator index " + t.str() + " out of range");
    if (t.type == 'e' && kind == ChainKind::SymmetricGroup)
        throw std::invalid_argument("e tokens are not in the symmetric group");
    if (t.type == 'r' && kind == ChainKind::TemperleyLieb)
        throw std::invalid_argument("r tokens are not in the Temperley-Lieb algebra");
    if (t.type != 'r' && t.type != 'e') throw std::invalid_argument("unknown token");
    Diagram d = Diagram::identity(kind, n);
    int i = t.i - 1;
    auto join = [&d](int a, int b) {
        d.mate[a] = b;
        d.mate[b] = a;
    };
    if (t.type == 'r') {
        join(i, n + i + 1);
        join(i + 1, n + i);
    } else {
        join(i, i + 1);
        join(n + i, n + i + 1);
    }
    return d;
}

LoopProduct evaluate(ChainKind kind, const GeneratorWord& w, int n)
{
    LoopProduct acc{Diagram::identity(kind, n), 0};
    for (const auto& t : w.tokens) {
        auto p = diagram_mul(acc.diagram, generator(kind, t, n));
        acc.diagram = p.diagram;
        acc.diagram.kind = kind;
        acc.loops += p.loops;
    }
    return acc;
}

std::vector<Relation> relations(ChainKind kind, int n)
{
    check_kind(kind);
    std::vector<Relation> out;
    auto w = [](std::initializer_list<Token> t) { return GeneratorWord{std::vector<Token>(t)}; };
    auto R = [](int i) { return Token{'r', i}; };
    auto E = [](int i) { return Token{'e', i}; };
    auto add = [&](std::string name, GeneratorWord l, GeneratorWord r, int p) {
        out.push_back({std::move(name), std::move(l), std::move(r), p});
    };
    bool has_r = kind != ChainKind::TemperleyLieb;
    bool has_e = kind != ChainKind::SymmetricGroup;
    for (int i = 1; i <= n - 1; ++i) {
        std::string si = std::to_string(i);
        if (has_r) add("r_" + si + "^2 = 1", w({R(i), R(i)}), w({}), 0);
        if (has_e) add("e_" + si + "^2 = q e_" + si, w({E(i), E(i)}), w({E(i)}), 1);
        if (has_r && has_e) {
            add("e_" + si + "r_" + si + " = e_" + si, w({E(i), R(i)}), w({E(i)}), 0);
            add("r_" + si + "e_" + si + " = e_" + si, w({R(i), E(i)}), w({E(i)}), 0);
        }
        for (int j = 1; j <= n - 1; ++j) {
            if (std::abs(i - j) <= 1) continue;
            std::string sj = std::to_string(j);
            if (has_r && i < j) add("r_" + si + "r_" + sj + " = r_" + sj + "r_" + si, w({R(i), R(j)}), w({R(j), R(i)}), 0);
            if (has_r && has_e)
                add("r_" + si + "e_" + sj + " = e_" + sj + "r_" + si, w({R(i), E(j)}), w({E(j), R(i)}), 0);
            if (has_e && i < j) add("e_" + si + "e_" + sj + " = e_" + sj + "e_" + si, w({E(i), E(j)}), w({E(j), E(i)}), 0);
        }
        if (i + 1 <= n - 1) {
            std::string s1 = std::to_string(i + 1);
            if (has_r)
                add("braid r_" + si + ",r_" + s1, w({R(i), R(i + 1), R(i)}), w({R(i + 1), R(i), R(i + 1)}), 0);
            if (has_e) {
                add("e_" + si + "e_" + s1 + "e_" + si + " = e_" + si, w({E(i), E(i + 1), E(i)}), w({E(i)}), 0);
                add("e_" + s1 + "e_" + si + "e_" + s1 + " = e_" + s1, w({E(i + 1), E(i), E(i + 1)}), w({E(i + 1)}), 0);
            }
            if (has_r && has_e) {
                add("r_" + si + "e_" + s1 + "e_" + si + " = r_" + s1 + "e_" + si, w({R(i), E(i + 1), E(i)}),
                    w({R(i + 1), E(i)}), 0);
                add("e_" + s1 + "e_" + si + "r_" + s1 + " = e_" + s1 + "r_" + si, w({E(i + 1), E(i), R(i + 1)}),
                    w({E(i + 1), R(i)}), 0);
            }
        }
    }
    return out;
}

RelationReport check_relations(ChainKind kind, int n)
{
    RelationReport rep;
    for (const auto& r : relations(kind, n)) {
        ++rep.checked;
        auto l = evaluate(kind, r.lhs, n);
        auto rr = evaluate(kind, r.rhs, n);
        if (l.diagram != rr.diagram || l.loops != rr.loops + r.power)
            rep.failures.push_back(r.name + ": " + l.diagram.str() + " q^" + std::to_string(l.loops) + " vs " +
                                   rr.diagram.str() + " q^" + std::to_string(rr.loops + r.power));
    }
    return rep;
}

namespace {

// structural description of a factor-set word
struct FactorWord {
    enum Kind { R, ER } type;
    int j, i; // R: r_j..r_{n-1} (j = n is id); ER: r_j..r_{i-1} e_i..e_{n-1}
    GeneratorWord word;
};

std::vector<FactorWord> factor_words(ChainKind kind, int n)
{
    check_kind(kind);
    std::vector<FactorWord> out;
    auto rrun = [](int a, int b) {
        GeneratorWord w;
        for (int k = a; k <= b; ++k) w.tokens.push_back({'r', k});
        return w;
    };
    if (kind == ChainKind::TemperleyLieb) {
        out.push_back({FactorWord::R, n, n, {}});
        for (int i = n - 1; i >= 1; --i) {
            GeneratorWord w;
            for (int k = i; k <= n - 1; ++k) w.tokens.push_back({'e', k});
            out.push_back({FactorWord::ER, i, i, w});
        }
        return out;
    }
    out.push_back({FactorWord::R, n, n, {}});
    for (int j = 1; j <= n - 1; ++j) out.push_back({FactorWord::R, j, n, rrun(j, n - 1)});
    if (kind == ChainKind::SymmetricGroup) return out;
    for (int j = 1; j <= n - 1; ++j)
        for (int i = j; i <= n - 1; ++i) {
            GeneratorWord w = rrun(j, i - 1);
            for (int k = i; k <= n - 1; ++k) w.tokens.push_back({'e', k});
            out.push_back({FactorWord::ER, j, i, w});
        }
    return out;
}

GeneratorWord reversed(const GeneratorWord& w)
{
    GeneratorWord r = w;
    std::reverse(r.tokens.begin(), r.tokens.end());
    return r;
}

// b with e_i..e_{n-1} * b = d, given d has the top cup {i, i+1} (1-based i)
Diagram strip_cup(const Diagram& d, int i)
{
    int n = d.n;
    // old top index (0-based) -> new top index
    std::vector<int> top_map(n, -1);
    int next = 0;
    for (int k = 0; k < n; ++k)
        if (k != i - 1 && k != i) top_map[k] = next++;
    auto image = [&](int p) { return p < n ? top_map[p] : p; };
    Diagram b;
    b.kind = d.kind;
    b.n = n;
    b.mate.assign(2 * n, -1);
    auto join = [&b](int a, int c) {
        b.mate[a] = c;
        b.mate[c] = a;
    };
    join(n - 1, 2 * n - 1);
    int z = d.mate[2 * n - 1]; // partner of the last bottom point
    join(n - 2, image(z));
    for (int p = 0; p < 2 * n - 1; ++p) {
        if (p == i - 1 || p == i || p == z) continue;
        int q = d.mate[p];
        if (q == 2 * n - 1) continue;
        if (p < q) join(image(p), image(q));
    }
    return b;
}

} // namespace

std::vector<GeneratorWord> factor_set(ChainKind kind, int n)
{
    if (n < 1) throw std::invalid_argument("factor_set needs n >= 1");
    std::vector<GeneratorWord> out;
    for (auto& f : factor_words(kind, n)) out.push_back(f.word);
    return out;
}

Factorization factor_map(const Diagram& d)
{
    int n = d.n;
    if (n < 1) throw std::invalid_argument("factor_map needs n >= 1");
    if (n == 1) return {GeneratorWord{}, d, 0};
    auto words = factor_words(d.kind, n);
    int last = d.mate[2 * n - 1];
    for (size_t k = 0; k < words.size(); ++k) {
        const auto& f = words[k];
        Diagram b;
        if (f.type == FactorWord::R) {
            if (last != f.j - 1) continue;
            auto inv = evaluate(d.kind, reversed(f.word), n);
            auto p = diagram_mul(inv.diagram, d);
            if (p.loops) continue;
            b = p.diagram;
        } else {
            // top cup {j, i+1}
            if (d.mate[f.j - 1] != f.i) continue;
            if (f.j == n) continue;
            GeneratorWord pre;
            for (int t = f.j; t <= f.i - 1; ++t) pre.tokens.push_back({'r', t});
            auto inv = evaluate(ChainKind::Brauer, reversed(pre), n);
            auto p = diagram_mul(inv.diagram, d);
            b = strip_cup(p.diagram, f.i);
        }
        b.kind = d.kind;
        if (d.kind == ChainKind::TemperleyLieb && !b.is_planar()) continue;
        if (d.kind == ChainKind::SymmetricGroup && !b.is_permutation()) continue;
        auto chk = evaluate(d.kind, f.word, n);
        auto full = diagram_mul(chk.diagram, b);
        if (chk.loops + full.loops != 0 || full.diagram != d || !b.in_subalgebra()) continue;
        return {f.word, b, static_cast<int>(k)};
    }
    throw std::logic_error("no factorization for diagram " + d.str());
}

GeneratorWord word_of(const Diagram& d)
{
    GeneratorWord w;
    Diagram cur = d;
    // tokens of lower levels keep their indices under the embedding
    while (cur.n > 1) {
        auto f = factor_map(cur);
        w.tokens.insert(w.tokens.end(), f.y.tokens.begin(), f.y.tokens.end());
        cur = f.b.restrict();
    }
    return w;
}

std::vector<Diagram> enumerate_diagrams(ChainKind kind, int n)
{
    check_kind(kind);
    std::vector<Diagram> out;
    if (kind == ChainKind::SymmetricGroup) {
        std::vector<int> img(n);
        std::iota(img.begin(), img.end(), 1);
        do out.push_back(Diagram::permutation(img));
        while (std::next_permutation(img.begin(), img.end()));
    } else if (kind == ChainKind::Brauer) {
        Diagram d;
        d.kind = kind;
        d.n = n;
        d.mate.assign(2 * n, -1);
        std::function<void()> rec = [&]() {
            int p = 0;
            while (p < 2 * n && d.mate[p] >= 0) ++p;
            if (p == 2 * n) {
                out.push_back(d);
                return;
            }
            for (int q = p + 1; q < 2 * n; ++q) {
                if (d.mate[q] >= 0) continue;
                d.mate[p] = q;
                d.mate[q] = p;
                rec();
                d.mate[p] = d.mate[q] = -1;
            }
        };
        rec();
    } else {
        // noncrossing matchings of the boundary cycle
        std::vector<int> at(2 * n); // boundary position -> point
        for (int k = 0; k < n; ++k) {
            at[k] = k;
            at[n + k] = 2 * n - 1 - k;
        }
        Diagram d;
        d.kind = kind;
        d.n = n;
        d.mate.assign(2 * n, -1);
        std::function<void(int, int, std::function<void()>)> rec = [&](int lo, int hi, std::function<void()> k) {
            if (lo > hi) {
                k();
                return;
            }
            for (int m = lo + 1; m <= hi; m += 2) {
                d.mate[at[lo]] = at[m];
                d.mate[at[m]] = at[lo];
                rec(lo + 1, m - 1, [&, m, hi, k]() { rec(m + 1, hi, k); });
            }
        };
        rec(0, 2 * n - 1, [&]() { out.push_back(d); });
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace brt
