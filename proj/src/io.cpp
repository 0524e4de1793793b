#include "brt/io.hpp"

#include <stdexcept>

namespace brt {

using nlohmann::json;

json image_to_json(const BratteliDiagram& b, const BlockForm& f)
{
    json blocks = json::array();
    for (size_t v = 0; v < f.blocks.size(); ++v) {
        const Matrix& m = f.blocks[v];
        json rows = json::array();
        for (int r = 0; r < m.rows; ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols; ++c) row.push_back(to_string(m(r, c)));
            rows.push_back(std::move(row));
        }
        blocks.push_back({{"vertex", b.level(f.level)[v].str()}, {"matrix", std::move(rows)}});
    }
    return {{"level", f.level}, {"blocks", std::move(blocks)}};
}

BlockForm image_from_json(const BratteliDiagram& b, const json& j)
{
    BlockForm f;
    f.level = j.at("level").get<int>();
    if (f.level < 0 || f.level > b.depth()) throw std::invalid_argument("image level outside the diagram");
    const auto& blocks = j.at("blocks");
    if (static_cast<int>(blocks.size()) != b.level_size(f.level)) throw std::invalid_argument("image has the wrong number of blocks");
    for (int v = 0; v < b.level_size(f.level); ++v) {
        const auto& blk = blocks.at(v);
        if (blk.at("vertex").get<std::string>() != b.level(f.level)[v].str())
            throw std::invalid_argument("image blocks are not in canonical vertex order");
        int d = static_cast<int>(b.dim(f.level, v));
        const auto& rows = blk.at("matrix");
        if (static_cast<int>(rows.size()) != d) throw std::invalid_argument("block size mismatch");
        Matrix m(d, d);
        for (int r = 0; r < d; ++r) {
            if (static_cast<int>(rows.at(r).size()) != d) throw std::invalid_argument("block size mismatch");
            for (int c = 0; c < d; ++c) m(r, c) = parse_scalar(rows.at(r).at(c).get<std::string>());
        }
        f.blocks.push_back(std::move(m));
    }
    return f;
}

json coeffs_to_json(const AlgebraElement& f, const Scalar& q)
{
    json coeffs = json::array();
    for (const auto& [d, v] : f.coeffs) coeffs.push_back({{"diagram", d.str()}, {"value", to_string(v)}});
    return {{"chain", to_string(f.kind)}, {"n", f.n}, {"q", to_string(q)}, {"coeffs", std::move(coeffs)}};
}

CoefficientFile coeffs_from_json(const json& j)
{
    CoefficientFile out;
    ChainKind kind = parse_chain(j.at("chain").get<std::string>());
    int n = j.at("n").get<int>();
    if (n < 1) throw std::invalid_argument("n must be positive");
    out.f = AlgebraElement(kind, n);
    out.q = j.contains("q") ? parse_scalar(j.at("q").get<std::string>()) : Scalar(10, 3);
    for (const auto& c : j.at("coeffs")) {
        Diagram d = Diagram::parse(kind, c.at("diagram").get<std::string>());
        if (d.n != n) throw std::invalid_argument("diagram " + d.str() + " has the wrong size");
        Scalar v = c.at("value").is_string() ? parse_scalar(c.at("value").get<std::string>()) : Scalar(c.at("value").get<long>());
        out.f.add(d, v);
    }
    return out;
}

} // namespace brt
