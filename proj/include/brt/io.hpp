#pragma once

#include "brt/element.hpp"
#include "brt/pathalg.hpp"

#include "json.hpp"

namespace brt {

// {level, blocks: [{vertex: "[2,1]", matrix: [["p/q", ...], ...]}]}
nlohmann::json image_to_json(const BratteliDiagram& b, const BlockForm& f);
BlockForm image_from_json(const BratteliDiagram& b, const nlohmann::json& j);

struct CoefficientFile {
    AlgebraElement f;
    Scalar q;
};

// {chain, n, q: "p/q", coeffs: [{diagram: "1-4,2-3", value: "p/q"}]}
nlohmann::json coeffs_to_json(const AlgebraElement& f, const Scalar& q);
CoefficientFile coeffs_from_json(const nlohmann::json& j);

} // namespace brt
