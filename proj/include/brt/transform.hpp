#pragma once

#include "brt/combinat.hpp"
#include "brt/element.hpp"
#include "brt/pathalg.hpp"
#include "brt/reps.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace brt {

// field operations done by a transform; precomputed representation data is free
struct OpCounter {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    OpCounter& operator+=(const OpCounter& o)
    {
        mul += o.mul;
        add += o.add;
        return *this;
    }
    bool operator==(const OpCounter&) const = default;
};

using FourierImage = BlockForm;

struct TransformResult {
    FourierImage image;
    OpCounter ops;
    // ops spent combining at each level (index = level); empty for the naive engine
    std::vector<OpCounter> by_level;
};

struct SovStage {
    int level = 0; // k, the algebra being split
    int stage = 0; // i, 2 <= i <= k
    std::vector<std::string> family;
    QuiverShape shape;
    std::uint64_t w_size = 0; // |W_{i-1}|
    std::uint64_t hom = 0;
    mpz_class cost;
};

struct SovPlan {
    ChainKind kind = ChainKind::Brauer;
    int n = 0;
    std::vector<SovStage> stages;
    // predicted reduced cost after each level, index = level
    std::vector<mpq_class> reduced_by_level;
    mpz_class dim;
    mpq_class predicted_reduced;
    mpq_class predicted_total;
    BoundReport paper;
};

SovPlan sov_plan(ChainKind kind, int n, const BratteliDiagram& b);
SovPlan sov_plan(ChainKind kind, int n);

// caches rho(d), factorizations and sparse generator rows for one representation
class FourierEngine {
public:
    explicit FourierEngine(const AdaptedRep& rep);
    ~FourierEngine();
    FourierEngine(const FourierEngine&) = delete;
    FourierEngine& operator=(const FourierEngine&) = delete;

    TransformResult naive(const AlgebraElement& f) const;
    TransformResult sov(const AlgebraElement& f) const;
    const AdaptedRep& rep() const { return rep_; }

private:
    struct Impl;
    const AdaptedRep& rep_;
    std::unique_ptr<Impl> impl_;
};

TransformResult fft_naive(const AlgebraElement& f, const AdaptedRep& rep);
TransformResult fft_sov(const AlgebraElement& f, const AdaptedRep& rep, const SovPlan& plan);

// needs the dual basis from gram_dual
AlgebraElement inverse_ft(const FourierImage& img, const AdaptedRep& rep, const DualBasis& dual);

struct ConvolutionReport {
    int blocks = 0;
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

ConvolutionReport convolution_check(const AlgebraElement& f, const AlgebraElement& g, const AdaptedRep& rep);

} // namespace brt
