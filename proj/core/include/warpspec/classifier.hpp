#pragma once

#include <optional>
#include <string>

#include "warpspec/model.hpp"
#include "warpspec/reduction.hpp"
#include "warpspec/spectrum.hpp"

namespace warpspec {

/// A spectrum together with the identifier of the case that produced it,
/// e.g. "a=-1,b>0,betti(p)=0,betti(p-1)>0".
struct Classification {
    SpectrumDescription spectrum;
    std::string branch;
};

/// Essential spectrum of the p-form Laplacian on an exponential end over an arbitrary
/// closed cross-section. Betti numbers are needed when b > 0, coclosed eigenvalue
/// lists in degrees p, p-1 and p-2 when b = 0. Throws std::invalid_argument otherwise,
/// and for general-family metrics.
Classification classify_general(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary);

/// Full answer, including the value 0, for the round-sphere cross-section.
Classification classify_rotsym(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary);

enum class HarmonicDimension { zero, one_dimensional, infinite_dimensional };
const char* to_string(HarmonicDimension h);

/// Dimension of the L2 harmonic p-forms on the rotationally symmetric model.
HarmonicDimension harmonic_classify(const WarpedMetric& metric, DegreePair deg);

/// Essential spectrum carried by one form type. `upper_bound` marks a description
/// known only to contain the component's spectrum away from 0.
struct ComponentSpectrum {
    SpectrumDescription spectrum;
    bool upper_bound = false;
};

/// Per-type pieces; a type with no forms in degree p is absent.
struct ComponentSpectra {
    std::optional<ComponentSpectrum> type1;
    std::optional<ComponentSpectrum> type2;
    std::optional<ComponentSpectrum> type3;
};

ComponentSpectra component_spectra(const WarpedMetric& metric, DegreePair deg, const BoundaryData& boundary);

/// Essential spectrum of a single reduced operator for boundary eigenvalue lambda.
SpectrumDescription operator_spectrum(const WarpedMetric& metric, DegreePair deg, FormType type,
                                      const Number& lambda);

/// ((n-2p-1)/2)^2 b^2 and ((n-2p+1)/2)^2 b^2, the a = -1 thresholds of types 1 and 2.
Number type1_threshold(DegreePair deg, const Number& b);
Number type2_threshold(DegreePair deg, const Number& b);

/// Least eigenvalue of the full Laplacians of N in degrees p and p-1.
/// Needs coclosed lists in degrees p, p-1 and p-2.
Number boundary_gap(DegreePair deg, const BoundaryData& boundary);

}  // namespace warpspec
