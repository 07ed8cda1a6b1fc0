#ifndef CODEKIT_BOUNDS_HPP
#define CODEKIT_BOUNDS_HPP

#include <cstdint>

#include "codekit/field.hpp"

namespace codekit {

// g_q(k,d) = sum_{i=0}^{k-1} ceil(d / q^i).
std::size_t griesmer_length(std::size_t k, std::size_t d, std::uint32_t q);

// floor( q^n / sum_{i<=floor((d-1)/2)} C(n,i)(q-1)^i ).
BigInt sphere_packing_max(std::size_t n, std::size_t d, std::uint32_t q);

struct BoundReport {
    std::size_t n, k, d;
    std::uint32_t q;
    std::size_t griesmer;
    BigInt sphere_packing;
    std::ptrdiff_t singleton_defect;
    bool meets_griesmer;
    bool almost_meets_griesmer;
    bool perfect;
    bool mds;
    bool almost_mds;
    bool distance_optimal_sp;
    bool dimension_optimal_sp;
    bool length_optimal_sp;
};

// All flags follow from the Griesmer, sphere-packing and Singleton bounds;
// nothing is looked up in external code tables. Claims sourced from
// best-known-code tables stay out of the report by design.
BoundReport classify(std::size_t n, std::size_t k, std::size_t d,
                     std::uint32_t q);

} // namespace codekit

#endif
