#ifndef ESYMLAB_BUILTINS_HPP
#define ESYMLAB_BUILTINS_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "esymlab/aggregates.hpp"
#include "esymlab/series.hpp"

namespace esymlab {

// Named series usable as #name in expressions:
//   any registered sequence (p, pB, e2p4, b12, ...), with default parameters
//   e<j>p, e<j>Q, e<j>B, e<j>p<m>, p<m>     Σ e_j over the class, or its count
//   prod, oddprod, binaryprod               Π 1/(1 - q^a) over the source
//   binaryOddProd                           Π_{i>=0} (1 + q^{2^i})/(1 - q^{2^i})
//   sigma<j>, sigma<j>odd, sigma<j>bin      Σ_n σ_{j,A}(n) q^n
//   psum<j>, psum<j>odd, psum<j>bin         Σ_n (Σ_{λ ∈ P(n|A)} P_j(λ)) q^n
//   b22delta                                Σ_n (b22(n+1) - b22(n)) q^n

/// Supplies exact values of a registered sequence on [0, n_max].
using SequenceSource = std::function<BigSeq(const std::string& name, std::size_t n_max)>;

TruncatedSeries resolve_builtin(const std::string& name, std::size_t order, const Ring& ring,
                                const SequenceSource& sequences);

/// resolve_builtin with sequences computed on demand. Throws UnknownBuiltin.
TruncatedSeries core_builtin(const std::string& name, std::size_t order, const Ring& ring);

/// Examples of accepted names, for help text.
std::vector<std::string> builtin_examples();

}  // namespace esymlab

#endif
