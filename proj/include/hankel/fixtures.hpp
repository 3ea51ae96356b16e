#pragma once

#include <array>

#include "hankel/completion.hpp"
#include "hankel/sym_tensor.hpp"

namespace hankel::fixtures {

// Two bundled 4th-order, 3-dimensional symmetric tensors for exercising the
// completion solver end to end. Entries are transcribed slice by slice at
// four decimals and checksum-verified at load; the recovered associated
// matrix has numerical rank 1 for the first and rank 2 for the second.
SymmetricTensor rank1_demo_tensor();
SymmetricTensor rank2_demo_tensor();

// Solver configuration that reproduces the bundled reference outputs for
// the demo tensors: matrix-side fit, mu = 0.1, rho = 10, and a fixed budget
// of 31 iterations.
CompletionConfig demo_config();

// Reference solver outputs for the demo tensors under demo_config().
extern const std::array<double, 9> rank1_demo_reference_v;
extern const std::array<double, 9> rank2_demo_reference_v;

}  // namespace hankel::fixtures
