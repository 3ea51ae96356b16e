#include "hankel/fixtures.hpp"

#include <array>
#include <cmath>

#include "hankel/errors.hpp"

namespace hankel::fixtures {

namespace {

// A 4th-order, 3-dimensional symmetric tensor X is determined by the six
// slices X(:,:,k,l) with k <= l; the remaining three are transposed reads
// of the same data. Each slice below is the 3x3 block X(i,j,k,l), row i,
// column j.
using Slice = std::array<std::array<double, 3>, 3>;

struct SlicedTensor {
    Slice s11, s12, s13, s22, s23, s33;
    long checksum;      // sum of round(1e4 * entry) over all six slices
    long abs_checksum;  // same with absolute values
};

const SlicedTensor kRank1Demo = {
    // X(:,:,1,1)
    {{{-0.2972, 0.4307, 0.4444},
      {0.4307, -0.4029, -0.0274},
      {0.4444, -0.0274, 0.0647}}},
    // X(:,:,1,2)
    {{{0.4307, -0.4029, -0.0274},
      {-0.4029, 0.1085, 0.1760},
      {-0.0274, 0.1760, -0.2574}}},
    // X(:,:,1,3)
    {{{0.4444, -0.0274, 0.0647},
      {-0.0274, 0.1760, -0.2574},
      {0.0647, -0.2574, -0.3208}}},
    // X(:,:,2,2)
    {{{-0.4029, 0.1085, 0.1760},
      {0.1085, 0.9152, -0.0821},
      {0.1760, -0.0821, -0.2815}}},
    // X(:,:,2,3)
    {{{-0.0274, 0.1760, -0.2574},
      {0.1760, -0.0821, -0.2815},
      {-0.2574, -0.2815, 0.2773}}},
    // X(:,:,3,3)
    {{{0.0647, -0.2574, -0.3208},
      {-0.2574, -0.2815, 0.2773},
      {-0.3208, 0.2773, -0.5347}}},
    -5831,
    129605,
};

const SlicedTensor kRank2Demo = {
    // X(:,:,1,1)
    {{{-0.7384, 0.2309, 0.3538},
      {0.2309, -0.4025, 0.2401},
      {0.3538, 0.2401, -0.2167}}},
    // X(:,:,1,2)
    {{{0.2309, -0.4025, 0.2401},
      {-0.4025, 0.1324, -0.1888},
      {0.2401, -0.1888, -0.1495}}},
    // X(:,:,1,3)
    {{{0.3538, 0.2401, -0.2167},
      {0.2401, -0.1888, -0.1495},
      {-0.2167, -0.1495, 0.3234}}},
    // X(:,:,2,2)
    {{{-0.4025, 0.1324, -0.1888},
      {0.1324, -0.3712, 0.0019},
      {-0.1888, 0.0019, -0.1546}}},
    // X(:,:,2,3)
    {{{0.2401, -0.1888, -0.1495},
      {-0.1888, 0.0019, -0.1546},
      {-0.1495, -0.1546, -0.0395}}},
    // X(:,:,3,3)
    {{{-0.2167, -0.1495, 0.3234},
      {-0.1495, -0.1546, -0.0395},
      {0.3234, -0.0395, 0.9162}}},
    -9673,
    124155,
};

SymmetricTensor build(const SlicedTensor& data) {
    const std::array<std::pair<int, int>, 6> slice_keys = {
        {{1, 1}, {1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}};
    const std::array<const Slice*, 6> slices = {&data.s11, &data.s12, &data.s13,
                                                &data.s22, &data.s23, &data.s33};

    long checksum = 0;
    long abs_checksum = 0;
    SymmetricTensor t(4, 3);
    bool consistent = true;
    for (size_t s = 0; s < slices.size(); ++s) {
        const auto [k, l] = slice_keys[s];
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                const double value = (*slices[s])[i - 1][j - 1];
                const long scaled = std::lround(1e4 * value);
                checksum += scaled;
                abs_checksum += std::labs(scaled);
                const size_t slot = t.slot_of(MultiIndex{i, j, k, l});
                if (t.value_at(slot) == 0.0) {
                    t.set_value_at(slot, value);
                } else if (t.value_at(slot) != value) {
                    consistent = false;
                }
            }
        }
    }
    if (checksum != data.checksum || abs_checksum != data.abs_checksum || !consistent)
        throw Error("demo tensor transcription is corrupted");
    return t;
}

}  // namespace

SymmetricTensor rank1_demo_tensor() { return build(kRank1Demo); }
SymmetricTensor rank2_demo_tensor() { return build(kRank2Demo); }

CompletionConfig demo_config() {
    CompletionConfig config;
    config.mu = 0.1;
    config.rho = 10.0;
    config.fit = FitObjective::hankelized_matrix;
    config.fixed_iterations = 31;
    return config;
}

const std::array<double, 9> rank1_demo_reference_v = {
    0.0086, 0.0056, 0.0036, 0.0022, 0.0014, 0.0009, 0.0006, 0.0004, 0.0002};

const std::array<double, 9> rank2_demo_reference_v = {
    0.0, 0.0, -0.0001, 0.0003, 0.0001, -0.0024, 0.0120, -0.0390, 0.7741};

}  // namespace hankel::fixtures
