#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hankel {

// Multi-index into an order-m, dimension-n tensor; entries are 1-based.
using MultiIndex = std::vector<int>;

// Sorted-ascending copy: the canonical representative of the index orbit.
MultiIndex canonical_index(MultiIndex idx);

// Real symmetric tensor stored by canonical (non-decreasing) multi-index.
// Only the C(n+m-1, m) canonical entries are kept; lookups with any index
// permutation resolve to the canonical slot. Each slot carries its orbit
// size m! / (product of index-multiplicity factorials), so sums over the
// full n^m index space never materialize it.
class SymmetricTensor {
public:
    SymmetricTensor(int order, int dim);  // zero tensor

    int order() const { return order_; }
    int dim() const { return dim_; }

    size_t value_count() const { return values_.size(); }
    const MultiIndex& index_at(size_t slot) const { return indices_[slot]; }
    double value_at(size_t slot) const { return values_[slot]; }
    void set_value_at(size_t slot, double value) { values_[slot] = value; }
    std::uint64_t orbit_weight(size_t slot) const { return weights_[slot]; }

    // Slot of a (not necessarily sorted) multi-index.
    size_t slot_of(const MultiIndex& idx) const;
    double at(const MultiIndex& idx) const { return values_[slot_of(idx)]; }
    void set(const MultiIndex& idx, double value) { values_[slot_of(idx)] = value; }

private:
    int order_;
    int dim_;
    std::vector<MultiIndex> indices_;  // lexicographically sorted canonical indices
    std::vector<std::uint64_t> weights_;
    std::vector<double> values_;
};

// Builds a tensor by evaluating fn on canonical indices only.
SymmetricTensor make_tensor(int order, int dim,
                            const std::function<double(const MultiIndex&)>& fn);

// x1 * ... * xm at each index: the tensor power x^(x)m.
SymmetricTensor rank_one_power(std::span<const double> x, int order);

// Full polynomial evaluation: sum over all n^m ordered tuples of
// entry * x_{i1} * ... * x_{im}.
double eval(const SymmetricTensor& t, std::span<const double> x);

SymmetricTensor add(const SymmetricTensor& a, const SymmetricTensor& b);
SymmetricTensor scale(const SymmetricTensor& t, double c);

// Inner product and distance over the full ordered index space, i.e. each
// canonical entry weighted by its orbit size.
double dot(const SymmetricTensor& a, const SymmetricTensor& b);
double frobenius_norm(const SymmetricTensor& t);
double frobenius_distance(const SymmetricTensor& a, const SymmetricTensor& b);

}  // namespace hankel
