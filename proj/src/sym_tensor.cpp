#include "hankel/sym_tensor.hpp"

#include <algorithm>
#include <cmath>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// m! / prod(multiplicity!) for a canonical (sorted) index.
std::uint64_t orbit_size(const MultiIndex& idx) {
    std::uint64_t weight = factorial(static_cast<int>(idx.size()));
    int run = 1;
    for (size_t i = 1; i < idx.size(); ++i) {
        if (idx[i] == idx[i - 1]) {
            ++run;
        } else {
            weight /= factorial(run);
            run = 1;
        }
    }
    weight /= factorial(run);
    return weight;
}

void check_same_shape(const SymmetricTensor& a, const SymmetricTensor& b) {
    if (a.order() != b.order() || a.dim() != b.dim())
        throw InvalidInput("tensor shape mismatch");
}

}  // namespace

MultiIndex canonical_index(MultiIndex idx) {
    std::sort(idx.begin(), idx.end());
    return idx;
}

SymmetricTensor::SymmetricTensor(int order, int dim) : order_(order), dim_(dim) {
    if (order < 2 || dim < 2) throw InvalidInput("SymmetricTensor: order and dim must be >= 2");

    // Enumerate canonical indices in lexicographic order.
    MultiIndex idx(order, 1);
    while (true) {
        indices_.push_back(idx);
        weights_.push_back(orbit_size(idx));
        int pos = order - 1;
        while (pos >= 0 && idx[pos] == dim) --pos;
        if (pos < 0) break;
        const int next = idx[pos] + 1;
        for (int j = pos; j < order; ++j) idx[j] = next;
    }
    values_.assign(indices_.size(), 0.0);
}

size_t SymmetricTensor::slot_of(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != order_)
        throw InvalidInput("multi-index length does not match tensor order");
    MultiIndex key = canonical_index(idx);
    if (key.front() < 1 || key.back() > dim_)
        throw InvalidInput("multi-index entry out of range");
    const auto it = std::lower_bound(indices_.begin(), indices_.end(), key);
    return static_cast<size_t>(it - indices_.begin());
}

SymmetricTensor make_tensor(int order, int dim,
                            const std::function<double(const MultiIndex&)>& fn) {
    SymmetricTensor t(order, dim);
    for (size_t s = 0; s < t.value_count(); ++s) t.set_value_at(s, fn(t.index_at(s)));
    return t;
}

SymmetricTensor rank_one_power(std::span<const double> x, int order) {
    SymmetricTensor t(order, static_cast<int>(x.size()));
    for (size_t s = 0; s < t.value_count(); ++s) {
        double prod = 1.0;
        for (int i : t.index_at(s)) prod *= x[i - 1];
        t.set_value_at(s, prod);
    }
    return t;
}

double eval(const SymmetricTensor& t, std::span<const double> x) {
    if (static_cast<int>(x.size()) != t.dim())
        throw InvalidInput("eval: point dimension does not match tensor");
    double total = 0.0;
    for (size_t s = 0; s < t.value_count(); ++s) {
        const double value = t.value_at(s);
        if (value == 0.0) continue;
        double prod = 1.0;
        for (int i : t.index_at(s)) prod *= x[i - 1];
        total += static_cast<double>(t.orbit_weight(s)) * value * prod;
    }
    return total;
}

SymmetricTensor add(const SymmetricTensor& a, const SymmetricTensor& b) {
    check_same_shape(a, b);
    SymmetricTensor out = a;
    for (size_t s = 0; s < out.value_count(); ++s)
        out.set_value_at(s, a.value_at(s) + b.value_at(s));
    return out;
}

SymmetricTensor scale(const SymmetricTensor& t, double c) {
    SymmetricTensor out = t;
    for (size_t s = 0; s < out.value_count(); ++s) out.set_value_at(s, c * t.value_at(s));
    return out;
}

double dot(const SymmetricTensor& a, const SymmetricTensor& b) {
    check_same_shape(a, b);
    double total = 0.0;
    for (size_t s = 0; s < a.value_count(); ++s)
        total += static_cast<double>(a.orbit_weight(s)) * a.value_at(s) * b.value_at(s);
    return total;
}

double frobenius_norm(const SymmetricTensor& t) { return std::sqrt(dot(t, t)); }

double frobenius_distance(const SymmetricTensor& a, const SymmetricTensor& b) {
    check_same_shape(a, b);
    double total = 0.0;
    for (size_t s = 0; s < a.value_count(); ++s) {
        const double d = a.value_at(s) - b.value_at(s);
        total += static_cast<double>(a.orbit_weight(s)) * d * d;
    }
    return std::sqrt(total);
}

}  // namespace hankel
