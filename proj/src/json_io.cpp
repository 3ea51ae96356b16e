#include "hankel/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "hankel/errors.hpp"

namespace hankel {

namespace {

void require_fields(const nlohmann::json& j, std::initializer_list<const char*> keys,
                    const char* what) {
    for (const char* key : keys)
        if (!j.contains(key)) throw InvalidInput(std::string(what) + ": missing field '" + key + "'");
}

}  // namespace

nlohmann::json tensor_to_json(const SymmetricTensor& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (size_t s = 0; s < t.value_count(); ++s) {
        if (t.value_at(s) == 0.0) continue;
        entries.push_back({{"index", t.index_at(s)}, {"value", t.value_at(s)}});
    }
    return {{"order", t.order()}, {"dim", t.dim()}, {"entries", std::move(entries)}};
}

SymmetricTensor tensor_from_json(const nlohmann::json& j, double* max_asymmetry_out) {
    require_fields(j, {"order", "dim", "entries"}, "tensor");
    const int order = j.at("order").get<int>();
    const int dim = j.at("dim").get<int>();
    SymmetricTensor t(order, dim);

    std::map<size_t, std::pair<double, int>> sums;  // slot -> (sum, count)
    std::map<size_t, std::pair<double, double>> ranges;
    for (const auto& entry : j.at("entries")) {
        require_fields(entry, {"index", "value"}, "tensor entry");
        const MultiIndex idx = entry.at("index").get<MultiIndex>();
        const double value = entry.at("value").get<double>();
        const size_t slot = t.slot_of(idx);
        auto& acc = sums[slot];
        acc.first += value;
        acc.second += 1;
        auto [it, fresh] = ranges.try_emplace(slot, value, value);
        if (!fresh) {
            it->second.first = std::min(it->second.first, value);
            it->second.second = std::max(it->second.second, value);
        }
    }

    double asymmetry = 0.0;
    for (const auto& [slot, acc] : sums) {
        t.set_value_at(slot, acc.first / acc.second);
        const auto& range = ranges.at(slot);
        asymmetry = std::max(asymmetry, range.second - range.first);
    }
    if (max_asymmetry_out) *max_asymmetry_out = asymmetry;
    return t;
}

nlohmann::json gv_to_json(const GeneratingVector& gv) {
    return {{"order", gv.order}, {"dim", gv.dim}, {"v", gv.v}};
}

GeneratingVector gv_from_json(const nlohmann::json& j) {
    require_fields(j, {"order", "dim", "v"}, "generating vector");
    return GeneratingVector(j.at("order").get<int>(), j.at("dim").get<int>(),
                            j.at("v").get<std::vector<double>>());
}

nlohmann::json sampled_to_json(const SampledGeneratingFunction& h) {
    return {{"t0", h.t0}, {"dt", h.dt}, {"h", h.values}};
}

SampledGeneratingFunction sampled_from_json(const nlohmann::json& j) {
    require_fields(j, {"t0", "dt", "h"}, "sampled function");
    return SampledGeneratingFunction(j.at("t0").get<double>(), j.at("dt").get<double>(),
                                     j.at("h").get<std::vector<double>>());
}

nlohmann::json verdict_to_json(const PsdVerdict& verdict) {
    nlohmann::json j{{"status", to_string(verdict.status)}, {"margin", verdict.margin}};
    if (verdict.witness_x) j["witness"] = *verdict.witness_x;
    if (verdict.witness_t) j["witness_t"] = *verdict.witness_t;
    return j;
}

nlohmann::json strong_report_to_json(const StrongHankelReport& report) {
    nlohmann::json j{{"verdict", report.verdict}, {"min_eigenvalue", report.min_eigenvalue}};
    if (report.tail_used) j["tail_used"] = *report.tail_used;
    return j;
}

nlohmann::json decomposition_to_json(const VandermondeDecomposition& d) {
    return {{"order", d.order},
            {"dim", d.dim},
            {"coefficients", d.coefficients},
            {"nodes", d.nodes},
            {"residual", d.residual},
            {"conditioning_warning", d.conditioning_warning}};
}

nlohmann::json completion_result_to_json(const CompletionResult& result) {
    nlohmann::json a = nlohmann::json::array();
    for (int i = 0; i < result.a.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < result.a.dim(); ++j) row.push_back(result.a(i, j));
        a.push_back(std::move(row));
    }
    return {{"v", result.v.v},
            {"A", std::move(a)},
            {"objective", result.objective},
            {"rank", result.numerical_rank},
            {"iterations", result.iterations},
            {"converged", result.converged}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw InvalidInput("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

}  // namespace hankel
