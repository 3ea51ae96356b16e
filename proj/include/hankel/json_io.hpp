#pragma once

#include <string>

#include <json.hpp>

#include "hankel/completion.hpp"
#include "hankel/hankel_core.hpp"
#include "hankel/psd_toolkit.hpp"
#include "hankel/sym_tensor.hpp"

namespace hankel {

// File formats: UTF-8 JSON, numbers as decimal doubles, indices 1-based.
//
//   tensor   {"order": m, "dim": n, "entries": [{"index": [...], "value": x}, ...]}
//            unlisted canonical indices are zero
//   gv       {"order": m, "dim": n, "v": [v0, ...]}
//   sampled  {"t0": ..., "dt": ..., "h": [...]}

nlohmann::json tensor_to_json(const SymmetricTensor& t);

// Indices may arrive unsorted; entries landing on the same canonical slot
// are orbit-averaged. *max_asymmetry_out (optional) receives the largest
// spread seen across duplicates of one slot.
SymmetricTensor tensor_from_json(const nlohmann::json& j, double* max_asymmetry_out = nullptr);

nlohmann::json gv_to_json(const GeneratingVector& gv);
GeneratingVector gv_from_json(const nlohmann::json& j);

nlohmann::json sampled_to_json(const SampledGeneratingFunction& h);
SampledGeneratingFunction sampled_from_json(const nlohmann::json& j);

nlohmann::json verdict_to_json(const PsdVerdict& verdict);
nlohmann::json strong_report_to_json(const StrongHankelReport& report);
nlohmann::json decomposition_to_json(const VandermondeDecomposition& d);
nlohmann::json completion_result_to_json(const CompletionResult& result);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace hankel
