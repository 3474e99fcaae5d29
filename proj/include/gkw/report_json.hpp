#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gkw/continuation.hpp"
#include "gkw/evolution.hpp"
#include "gkw/groundstate.hpp"
#include "gkw/index.hpp"
#include "gkw/linop.hpp"
#include "gkw/reproduce.hpp"

namespace gkw::io {

using Json = nlohmann::ordered_json;

Json to_json(const WaveParams& params);
Json to_json(const Field& f);
Json to_json(const SolitonProfile& profile, bool include_field);
Json to_json(const SpectrumReport& report, bool include_eigenfunctions);
Json to_json(const AlbertReport& report);
Json to_json(const IndexReport& report, bool include_rho);
Json to_json(const Branch& branch);
Json to_json(const GroundStateResult& result, bool include_fields);
Json to_json(const StabilityTrace& trace);
Json to_json(const ReproductionReport& row);
Json to_json(const std::vector<ReproductionReport>& rows);

std::string scan_csv(const std::vector<ScanRow>& rows);
std::string branch_csv(const Branch& branch);
std::string mu_scan_csv(const std::vector<MuScanRow>& rows);
/// t, distance, shift, E, V
std::string trace_csv(const StabilityTrace& trace);
std::string reproduction_csv(const std::vector<ReproductionReport>& rows);

}  // namespace gkw::io
