#pragma once

#include <string_view>

// Data files compiled into the library (see data/).
namespace rlv::resources {

std::string_view thermo_tables_csv();
std::string_view thermo_tables_sha256();
std::string_view shipped_calibration_text();

}  // namespace rlv::resources
