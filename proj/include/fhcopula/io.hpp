#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "fhcopula/sampler.hpp"

namespace fhc::io {

/// printf("%.17g"); non-finite values print as nan/inf/-inf.
std::string format_double(double x);

/// Serializes JSON with every floating-point number at 17 significant digits
/// (non-finite numbers become null), two-space indentation, keys in the order
/// nlohmann stores them.
std::string dump_json(const nlohmann::json& j);

/// CSV with header "u,v".
void write_csv(std::ostream& out, const SampleBatch& batch);

/// CSV with header "x,y".
void write_csv(std::ostream& out, const std::vector<GaussianPair>& pairs);

/// Writes `contents` to a sibling temporary file, then renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace fhc::io
