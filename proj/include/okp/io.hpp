// Flat-file formats: instance CSV (`value,weight`), solution CSV
// (`index,value,weight,x`) and the key=value metadata sidecar.
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "okp/core.hpp"

namespace okp {

using Metadata = std::map<std::string, std::string>;

void write_instance_csv(const std::filesystem::path& path, const Instance& instance);
std::string instance_csv(const Instance& instance);

/// Parses an instance CSV. Throws DataError with the line number on bad rows.
Instance read_instance_csv(const std::filesystem::path& path,
                           std::optional<Bounds> bounds = std::nullopt);
Instance parse_instance_csv(std::string_view text, std::optional<Bounds> bounds = std::nullopt,
                            std::string_view origin = "<input>");

void write_solution_csv(const std::filesystem::path& path, const Instance& instance,
                        const Solution& solution);

/// Sidecar path for an instance file: "<path>.meta".
std::filesystem::path metadata_path(const std::filesystem::path& instance_path);
void write_metadata(const std::filesystem::path& path, const Metadata& meta);
Metadata read_metadata(const std::filesystem::path& path);

/// Bounds from metadata keys L and U, when both are present.
std::optional<Bounds> bounds_from_metadata(const Metadata& meta);

/// Standard sidecar for a generated or ingested instance: L, U, vhat, omegahat, opt.
Metadata describe_instance(const Instance& instance);

}  // namespace okp
