#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "bcnoma/experiment.hpp"

namespace bcnoma::report {

// Header swept_param,value,metric,engine,mean,std_error; %.12g numbers,
// RFC-4180 quoting, LF line endings.
std::string to_csv(const experiment::SweepResult& result);
experiment::SweepResult parse_csv(std::string_view text);

// Self-contained line chart, one polyline per (metric, engine).
std::string to_svg(const experiment::SweepResult& result, const std::string& title = {});

// Throw std::runtime_error naming the path on I/O failure.
void emit_csv(const experiment::SweepResult& result, const std::filesystem::path& path);
void emit_svg(const experiment::SweepResult& result, const std::filesystem::path& path, const std::string& title = {});

}  // namespace bcnoma::report
