#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hegf/report.hpp"

namespace hegf {

enum class Suite { special, hermite, genfun, cdf, bivariate, contour, all };

Suite parse_suite(std::string_view s);  // throws usage_error
std::string_view to_string(Suite s);

struct VerifyOptions {
  Suite suite = Suite::all;
  std::uint64_t seed = 0;
  std::optional<double> tolerance;  // replaces every row's tolerance when set
};

// Runs the identity sweeps of the selected suite(s). Each row reports the
// worst residual of one identity together with the inputs where it occurred.
// Suites run concurrently; rows come back sorted by identity_id.
std::vector<IdentityReport> run_verify(const VerifyOptions& options);

bool all_passed(const std::vector<IdentityReport>& rows);

}  // namespace hegf
