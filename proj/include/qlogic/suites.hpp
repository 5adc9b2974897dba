#pragma once

// Verification suites behind `qlogic verify`. Each suite draws its samples
// from SplitMix64 streams seeded by derive_seed(config.seed, tag, index), so
// a report depends only on the configuration.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlogic/report.hpp"

namespace qlogic {

struct SuiteConfig {
    std::uint64_t seed = 7;
    /// Overrides the suite's main sample count.
    std::optional<std::size_t> samples;
    /// Restrict a suite to one dimension / Grassmannian / field size.
    std::optional<std::uint32_t> n;
    std::optional<std::uint32_t> k;
    std::optional<std::uint32_t> p;
    /// Cuts sample counts by 10 and skips the largest instances.
    bool quick = false;
    std::size_t jobs = 1;
    std::optional<std::filesystem::path> cache_dir;
};

Json config_to_json(const SuiteConfig& config);

/// logic, compat, cc, grassmann, cliques, apartments, ortho-apartments, transforms
const std::vector<std::string>& suite_names();

/// Raises InvalidArgument for an unknown name.
Json run_suite(std::string_view name, const SuiteConfig& config);

/// Every suite, `config.jobs` at a time, merged in suite_names() order.
Json run_all(const SuiteConfig& config);

/// FNV-1a of `tag`, mixed with `seed` and `index` through one SplitMix64 step.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index = 0);

}  // namespace qlogic
