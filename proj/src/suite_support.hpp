#pragma once

#include <exception>
#include <string>
#include <vector>

#include "qlogic/suites.hpp"

namespace qlogic::detail {

/// The sample count a suite uses where its full run uses `full`.
inline std::size_t scaled(const SuiteConfig& config, std::size_t full) {
    if (config.samples) return *config.samples;
    return config.quick ? std::max<std::size_t>(1, full / 10) : full;
}

inline std::vector<std::uint32_t> dims_or(const SuiteConfig& config, std::vector<std::uint32_t> defaults) {
    if (config.n) return {*config.n};
    return defaults;
}

/// Runs one section; an escaping exception becomes a failed check.
template <class F>
void section(SuiteReport& report, const std::string& name, F&& body) {
    try {
        body();
    } catch (const std::exception& e) {
        report.error(name, e);
    }
}

inline Json pair_json(const Subspace& x, const Subspace& y) { return Json{{"X", to_json(x)}, {"Y", to_json(y)}}; }

SuiteReport suite_logic(const SuiteConfig& config);
SuiteReport suite_compat(const SuiteConfig& config);
SuiteReport suite_cc(const SuiteConfig& config);
SuiteReport suite_grassmann(const SuiteConfig& config);
SuiteReport suite_cliques(const SuiteConfig& config);
SuiteReport suite_apartments(const SuiteConfig& config);
SuiteReport suite_ortho_apartments(const SuiteConfig& config);
SuiteReport suite_transforms(const SuiteConfig& config);

}  // namespace qlogic::detail
