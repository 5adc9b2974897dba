#include "qlogic/suites.hpp"

#include <algorithm>
#include <chrono>
#include <future>

#include "qlogic/error.hpp"
#include "qlogic/random.hpp"
#include "suite_support.hpp"

namespace qlogic {

namespace {

using SuiteFn = SuiteReport (*)(const SuiteConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"logic", detail::suite_logic},
        {"compat", detail::suite_compat},
        {"cc", detail::suite_cc},
        {"grassmann", detail::suite_grassmann},
        {"cliques", detail::suite_cliques},
        {"apartments", detail::suite_apartments},
        {"ortho-apartments", detail::suite_ortho_apartments},
        {"transforms", detail::suite_transforms},
    };
    return suites;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

// jobs and cache_dir change how a report is produced, not what it says.
Json config_to_json(const SuiteConfig& config) {
    Json out{{"seed", config.seed}, {"quick", config.quick}};
    out["samples"] = config.samples ? Json(*config.samples) : Json();
    out["n"] = config.n ? Json(*config.n) : Json();
    out["k"] = config.k ? Json(*config.k) : Json();
    out["p"] = config.p ? Json(*config.p) : Json();
    return out;
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

Json run_suite(std::string_view name, const SuiteConfig& config) {
    const auto& suites = registry();
    const auto it = std::find_if(suites.begin(), suites.end(), [&](const auto& s) { return s.first == name; });
    if (it == suites.end()) throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(name) + "'");
    const std::string started = utc_now();
    const auto start = std::chrono::steady_clock::now();
    const SuiteReport report = it->second(config);
    return report.to_json(started, elapsed_ms(start));
}

Json run_all(const SuiteConfig& config) {
    const std::string started = utc_now();
    const auto start = std::chrono::steady_clock::now();
    const auto& names = suite_names();
    std::vector<Json> reports(names.size());
    const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
    for (std::size_t first = 0; first < names.size(); first += jobs) {
        std::vector<std::future<Json>> batch;
        for (std::size_t i = first; i < std::min(names.size(), first + jobs); ++i)
            batch.push_back(std::async(jobs == 1 ? std::launch::deferred : std::launch::async,
                                       [&, i] { return run_suite(names[i], config); }));
        for (std::size_t i = 0; i < batch.size(); ++i) reports[first + i] = batch[i].get();
    }
    bool passed = true;
    std::size_t failures = 0;
    std::size_t samples = 0;
    for (const auto& r : reports) {
        passed = passed && r["passed"].get<bool>();
        failures += r["failures"].get<std::size_t>();
        samples += r["samples"].get<std::size_t>();
    }
    return Json{{"schema_version", kReportSchemaVersion},
                {"suite", "all"},
                {"config", config_to_json(config)},
                {"passed", passed},
                {"samples", samples},
                {"failures", failures},
                {"suites", reports},
                {"timestamp", {{"started_utc", started}, {"wall_clock_ms", elapsed_ms(start)}}}};
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : tag) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    SplitMix64 mix(seed ^ h ^ (index * 0x9e3779b97f4a7c15ULL));
    return mix.next();
}

}  // namespace qlogic
