#include "qlogic/report.hpp"

#include <chrono>
#include <ctime>

namespace qlogic {

void Check::fail(Json witness) {
    ++samples_;
    ++failures_;
    if (witnesses_.size() < kMaxWitnesses) witnesses_.push_back(std::move(witness));
}

Json Check::to_json() const {
    Json out{{"name", name_}, {"passed", passed()}, {"samples", samples_}, {"failures", failures_}};
    if (!details_.empty()) out["details"] = details_;
    out["witnesses"] = witnesses_;
    return out;
}

SuiteReport::SuiteReport(std::string suite, std::vector<std::string> anchors, Json config)
    : suite_(std::move(suite)), anchors_(std::move(anchors)), config_(std::move(config)) {}

Check& SuiteReport::check(std::string name) { return checks_.emplace_back(std::move(name)); }

void SuiteReport::error(const std::string& section, const std::exception& e) {
    check(section + "/error").fail(Json{{"error", e.what()}});
}

bool SuiteReport::passed() const {
    for (const auto& c : checks_)
        if (!c.passed()) return false;
    return !checks_.empty();
}

std::size_t SuiteReport::failures() const {
    std::size_t total = 0;
    for (const auto& c : checks_) total += c.failures() + (c.samples() == 0 ? 1 : 0);
    return total;
}

Json SuiteReport::to_json(const std::string& started_utc, double wall_clock_ms) const {
    Json checks = Json::array();
    std::size_t samples = 0;
    for (const auto& c : checks_) {
        checks.push_back(c.to_json());
        samples += c.samples();
    }
    return Json{{"schema_version", kReportSchemaVersion},
                {"suite", suite_},
                {"anchors", anchors_},
                {"config", config_},
                {"passed", passed()},
                {"checks_total", checks_.size()},
                {"samples", samples},
                {"failures", failures()},
                {"checks", checks},
                {"timestamp", {{"started_utc", started_utc}, {"wall_clock_ms", wall_clock_ms}}}};
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json strip_timestamps(Json report) {
    if (report.is_object()) {
        report.erase("timestamp");
        for (auto& [key, value] : report.items()) value = strip_timestamps(std::move(value));
    } else if (report.is_array()) {
        for (auto& value : report) value = strip_timestamps(std::move(value));
    }
    return report;
}

}  // namespace qlogic
