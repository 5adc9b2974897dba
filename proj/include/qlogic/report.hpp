#pragma once

// Verification reports. A report is a list of named checks; each check
// counts its samples and failures and keeps up to kMaxWitnesses failure
// witnesses. Everything except the "timestamp" object is a function of the
// configuration, so two runs with one seed serialise identically once
// timestamps are removed.

#include <cstddef>
#include <deque>
#include <string>
#include <vector>

#include "qlogic/serialize.hpp"

namespace qlogic {

inline constexpr int kReportSchemaVersion = 1;
inline constexpr std::size_t kMaxWitnesses = 10;

class Check {
public:
    explicit Check(std::string name) : name_(std::move(name)) {}

    void pass() { ++samples_; }
    void fail(Json witness);
    /// Records one sample; `witness` is only evaluated on failure.
    template <class F>
    void expect(bool ok, F&& witness) {
        if (ok) pass();
        else fail(witness());
    }
    void expect(bool ok) {
        expect(ok, [] { return Json(); });
    }
    /// Free-form numbers reported alongside the counts.
    Json& details() { return details_; }

    const std::string& name() const { return name_; }
    std::size_t samples() const { return samples_; }
    std::size_t failures() const { return failures_; }
    bool passed() const { return failures_ == 0 && samples_ > 0; }

    Json to_json() const;

private:
    std::string name_;
    std::size_t samples_ = 0;
    std::size_t failures_ = 0;
    std::vector<Json> witnesses_;
    Json details_ = Json::object();
};

class SuiteReport {
public:
    SuiteReport(std::string suite, std::vector<std::string> anchors, Json config);

    /// Appends a new check; references stay valid.
    Check& check(std::string name);
    /// Records an exception escaping a section as a failed check.
    void error(const std::string& section, const std::exception& e);

    bool passed() const;
    std::size_t failures() const;

    Json to_json(const std::string& started_utc, double wall_clock_ms) const;

private:
    std::string suite_;
    std::vector<std::string> anchors_;
    Json config_;
    std::deque<Check> checks_;
};

/// Current UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_now();

/// Removes every "timestamp" member, recursively.
Json strip_timestamps(Json report);

}  // namespace qlogic
