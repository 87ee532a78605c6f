#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qfrob {

struct CheckRecord {
    std::string name;
    std::string expected;
    std::string actual;
    std::optional<double> tolerance;  // empty for exact comparisons
    bool pass;
};

/// Outcome of one verification suite, possibly aggregating sub-suites.
class Report {
public:
    explicit Report(std::string suite) : suite_(std::move(suite)) {}

    const std::string& suite() const { return suite_; }
    nlohmann::json& parameters() { return params_; }
    const nlohmann::json& parameters() const { return params_; }
    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::vector<Report>& children() const { return children_; }

    void add(CheckRecord r) { checks_.push_back(std::move(r)); }
    void exact(std::string name, const std::string& expected, const std::string& actual);
    void flag(std::string name, bool ok, const std::string& detail = "");
    void approx(std::string name, double expected, double actual, double tol);
    void add_child(Report r) { children_.push_back(std::move(r)); }

    void set_duration(double seconds) { duration_ = seconds; }
    double duration() const { return duration_; }

    /// True iff every record here and in every child passes.
    bool pass() const;
    std::vector<const CheckRecord*> failures() const;

    nlohmann::json to_json() const;
    std::string to_text() const;

private:
    std::string suite_;
    nlohmann::json params_ = nlohmann::json::object();
    std::vector<CheckRecord> checks_;
    std::vector<Report> children_;
    double duration_ = 0.0;
};

/// Shortest round-trip decimal rendering.
std::string format_double(double v);

}  // namespace qfrob
