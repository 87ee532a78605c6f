#include "qfrob/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

namespace qfrob {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void Report::exact(std::string name, const std::string& expected, const std::string& actual) {
    add({std::move(name), expected, actual, std::nullopt, expected == actual});
}

void Report::flag(std::string name, bool ok, const std::string& detail) {
    add({std::move(name), "true", ok ? "true" : (detail.empty() ? "false" : "false: " + detail), std::nullopt, ok});
}

void Report::approx(std::string name, double expected, double actual, double tol) {
    add({std::move(name), format_double(expected), format_double(actual), tol, std::abs(actual - expected) <= tol});
}

bool Report::pass() const {
    for (const auto& c : checks_)
        if (!c.pass) return false;
    for (const auto& r : children_)
        if (!r.pass()) return false;
    return true;
}

std::vector<const CheckRecord*> Report::failures() const {
    std::vector<const CheckRecord*> out;
    for (const auto& c : checks_)
        if (!c.pass) out.push_back(&c);
    for (const auto& r : children_)
        for (const auto* c : r.failures()) out.push_back(c);
    return out;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["suite"] = suite_;
    j["parameters"] = params_;
    auto& arr = j["checks"] = nlohmann::json::array();
    for (const auto& c : checks_) {
        nlohmann::json r{{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}};
        r["tolerance"] = c.tolerance ? nlohmann::json(*c.tolerance) : nlohmann::json(nullptr);
        arr.push_back(std::move(r));
    }
    if (!children_.empty()) {
        auto& subs = j["suites"] = nlohmann::json::array();
        for (const auto& r : children_) subs.push_back(r.to_json());
    }
    j["pass"] = pass();
    j["duration_s"] = duration_;
    return j;
}

namespace {

void write_text(const Report& r, std::ostringstream& os, const std::string& indent) {
    os << indent << "suite " << r.suite();
    if (!r.parameters().empty()) {
        os << " (";
        bool first = true;
        for (const auto& [k, v] : r.parameters().items()) {
            os << (first ? "" : ", ") << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
            first = false;
        }
        os << ")";
    }
    os << "\n";
    for (const auto& c : r.checks()) {
        os << indent << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": expected " << c.expected
           << ", actual " << c.actual;
        if (c.tolerance) os << " (tol " << format_double(*c.tolerance) << ")";
        os << "\n";
    }
    for (const auto& child : r.children()) write_text(child, os, indent + "  ");
    os << indent << (r.pass() ? "PASS" : "FAIL") << " " << r.suite() << " in " << format_double(r.duration())
       << " s\n";
}

}  // namespace

std::string Report::to_text() const {
    std::ostringstream os;
    write_text(*this, os, "");
    return os.str();
}

}  // namespace qfrob
