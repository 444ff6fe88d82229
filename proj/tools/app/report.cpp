#include "report.hpp"

#include <ostream>

namespace esymlab::app {

std::string to_string(CheckKind kind) {
    switch (kind) {
        case CheckKind::Theorem: return "theorem";
        case CheckKind::Consistency: return "consistency";
        case CheckKind::Conjecture: return "conjecture";
    }
    return "?";
}

void SuiteReport::add(std::string name, CheckKind kind, bool pass, std::string detail) {
    checks.push_back({std::move(name), kind, pass, std::move(detail)});
}

bool SuiteReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int SuiteReport::exit_code() const {
    bool conjecture_failed = false;
    for (const auto& c : checks) {
        if (c.pass) continue;
        if (c.kind != CheckKind::Conjecture) return kExitFailure;
        conjecture_failed = true;
    }
    return conjecture_failed ? kExitConjecture : kExitOk;
}

void render_text(const SuiteReport& report, std::ostream& out) {
    out << "suite " << report.suite << '\n';
    for (const auto& c : report.checks) {
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] (" << to_string(c.kind) << ") " << c.name;
        if (!c.detail.empty()) out << ": " << c.detail;
        out << '\n';
    }
    for (const auto& n : report.notes) out << "  note: " << n << '\n';
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
    out << "  " << report.checks.size() - failed << "/" << report.checks.size() << " checks passed\n";
}

nlohmann::json to_json(const SuiteReport& report) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks)
        checks.push_back({{"name", c.name}, {"kind", to_string(c.kind)}, {"pass", c.pass}, {"detail", c.detail}});
    return {{"suite", report.suite},
            {"pass", report.passed()},
            {"exit_code", report.exit_code()},
            {"checks", checks},
            {"notes", report.notes}};
}

void Tally::check(bool ok, std::size_t n, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_failure_ = "first failure at n=" + std::to_string(n) + (what.empty() ? "" : " (" + what + ")");
}

void Tally::flush(SuiteReport& report, const std::string& pass_detail) const {
    if (failures_ == 0) {
        report.add(name_, kind_, true, pass_detail.empty() ? std::to_string(checked_) + " cases" : pass_detail);
    } else {
        report.add(name_, kind_, false,
                   std::to_string(failures_) + " of " + std::to_string(checked_) + " cases fail; " + first_failure_);
    }
}

}  // namespace esymlab::app
