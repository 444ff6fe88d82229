#ifndef ESYMLAB_APP_REPORT_HPP
#define ESYMLAB_APP_REPORT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace esymlab::app {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBadRange = 3;
inline constexpr int kExitNoPeriod = 4;
inline constexpr int kExitConjecture = 10;

/// Theorem: a proven statement. Consistency: two computations of the same
/// quantity. Conjecture: open statements checked on a window.
enum class CheckKind { Theorem, Consistency, Conjecture };

std::string to_string(CheckKind kind);

struct CheckRecord {
    std::string name;
    CheckKind kind;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> notes;
    std::vector<CheckRecord> checks;

    void add(std::string name, CheckKind kind, bool pass, std::string detail = {});
    void note(std::string text) { notes.push_back(std::move(text)); }
    bool passed() const;
    /// 1 on any theorem or consistency failure, else 10 on a conjecture failure, else 0.
    int exit_code() const;
};

void render_text(const SuiteReport& report, std::ostream& out);
nlohmann::json to_json(const SuiteReport& report);

/// Collects per-index failures of one claim into a single record.
class Tally {
public:
    Tally(std::string name, CheckKind kind) : name_(std::move(name)), kind_(kind) {}
    void check(bool ok, std::size_t n, const std::string& what = {});
    void flush(SuiteReport& report, const std::string& pass_detail = {}) const;
    bool ok() const noexcept { return failures_ == 0; }

private:
    std::string name_;
    CheckKind kind_;
    std::size_t checked_ = 0;
    std::size_t failures_ = 0;
    std::string first_failure_;
};

}  // namespace esymlab::app

#endif
