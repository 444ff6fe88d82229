#ifndef ESYMLAB_APP_COMMANDS_HPP
#define ESYMLAB_APP_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "store.hpp"
#include "suites.hpp"

namespace esymlab::app {

/// Largest index `seq` serves.
inline constexpr long long kMaxSeqIndex = 100000;
/// Exact prefix length available to `period` without --extend, by sequence.
std::size_t exact_prefix_limit(const std::string& name);

struct SeqOptions {
    std::string name;
    std::optional<long long> from;
    long long to = 0;
    std::string format = "csv";
    std::optional<std::uint64_t> mod;
    unsigned j = 1;
    std::string src = "all";
};

struct VerifyOptions {
    std::string suite;
    SuiteOptions suite_options;
    std::string format = "text";
};

struct PeriodOptions {
    std::string name;
    std::uint64_t mod = 2;
    std::size_t window = 500;
    bool extend = false;
    std::size_t burn_in_max = static_cast<std::size_t>(-1);
    std::string format = "text";
};

struct GfOptions {
    std::string lhs;
    std::string rhs;
    std::size_t order = 500;
    std::optional<std::uint64_t> mod;
};

// Each returns the process exit code and writes results to out, diagnostics to err.
int cmd_seq(const SeqOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err);
int cmd_verify(const VerifyOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err);
int cmd_period(const PeriodOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err);
int cmd_gf(const GfOptions& o, SequenceStore& store, std::ostream& out, std::ostream& err);

}  // namespace esymlab::app

#endif
