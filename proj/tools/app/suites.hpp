#ifndef ESYMLAB_APP_SUITES_HPP
#define ESYMLAB_APP_SUITES_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "store.hpp"

namespace esymlab::app {

class UnknownSuite : public Error {
public:
    using Error::Error;
};

struct SuiteOptions {
    std::optional<std::size_t> n_max;  // period-table reads it as the window
    std::optional<std::size_t> order;
    unsigned jobs = 1;
};

/// (modulus, conjectured minimal period) for e_2p_4.
const std::vector<std::pair<std::uint64_t, std::size_t>>& conjectured_period_table();

/// Suites run by "all", in order.
const std::vector<std::string>& standard_suites();
/// Suites that exist but are not part of "all".
const std::vector<std::string>& extra_suites();

/// Runs one suite, or every standard suite for "all". Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, SequenceStore& store, const SuiteOptions& options);

}  // namespace esymlab::app

#endif
