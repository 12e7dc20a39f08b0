#ifndef BESSELPOLY_LEDGER_HPP
#define BESSELPOLY_LEDGER_HPP

#include "besselpoly/bessel.hpp"

#include <string>
#include <vector>

namespace besselpoly {

/// One formula whose literal reading disagrees with an independent
/// computation, evaluated at a concrete probe.
struct LedgerEntry {
    std::string topic;
    std::string probe;
    std::string literal;
    std::string corrected;
    std::string reference;
};

/// Literal and corrected readings side by side at the given parameters.
std::vector<LedgerEntry> discrepancy_ledger(const BesselParams& p);

} // namespace besselpoly

#endif
