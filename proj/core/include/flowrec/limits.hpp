#pragma once

#include <stdexcept>
#include <string>

namespace flowrec {

// Guard rails for the exponential enumerations. Every scan checks its
// projected work against these caps and throws CapExceeded instead of
// running away. The defaults are sized for desk-scale graphs.
struct ScanLimits {
    // Largest |E| for which a 2^|E| subset scan is attempted.
    int subset_scan_max_edges = 24;
    // Upper bound on the number of points a residue / lattice-point scan
    // may visit.
    unsigned long long max_scan_points = 1ull << 26;
};

class CapExceeded : public std::runtime_error {
public:
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// base^exp saturating at 2^63-1, so guard comparisons cannot overflow.
unsigned long long saturating_pow(unsigned long long base, unsigned exp);

// Saturating product for composing guard estimates.
unsigned long long saturating_mul(unsigned long long a, unsigned long long b);

void require_subset_scan(int edge_count, const ScanLimits& limits, const char* what);
void require_scan_points(unsigned long long points, const ScanLimits& limits, const char* what);

} // namespace flowrec
