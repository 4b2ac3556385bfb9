#include "flowrec/limits.hpp"

#include <limits>

namespace flowrec {

namespace {
constexpr unsigned long long kSaturated = std::numeric_limits<long long>::max();
}

unsigned long long saturating_mul(unsigned long long a, unsigned long long b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

unsigned long long saturating_pow(unsigned long long base, unsigned exp) {
    unsigned long long result = 1;
    for (unsigned i = 0; i < exp; ++i) result = saturating_mul(result, base);
    return result;
}

void require_subset_scan(int edge_count, const ScanLimits& limits, const char* what) {
    if (edge_count > limits.subset_scan_max_edges) {
        throw CapExceeded(std::string(what) + ": subset scan over " +
                          std::to_string(edge_count) + " edges exceeds cap of " +
                          std::to_string(limits.subset_scan_max_edges));
    }
}

void require_scan_points(unsigned long long points, const ScanLimits& limits, const char* what) {
    if (points > limits.max_scan_points) {
        throw CapExceeded(std::string(what) + ": scan of " + std::to_string(points) +
                          " points exceeds cap of " + std::to_string(limits.max_scan_points));
    }
}

} // namespace flowrec
