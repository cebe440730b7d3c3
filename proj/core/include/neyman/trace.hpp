#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace neyman {

/// Per-round record of one replication, stored column-wise. Round indices are
/// contiguous from 1 to T (implicit: round t lives at position t-1).
struct TrialTrace {
    std::vector<double> pi;        // allocation used at each round
    std::vector<std::uint8_t> arm; // 0 = control, 1 = treatment
    std::vector<double> y;         // observed outcome in [0,1]

    std::size_t size() const { return pi.size(); }
    bool empty() const { return pi.empty(); }

    void reserve(std::size_t n) {
        pi.reserve(n);
        arm.reserve(n);
        y.reserve(n);
    }

    void clear() {
        pi.clear();
        arm.clear();
        y.clear();
    }

    void push_round(double pi_t, int a_t, double y_t) {
        pi.push_back(pi_t);
        arm.push_back(static_cast<std::uint8_t>(a_t));
        y.push_back(y_t);
    }
};

}  // namespace neyman
