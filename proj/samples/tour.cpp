// A short walk through the library: a few bijections and counts.
#include <iostream>

#include "pathbij/pathbij.hpp"

using namespace pathbij;

int main() {
    const auto pair = parse_pair("((2,1,3),(3,2,1))");
    const auto walk = pair_to_walk(pair);
    std::cout << to_string(pair) << " -> " << render_path(walk) << '\n';
    std::cout << render_path(walk) << " -> " << to_string(walk_to_pair(walk)) << '\n';

    const auto three = parse_kcomposition("6_1+1_2+4_3+2_1", 3);
    std::cout << to_string(three) << " -> " << to_string(three_to_pair(three)) << '\n';

    // every peak of uuddud, sent to a bridge whose crossings record its height
    const auto path = dyck("uududdud");
    for (const auto& [pos, h] : stats(path).peaks) {
        const auto bridge = marked_peak_to_bridge(MarkedPath{path, pos});
        std::cout << "peak at " << pos << " (height " << h << ") -> " << render_path(bridge) << ", "
                  << stats(bridge).crossings << " crossing(s)\n";
    }

    std::cout << "D_1: ";
    for (const auto& v : exact_per_level_table(12, 1)) std::cout << v << ' ';
    std::cout << "\nE_1: ";
    for (const auto& v : atmost_per_level_table(12, 1)) std::cout << v << ' ';
    std::cout << "\nsummit bridges: ";
    for (const auto& v : rational_series({1, -1}, {1, -3, 1}, 10).coeffs) std::cout << v << ' ';
    std::cout << '\n';
}
