#include "twistlab/admissible.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

#include "twistlab/coverage.hpp"

namespace twistlab {

bool is_admissible(const std::vector<long long>& indices) {
    coverage::touch("is_admissible");
    if (indices.empty()) return true;
    std::vector<long long> s = indices;
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        if (s[i] == s[i + 1]) throw std::invalid_argument("is_admissible: repeated index");
    }
    if (s.front() < 1) throw std::invalid_argument("is_admissible: indices start at 1");
    return static_cast<long long>(s.size()) <= s.front();
}

std::vector<std::vector<long long>> enumerate_admissible(int n) {
    coverage::touch("enumerate_admissible");
    if (n < 1) throw std::invalid_argument("enumerate_admissible: n must be positive");
    if (n > kEnumerateAdmissibleLimit) {
        throw std::invalid_argument("enumerate_admissible: n exceeds exhaustive limit " +
                                    std::to_string(kEnumerateAdmissibleLimit));
    }
    std::vector<std::vector<long long>> out;
    // A nonempty admissible subset of {1..n} is a min element m plus at most
    // m-1 further elements above m.
    std::vector<long long> current;
    for (long long m = 1; m <= n; ++m) {
        current = {m};
        // Depth-first over supersets keeping |A| <= m.
        std::function<void(long long)> grow = [&](long long next) {
            out.push_back(current);
            if (static_cast<long long>(current.size()) >= m) return;
            for (long long j = next; j <= n; ++j) {
                current.push_back(j);
                grow(j + 1);
                current.pop_back();
            }
        };
        grow(m + 1);
    }
    return out;
}

}  // namespace twistlab
