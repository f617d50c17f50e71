#include "mmm/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mmm/certifier.hpp"

namespace mmm {

Permutation::Permutation(std::vector<std::uint32_t> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size() + 1, false);
    for (auto v : image_) {
        if (v < 1 || v > image_.size() || seen[v])
            throw std::invalid_argument("Permutation: not a bijection on 1.." + std::to_string(image_.size()));
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 1U);
    return Permutation(std::move(image));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i] - 1] = static_cast<std::uint32_t>(i + 1);
    return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] != i + 1) return false;
    return true;
}

Permutation compose(const Permutation& p, const Permutation& q) {
    if (p.size() != q.size())
        throw std::invalid_argument("compose: permutations of different sizes (" + std::to_string(p.size()) +
                                    " vs " + std::to_string(q.size()) + ")");
    std::vector<std::uint32_t> image(q.size());
    for (std::uint32_t i = 1; i <= q.size(); ++i) image[i - 1] = p(q(i));
    return Permutation(std::move(image));
}

CycleForm cycle_decomposition(const Permutation& p) {
    CycleForm out;
    std::vector<bool> visited(p.size() + 1, false);
    // Scanning from 1 upward makes every cycle start at its minimum and
    // emits cycles already sorted.
    for (std::uint32_t start = 1; start <= p.size(); ++start) {
        if (visited[start] || p(start) == start) continue;
        std::vector<std::uint32_t> cycle;
        for (std::uint32_t i = start; !visited[i]; i = p(i)) {
            visited[i] = true;
            cycle.push_back(i);
        }
        out.cycles.push_back(std::move(cycle));
    }
    return out;
}

CycleForm normalized(CycleForm c) {
    for (auto& cycle : c.cycles)
        std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    std::sort(c.cycles.begin(), c.cycles.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return c;
}

Permutation from_cycles(const CycleForm& c, std::size_t n) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 1U);
    std::vector<bool> used(n + 1, false);
    for (const auto& cycle : c.cycles) {
        if (cycle.size() < 2) throw std::invalid_argument("from_cycles: cycles need at least two elements");
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const auto from = cycle[k];
            if (from < 1 || from > n || used[from])
                throw std::invalid_argument("from_cycles: cycles are not disjoint within 1.." + std::to_string(n));
            used[from] = true;
            image[from - 1] = cycle[(k + 1) % cycle.size()];
        }
    }
    return Permutation(std::move(image));
}

Permutation driving_permutation(const DrivingList& d) {
    return Permutation(std::vector<std::uint32_t>(d.order().begin(), d.order().end()));
}

Permutation sigma_between(const Permutation& p1, const Permutation& p2) { return compose(p1.inverse(), p2); }

std::vector<CycleForm> sigma_sequence(std::span<const Atom> atoms) {
    std::vector<CycleForm> out;
    if (atoms.size() < 2) return out;
    out.reserve(atoms.size() - 1);
    Permutation prev = driving_permutation(atoms.front().driving);
    for (std::size_t j = 1; j < atoms.size(); ++j) {
        Permutation cur = driving_permutation(atoms[j].driving);
        out.push_back(cycle_decomposition(sigma_between(prev, cur)));
        prev = std::move(cur);
    }
    return out;
}

}  // namespace mmm
