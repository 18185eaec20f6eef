#pragma once

// Breadth-first closure of a seed set under a successor function, with the
// frontier optionally sharded across worker threads. Results are ordered sets,
// so output never depends on the number of workers.

#include <algorithm>
#include <future>
#include <set>
#include <vector>

namespace flagrsk {

template <class T, class Next>
std::set<T> bfs_closure(const std::vector<T>& seeds, Next next, int jobs = 1) {
    std::set<T> seen(seeds.begin(), seeds.end());
    std::vector<T> frontier(seen.begin(), seen.end());
    jobs = std::max(1, jobs);
    while (!frontier.empty()) {
        std::vector<std::vector<T>> found;
        if (jobs == 1 || frontier.size() < 64) {
            found.emplace_back();
            for (const T& x : frontier) next(x, found.back());
        } else {
            const std::size_t chunk = (frontier.size() + jobs - 1) / jobs;
            std::vector<std::future<std::vector<T>>> parts;
            for (std::size_t lo = 0; lo < frontier.size(); lo += chunk) {
                const std::size_t hi = std::min(frontier.size(), lo + chunk);
                parts.push_back(std::async(std::launch::async, [&, lo, hi] {
                    std::vector<T> out;
                    for (std::size_t k = lo; k < hi; ++k) next(frontier[k], out);
                    return out;
                }));
            }
            for (auto& p : parts) found.push_back(p.get());
        }
        std::vector<T> fresh;
        for (auto& batch : found)
            for (T& y : batch)
                if (seen.insert(y).second) fresh.push_back(std::move(y));
        frontier = std::move(fresh);
    }
    return seen;
}

}  // namespace flagrsk
