#include "ordram/detail/clique.hpp"

#include <algorithm>
#include <bit>

namespace ordram::detail {

BitGraph::BitGraph(int n)
    : n_(n), words_((n + 63) / 64), adj_(static_cast<std::size_t>(n) * ((n + 63) / 64), 0) {}

void BitGraph::add_edge(int a, int b) {
    if (a == b) return;
    adj_[static_cast<std::size_t>(a) * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
    adj_[static_cast<std::size_t>(b) * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

namespace {

using Bits = std::vector<std::uint64_t>;

bool any(const Bits& b) {
    return std::any_of(b.begin(), b.end(), [](std::uint64_t w) { return w != 0; });
}

class CliqueSearch {
public:
    explicit CliqueSearch(const BitGraph& g) : g_(g) {}

    std::vector<int> run() {
        Bits all(static_cast<std::size_t>(g_.words()), 0);
        for (int v = 0; v < g_.size(); ++v) all[v >> 6] |= std::uint64_t{1} << (v & 63);
        if (g_.size() > 0) expand(all);
        std::sort(best_.begin(), best_.end());
        return best_;
    }

private:
    // Greedy sequential coloring of the candidate set; order[k] gets bound
    // bound[k], and bounds are non-decreasing along order.
    void color_sort(const Bits& cand, std::vector<int>& order, std::vector<int>& bound) const {
        Bits uncolored = cand;
        int color = 0;
        const int words = g_.words();
        while (any(uncolored)) {
            ++color;
            Bits avail = uncolored;
            for (int w = 0; w < words; ++w) {
                while (avail[w]) {
                    const int bit = std::countr_zero(avail[w]);
                    const int v = w * 64 + bit;
                    avail[w] &= avail[w] - 1;
                    uncolored[w] &= ~(std::uint64_t{1} << bit);
                    const std::uint64_t* nb = g_.row(v);
                    for (int x = w; x < words; ++x) avail[x] &= ~nb[x];
                    order.push_back(v);
                    bound.push_back(color);
                }
            }
        }
    }

    void expand(Bits cand) {
        std::vector<int> order;
        std::vector<int> bound;
        color_sort(cand, order, bound);
        for (int k = static_cast<int>(order.size()) - 1; k >= 0; --k) {
            if (current_.size() + static_cast<std::size_t>(bound[k]) <= best_.size()) return;
            const int v = order[k];
            current_.push_back(v);
            Bits next(cand.size());
            const std::uint64_t* nb = g_.row(v);
            for (std::size_t w = 0; w < cand.size(); ++w) next[w] = cand[w] & nb[w];
            if (any(next))
                expand(std::move(next));
            else if (current_.size() > best_.size())
                best_ = current_;
            current_.pop_back();
            cand[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
        }
    }

    const BitGraph& g_;
    std::vector<int> current_;
    std::vector<int> best_;
};

}  // namespace

std::vector<int> max_clique(const BitGraph& g) { return CliqueSearch(g).run(); }

}  // namespace ordram::detail
