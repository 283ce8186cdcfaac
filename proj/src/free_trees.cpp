#include "amoeba/free_trees.hpp"

#include "amoeba/error.hpp"

#include <algorithm>
#include <string>

namespace amoeba {

Tree tree_from_levels(const std::vector<int>& levels)
{
    std::vector<Edge> edges;
    std::vector<Vertex> last_at_level(levels.size() + 1, -1);
    for (std::size_t i = 0; i < levels.size(); ++i) {
        auto lvl = static_cast<std::size_t>(levels[i]);
        if (lvl > 0)
            edges.emplace_back(last_at_level[lvl - 1], static_cast<Vertex>(i));
        last_at_level[lvl] = static_cast<Vertex>(i);
    }
    return Tree(levels.size(), std::move(edges));
}

FreeTreeGenerator::FreeTreeGenerator(int n, int cap) : n_(n)
{
    if (n < 1)
        throw Error(ErrorKind::MalformedInput, "free tree enumeration needs n >= 1");
    if (n > cap)
        throw Error(ErrorKind::BudgetExceeded,
                    "free tree enumeration capped at n=" + std::to_string(cap) + ", got " + std::to_string(n));
    // Initial sequence: the path, rooted at its center.
    for (int i = 0; i <= n / 2; ++i)
        levels_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i)
        levels_.push_back(i);
}

// Index of the second child of the root, i.e. where the "rest" part starts.
std::size_t FreeTreeGenerator::second_root_child() const
{
    for (std::size_t i = 2; i < levels_.size(); ++i)
        if (levels_[i] == 1)
            return i;
    return levels_.size();
}

// Next rooted level sequence, modifying positions >= p only.
bool FreeTreeGenerator::advance_rooted(std::size_t p)
{
    if (p == 0)
        return false;
    std::size_t q = p - 1;
    while (levels_[q] != levels_[p] - 1)
        --q;
    for (std::size_t i = p; i < levels_.size(); ++i)
        levels_[i] = levels_[i - p + q];
    return true;
}

// Fix up a rooted sequence whose first subtree violates the centroid/center
// ordering constraints of a canonical free-tree sequence.
void FreeTreeGenerator::make_valid()
{
    std::size_t m = second_root_child();
    std::size_t left_len = m - 1;
    std::size_t rest_len = levels_.size() - m + 1;
    int left_height = 0;
    for (std::size_t i = 1; i < m; ++i)
        left_height = std::max(left_height, levels_[i] - 1);
    int rest_height = 0;
    for (std::size_t i = m; i < levels_.size(); ++i)
        rest_height = std::max(rest_height, levels_[i]);

    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
        if (left_len > rest_len) {
            valid = false;
        } else if (left_len == rest_len) {
            // Lexicographic comparison of left (shifted) against [0] + rest.
            std::vector<int> left;
            std::vector<int> rest{0};
            for (std::size_t i = 1; i < m; ++i)
                left.push_back(levels_[i] - 1);
            for (std::size_t i = m; i < levels_.size(); ++i)
                rest.push_back(levels_[i]);
            if (left > rest)
                valid = false;
        }
    }
    if (valid)
        return;

    const std::size_t p = left_len;
    const int at_p = levels_[p];
    if (!advance_rooted(p)) {
        done_ = true;
        return;
    }
    if (at_p > 2) {
        std::size_t nm = second_root_child();
        int new_left_height = 0;
        for (std::size_t i = 1; i < nm; ++i)
            new_left_height = std::max(new_left_height, levels_[i] - 1);
        const auto suffix_len = static_cast<std::size_t>(new_left_height + 1);
        const std::size_t start = levels_.size() - suffix_len;
        for (std::size_t i = 0; i < suffix_len; ++i)
            levels_[start + i] = static_cast<int>(i) + 1;
    }
}

std::optional<Tree> FreeTreeGenerator::next()
{
    if (done_)
        return std::nullopt;
    if (n_ <= 2) {
        done_ = true;
        return Tree::path(static_cast<std::size_t>(n_));
    }
    if (started_) {
        std::size_t p = levels_.size() - 1;
        while (levels_[p] == 1)
            --p;
        if (!advance_rooted(p)) {
            done_ = true;
            return std::nullopt;
        }
    }
    started_ = true;
    make_valid();
    if (done_)
        return std::nullopt;
    return tree_from_levels(levels_);
}

std::vector<Tree> enumerate_free_trees(int n, int cap)
{
    std::vector<Tree> out;
    FreeTreeGenerator gen(n, cap);
    while (auto t = gen.next())
        out.push_back(std::move(*t));
    return out;
}

void for_each_free_tree(int n, int worker, int workers, const std::function<void(const Tree&)>& visit, int cap)
{
    if (workers < 1 || worker < 0 || worker >= workers)
        throw Error(ErrorKind::MalformedInput, "bad worker partition");
    FreeTreeGenerator gen(n, cap);
    long index = 0;
    while (auto t = gen.next()) {
        if (index++ % workers == worker)
            visit(*t);
    }
}

} // namespace amoeba
