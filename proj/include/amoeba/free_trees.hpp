#pragma once

#include "amoeba/tree.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace amoeba {

inline constexpr int kFreeTreeCap = 24;

/// Successor-based generator of free trees on n vertices: one tree per
/// isomorphism class, in canonical level-sequence order (Wright, Richmond,
/// Odlyzko and McKay). The state is a level sequence of the tree rooted at its
/// center; each call to next() performs constant amortized work apart from
/// materializing the Tree.
class FreeTreeGenerator {
public:
    explicit FreeTreeGenerator(int n, int cap = kFreeTreeCap);

    std::optional<Tree> next();

    /// Current level sequence (valid after next() returned a tree).
    const std::vector<int>& levels() const noexcept { return levels_; }

private:
    bool advance_rooted(std::size_t p);
    void make_valid();
    std::size_t second_root_child() const;

    int n_;
    bool started_ = false;
    bool done_ = false;
    std::vector<int> levels_;
};

/// All free trees on n vertices (n >= 1). Throws BudgetExceeded above `cap`.
std::vector<Tree> enumerate_free_trees(int n, int cap = kFreeTreeCap);

/// Visits the trees whose generation index is congruent to `worker` modulo
/// `workers`; the union over all workers is the full enumeration.
void for_each_free_tree(int n, int worker, int workers, const std::function<void(const Tree&)>& visit,
                        int cap = kFreeTreeCap);

/// Tree from a level sequence (levels[0] == 0 is the root).
Tree tree_from_levels(const std::vector<int>& levels);

} // namespace amoeba
