#include "oracles.hpp"

#include "amoeba/canonical.hpp"
#include "amoeba/error.hpp"
#include "amoeba/free_trees.hpp"
#include "amoeba/json_io.hpp"

#include <doctest.h>

#include <numeric>

using namespace amoeba;

namespace {

Tree relabel(const Tree& t, const std::vector<int>& perm)
{
    std::vector<Edge> edges;
    for (const Edge& e : t.edges())
        edges.emplace_back(perm[e.u], perm[e.v]);
    return Tree(t.size(), edges);
}

std::vector<Tree> trees_up_to(int n)
{
    std::vector<Tree> all;
    for (int i = 1; i <= n; ++i)
        for (Tree& t : enumerate_free_trees(i))
            all.push_back(std::move(t));
    return all;
}

} // namespace

TEST_CASE("parse_tree accepts paths and rejects non-trees")
{
    Tree p3 = io::parse_tree(R"({"vertices":3,"edges":[[0,1],[1,2]]})");
    CHECK(p3 == Tree::path(3));

    auto kind_of = [](const std::string& text) {
        try {
            io::parse_tree(text);
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::EmptyColony;
    };
    CHECK(kind_of(R"({"vertices":3,"edges":[[0,1],[1,2],[2,0]]})") == ErrorKind::NotATree);
    CHECK(kind_of(R"({"vertices":4,"edges":[[0,1],[2,3]]})") == ErrorKind::NotATree);
    CHECK(kind_of(R"({"vertices":2,"edges":[[0,5]]})") == ErrorKind::NotATree);
    CHECK(kind_of(R"({"vertices":2,"edges":[[0,0]]})") == ErrorKind::NotATree);
    CHECK(kind_of(R"({"vertices":3,"edges":[[0,1],[0,1]]})") == ErrorKind::NotATree);
    CHECK(kind_of(R"({"vertices":2,"edges":[[0,1]])") == ErrorKind::MalformedInput);
    CHECK(kind_of(R"({"edges":[[0,1]]})") == ErrorKind::MalformedInput);
    CHECK(kind_of(R"({"vertices":"2","edges":[[0,1]]})") == ErrorKind::MalformedInput);
}

TEST_CASE("single vertex is a tree")
{
    Tree t = io::parse_tree(R"({"vertices":1,"edges":[]})");
    CHECK(t.size() == 1);
    CHECK(canonical_code(t) == canonical_code(Tree()));
    TreeMetrics m = tree_metrics(t);
    CHECK(m.diameter == 0);
    CHECK(m.centers.size() == 1);
}

TEST_CASE("canonical codes of small examples")
{
    CHECK(canonical_code(Tree(3, {{0, 1}, {1, 2}})) == canonical_code(Tree(3, {{2, 0}, {0, 1}})));
    CHECK(canonical_code(Tree::path(4)) != canonical_code(Tree::star(3)));
}

TEST_CASE("canonical code agrees with brute-force isomorphism up to 8 vertices")
{
    std::vector<Tree> all = trees_up_to(8);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i; j < all.size(); ++j)
            if (all[i].size() == all[j].size())
                CHECK((canonical_code(all[i]) == canonical_code(all[j])) == oracle::isomorphic(all[i], all[j]));
}

TEST_CASE("canonical code is invariant under random relabeling, with labels")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 400; ++round) {
        const int n = 1 + static_cast<int>(rng() % 9);
        Tree t = oracle::random_tree(rng, n);
        std::vector<int> labels(t.size());
        for (int& l : labels)
            l = static_cast<int>(rng() % 3);
        std::vector<int> perm(t.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Tree u = relabel(t, perm);
        std::vector<int> moved(t.size());
        for (std::size_t v = 0; v < t.size(); ++v)
            moved[perm[v]] = labels[v];
        CHECK(canonical_code(t) == canonical_code(u));
        CHECK(canonical_code(t, labels) == canonical_code(u, moved));

        std::vector<int> other = labels;
        other[rng() % other.size()] += 1;
        CHECK((canonical_code(t, labels) == canonical_code(t, other)) ==
              oracle::isomorphic(t, t, labels, other));
    }
}

TEST_CASE("free tree counts match the Pruefer oracle up to 9 vertices")
{
    const int expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47};
    for (int n = 1; n <= 9; ++n) {
        std::vector<Tree> trees = enumerate_free_trees(n);
        CHECK(static_cast<int>(trees.size()) == expected[n - 1]);
        std::set<std::string> mine;
        for (const Tree& t : trees)
            mine.insert(oracle::naive_code(t));
        CHECK(mine.size() == trees.size());
        std::set<std::string> theirs;
        for (const Tree& t : oracle::pruefer_free_trees(n))
            theirs.insert(oracle::naive_code(t));
        CHECK(mine == theirs);
    }
}

TEST_CASE("free tree enumeration splits across workers")
{
    std::set<std::string> whole, parts;
    for (const Tree& t : enumerate_free_trees(10))
        whole.insert(canonical_code(t).text);
    for (int w = 0; w < 3; ++w)
        for_each_free_tree(10, w, 3, [&](const Tree& t) { CHECK(parts.insert(canonical_code(t).text).second); });
    CHECK(whole.size() == 106);
    CHECK(whole == parts);
}

TEST_CASE("free tree enumeration enforces the cap")
{
    CHECK_THROWS_AS(enumerate_free_trees(30), Error);
    CHECK_THROWS_AS(enumerate_free_trees(6, 5), Error);
}

TEST_CASE("automorphism orbits of small examples")
{
    VertexPartition star = automorphism_orbits(Tree::star(3));
    CHECK(star.blocks == std::vector<std::vector<Vertex>>{{0}, {1, 2, 3}});
    VertexPartition p4 = automorphism_orbits(Tree::path(4));
    CHECK(p4.blocks == std::vector<std::vector<Vertex>>{{0, 3}, {1, 2}});
}

TEST_CASE("automorphism orbits agree with brute force up to 8 vertices")
{
    for (const Tree& t : trees_up_to(8)) {
        CHECK(automorphism_orbits(t).blocks == oracle::brute_orbits(t));
        std::vector<int> labels(t.size());
        for (std::size_t v = 0; v < t.size(); ++v)
            labels[v] = static_cast<int>((v * 7 + 3) % 3 == 0);
        CHECK(automorphism_orbits(t, labels).blocks == oracle::brute_orbits(t, labels));
    }
}

TEST_CASE("orbits refine degree classes")
{
    for (const Tree& t : trees_up_to(9))
        for (const auto& block : automorphism_orbits(t).blocks)
            for (Vertex v : block)
                CHECK(t.degree(v) == t.degree(block.front()));
}

TEST_CASE("full t-ary trees")
{
    CHECK(full_tary_tree(3, 0).tree.size() == 1);
    CHECK(canonical_code(full_tary_tree(2, 1).tree) == canonical_code(Tree::path(3)));
    CHECK(full_tary_tree(2, 3).tree.size() == 15);
    for (int t = 1; t <= 4; ++t) {
        for (int d = 0; d <= 4; ++d) {
            std::size_t expected = 1, layer = 1;
            for (int i = 0; i < d; ++i)
                expected += (layer *= static_cast<std::size_t>(t));
            RootedTree r = full_tary_tree(t, d);
            CHECK(r.tree.size() == expected);
            CHECK(r.root == 0);
        }
    }
    CHECK_THROWS_AS(full_tary_tree(10, 10, 1000), Error);
}

TEST_CASE("tree metrics")
{
    TreeMetrics p4 = tree_metrics(Tree::path(4));
    CHECK(p4.diameter == 3);
    CHECK(p4.centers == std::vector<Vertex>{1, 2});
    TreeMetrics star = tree_metrics(Tree::star(3));
    CHECK(star.diameter == 2);
    CHECK(star.centers == std::vector<Vertex>{0});
    for (const Tree& t : trees_up_to(9)) {
        TreeMetrics m = tree_metrics(t);
        CHECK(2 * m.radius - 1 <= m.diameter);
        CHECK(m.diameter <= 2 * m.radius);
        CHECK((m.centers.size() == 1) == (m.diameter % 2 == 0));
        CHECK(static_cast<int>(diametral_path(t).size()) == m.diameter + 1);
    }
}

TEST_CASE("with_new_edges appends fresh vertices only")
{
    Tree p2 = Tree::path(2);
    std::vector<Edge> ok{{1, 2}, {2, 3}};
    CHECK(p2.with_new_edges(ok) == Tree::path(4));
    std::vector<Edge> bad{{0, 1}};
    CHECK_THROWS_AS(p2.with_new_edges(bad), Error);
    std::vector<Edge> skip{{0, 3}};
    CHECK_THROWS_AS(p2.with_new_edges(skip), Error);
}
