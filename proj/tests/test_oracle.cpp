#include <cstdint>

#include "doctest.h"
#include "fringestat/generate.hpp"
#include "fringestat/oracle.hpp"
#include "fringestat/rng.hpp"
#include "helpers.hpp"

using namespace fringestat;
using namespace fringestat::testutil;
namespace o = fringestat::oracle;

TEST_CASE("enumeration oracles on known shapes") {
    CHECK(o::brute_max_independent(make_path(5)) == 3);
    CHECK(o::brute_max_independent(make_path(4)) == 2);
    CHECK(o::brute_max_independent(make_star(5)) == 4);
    CHECK(o::brute_max_independent(make_star(1)) == 1);

    CHECK(o::brute_min_dominating(make_path(4), 1) == 2);
    CHECK(o::brute_min_dominating(make_path(3), 1) == 1);
    CHECK(o::brute_min_dominating(make_star(5), 1) == 1);
    CHECK(o::brute_min_dominating(make_star(5), 2) == 4);
    CHECK(o::brute_min_dominating(make_path(4), 2) == 3);
    CHECK(o::brute_min_dominating(make_star(1), 3) == 1);

    // Complement of P4 is again P4; complement of K_{1,3} holds a triangle.
    CHECK(o::brute_clique_cover(make_path(4)) == 2);
    CHECK(o::brute_clique_cover(make_star(4)) == 3);
    CHECK(o::brute_clique_cover(make_star(1)) == 1);
}

TEST_CASE("clique cover equals max independent set on trees") {
    // Trees are perfect graphs, so the two brute-force routes must agree;
    // they share no code.
    rng::Xoshiro256ss size_gen(654);
    for (std::uint64_t r = 0; r < 60; ++r) {
        const std::uint32_t n =
            1 + static_cast<std::uint32_t>(size_gen.uniform_below(o::kMaxColoringN));
        const TreeSample s = r % 2 ? gen_recursive_tree(n, Seed{80, r}) : gen_bst(n, Seed{80, r});
        CHECK(o::brute_clique_cover(s.tree) == o::brute_max_independent(s.tree));
    }
}

TEST_CASE("oracles reject inputs beyond their enumeration budget") {
    const TreeSample big = gen_recursive_tree(o::kMaxSubsetN + 1, Seed{81, 0});
    CHECK_THROWS_AS(o::brute_max_independent(big.tree), TreeError);
    CHECK_THROWS_AS(o::brute_min_dominating(big.tree, 1), TreeError);
    const TreeSample mid = gen_recursive_tree(o::kMaxColoringN + 1, Seed{81, 1});
    CHECK_THROWS_AS(o::brute_clique_cover(mid.tree), TreeError);
    CHECK_THROWS_AS(o::brute_min_dominating(mid.tree, 0), TreeError);
}
