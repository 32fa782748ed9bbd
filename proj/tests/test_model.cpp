#include <doctest.h>

#include "test_support.hpp"
#include "trivote/model.hpp"

using namespace trivote;
using namespace trivote::testing;

TEST_CASE("validate_instance rejects overlapping ballots") {
    std::vector<TrichotomousBallot> b = {{cs({0}), cs({0})}};
    CHECK_THROWS_AS(validate_instance(b, 1, 1), OverlapError);
}

TEST_CASE("validate_instance rejects out-of-range k and indices") {
    std::vector<TrichotomousBallot> b = {{cs({0}), cs({})}};
    CHECK_THROWS_AS(validate_instance(b, 3, 4), RangeError);
    CHECK_THROWS_AS(validate_instance(b, 3, 0), RangeError);
    std::vector<TrichotomousBallot> bad = {{cs({5}), cs({})}};
    CHECK_THROWS_AS(validate_instance(bad, 3, 1), RangeError);
}

TEST_CASE("example 1 profile validates") {
    const auto inst = example1();
    CHECK(inst.n() == 4);
    CHECK(inst.m == 5);
    CHECK(inst.k == 2);
}

TEST_CASE("position values") {
    const auto inst = example1();
    CHECK(position(inst.ballots[0], 2, inst.m) == 0);   // v1 indifferent about c
    CHECK(position(inst.ballots[1], 3, inst.m) == -1);  // v2 disapproves d
    TrichotomousBallot blank;
    CHECK(position(blank, 0, 3) == 0);
    CHECK_THROWS_AS(position(blank, 3, 3), RangeError);
}

TEST_CASE("positional scores on example 1") {
    const auto inst = example1();
    CHECK(positional_score(inst, 0) == 3);   // a
    CHECK(positional_score(inst, 4) == -4);  // e disapproved by everyone
    std::vector<TrichotomousBallot> blank(3);
    const auto all_indifferent = validate_instance(blank, 2, 1);
    CHECK(positional_score(all_indifferent, 0) == 0);
}

TEST_CASE("project_approvals keeps only A+") {
    const auto inst = example1();
    const auto dic = project_approvals(inst);
    CHECK(dic.approval_sets[2] == cs({0}));  // v3 -> {a}
    std::vector<TrichotomousBallot> b = {{cs({0, 1}), cs({2})}};
    CHECK(project_approvals(validate_instance(b, 3, 1)).approval_sets[0] == cs({0, 1}));
}

TEST_CASE("is_decisive") {
    CHECK_FALSE(is_decisive(example1()));
    CHECK_FALSE(is_decisive(remark3()));
    CHECK(is_decisive(example2()));
}

TEST_CASE("meets_quota examples") {
    CHECK(meets_quota(3, 1, 5, 2));
    CHECK_FALSE(meets_quota(2, 1, 5, 2));
    CHECK(meets_quota(7, 3, 7, 3));
}

TEST_CASE("meets_quota monotonicity") {
    Rng rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = rng.uniform_int(1, 30);
        const int k = rng.uniform_int(1, n);
        const int l = rng.uniform_int(1, k);
        const int g = rng.uniform_int(0, n);
        if (meets_quota(g, l, n, k)) {
            CHECK(meets_quota(g + 1, l, n, k));
            if (l > 1) CHECK(meets_quota(g, l - 1, n, k));
        }
    }
}

TEST_CASE("ballot sets always partition the candidate set") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_instance(rng);
        for (const auto& b : inst.ballots) {
            const auto zero = b.indifferent(inst.m);
            CHECK((b.approve & b.disapprove).empty());
            CHECK((b.approve & zero).empty());
            CHECK((b.disapprove & zero).empty());
            CHECK((b.approve | b.disapprove | zero) == CandidateSet::full(inst.m));
        }
    }
}

TEST_CASE("positional score equals approvals minus disapprovals") {
    Rng rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_instance(rng);
        for (int c = 0; c < inst.m; ++c) {
            int approvers = 0, disapprovers = 0;
            for (const auto& b : inst.ballots) {
                approvers += b.approve.contains(c);
                disapprovers += b.disapprove.contains(c);
            }
            CHECK(positional_score(inst, c) == approvers - disapprovers);
        }
    }
}

TEST_CASE("decisive instances survive the projection round-trip") {
    Rng rng(14);
    for (int trial = 0; trial < 200; ++trial) {
        const auto inst = random_decisive_instance(rng);
        const auto dic = project_approvals(inst);
        for (int v = 0; v < inst.n(); ++v) {
            const auto rebuilt_minus = dic.approval_sets[v].complement_within(inst.m);
            CHECK(dic.approval_sets[v] == inst.ballots[v].approve);
            CHECK(rebuilt_minus == inst.ballots[v].disapprove);
        }
    }
}
