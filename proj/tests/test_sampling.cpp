#include <doctest.h>

#include <cmath>

#include "test_support.hpp"
#include "trivote/sampling.hpp"

using namespace trivote;
using namespace trivote::testing;

TEST_CASE("single candidate lands in each class a third of the time") {
    Rng rng(41);
    int counts[3] = {0, 0, 0};
    const int draws = 10'000;
    for (int i = 0; i < draws; ++i) {
        const auto b = sample_ballot(1, rng);
        if (b.approve.contains(0)) ++counts[0];
        else if (b.disapprove.contains(0)) ++counts[2];
        else ++counts[1];
    }
    for (int c : counts) CHECK(std::abs(c / static_cast<double>(draws) - 1.0 / 3) < 0.02);
}

TEST_CASE("expected approval size is m/3") {
    Rng rng(42);
    const int m = 12, draws = 5'000;
    long long total = 0;
    for (int i = 0; i < draws; ++i) total += sample_ballot(m, rng).approve.size();
    CHECK(std::abs(total / static_cast<double>(draws) - m / 3.0) < 0.1);
}

TEST_CASE("nonempty-tiers variant produces valid ballots") {
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        const auto b = sample_ballot(5, rng, SamplerVariant::NonemptyTiers);
        CHECK((b.approve & b.disapprove).empty());
    }
}

TEST_CASE("sampled instances validate and the stream is reproducible") {
    ExperimentConfig config;
    Rng a(44), b(44);
    for (int i = 0; i < 200; ++i) {
        const auto x = sample_instance(config, a);
        const auto y = sample_instance(config, b);
        CHECK(x.n() == y.n());
        CHECK(x.m == y.m);
        CHECK(x.k == y.k);
        for (int v = 0; v < x.n(); ++v) {
            CHECK(x.ballots[v].approve == y.ballots[v].approve);
            CHECK(x.ballots[v].disapprove == y.ballots[v].disapprove);
        }
        CHECK(x.n() >= config.n_lo);
        CHECK(x.n() <= config.n_hi);
        CHECK(x.k < x.m);
    }
}

TEST_CASE("sampled voter counts cover the range roughly uniformly") {
    ExperimentConfig config;
    Rng rng(45);
    const int draws = 4'000;
    std::vector<int> hist(config.n_hi + 1, 0);
    for (int i = 0; i < draws; ++i) ++hist[sample_instance(config, rng).n()];
    const double expected = draws / static_cast<double>(config.n_hi - config.n_lo + 1);
    for (int n = config.n_lo; n <= config.n_hi; ++n)
        CHECK(std::abs(hist[n] - expected) < 5 * std::sqrt(expected));
}

TEST_CASE("config validation") {
    ExperimentConfig config;
    config.num_profiles = 0;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config = ExperimentConfig{};
    config.m_lo = 1;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
    config = ExperimentConfig{};
    config.n_lo = 30;
    config.n_hi = 40;
    CHECK_THROWS_AS(validate_config(config), ConfigError);
}

TEST_CASE("parallel and serial experiment runs agree cell by cell") {
    ExperimentConfig config;
    config.num_profiles = 120;
    config.n_hi = 10;
    config.m_hi = 8;
    config.seed = 46;
    const auto serial = run_experiment_serial(config);
    const auto parallel = run_experiment(config);
    REQUIRE(serial.cells.size() == parallel.cells.size());
    CHECK(serial.resampled == parallel.resampled);
    for (std::size_t i = 0; i < serial.cells.size(); ++i) {
        CHECK(serial.cells[i].satisfied == parallel.cells[i].satisfied);
        CHECK(serial.cells[i].total == parallel.cells[i].total);
    }
}

TEST_CASE("per-rule counts respect the axiom implication ordering") {
    ExperimentConfig config;
    config.num_profiles = 150;
    config.n_hi = 10;
    config.m_hi = 8;
    config.seed = 47;
    const auto table = run_experiment(config);
    for (RuleId rule : config.rules) {
        const auto wa = table.cell(rule, AxiomId::WA).satisfied;
        const auto war = table.cell(rule, AxiomId::WAR).satisfied;
        const auto wtpjr = table.cell(rule, AxiomId::WTPJR).satisfied;
        const auto wncr = table.cell(rule, AxiomId::WNCR).satisfied;
        const auto ncr = table.cell(rule, AxiomId::NCR).satisfied;
        CHECK(wa >= war);
        CHECK(war >= wtpjr);
        CHECK(wncr >= ncr);
        for (AxiomId axiom : config.axioms) {
            const auto& cell = table.cell(rule, axiom);
            CHECK(cell.satisfied <= cell.total);
            CHECK(cell.total == config.num_profiles);
        }
    }
}
