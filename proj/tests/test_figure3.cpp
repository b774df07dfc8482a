#include <doctest.h>

#include <stdexcept>

#include "coarray/figure3.hpp"

using coarray::BigInt;
using coarray::SweepMode;

TEST_CASE("sweep_mode_from_string accepts the two mode names") {
    CHECK(coarray::sweep_mode_from_string("fixed-q") == SweepMode::fixed_q);
    CHECK(coarray::sweep_mode_from_string("fixed-nsigma") == SweepMode::fixed_n_sigma);
    CHECK_THROWS_AS(coarray::sweep_mode_from_string("fixedq"), std::invalid_argument);
    CHECK(coarray::to_string(SweepMode::fixed_q) == "fixed-q");
    CHECK(coarray::to_string(SweepMode::fixed_n_sigma) == "fixed-nsigma");
}

TEST_CASE("fixed-Q sweep covers the admissible N_sigma range") {
    auto rows = coarray::figure3_sweep(4, 4, SweepMode::fixed_q, 3);
    REQUIRE(rows.size() == 6);

    CHECK(rows[0].n_sigma == 7);
    CHECK(rows[0].upper == 2);
    REQUIRE(rows[0].exact.has_value());
    CHECK(*rows[0].exact == 2);
    CHECK_FALSE(rows[0].lower.has_value());
    CHECK(rows[0].lower_plotted == 2);

    CHECK(rows[1].n_sigma == 8);
    REQUIRE(rows[1].lower.has_value());
    CHECK(*rows[1].lower == 2);

    CHECK(rows[5].n_sigma == 12);
    REQUIRE(rows[5].lower.has_value());
    CHECK(*rows[5].lower == 1);
    CHECK_FALSE(rows[5].exact.has_value());

    for (const auto& r : rows) {
        CHECK(r.q == 3);
        CHECK(r.upper == 2);
        if (r.lower) CHECK(*r.lower <= r.upper);
    }
}

TEST_CASE("fixed-Q sweep at the large design point") {
    auto rows = coarray::figure3_sweep(20, 20, SweepMode::fixed_q, 12);
    REQUIRE(rows.size() == 202);
    CHECK(rows.front().n_sigma == 39);
    CHECK(rows.back().n_sigma == 240);
    for (const auto& r : rows) CHECK(r.upper == 43758);

    REQUIRE(rows.front().exact.has_value());
    CHECK(*rows.front().exact == 43758);
    CHECK(rows.front().lower_plotted == 43758);

    REQUIRE(rows.back().lower.has_value());
    CHECK(*rows.back().lower == 1);
    CHECK_FALSE(rows.back().exact.has_value());

    int with_lower = 0;
    for (const auto& r : rows)
        if (r.lower) {
            ++with_lower;
            CHECK(r.n_sigma % 20 == 0);
        }
    CHECK(with_lower == 11);  // N_sigma in {40, 60, ..., 240}
}

TEST_CASE("fixed-N_sigma sweep is concave in Q with the true peak") {
    auto rows = coarray::figure3_sweep(20, 20, SweepMode::fixed_n_sigma, 200);
    REQUIRE(rows.size() == 11);
    CHECK(rows.front().q == 10);
    CHECK(rows.back().q == 20);

    CHECK(rows[0].upper == 43758);   // C(18, 8)
    CHECK(rows[1].upper == 48620);   // C(18, 9): the true peak
    CHECK(rows[2].upper == 43758);   // C(18, 10)
    for (const auto& r : rows) CHECK(r.upper <= 48620);

    // lower = C(10, Q-10), unimodal with peak at Q = 15.
    for (const auto& r : rows) {
        REQUIRE(r.lower.has_value());
        CHECK(*r.lower == coarray::binomial(10, r.q - 10));
    }

    // Concavity of log-upper: upper(q)^2 >= upper(q-1)*upper(q+1).
    for (std::size_t i = 1; i + 1 < rows.size(); ++i)
        CHECK(rows[i].upper * rows[i].upper >=
              rows[i - 1].upper * rows[i + 1].upper);
}

TEST_CASE("empty sweep ranges are rejected") {
    CHECK_THROWS_AS(coarray::figure3_sweep(4, 4, SweepMode::fixed_q, 5), std::domain_error);
    CHECK_THROWS_AS(coarray::figure3_sweep(4, 4, SweepMode::fixed_n_sigma, 6),
                    std::domain_error);
    CHECK_THROWS_AS(coarray::figure3_sweep(4, 4, SweepMode::fixed_n_sigma, 17),
                    std::domain_error);
    CHECK_THROWS_AS(coarray::figure3_sweep(0, 4, SweepMode::fixed_q, 2),
                    std::invalid_argument);
}

TEST_CASE("figure3_csv emits one golden table") {
    auto rows = coarray::figure3_sweep(4, 4, SweepMode::fixed_q, 3);
    const std::string expected =
        "N_sigma,Q,upper,lower,lower_applicable,lower_plotted,exact\n"
        "7,3,2,,false,2,2\n"
        "8,3,2,2,true,2,\n"
        "9,3,2,,false,1,\n"
        "10,3,2,,false,1,\n"
        "11,3,2,,false,1,\n"
        "12,3,2,1,true,1,\n";
    CHECK(coarray::figure3_csv(rows) == expected);
    CHECK(coarray::figure3_csv(rows) == coarray::figure3_csv(rows));
}
