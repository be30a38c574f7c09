#include <doctest.h>

#include <set>

#include "ghw/enumerate.hpp"
#include "ghw/error.hpp"
#include "oracle.hpp"

using ghw::BigInt;
using ghw::FiniteField;
using ghw::MatrixGF;

namespace {

MatrixGF mat(const FiniteField& f, std::vector<std::vector<std::uint32_t>> rows) {
    return MatrixGF::from_rows(f, rows);
}

BigInt ipow(std::uint64_t b, std::size_t e) { return oracle::power(b, e); }

}  // namespace

TEST_CASE("Gaussian binomials") {
    CHECK(ghw::gaussian_binomial(5, 0, 3) == 1);
    CHECK(ghw::gaussian_binomial(3, 1, 2) == 7);
    CHECK(ghw::gaussian_binomial(4, 2, 2) == 35);
    CHECK_THROWS_AS(ghw::gaussian_binomial(3, 4, 2), ghw::Error);
    CHECK(ghw::gaussian_binomial(40, 20, 7) > BigInt(std::numeric_limits<std::uint64_t>::max()));
    CHECK(ghw::binomial(10, 3) == 120);
}

TEST_CASE("full-support counts") {
    CHECK(ghw::count_full_support(3, 3, 5) == 1);
    CHECK(ghw::count_full_support(3, 2, 2) == 4);
    for (std::uint64_t q : {2u, 3u, 4u, 7u}) {
        for (std::size_t w = 1; w <= 6; ++w) CHECK(ghw::count_full_support(w, 1, q) == ipow(q - 1, w - 1));
    }
    CHECK(ghw::count_e(3, 3, 2, 2) == 4);
    CHECK(ghw::count_e(4, 3, 2, 2) == 16);
}

TEST_CASE("support-stratified counts sum to the Gaussian binomial") {
    for (std::uint64_t q : {2u, 3u, 4u, 5u}) {
        for (std::size_t k = 1; k <= 6; ++k) {
            for (std::size_t r = 0; r <= k; ++r) {
                BigInt total = 0;
                for (std::size_t w = r; w <= k; ++w) total += ghw::count_e(k, w, r, q);
                CHECK(total == ghw::gaussian_binomial(k, r, q));
            }
            for (std::size_t w = 1; w <= k; ++w) {
                CHECK(ghw::count_e(k, w, 1, q) == ghw::binomial(k, w) * ipow(q - 1, w - 1));
            }
        }
    }
}

TEST_CASE("expected enumeration") {
    CHECK(ghw::expected_enumeration(1, 3, 2, 4, 2) == ghw::count_e(4, 2, 2, 2));
    // Upper limit ceil(d/m - 1) = 2 for m = 2, d = 6.
    CHECK(ghw::expected_enumeration(2, 6, 2, 4, 2) == 2 * ghw::count_e(4, 2, 2, 2));
    CHECK(ghw::expected_enumeration(2, 8, 2, 4, 2) == 2 * (ghw::count_e(4, 2, 2, 2) + ghw::count_e(4, 3, 2, 2)));
    CHECK(ghw::expected_enumeration(3, 4, 2, 4, 2) == 0);
}

TEST_CASE("combinations") {
    ghw::Combinations c(4, 2);
    std::vector<std::vector<std::size_t>> seen;
    while (c.next()) seen.push_back(c.current());
    CHECK(seen == std::vector<std::vector<std::size_t>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    ghw::Combinations empty(3, 0);
    CHECK(empty.next());
    CHECK(empty.current().empty());
    CHECK_FALSE(empty.next());
    ghw::Combinations none(2, 3);
    CHECK_FALSE(none.next());
}

TEST_CASE("pivot shapes and candidate columns") {
    using Shapes = std::vector<ghw::PivotShape>;
    CHECK(ghw::pivot_shapes(1, 3) == Shapes{{1}});
    CHECK(ghw::pivot_shapes(2, 3) == Shapes{{1, 2}, {1, 3}});
    CHECK(ghw::pivot_shapes(3, 3) == Shapes{{1, 2, 3}});
    CHECK(ghw::pivot_shapes(2, 5).size() == 4);

    using Cols = std::vector<std::vector<ghw::FieldElement>>;
    const auto f2 = FiniteField::prime(2);
    CHECK(ghw::columns_up_to_weight(2, 1, f2) == Cols{{1, 0}, {0, 1}});
    CHECK(ghw::columns_up_to_weight(2, 2, f2) == Cols{{1, 0}, {0, 1}, {1, 1}});
    CHECK(ghw::columns_up_to_weight(2, 2, FiniteField::prime(3)).size() == 8);
}

TEST_CASE("subspace stream examples") {
    const auto f2 = FiniteField::prime(2);
    // Shape (1,2) with the free column running over (1,0), (0,1), (1,1), then shape (1,3).
    const auto list = ghw::subspaces(2, 3, f2);
    CHECK(list == std::vector<MatrixGF>{mat(f2, {{1, 0, 1}, {0, 1, 0}}), mat(f2, {{1, 0, 0}, {0, 1, 1}}),
                                        mat(f2, {{1, 0, 1}, {0, 1, 1}}), mat(f2, {{1, 1, 0}, {0, 0, 1}})});
    const auto f5 = FiniteField::prime(5);
    CHECK(ghw::subspaces(3, 3, f5) == std::vector<MatrixGF>{MatrixGF::identity(f5, 3)});
    CHECK(ghw::subspaces(1, 4, f2) == std::vector<MatrixGF>{mat(f2, {{1, 1, 1, 1}})});
}

TEST_CASE("streams emit distinct full-support RREFs, as many as counted") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto f = oracle::field_of_order(q);
        for (std::size_t w = 1; w <= 5; ++w) {
            for (std::size_t r = 1; r <= w; ++r) {
                const auto list = ghw::subspaces(r, w, f);
                CHECK(BigInt(list.size()) == ghw::count_full_support(w, r, q));
                std::set<std::vector<ghw::FieldElement>> distinct;
                for (const auto& m : list) {
                    const auto red = ghw::rref(m);
                    CHECK(red.rank == r);
                    CHECK(red.reduced == m);
                    CHECK(ghw::support(m).size() == w);
                    distinct.emplace(m.data().begin(), m.data().end());
                }
                CHECK(distinct.size() == list.size());

                const ghw::SubspaceList cached(r, w, f);
                REQUIRE(cached.count() == list.size());
                for (std::size_t i = 0; i < list.size(); ++i) {
                    const auto span = cached.at(i);
                    CHECK(std::equal(span.begin(), span.end(), list[i].data().begin()));
                }
            }
        }
    }
}

TEST_CASE("expansion to a support") {
    const auto f2 = FiniteField::prime(2);
    const auto i2 = MatrixGF::identity(f2, 2);
    const std::size_t full[] = {1, 2};
    CHECK(ghw::expand_to_support(i2, full, 2) == i2);
    const std::size_t third[] = {3};
    CHECK(ghw::expand_to_support(mat(f2, {{1}}), third, 4) == mat(f2, {{0, 0, 1, 0}}));
    const std::size_t split[] = {1, 3};
    CHECK(ghw::expand_to_support(i2, split, 3) == mat(f2, {{1, 0, 0}, {0, 0, 1}}));

    using Choices = std::vector<std::vector<std::size_t>>;
    CHECK(ghw::support_choices(3, 3) == Choices{{1, 2, 3}});
    CHECK(ghw::support_choices(3, 2) == Choices{{1, 2}, {1, 3}, {2, 3}});
    CHECK(ghw::support_choices(4, 0) == Choices{{}});
}

TEST_CASE("supports times streams cover the Grassmannian exactly once") {
    for (std::uint32_t q : {2u, 3u}) {
        const auto f = oracle::field_of_order(q);
        for (std::size_t k = 1; k <= (q == 2 ? 4u : 3u); ++k) {
            for (std::size_t r = 1; r <= k; ++r) {
                std::multiset<std::vector<ghw::FieldElement>> produced;
                for (std::size_t w = r; w <= k; ++w) {
                    const auto base = ghw::subspaces(r, w, f);
                    for (const auto& s : ghw::support_choices(k, w)) {
                        for (const auto& re : base) {
                            const auto m = ghw::expand_to_support(re, s, k);
                            produced.emplace(m.data().begin(), m.data().end());
                        }
                    }
                }
                const auto all = oracle::grassmannian(f, k, r);
                CHECK(produced.size() == all.size());
                CHECK(std::set<std::vector<ghw::FieldElement>>(produced.begin(), produced.end()) == all);
            }
        }
    }
}
