#include <doctest.h>

#include <random>

#include "ghw/code.hpp"
#include "ghw/error.hpp"
#include "oracle.hpp"

using ghw::ErrorKind;
using ghw::FiniteField;
using ghw::LinearCode;
using ghw::MatrixGF;

namespace {

MatrixGF mat(const FiniteField& f, std::vector<std::vector<std::uint32_t>> rows) {
    return MatrixGF::from_rows(f, rows);
}

LinearCode hamming() {
    const auto f2 = FiniteField::prime(2);
    return LinearCode(mat(f2, {{1, 0, 0, 0, 0, 1, 1},
                               {0, 1, 0, 0, 1, 0, 1},
                               {0, 0, 1, 0, 1, 1, 0},
                               {0, 0, 0, 1, 1, 1, 1}}));
}

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const ghw::Error& e) {
        return e.kind();
    }
    FAIL("expected an error");
    return ErrorKind::BadArgs;
}

}  // namespace

TEST_CASE("code construction") {
    const auto f2 = FiniteField::prime(2);
    const LinearCode full(MatrixGF::identity(f2, 4));
    CHECK(full.n() == 4);
    CHECK(full.k() == 4);
    CHECK(kind_of([&] { LinearCode(mat(f2, {{1, 1}, {1, 1}})); }) == ErrorKind::RankDeficient);
    CHECK(kind_of([&] { LinearCode(MatrixGF(f2, 0, 3)); }) == ErrorKind::BadDimension);
    CHECK(LinearCode(mat(f2, {{1, 0, 1}})).zero_columns() == 1);
}

TEST_CASE("dual codes") {
    const auto f2 = FiniteField::prime(2);
    const LinearCode rep(mat(f2, {{1, 1}}));
    CHECK(ghw::dual(rep).generator() == mat(f2, {{1, 1}}));

    const auto h = hamming();
    const auto simplex = ghw::dual(h);
    CHECK(simplex.k() == 3);
    CHECK(ghw::rank(ghw::mat_mul(h.generator(), simplex.generator().transpose())) == 0);
    CHECK(ghw::dual(simplex).contains(h));
    CHECK(kind_of([&] { ghw::dual(LinearCode(MatrixGF::identity(f2, 4))); }) == ErrorKind::ZeroDual);
}

TEST_CASE("encoding subspaces") {
    const auto f2 = FiniteField::prime(2);
    const auto h = hamming();
    const auto& g = h.generator();
    CHECK(ghw::encode_subspace(g, MatrixGF::identity(f2, 4)) == g);
    const auto e1 = mat(f2, {{1, 0, 0, 0}});
    CHECK(ghw::encode_subspace(g, e1) == mat(f2, {{1, 0, 0, 0, 0, 1, 1}}));
    CHECK(ghw::support_weight(g, e1) == 3);
    CHECK(ghw::support_weight(g, MatrixGF::identity(f2, 4)) == 7);
    const auto i3 = MatrixGF::identity(f2, 3);
    CHECK(ghw::encode_subspace(i3, mat(f2, {{1, 0, 0}, {0, 1, 0}})) == mat(f2, {{1, 0, 0}, {0, 1, 0}}));
    CHECK_THROWS_AS(ghw::encode_subspace(g, i3), ghw::Error);
}

TEST_CASE("cyclic detection") {
    const auto f2 = FiniteField::prime(2);
    CHECK(ghw::is_cyclic(LinearCode(mat(f2, {{1, 1, 1}}))));
    CHECK_FALSE(ghw::is_cyclic(LinearCode(mat(f2, {{1, 0, 0}, {0, 1, 0}}))));
    CHECK(ghw::is_cyclic(LinearCode(MatrixGF::identity(f2, 5))));
    CHECK_FALSE(ghw::is_cyclic(hamming()));
    CHECK(ghw::is_cyclic(ghw::make_bch(f2, 7, 3)));
}

TEST_CASE("BCH bound") {
    const auto f2 = FiniteField::prime(2);
    CHECK(ghw::bch_bound(LinearCode(mat(f2, {{1, 1, 1, 1, 1, 1, 1}}))) == 7);
    CHECK(ghw::bch_bound(LinearCode(MatrixGF::identity(f2, 7))) == 1);
    CHECK(ghw::bch_bound(ghw::make_bch(f2, 7, 3)) == 3);
    CHECK(kind_of([&] { ghw::bch_bound(hamming()); }) == ErrorKind::NotCyclic);
    CHECK(kind_of([&] { ghw::bch_bound(LinearCode(mat(f2, {{1, 0, 0}, {0, 1, 0}}))); }) ==
          ErrorKind::NotCyclic);
    CHECK(kind_of([&] { ghw::bch_bound(LinearCode(mat(f2, {{1, 1, 1, 1}}))); }) ==
          ErrorKind::CharacteristicDividesLength);
}

TEST_CASE("BCH constructor reaches its designed distance") {
    const auto f2 = FiniteField::prime(2);
    const auto bch15 = ghw::make_bch(f2, 15, 5);
    CHECK(bch15.n() == 15);
    CHECK(bch15.k() == 7);
    CHECK(ghw::is_cyclic(bch15));
    CHECK(ghw::bch_bound(bch15) >= 5);
    CHECK(oracle::ghw(bch15, 1) == 5);

    const auto f3 = FiniteField::prime(3);
    const auto ternary = ghw::make_bch(f3, 8, 3);
    CHECK(ghw::is_cyclic(ternary));
    CHECK(ghw::bch_bound(ternary) >= 3);
    CHECK(oracle::ghw(ternary, 1) >= ghw::bch_bound(ternary));
}

TEST_CASE("Reed-Solomon and Reed-Muller constructors") {
    const auto f5 = FiniteField::prime(5);
    const auto rs1 = ghw::make_rs(f5, 1);
    CHECK(rs1.generator() == mat(f5, {{1, 1, 1, 1, 1}}));
    const auto rs13 = ghw::make_rs(FiniteField::prime(13), 6);
    CHECK(rs13.n() == 13);
    CHECK(rs13.k() == 6);
    CHECK(kind_of([] { ghw::make_rs(FiniteField::build(2, 2), 5); }) == ErrorKind::BadDimension);

    const auto rm = ghw::make_rm(FiniteField::prime(2), 1, 2);
    CHECK(rm.n() == 4);
    CHECK(rm.k() == 3);
    const auto rm52 = ghw::make_rm(f5, 2, 2);
    CHECK(rm52.n() == 25);
    CHECK(rm52.k() == 6);
    CHECK(kind_of([] { ghw::make_rm(FiniteField::prime(3), 3, 1); }) == ErrorKind::DegreeOutOfRange);
}

TEST_CASE("Reed-Solomon codes over extension fields are MDS") {
    const auto f4 = FiniteField::build(2, 2);
    for (std::size_t k = 1; k <= 4; ++k) {
        const auto rs = ghw::make_rs(f4, k);
        for (std::size_t r = 1; r <= k; ++r) CHECK(oracle::ghw(rs, r) == 4 - k + r);
    }
}
