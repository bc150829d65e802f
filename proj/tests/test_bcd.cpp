#include <doctest.h>

#include "schurlab/bialternant.hpp"
#include "schurlab/homogeneous.hpp"
#include "schurlab/partition.hpp"
#include "schurlab/schur.hpp"
#include "schurlab/symplectic_orthogonal.hpp"

using namespace schurlab;

namespace {
GeneralizedPartition gp(std::vector<int> parts) { return GeneralizedPartition(std::move(parts)); }

LaurentPoly t_pow(int e) { return LaurentPoly::variable(1, 0, e); }
} // namespace

TEST_CASE("sp_jt examples") {
    CHECK(sp_jt(gp({1}), 1) == t_pow(1) + t_pow(-1));
    CHECK(sp_jt(GeneralizedPartition(), 1) == LaurentPoly::one(1));
    CHECK(sp_jt(gp({2}), 1) == h_sympl(2, 1));
    // chain oracle: middle partitions (0),(1),(2) with weights t^-2, 1, t^2
    CHECK(sp_jt(gp({2}), 1) == skew_sp_gt(gp({2}), GeneralizedPartition(), 1));
    CHECK_THROWS_AS(sp_jt(gp({1, 1}), 1), LengthMismatch);
}

TEST_CASE("o_jt examples") {
    CHECK(o_jt(gp({1}), 2) == h_sympl(1, 2));
    CHECK(o_jt(GeneralizedPartition(), 1) == LaurentPoly::one(1));
    CHECK(o_jt(GeneralizedPartition(), 3) == LaurentPoly::one(3));
    CHECK(o_jt(gp({1}), 1) == t_pow(1) + t_pow(-1));
}

TEST_CASE("straight values agree with the skew route at empty bottom") {
    for (std::size_t N = 1; N <= 2; ++N) {
        for (const auto& la : partitions_up_to(N, 4)) {
            const GeneralizedPartition padded = la.padded(N);
            CHECK(sp_jt(la, N) == skew_sp_jt(padded, GeneralizedPartition(), N));
            CHECK(o_jt(la, N) == skew_o_jt(padded, GeneralizedPartition(), N));
        }
    }
}

TEST_CASE("skew_sp_jt examples") {
    CHECK(skew_sp_jt(gp({1, 0}), gp({1}), 1) == LaurentPoly::one(1));
    CHECK(skew_sp_jt(gp({1, 0}), gp({0}), 1) == t_pow(1) + t_pow(-1));
    CHECK_THROWS_AS(skew_sp_jt(gp({3, 1}), gp({2}), 2), LengthMismatch);
    CHECK_THROWS_AS(skew_sp_jt(gp({2, 1}), gp({1, 0, 0}), 1), LengthMismatch);
}

TEST_CASE("skew_o_jt examples") {
    CHECK(skew_o_jt(gp({0}), GeneralizedPartition(), 1) == LaurentPoly::one(1));
    CHECK(skew_o_jt(gp({1}), GeneralizedPartition(), 1) == t_pow(1) + t_pow(-1));
    CHECK(skew_o_jt(gp({1, 0}), gp({1}), 1) == LaurentPoly::one(1));
    CHECK(skew_o_jt(gp({1, 0}), gp({1}), 1) == skew_o_gt(gp({1, 0}), gp({1}), 1));
}

TEST_CASE("skew_sp_gt examples") {
    CHECK(skew_sp_gt(gp({1}), GeneralizedPartition(), 1) == t_pow(1) + t_pow(-1));
    CHECK(skew_sp_gt(gp({1, 0}), gp({1}), 1) == LaurentPoly::one(1));
    CHECK_THROWS_AS(skew_sp_gt(gp({1}), gp({1}), 1), LengthMismatch);
}

TEST_CASE("skew_o_gt examples") {
    CHECK(skew_o_gt(gp({1}), GeneralizedPartition(), 1) == t_pow(1) + t_pow(-1));
    CHECK(skew_o_gt(gp({1}), GeneralizedPartition(), 1) ==
          skew_o_jt(gp({1}), GeneralizedPartition(), 1));
    // doubling: top tail positive over a zero bottom tail
    CHECK(skew_o_gt(gp({1, 1}), gp({0}), 1) == LaurentPoly::constant(1, 2));
    CHECK(skew_o_jt(gp({1, 1}), gp({0}), 1) == LaurentPoly::constant(1, 2));
}

TEST_CASE("one-variable specialization lemmas") {
    CHECK(sp_single_var(gp({1}), GeneralizedPartition()) == t_pow(-1) + t_pow(1));
    // no middle partition fits between (1,0) and (3,2,2)
    CHECK(sp_single_var(gp({3, 2, 2}), gp({1, 0})) == LaurentPoly::zero(1));
    CHECK(skew_sp_jt(gp({3, 2, 2}), gp({1, 0}), 1) == LaurentPoly::zero(1));
    // the middle partition can exist even when the ends do not interlace
    CHECK(sp_single_var(gp({2, 2}), gp({0})) == LaurentPoly::one(1));
    CHECK(o_single_var(gp({1, 0}), gp({0})) == t_pow(1) + t_pow(-1));
    CHECK(o_single_var(gp({1, 1}), gp({0})) == LaurentPoly::constant(1, 2));
    CHECK_THROWS_AS(sp_single_var(gp({1}), gp({1})), LengthMismatch);

    for (std::size_t l = 0; l <= 3; ++l) {
        for (const auto& nu : padded_partitions(l, 5)) {
            for (const auto& la : padded_partitions(l + 1, 5)) {
                CHECK(skew_sp_jt(la, nu, 1) == sp_single_var(la, nu));
                CHECK(skew_o_jt(la, nu, 1) == o_single_var(la, nu));
                CHECK(skew_sp_gt(la, nu, 1) == sp_single_var(la, nu));
                CHECK(skew_o_gt(la, nu, 1) == o_single_var(la, nu));
            }
        }
    }
}

TEST_CASE("determinant and chain routes agree for both families") {
    for (std::size_t N = 1; N <= 2; ++N) {
        for (std::size_t l = 0; l <= 2; ++l) {
            for (const auto& mu : padded_partitions(l, 3)) {
                for (const auto& la : padded_partitions(l + N, 4)) {
                    CHECK(skew_sp_jt(la, mu, N) == skew_sp_gt(la, mu, N));
                    CHECK(skew_o_jt(la, mu, N) == skew_o_gt(la, mu, N));
                }
            }
        }
    }
}

TEST_CASE("skew determinants vanish without containment") {
    CHECK(skew_sp_jt(gp({1, 1}), gp({2}), 1) == LaurentPoly::zero(1));
    CHECK(skew_o_jt(gp({1, 1, 0}), gp({2, 2}), 1) == LaurentPoly::zero(1));
}

TEST_CASE("padding changes skew values") {
    const LaurentPoly a = skew_sp_jt(gp({2, 1, 1}), gp({1}), 2);
    const LaurentPoly b = skew_sp_jt(gp({2, 1, 1, 0}), gp({1, 0}), 2);
    CHECK(a != b);
}

TEST_CASE("one-row tops reduce to the doubled-alphabet skew Schur value") {
    const std::vector<std::tuple<GeneralizedPartition, GeneralizedPartition, std::size_t>> cases = {
        {gp({3, 0}), GeneralizedPartition(), 2},
        {gp({2, 1, 0}), gp({1}), 2},
        {gp({2, 0}), gp({0}), 1},
        {gp({2, 2, 0, 0}), gp({1, 0}), 2},
    };
    for (const auto& [la, mu, N] : cases)
        CHECK(skew_sp_jt(la, mu, N) == skew_schur_jt(la, mu, Alphabet::doubled_of(N)));
}

TEST_CASE("sstar examples") {
    // empty bottom gives the straight Schur polynomial
    for (std::size_t N = 1; N <= 3; ++N) {
        for (const auto& la : partitions_up_to(N, 4)) {
            const RationalFn v = sstar(la.padded(N), GeneralizedPartition(), N);
            CHECK(v.is_polynomial());
            CHECK(v.num() == schur_jt(la, N));
        }
    }
    // vanishing: top ends positive while the bottom ends in zero
    CHECK(sstar(gp({2, 1}), gp({0}), 1) == RationalFn::from_poly(LaurentPoly::zero(1)));
    // simultaneous zero padding is invisible
    CHECK(sstar(gp({2, 1, 0}), gp({1, 0}), 1) == sstar(gp({2, 1}), gp({1}), 1));
    CHECK_THROWS_AS(sstar(gp({2, 1}), gp({1}), 2), LengthMismatch);
}

TEST_CASE("skew values are inversion and permutation invariant") {
    const std::vector<std::size_t> swap01 = {1, 0};
    for (std::size_t l = 0; l <= 1; ++l) {
        for (const auto& mu : padded_partitions(l, 2)) {
            for (const auto& la : padded_partitions(l + 2, 3)) {
                for (const LaurentPoly& value : {skew_sp_jt(la, mu, 2), skew_o_jt(la, mu, 2)}) {
                    CHECK(value.invert_vars({0}) == value);
                    CHECK(value.invert_vars({1}) == value);
                    CHECK(value.permute_vars(swap01) == value);
                }
            }
        }
    }
}
