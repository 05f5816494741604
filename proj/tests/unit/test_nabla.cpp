#include <doctest.h>

#include <sstream>

#include "lowop/errors.hpp"
#include "lowop/nabla.hpp"

using namespace lowop;

namespace {

CostandardModel model_213(long long p) {
    return CostandardModel::build(BranchingPair::make(p, {2, 1, 0}, {1, 1}));
}

}  // namespace

TEST_CASE("shifting to polynomial weights") {
    BranchingPair pair = BranchingPair::make(2, {1, 0, -2}, {0, -1});
    BranchingPair shifted = shift_to_polynomial(pair);
    CHECK(shifted.lambda == Weight{3, 2, 0});
    CHECK(shifted.mu == Weight{2, 1});
    CHECK(b_residue(pair, 1, 2) == b_residue(shifted, 1, 2));
    CHECK(shift_to_polynomial(shifted) == shifted);
}

TEST_CASE("tableau counting") {
    CHECK(ssyt_count({1, 0}, 2) == 2);
    CHECK(ssyt_count({1, 1, 0}, 3) == 3);
    CHECK(ssyt_count({2, 1, 0}, 3) == 8);
    CHECK(ssyt_count({3, 2, 1, 0}, 4) == 64);
    CHECK(ssyt_count({0, 0}, 2) == 1);
    CHECK(ssyt_count({1, 1, 1}, 2) == 0);
}

TEST_CASE("model dimensions match tableau counts") {
    CHECK(CostandardModel::build(BranchingPair::make(2, {1, 0}, {1})).dimension() == 2);
    CHECK(CostandardModel::build(BranchingPair::make(2, {1, 1, 0}, {1, 1})).dimension() == 3);
    CHECK(model_213(2).dimension() == 8);
    CHECK(model_213(3).dimension() == 8);
}

TEST_CASE("weights and degree bookkeeping") {
    CostandardModel model = model_213(2);
    CHECK(model.degree() == 3);
    for (const ModVector& b : model.basis()) {
        Weight w = model.weight_of(b);
        long long total = 0;
        for (long long v : w) total += v;
        CHECK(total == model.degree());
        if (b.is_zero()) continue;
        ModVector moved = model.act_F(1, 3, b);
        if (!moved.is_zero()) {
            Weight expect = w;
            expect[0] -= 1;
            expect[2] += 1;
            CHECK(model.weight_of(moved) == expect);
        }
    }
}

TEST_CASE("divided power composition law") {
    CostandardModel model = model_213(3);
    for (const ModVector& b : model.basis()) {
        ModVector twice = model.act_E(1, 1, model.act_E(1, 1, b));
        CHECK(twice == model.scale(2, model.act_E(1, 2, b)));
    }
}

TEST_CASE("divided powers beyond the multiplicity vanish") {
    CostandardModel model = model_213(2);
    ModVector f = model.find_f_mu({1, 1});
    CHECK(model.act_E(1, static_cast<int>(model.degree()) + 1, f).is_zero());
}

TEST_CASE("branching vector existence and uniqueness") {
    for (long long p : {2LL, 3LL}) {
        CostandardModel model = model_213(p);
        CHECK(model.high_weight_space_dim({1, 1}) == 1);
        CHECK(model.high_weight_space_dim({2, 1}) == 1);
        CHECK(model.high_weight_space_dim({0, 0}) == 0);  // no interlacing
        ModVector f = model.find_f_mu({1, 1});
        CHECK_FALSE(f.is_zero());
        CHECK(model.is_high_weight(f));
        // the top choice even survives the last raising operator
        ModVector top = model.find_f_mu({2, 1});
        CHECK(model.act_E(2, 1, top).is_zero());
    }
}

TEST_CASE("single lowering generator matches the plain chain") {
    CostandardModel model = model_213(2);
    ModVector f = model.find_f_mu({1, 1});
    CHECK(model.apply_S(1, 2, {}, f, {1, 1}) == model.act_F(1, 2, f));
    CHECK(model.apply_S(1, 3, {}, f, {1, 1}) == model.act_F(1, 3, f));
}

TEST_CASE("lowering images at the locked examples") {
    CostandardModel model = model_213(2);
    ModVector f = model.find_f_mu({1, 1});
    CHECK(model.apply_S(1, 3, {2}, f, {1, 1}).is_zero());
    CHECK(model.classify_lowering(1, 3, {}) == Classification::NonzeroNotHighWeight);
    CHECK(model.classify_lowering(1, 3, {2}) == Classification::Zero);

    CostandardModel wide = CostandardModel::build(BranchingPair::make(3, {4, 2, 0}, {4, 1}));
    ModVector g = wide.find_f_mu({4, 1});
    ModVector image = wide.apply_S(1, 2, {}, g, {4, 1});
    REQUIRE_FALSE(image.is_zero());
    CHECK(wide.weight_of(image) == Weight{3, 2, 1});
    CHECK(wide.classify_lowering(1, 2, {}) == Classification::NonzeroHighWeight);

    CostandardModel move =
        CostandardModel::build(BranchingPair::make(2, {3, 2, 1, 0}, {3, 2, 0}));
    CHECK(move.classify_lowering(1, 3, {2}) == Classification::NonzeroHighWeight);
}

TEST_CASE("high weight detection") {
    CostandardModel model = CostandardModel::build(BranchingPair::make(3, {2, 1, 0}, {2, 1}));
    ModVector f = model.find_f_mu({2, 1});
    ModVector lowered = model.act_F(1, 2, f);
    REQUIRE_FALSE(lowered.is_zero());
    CHECK_FALSE(model.is_high_weight(lowered));
}

TEST_CASE("operator words respect the sequence structure") {
    CostandardModel model = model_213(2);
    ModVector f = model.find_f_mu({1, 1});
    CHECK(model.apply_phi({{1, 3, 3, {2}}}, f) == model.apply_S(1, 3, {2}, f, {1, 1}));

    CostandardModel move =
        CostandardModel::build(BranchingPair::make(2, {3, 2, 1, 0}, {3, 2, 0}));
    ModVector g = move.find_f_mu({3, 2, 0});
    CHECK(move.apply_phi({{1, 2, 3, {2}}}, g) ==
          move.act_E(2, 1, move.apply_S(1, 3, {2}, g, {3, 2, 0})));
}

TEST_CASE("the span is closed under every generator") {
    for (long long p : {2LL, 3LL}) {
        CostandardModel model = model_213(p);
        for (const ModVector& b : model.basis()) {
            for (int l = 1; l < model.n(); ++l)
                for (int m = 1; m <= model.degree(); ++m)
                    CHECK_NOTHROW(model.coords(model.act_E(l, m, b)));
            for (int a = 1; a < model.n(); ++a)
                for (int c = a + 1; c <= model.n(); ++c)
                    CHECK_NOTHROW(model.coords(model.act_F(a, c, b)));
        }
    }
}

TEST_CASE("rank two agrees with the oracle") {
    for (long long p : {2LL, 3LL}) {
        for (long long l1 = 0; l1 <= 3; ++l1) {
            for (long long m1 = 0; m1 <= l1; ++m1) {
                BranchingPair pair = BranchingPair::make(p, {l1, 0}, {m1});
                CostandardModel model = CostandardModel::build(pair);
                CHECK(classify_lowering(pair, 1, 2, {}).cls ==
                      model.classify_lowering(1, 2, {}));
            }
        }
    }
}

TEST_CASE("classification ignores the scalar chosen for f") {
    CostandardModel model = CostandardModel::build(BranchingPair::make(3, {4, 2, 0}, {4, 1}));
    ModVector f = model.find_f_mu({4, 1});
    for (long long c : {1LL, 2LL}) {
        ModVector g = model.scale(c, f);
        CHECK(model.classify_lowering(1, 2, {}, g) == Classification::NonzeroHighWeight);
        CHECK(model.classify_lowering(1, 3, {2}, g) == model.classify_lowering(1, 3, {2}, f));
    }
}

TEST_CASE("identity suite on a small model") {
    CostandardModel model = model_213(2);
    IdentityReport report = verify_identities(model);
    CHECK(report.checked > 100);
    CHECK(report.skipped.empty());
    for (const std::string& f : report.failures) MESSAGE(f);
    CHECK(report.ok());
}

TEST_CASE("basis and operator snapshots") {
    CostandardModel model = CostandardModel::build(BranchingPair::make(2, {1, 0}, {1}));
    std::ostringstream basis;
    model.dump_basis(basis);
    CHECK(basis.str() == "b0 wt=1,0 1:1000\nb1 wt=0,1 1:0100\n");
    std::ostringstream op;
    model.dump_operator("F", 1, 2, op);
    CHECK(op.str() == "F(1,2) b0 -> 1:1\nF(1,2) b1 ->\n");
}

TEST_CASE("module rejects unnormalized weights") {
    CHECK_THROWS_AS(CostandardModel::build(BranchingPair::make(2, {1, 0, -1}, {0, 0})),
                    std::invalid_argument);
}
