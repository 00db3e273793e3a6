#include "doctest.h"
#include "rnckit/errors.hpp"
#include "test_util.hpp"

using namespace rnckit;
using namespace testutil;

namespace {

std::vector<ProjPoint> standard_frame(int n) {
    std::vector<ProjPoint> out;
    for (int i = 0; i <= n; ++i) {
        Vector e(static_cast<std::size_t>(n) + 1);
        e[static_cast<std::size_t>(i)] = 1;
        out.emplace_back(e);
    }
    out.emplace_back(Vector(static_cast<std::size_t>(n) + 1, Scalar(1)));
    return out;
}

}  // namespace

TEST_CASE("points are canonical") {
    CHECK(pt({0, 2, 4}) == pt({0, 1, 2}));
    CHECK(pt({0, 2, 4}).coords() == Vector{0, 1, 2});
    CHECK_THROWS(pt({0, 0, 0}));
}

TEST_CASE("frame_map of the standard frame is the identity") {
    auto t = frame_map(standard_frame(3));
    CHECK(t.matrix() == Matrix::identity(4));
}

TEST_CASE("frame_map with last point (1:2:3:4)") {
    auto pts = standard_frame(3);
    pts.back() = pt({1, 2, 3, 4});
    auto t = frame_map(pts);
    Matrix expected(4, 4);
    expected(0, 0) = 1;
    expected(1, 1) = rational(1, 2);
    expected(2, 2) = rational(1, 3);
    expected(3, 3) = rational(1, 4);
    CHECK(t.matrix() == expected);
    auto frame = standard_frame(3);
    for (std::size_t i = 0; i < pts.size(); ++i) CHECK(apply_transform(t, pts[i]) == frame[i]);
}

TEST_CASE("frame_map reproduces the standard frame on random input") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.integer(2, 6));
        std::vector<ProjPoint> pts;
        for (int i = 0; i < n + 2; ++i) pts.push_back(random_point(n, rng));
        if (!dependent_subset(pts).empty()) {
            CHECK_THROWS_AS(frame_map(pts), NotGeneric);
            continue;
        }
        auto t = frame_map(pts);
        auto frame = standard_frame(n);
        for (std::size_t i = 0; i < pts.size(); ++i) CHECK(apply_transform(t, pts[i]) == frame[i]);
    }
}

TEST_CASE("frame_map rejects coplanar points with a witness") {
    std::vector<ProjPoint> pts{pt({1, 0, 0, 0}), pt({0, 1, 0, 0}), pt({0, 0, 1, 0}), pt({0, 0, 0, 1}), pt({1, 1, 1, 0})};
    try {
        frame_map(pts);
        FAIL("expected NotGeneric");
    } catch (const NotGeneric& e) {
        CHECK(e.witness() == std::vector<long>{0, 1, 2, 4});
    }
    CHECK(dependent_subset(pts) == std::vector<long>{0, 1, 2, 4});
}

TEST_CASE("transforms preserve incidence and invert") {
    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.integer(3, 6));
        auto t = random_transform(n, rng);
        auto p = random_point(n, rng);
        auto lam = random_pencil(n, rng);
        LinForm l = lam.member_through(p);
        CHECK(is_zero(l(p)));
        CHECK(is_zero(apply_transform(t, l)(apply_transform(t, p))));
        auto tl = apply_transform(t, lam);
        CHECK(ff_rank(tl.canonical()) == 2);
        auto back = t.inverse();
        CHECK(apply_transform(back, apply_transform(t, p)) == p);
        CHECK(apply_transform(back, tl) == lam);
        LinForm f = lam.f();
        CHECK(apply_transform(back, apply_transform(t, f)) == f);
    }
}

TEST_CASE("pencil equality ignores the choice of generators") {
    Rng rng(41);
    for (int trial = 0; trial < 30; ++trial) {
        auto lam = random_pencil(4, rng);
        Scalar a = rng.nonzero(5), b = rng.integer(-5, 5), c = rng.integer(-5, 5), d = rng.nonzero(5);
        if (is_zero(a * d - b * c)) continue;
        Pencil other(a * lam.f() + b * lam.g(), c * lam.f() + d * lam.g());
        CHECK(other == lam);
    }
}

TEST_CASE("pencil_from_points examples") {
    auto p1 = pencil_from_points({pt({1, 0, 0, 0}), pt({1, 1, 1, 1})});
    CHECK(p1 == Pencil(lf({0, 1, -1, 0}), lf({0, 0, 1, -1})));
    auto p2 = pencil_from_points({pt({1, 2, 4, 8}), pt({1, 3, 9, 27})});
    CHECK(p2 == Pencil(lf({6, -5, 1, 0}), lf({30, -19, 0, 1})));
    CHECK_THROWS_AS(pencil_from_points({pt({1, 2, 4, 8}), pt({1, 2, 4, 8})}), DegenerateSpan);
    CHECK_THROWS_AS(Pencil(lf({1, 2, 3, 4}), lf({2, 4, 6, 8})), DegenerateSpan);
}

TEST_CASE("pencil_from_points vanishes on its input") {
    Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(rng.integer(3, 7));
        std::vector<ProjPoint> pts;
        for (int i = 0; i < n - 1; ++i) pts.push_back(random_point(n, rng));
        Pencil lam = pencil_from_points(pts);
        for (const auto& p : pts) CHECK(lam.contains_point(p));
    }
}
