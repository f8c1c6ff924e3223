#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "hforms/gf.hpp"

using namespace hforms;

namespace {

// Independent of the log-table machinery: d-th powers by direct enumeration
// with square-and-multiply over the field's own mul.
std::set<Elem> dth_powers_direct(const FieldDescriptor& F, std::uint32_t d) {
    std::set<Elem> out;
    for (Elem x = 0; x < F.q; ++x) {
        Elem r = 1, base = x;
        std::uint32_t e = d;
        while (e) {
            if (e & 1) r = F.mul(r, base);
            base = F.mul(base, base);
            e >>= 1;
        }
        out.insert(x == 0 && d > 0 ? Elem(0) : r);
    }
    return out;
}

}  // namespace

TEST_CASE("prime field basics: F_5") {
    auto F = make_field(5, 1);
    CHECK(F.q == 5);
    CHECK(F.gen == 2);  // smallest primitive root mod 5
    CHECK(F.add(3, 4) == 2);
    CHECK(F.neg(2) == 3);
    CHECK(F.mul(3, 4) == 2);
    CHECK(F.inv(3) == 2);
    CHECK(F.pow(2, 4) == 1);
    CHECK(F.pow(0, 3) == 0);
    CHECK(F.pow(0, 0) == 1);
    // exp/log round-trip
    for (Elem a = 1; a < 5; ++a) CHECK(F.exp(F.log(a)) == a);
}

TEST_CASE("make_field rejects bad input") {
    CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_field(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(make_field(2, 40), budget_error);  // 2^40 over default budget
    CHECK_THROWS_AS(make_field(5, 2, 20), budget_error);
}

TEST_CASE("extension field F_25 is a field with the expected presentation") {
    auto F = make_field(5, 2);
    CHECK(F.q == 25);
    // smallest irreducible by packed code: x^2, x^2+1, x^2+2 -> x^2+2 wins
    CHECK(F.modulus == std::vector<Elem>{2, 0});

    // field axioms, exhaustively
    for (Elem a = 0; a < 25; ++a) {
        CHECK(F.add(a, F.neg(a)) == 0);
        if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
        for (Elem b = 0; b < 25; ++b) {
            CHECK(F.add(a, b) == F.add(b, a));
            CHECK(F.mul(a, b) == F.mul(b, a));
            for (Elem c = 0; c < 25; ++c) {
                if ((a * 7 + b * 3 + c) % 11 != 0) continue;  // sampled
                CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
            }
        }
    }
    // generator has full order
    std::set<Elem> seen;
    Elem cur = 1;
    for (int k = 0; k < 24; ++k) {
        seen.insert(cur);
        cur = F.mul(cur, F.gen);
    }
    CHECK(cur == 1);
    CHECK(seen.size() == 24);
}

TEST_CASE("field presentation is deterministic across rebuilds") {
    for (auto [p, f] : {std::pair<std::uint32_t, std::uint32_t>{7, 1},
                        {3, 4},
                        {2, 6},
                        {13, 2}}) {
        auto A = make_field(p, f);
        auto B = make_field(p, f);
        CHECK(A.gen == B.gen);
        CHECK(A.modulus == B.modulus);
        CHECK(A.exp_ == B.exp_);
    }
}

TEST_CASE("4th powers in small prime fields") {
    auto F5 = make_field(5, 1);
    auto P5 = dth_powers(F5, 4);
    CHECK(P5.to_vector() == std::vector<Elem>{0, 1});  // x^4 in {0,1} mod 5

    auto F7 = make_field(7, 1);
    auto P7 = dth_powers(F7, 4);
    CHECK(P7.to_vector() == std::vector<Elem>{0, 1, 2, 4});  // the squares mod 7

    // cross-check against direct enumeration on a few (q, d) pairs
    for (auto [p, f, d] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{
             29, 1, 8},
                           {3, 3, 13},
                           {2, 5, 3},
                           {11, 1, 5}}) {
        auto F = make_field(p, f);
        auto got = dth_powers(F, d).to_vector();
        auto want = dth_powers_direct(F, d);
        CHECK(std::set<Elem>(got.begin(), got.end()) == want);
    }
}

TEST_CASE("power classes of F_7 under d=4") {
    auto F = make_field(7, 1);
    auto T = power_classes(F, 4);
    CHECK(T.d_star == 2);  // gcd(4, 6)
    CHECK(T.reps == std::vector<Elem>{1, 3});
    CHECK(T.cosets[0].to_vector() == std::vector<Elem>{1, 2, 4});
    CHECK(T.cosets[1].to_vector() == std::vector<Elem>{3, 5, 6});
    CHECK(T.class_index(2) == 0);
    CHECK(T.class_index(5) == 1);
    CHECK(T.rep_of(6) == 3);
    CHECK_THROWS_AS(T.class_index(0), std::invalid_argument);
}

TEST_CASE("d and gcd(d, q-1) induce the same power classes") {
    // gcd(8, 28) = gcd(4, 28) = 4, so degree 8 and degree 4 classes agree on F_29
    auto F = make_field(29, 1);
    auto T8 = power_classes(F, 8);
    auto T4 = power_classes(F, 4);
    CHECK(T8.d_star == 4);
    CHECK(T8.reps == T4.reps);
    for (Elem a = 1; a < 29; ++a) CHECK(T8.class_index(a) == T4.class_index(a));
}

TEST_CASE("power class structure: sizes and closure") {
    for (auto [p, f, d] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{
             13, 1, 3},
                           {5, 2, 4},
                           {2, 4, 5},
                           {31, 1, 6}}) {
        auto F = make_field(p, f);
        auto T = power_classes(F, d);
        CHECK(T.d_star == gcd_u64(d, F.q - 1));
        std::size_t total = 0;
        for (std::uint32_t c = 0; c < T.d_star; ++c) {
            // every coset has (q-1)/d_star members
            CHECK(T.cosets[c].count() == (F.q - 1) / T.d_star);
            total += T.cosets[c].count();
            // smallest member is the representative, and classes are sorted
            CHECK(T.cosets[c].test(T.reps[c]));
            CHECK(T.class_index(T.reps[c]) == c);
            if (c > 0) CHECK(T.reps[c] > T.reps[c - 1]);
        }
        CHECK(total == F.q - 1);
        // class of 1 = the d-th powers themselves, always class 0
        CHECK(T.reps[0] == 1);
        // multiplying by a d-th power stays in class
        auto P = dth_powers(F, d);
        P.for_each([&](Elem s) {
            if (s == 0) return;
            for (Elem a = 1; a < F.q; a += 3)
                CHECK(T.class_index(F.mul(a, s)) == T.class_index(a));
        });
    }
}

TEST_CASE("degree coprime to q-1 collapses to a single class") {
    auto F = make_field(7, 1);  // gcd(5, 6) = 1
    auto T = power_classes(F, 5);
    CHECK(T.d_star == 1);
    CHECK(dth_powers(F, 5).count() == 7);  // x -> x^5 is a bijection
}
