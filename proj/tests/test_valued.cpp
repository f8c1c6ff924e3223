#include <doctest.h>

#include <random>
#include <utility>
#include <vector>

#include "hforms/valued.hpp"
#include "support/padic_oracle.hpp"

using namespace hforms;

namespace {

using Vals = std::vector<std::int64_t>;

ValuedDiagonalForm padic_form(std::uint32_t d,
                              std::vector<std::pair<Elem, std::int64_t>> cs) {
    ValuedDiagonalForm phi;
    phi.d = d;
    for (auto [u, v] : cs) phi.coeffs.push_back(ValuedCoefficient{u, {v}});
    return phi;
}

}  // namespace

TEST_CASE("residue decomposition groups by valuation mod d") {
    ValuedField Q5 = PadicField{5, 1, 1};

    auto split = residue_decomposition(Q5, padic_form(4, {{1, 0}, {1, 1}}));
    CHECK(split.size() == 2);
    CHECK(split.at(Vals{0}).coeffs == std::vector<Elem>{1});
    CHECK(split.at(Vals{1}).coeffs == std::vector<Elem>{1});

    // p^d is a d-th power times a unit
    auto whole = residue_decomposition(Q5, padic_form(4, {{2, 4}}));
    CHECK(whole.size() == 1);
    CHECK(whole.at(Vals{0}).coeffs == std::vector<Elem>{2});

    // negative valuations reduce with a floor
    auto neg = residue_decomposition(Q5, padic_form(4, {{3, -1}}));
    CHECK(neg.size() == 1);
    CHECK(neg.at(Vals{3}).coeffs == std::vector<Elem>{3});

    ValuedField tower = LaurentTower{std::pair{7u, 1u}, 2};
    ValuedDiagonalForm mixed;
    mixed.d = 3;
    mixed.coeffs = {ValuedCoefficient{2, {4, -2}}, ValuedCoefficient{5, {0, 1}},
                    ValuedCoefficient{3, {1, 1}}};
    auto layered = residue_decomposition(tower, mixed);
    CHECK(layered.size() == 2);
    CHECK(layered.at(Vals{1, 1}).coeffs == std::vector<Elem>{2, 3});
    CHECK(layered.at(Vals{0, 1}).coeffs == std::vector<Elem>{5});

    std::size_t total = 0;
    for (const auto& [g, form] : layered) total += form.dim();
    CHECK(total == mixed.dim());
}

TEST_CASE("Springer isotropy over Q_5 at degree 4") {
    ValuedField Q5 = PadicField{5, 1, 1};

    // five units exceed u_diag(4, F_5) = 4
    auto big = is_isotropic_valued_diagonal(
        Q5, padic_form(4, {{1, 0}, {1, 0}, {1, 0}, {1, 0}, {1, 0}}));
    CHECK(big.isotropic);
    CHECK(*big.witness_gamma == Vals{0});
    CHECK(big.witness_positions == std::vector<std::uint32_t>{0, 1, 2, 3, 4});
    CHECK(*big.residue_witness == std::vector<Elem>{1, 1, 1, 1, 1});

    CHECK(!is_isotropic_valued_diagonal(Q5, padic_form(4, {{1, 0}, {1, 1}}))
               .isotropic);

    // spreading valuations 0..3 keeps every residue form small: dimension 5
    // anisotropic forms exist over Q_5 at degree 4
    auto spread = is_isotropic_valued_diagonal(
        Q5, padic_form(4, {{1, 0}, {1, 1}, {1, 2}, {1, 3}, {1, 2}}));
    CHECK(!spread.isotropic);

    auto pair = is_isotropic_valued_diagonal(Q5, padic_form(4, {{1, 0}, {4, 0}}));
    CHECK(pair.isotropic);
    CHECK(*pair.witness_gamma == Vals{0});
    CHECK(*pair.residue_witness == std::vector<Elem>{1, 1});
}

TEST_CASE("uniformizer spreading preserves the base form's verdict") {
    ValuedField series = LaurentTower{std::pair{7u, 1u}, 1};

    // <1,2> stays anisotropic at degree 4 over F_7; its spread across all
    // valuation classes is the classical maximal anisotropic lift
    ValuedDiagonalForm lift;
    lift.d = 4;
    for (std::int64_t j = 0; j < 4; ++j) {
        lift.coeffs.push_back(ValuedCoefficient{1, {j}});
        lift.coeffs.push_back(ValuedCoefficient{2, {j}});
    }
    CHECK(!is_isotropic_valued_diagonal(series, lift).isotropic);
    CHECK(lift.dim() == u_diag_springer(series, 4).value.value);

    // <1,6> is isotropic over F_7, so any one class already collapses
    ValuedDiagonalForm bad;
    bad.d = 4;
    for (std::int64_t j = 0; j < 4; ++j) {
        bad.coeffs.push_back(ValuedCoefficient{1, {j}});
        bad.coeffs.push_back(ValuedCoefficient{6, {j}});
    }
    auto v = is_isotropic_valued_diagonal(series, bad);
    CHECK(v.isotropic);
    CHECK(*v.witness_gamma == Vals{0});
    CHECK(v.witness_positions == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("algebraically closed residue fields cancel any repeated class") {
    ValuedField closed = LaurentTower{std::nullopt, 1};

    ValuedDiagonalForm spread;
    spread.d = 5;
    for (std::int64_t j = 0; j < 5; ++j)
        spread.coeffs.push_back(ValuedCoefficient{1, {j}});
    CHECK(!is_isotropic_valued_diagonal(closed, spread).isotropic);

    spread.coeffs.push_back(ValuedCoefficient{3, {0}});
    auto v = is_isotropic_valued_diagonal(closed, spread);
    CHECK(v.isotropic);
    CHECK(*v.witness_gamma == Vals{0});
    CHECK(v.witness_positions == std::vector<std::uint32_t>{0, 5});
    CHECK(!v.residue_witness.has_value());

    ValuedField formal = ValuedField{FormalHenselian{ExtendedNat::of(2), 1}};
    CHECK_THROWS_AS(is_isotropic_valued_diagonal(
                        formal, padic_form(4, {{1, 0}})),
                    std::invalid_argument);
}

TEST_CASE("residue characteristic dividing the degree is out of scope") {
    ValuedField Q5 = PadicField{5, 1, 1};
    CHECK_THROWS_AS(residue_decomposition(Q5, padic_form(5, {{1, 0}})),
                    wild_case_error);
    CHECK_THROWS_AS(
        is_isotropic_valued_diagonal(Q5, padic_form(10, {{1, 0}, {2, 1}})),
        wild_case_error);
    CHECK_THROWS_AS(u_diag_springer(Q5, 5), wild_case_error);

    ValuedField t3 = LaurentTower{std::pair{3u, 1u}, 2};
    CHECK_THROWS_AS(u_diag_springer(t3, 6), wild_case_error);

    // no residue characteristic, no wild case
    ValuedField closed = LaurentTower{std::nullopt, 2};
    CHECK(u_diag_springer(closed, 6).value.value == 36);
}

TEST_CASE("u-invariants propagate multiplicatively along the valuation") {
    CHECK(u_diag_springer(PadicField{5, 1, 1}, 4).value.value == 16);
    CHECK(u_diag_springer(PadicField{11, 1, 1}, 6).value.value == 12);
    CHECK(u_diag_springer(PadicField{7, 1, 1}, 4).value.value == 8);
    CHECK(u_diag_springer(PadicField{7, 1, 1}, 6).value.value == 36);

    // degree coprime to p(p-1): the residue u-invariant collapses to 1
    CHECK(u_diag_springer(PadicField{3, 1, 1}, 5).value.value == 5);
    CHECK(u_diag_springer(PadicField{5, 1, 1}, 3).value.value == 3);
    CHECK(u_diag_springer(PadicField{7, 1, 1}, 5).value.value == 5);

    for (std::uint32_t p : {5u, 7u, 11u, 13u})
        CHECK(u_diag_springer(PadicField{p, 1, 1}, p - 1).value.value ==
              std::uint64_t(p - 1) * (p - 1));

    CHECK(u_diag_springer(LaurentTower{std::nullopt, 3}, 4).value.value == 64);
    CHECK(u_diag_springer(LaurentTower{std::pair{5u, 1u}, 2}, 4).value.value ==
          64);

    // formal towers run symbolically, including infinite residue values
    CHECK(u_diag_springer(ValuedField{FormalHenselian{ExtendedNat::of(1), 1}}, 9)
              .value.value == 9);
    CHECK(u_diag_springer(ValuedField{FormalHenselian{ExtendedNat::inf(), 2}}, 3)
              .value.infinite);
    CHECK(u_diag_springer(ValuedField{FormalHenselian{ExtendedNat::of(4), 0}}, 7)
              .value.value == 4);

    auto rep = u_diag_springer(PadicField{5, 1, 1}, 4);
    CHECK(rep.p == 5);
    CHECK(rep.bound == ExtendedNat::of(16));
    CHECK(rep.witness_form->dim() == 4);
    auto F5 = make_field(5, 1);
    CHECK(!is_isotropic_diagonal(F5, *rep.witness_form).isotropic());
}

TEST_CASE("Springer product against the residue field across a sweep") {
    for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
        auto F = make_field(p, 1);
        ValuedField K = PadicField{p, 1, 1};
        for (std::uint32_t d = 2; d <= 6; ++d) {
            if (d % p == 0) continue;
            auto u_res = u_diag(F, d);
            auto u_val = u_diag_springer(K, d);
            CHECK(u_val.value.value == d * u_res.value.value);
            CHECK(u_val.value.value >= d * level(F, d).value.value);
            CHECK(u_val.value.value <= d * gcd_u64(d, p - 1));
        }
    }
}

TEST_CASE("smallest positive integer whose negative is a d-th power") {
    CHECK(m_d(5, 4) == 4);
    CHECK(m_d(7, 6) == 6);
    CHECK(m_d(5, 2) == 1);   // -1 = 4 is a square mod 5
    CHECK(m_d(7, 3) == 1);   // odd degree: -1 = (-1)^3
    CHECK(m_d(13, 4) == 4);  // 4th powers mod 13 are {1,3,9}
    CHECK(m_d(11, 4) == 2);  // -2 = 9 = 3^2, and 4th powers = squares here
    CHECK(m_d(2, 3) == 1);
    CHECK_THROWS_AS(m_d(5, 10), wild_case_error);
    CHECK_THROWS_AS(m_d(6, 2), std::invalid_argument);
}

TEST_CASE("upper-bound table for p-adic fields") {
    auto find = [](const std::vector<NamedBound>& t, const std::string& name) {
        for (const auto& b : t)
            if (b.name == name) return b;
        FAIL(("missing bound: " + name));
        return NamedBound{};
    };

    auto q5 = bound_calculators(PadicField{5, 1, 1}, 4);
    CHECK(!find(q5, "kneser-unit-index").applicable);
    CHECK(find(q5, "kneser-unit-index").value == ExtendedNat::of(16));
    CHECK(find(q5, "even-degree-unit-index").applicable);
    CHECK(find(q5, "even-degree-unit-index").value == ExtendedNat::of(80));
    CHECK(find(q5, "tame-root-count").value == ExtendedNat::of(16));
    CHECK(find(q5, "joly-degree-square").value == ExtendedNat::of(16));
    CHECK(find(q5, "alemu-strict").value == ExtendedNat::of(112));
    CHECK(find(q5, "alemu-strict").strict);

    // the exact value u_diag(4, Q_5) = 16 respects every applicable row
    std::uint64_t u = u_diag_springer(PadicField{5, 1, 1}, 4).value.value;
    for (const auto& b : q5) {
        if (!b.applicable) continue;
        if (b.strict)
            CHECK(u < b.value.value);
        else
            CHECK(u <= b.value.value);
    }

    auto q7 = bound_calculators(PadicField{7, 1, 1}, 3);
    CHECK(find(q7, "kneser-unit-index").applicable);
    CHECK(find(q7, "kneser-unit-index").value == ExtendedNat::of(9));
    CHECK(find(q7, "tame-root-count").value == ExtendedNat::of(9));
    CHECK(find(q7, "joly-degree-square").value == ExtendedNat::of(9));
    CHECK(find(q7, "alemu-strict").value == ExtendedNat::of(45));

    // wild degree over Q_2: only the degree-square and strict rows survive
    auto q2 = bound_calculators(PadicField{2, 1, 1}, 4);
    CHECK(!find(q2, "kneser-unit-index").applicable);
    CHECK(find(q2, "kneser-unit-index").value == ExtendedNat::of(16));
    CHECK(!find(q2, "even-degree-unit-index").applicable);
    CHECK(find(q2, "even-degree-unit-index").value.infinite);
    CHECK(!find(q2, "tame-root-count").applicable);
    CHECK(find(q2, "joly-degree-square").applicable);
    CHECK(find(q2, "joly-degree-square").value == ExtendedNat::of(32));
    CHECK(find(q2, "alemu-strict").value == ExtendedNat::of(61));

    // unramified extension: residue size enters through gcd(d, q-1)
    auto f49 = bound_calculators(PadicField{7, 2, 1}, 3);
    CHECK(find(f49, "kneser-unit-index").value == ExtendedNat::of(9));
    CHECK(!find(f49, "joly-degree-square").applicable);

    // ramification scales the wild unit-index factor
    auto ram = bound_calculators(PadicField{5, 1, 2}, 10);
    CHECK(find(ram, "kneser-unit-index").value == ExtendedNat::of(500));
    CHECK(find(ram, "tame-root-count").value == ExtendedNat::of(100));
    CHECK(!find(ram, "tame-root-count").applicable);
    CHECK(find(ram, "alemu-strict").value == ExtendedNat::of(1900));
}

TEST_CASE("valued verdicts agree with the truncated modular oracle") {
    std::mt19937 rng(7141);
    for (auto [p, d] : {std::pair{3u, 2u}, {3u, 4u}, {5u, 2u}, {5u, 3u},
                        {5u, 4u}, {7u, 2u}, {7u, 3u}}) {
        ValuedField K = PadicField{p, 1, 1};
        for (int trial = 0; trial < 8; ++trial) {
            std::uint32_t n = 1 + rng() % 4;
            ValuedDiagonalForm phi;
            phi.d = d;
            std::vector<std::pair<std::uint32_t, std::int64_t>> raw;
            for (std::uint32_t i = 0; i < n; ++i) {
                Elem u = 1 + rng() % (p - 1);
                std::int64_t v = std::int64_t(rng() % 11) - 5;
                phi.coeffs.push_back(ValuedCoefficient{u, {v}});
                raw.emplace_back(u, v);
            }
            bool lib = is_isotropic_valued_diagonal(K, phi).isotropic;
            CHECK(lib == padic_oracle::truncated_isotropic(p, d, raw));

            // valuation shifts by multiples of d never change the verdict
            ValuedDiagonalForm shifted = phi;
            shifted.coeffs[rng() % n].vals[0] += d * (1 + rng() % 3);
            CHECK(is_isotropic_valued_diagonal(K, shifted).isotropic == lib);
        }
    }
}

TEST_CASE("valued form validation") {
    ValuedField Q5 = PadicField{5, 1, 1};
    CHECK_THROWS_AS(validate_valued(Q5, padic_form(4, {{0, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_valued(Q5, padic_form(4, {{5, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_valued(Q5, padic_form(0, {{1, 0}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(validate_valued(Q5, ValuedDiagonalForm{4, {}}),
                    std::invalid_argument);

    ValuedDiagonalForm two_layer;
    two_layer.d = 4;
    two_layer.coeffs = {ValuedCoefficient{1, {0, 1}}};
    CHECK_THROWS_AS(validate_valued(Q5, two_layer), std::invalid_argument);

    ValuedField bad = PadicField{4, 1, 1};
    CHECK_THROWS_AS(validate_valued(bad, padic_form(4, {{1, 0}})),
                    std::invalid_argument);

    // abstract residue fields only require nonzero unit tokens
    ValuedField closed = LaurentTower{std::nullopt, 1};
    ValuedDiagonalForm tokens;
    tokens.d = 3;
    tokens.coeffs = {ValuedCoefficient{99, {0}}};
    CHECK_NOTHROW(validate_valued(closed, tokens));
}

TEST_CASE("value group bookkeeping") {
    CHECK(value_layers(ValuedField{PadicField{5, 1, 1}}) == 1);
    CHECK(value_layers(ValuedField{LaurentTower{std::nullopt, 4}}) == 4);
    CHECK(gamma_index(ValuedField{PadicField{5, 1, 1}}, 6) ==
          ExtendedNat::of(6));
    CHECK(gamma_index(ValuedField{LaurentTower{std::pair{3u, 1u}, 3}}, 2) ==
          ExtendedNat::of(8));
    CHECK(residue_char(ValuedField{LaurentTower{std::nullopt, 2}}) == 0);
    CHECK(residue_char(ValuedField{PadicField{7, 2, 1}}) == 7);
    CHECK(!residue_field(ValuedField{FormalHenselian{}}).has_value());
    CHECK(residue_field(ValuedField{PadicField{7, 2, 1}})->q == 49);

    CHECK_THROWS_AS(
        gamma_index(ValuedField{LaurentTower{std::nullopt, 4}}, 65536),
        std::overflow_error);
}
