#include "hforms/goldens.hpp"

#include <map>
#include <set>
#include <utility>

#include "hforms/construct.hpp"
#include "hforms/invariants.hpp"
#include "hforms/valued.hpp"

namespace hforms {

namespace {

struct Catalogue {
    std::uint64_t budget;
    std::vector<GoldenEntry> entries;
    std::map<std::pair<std::uint32_t, std::uint32_t>, FieldDescriptor> fields;

    const FieldDescriptor& field(std::uint32_t p, std::uint32_t f) {
        auto key = std::make_pair(p, f);
        auto it = fields.find(key);
        if (it == fields.end()) it = fields.emplace(key, make_field(p, f)).first;
        return it->second;
    }

    void exact(std::string desc, std::string query, std::string prov,
               std::uint64_t want, const ExtendedNat& got,
               std::string note = "") {
        GoldenEntry e{std::move(desc),     std::move(query), std::move(prov),
                      std::to_string(want), got.str(),        GoldenStatus::match,
                      std::move(note)};
        if (got != ExtendedNat::of(want)) e.status = GoldenStatus::mismatch;
        entries.push_back(std::move(e));
    }

    void bracket(std::string desc, std::string query, std::string prov,
                 std::set<std::uint64_t> allowed, const ExtendedNat& got) {
        std::string want = "one of {";
        bool first = true;
        for (std::uint64_t v : allowed) {
            if (!first) want += ",";
            first = false;
            want += std::to_string(v);
        }
        want += "}, resolved by search";
        GoldenEntry e{std::move(desc), std::move(query), std::move(prov),
                      std::move(want), got.str(),        GoldenStatus::match,
                      ""};
        if (got.infinite || !allowed.count(got.value))
            e.status = GoldenStatus::mismatch;
        entries.push_back(std::move(e));
    }

    void boolean(std::string desc, std::string query, std::string prov,
                 bool want, bool got, std::string render_true,
                 std::string render_false) {
        GoldenEntry e{std::move(desc),
                      std::move(query),
                      std::move(prov),
                      want ? render_true : render_false,
                      got ? render_true : render_false,
                      got == want ? GoldenStatus::match : GoldenStatus::mismatch,
                      ""};
        entries.push_back(std::move(e));
    }

    void discrepancy(std::string desc, std::string query, std::string prov,
                     std::string published, std::uint64_t corrected,
                     const ExtendedNat& got, std::string note) {
        GoldenEntry e{std::move(desc),      std::move(query),
                      std::move(prov),      std::move(published),
                      got.str(),            GoldenStatus::discrepancy_noted,
                      std::move(note)};
        if (got != ExtendedNat::of(corrected)) e.status = GoldenStatus::mismatch;
        entries.push_back(std::move(e));
    }
};

}  // namespace

std::vector<GoldenEntry> run_goldens(std::uint64_t budget) {
    Catalogue c{budget, {}, {}};

    // ---- levels of finite fields ----
    c.exact("fourth-power level of F_29", "level --p 29 --d 4",
            "worked example; Becker-Canales table of 4th-power levels", 3,
            level(c.field(29, 1), 4).value);
    c.exact("fourth-power level of F_5", "level --p 5 --d 4",
            "classical identity s_{p-1}(F_p) = p-1 for odd p", 4,
            level(c.field(5, 1), 4).value);
    c.exact("sixth-power level of F_7", "level --p 7 --d 6",
            "classical identity s_{p-1}(F_p) = p-1 for odd p", 6,
            level(c.field(7, 1), 6).value);
    c.exact("odd-degree levels are 1 (cubic over F_7)", "level --p 7 --d 3",
            "for odd d, -1 is itself a d-th power", 1,
            level(c.field(7, 1), 3).value);
    c.exact("sixth-power level of F_31", "level --p 31 --d 6",
            "Becker-Canales correction of the published sixth-power table", 4,
            level(c.field(31, 1), 6).value);
    c.discrepancy(
        "eighth-power level of F_29", "level --p 29 --d 8",
        "monotone chain s_4 <= s_8 <= gcd(8,28) = 4 pins the bracket",
        "published table entry is reported erroneous; bracket {3,4}", 3,
        level(c.field(29, 1), 8).value,
        "gcd(8,28) = gcd(4,28), so s_8(F_29) = s_4(F_29) = 3 exactly; the "
        "original table's value disagrees and is corrected here");

    // ---- diagonal u-invariants of finite fields ----
    c.exact("quartic diagonal u-invariant of F_5", "udiag --p 5 --d 4",
            "Pall-Rajwade style worked computation; equals gcd(4,4)", 4,
            u_diag(c.field(5, 1), 4, budget).value);
    c.exact("quartic diagonal u-invariant of F_7", "udiag --p 7 --d 4",
            "worked example: quartics over F_7 reduce to the square classes", 2,
            u_diag(c.field(7, 1), 4, budget).value);
    c.exact("sextic diagonal u-invariant of F_7", "udiag --p 7 --d 6",
            "worked example: the six sixth-power classes chain to dimension 6",
            6, u_diag(c.field(7, 1), 6, budget).value);
    c.exact("sextic diagonal u-invariant of F_11", "udiag --p 11 --d 6",
            "rule for q = 5 mod 6: sextics behave like quadratics", 2,
            u_diag(c.field(11, 1), 6, budget).value);
    c.bracket("quartic diagonal u-invariant of F_29", "udiag --p 29 --d 4",
              "level 3 forces at least 3; the class count gcd(4,28) caps at 4",
              {3, 4}, u_diag(c.field(29, 1), 4, budget).value);
    c.discrepancy(
        "quartic diagonal u-invariant of F_25", "udiag --p 5 --f 2 --d 4",
        "published bracket {3,4}; Orzech's bound applies since -1 is a "
        "fourth power in F_25",
        "one of {3,4} as published", 2, u_diag(c.field(5, 2), 4, budget).value,
        "-1 = g^12 is a fourth power in F_25, so by Orzech's theorem no "
        "anisotropic ternary quartic exists (the dim-3 search below confirms "
        "emptiness); exhaustive search gives exactly 2, below the published "
        "bracket");
    {
        bool none = !check_orzech_dim3(c.field(5, 2), 4).has_value();
        c.boolean("no anisotropic ternary quartic over F_25 exists",
                  "isotropy sweep over all ternary quartic class triples",
                  "Orzech: -1 a d-th power and d >= 4 force u_diag <= d-1, "
                  "and the ternary case is already empty here",
                  true, none, "none exists", "one exists");
    }
    for (std::uint32_t p : {31u, 67u, 79u, 139u, 223u})
        c.bracket("sextic diagonal u-invariant of F_" + std::to_string(p),
                  "udiag --p " + std::to_string(p) + " --d 6",
                  "Becker-Canales sixth-power level table brackets the value",
                  {3, 4, 5, 6}, u_diag(c.field(p, 1), 6, budget).value);
    c.exact("coprime degree collapses everything (quintic over F_7)",
            "udiag --p 7 --d 5",
            "gcd(5,6) = 1: one power class, so level and u-invariant are 1", 1,
            u_diag(c.field(7, 1), 5, budget).value);
    c.exact("quintic level of F_7 matches", "level --p 7 --d 5",
            "gcd(5,6) = 1: every element is a fifth power", 1,
            level(c.field(7, 1), 5).value);

    // ---- isotropy and universality witnesses ----
    {
        const FieldDescriptor& F5 = c.field(5, 1);
        DiagonalForm four{4, {1, 1, 1, 1}}, five{4, {1, 1, 1, 1, 1}};
        c.boolean("four quartic ones over F_5 stay anisotropic",
                  "isotropy --p 5 --d 4 --coeffs 1,1,1,1",
                  "the u-invariant witness at the Kneser class-count bound",
                  false, is_isotropic_diagonal(F5, four).isotropic(),
                  "isotropic", "anisotropic");
        c.boolean("a fifth quartic one over F_5 forces a zero",
                  "isotropy --p 5 --d 4 --coeffs 1,1,1,1,1",
                  "Kneser bound: dimension beyond gcd(4,4) = 4 is isotropic",
                  true, is_isotropic_diagonal(F5, five).isotropic(),
                  "isotropic", "anisotropic");
        c.boolean("the maximal anisotropic quartic over F_5 is universal",
                  "represented values of 1,1,1,1 at p=5, d=4",
                  "anisotropic forms of full u-invariant dimension are "
                  "universal (Harrison-style value-set argument)",
                  true, is_universal(F5, four), "universal", "not universal");
    }

    // ---- Waring numbers ----
    c.exact("Waring number of fourth powers in F_49", "waring --p 7 --f 2 --d 4",
            "two d-th powers suffice once q exceeds (d*-1)^2", 2,
            waring_number(c.field(7, 2), 4).value);
    c.exact("Waring number of cubes in F_7 meets Tornheim's bound",
            "waring --p 7 --d 3",
            "Tornheim: a sum of cubes is a sum of three cubes", 3,
            waring_number(c.field(7, 1), 3).value);

    // ---- Orzech dimension-3 existence ----
    c.boolean("an anisotropic ternary quartic exists over F_5",
              "dimension-3 search at p=5, d=4",
              "u_diag(4,F_5) = 4 >= 3 guarantees a ternary witness", true,
              check_orzech_dim3(c.field(5, 1), 4).has_value(), "exists",
              "none exists");
    c.boolean("an anisotropic ternary quintic exists over F_11",
              "dimension-3 search at p=11, d=5",
              "gcd(5,10) = 5 classes leave room below the class-count bound",
              true, check_orzech_dim3(c.field(11, 1), 5).has_value(), "exists",
              "none exists");

    // ---- Springer propagation to p-adic fields ----
    c.exact("quartic diagonal u-invariant of Q_5", "udiag --p 5 --d 4 --padic",
            "Springer: index 4 times the residue value 4", 16,
            u_diag_springer(PadicField{5, 1, 1}, 4).value);
    c.exact("sextic diagonal u-invariant of Q_7", "udiag --p 7 --d 6 --padic",
            "Springer: index 6 times the residue value 6", 36,
            u_diag_springer(PadicField{7, 1, 1}, 6).value);
    c.exact("sextic diagonal u-invariant of Q_11", "udiag --p 11 --d 6 --padic",
            "Springer: index 6 times the residue value 2", 12,
            u_diag_springer(PadicField{11, 1, 1}, 6).value);
    c.discrepancy(
        "quartic diagonal u-invariant of Q_7", "udiag --p 7 --d 4 --padic",
        "Springer: index 4 times the residue value 2",
        "published line attaches the value 8 to the 5-adics", 8,
        u_diag_springer(PadicField{7, 1, 1}, 4).value,
        "the residue computation happens over F_7, so the propagated value 8 "
        "belongs to Q_7; the published sentence names Q_5, which instead has "
        "the quartic value 16");
    c.discrepancy(
        "quartic u-invariant over the unramified quadratic extension of Q_5",
        "udiag --p 5 --f 2 --d 4 --padic",
        "Springer over residue field F_25",
        "published bracket {12,16} via the F_25 bracket {3,4}", 8,
        u_diag_springer(PadicField{5, 2, 1}, 4).value,
        "u_diag(4, F_25) = 2 (see the F_25 entries), so Springer propagation "
        "gives 4*2 = 8; the published bracket inherits the F_25 error");
    for (std::uint32_t p : {5u, 7u, 11u, 13u})
        c.exact("degree p-1 over Q_" + std::to_string(p) + " squares the level",
                "udiag --p " + std::to_string(p) + " --d " +
                    std::to_string(p - 1) + " --padic",
                "s_{p-1}(F_p) = p-1 forces the residue value, then Springer",
                std::uint64_t(p - 1) * (p - 1),
                u_diag_springer(PadicField{p, 1, 1}, p - 1).value);
    c.exact("quintic diagonal u-invariant of Q_3", "udiag --p 3 --d 5 --padic",
            "tame degree with one power class: the value is exactly d", 5,
            u_diag_springer(PadicField{3, 1, 1}, 5).value);
    c.exact("cubic diagonal u-invariant of Q_5", "udiag --p 5 --d 3 --padic",
            "tame degree with one power class: the value is exactly d", 3,
            u_diag_springer(PadicField{5, 1, 1}, 3).value);
    c.exact("quintic diagonal u-invariant of Q_7", "udiag --p 7 --d 5 --padic",
            "tame degree with one power class: the value is exactly d", 5,
            u_diag_springer(PadicField{7, 1, 1}, 5).value);
    {
        auto r = u_diag_springer(PadicField{7, 1, 1}, 3);
        auto rows = bound_calculators(PadicField{7, 1, 1}, 3);
        ExtendedNat kneser = ExtendedNat::inf();
        for (const auto& row : rows)
            if (row.name == "kneser-unit-index" && row.applicable)
                kneser = row.value;
        bool ok = !r.value.infinite && !kneser.infinite &&
                  r.value.value <= kneser.value && r.value == ExtendedNat::of(6);
        c.boolean("cubic value over Q_7 sits under the unit-index bound",
                  "bounds --p 7 --d 3 vs udiag --p 7 --d 3 --padic",
                  "Kneser-type bound d * gcd(d,q-1) * |Z_p/dZ_p| = 9 vs exact 6",
                  true, ok, "6 <= 9", "bound violated");
    }
    {
        auto rows = bound_calculators(PadicField{5, 1, 1}, 4);
        ExtendedNat even = ExtendedNat::inf();
        for (const auto& row : rows)
            if (row.name == "even-degree-unit-index" && row.applicable)
                even = row.value;
        GoldenEntry e{
            "even-degree bound over Q_5 needs the extra (1 + m_d) factor",
            "bounds --p 5 --d 4",
            "even-degree unit-index bound with m_4(Q_5) = 4",
            "the tabulated display repeats the odd-degree expression (16)",
            even.str(),
            even == ExtendedNat::of(80) ? GoldenStatus::discrepancy_noted
                                        : GoldenStatus::mismatch,
            "for even degrees the unit-index bound carries the factor "
            "(1 + m_d); with m_4 = 4 over Q_5 it reads 5 * 16 = 80, not the "
            "odd-degree value 16 that the display repeats"};
        c.entries.push_back(std::move(e));
    }

    // ---- Laurent towers ----
    c.exact("two closed Laurent layers at degree 3",
            "udiag over C((t1))((t2)) at d=3",
            "value-group index d^n over an algebraically closed residue field",
            9, u_diag_springer(LaurentTower{std::nullopt, 2}, 3).value);
    c.exact("three closed Laurent layers at degree 4",
            "udiag over C((t1))((t2))((t3)) at d=4",
            "value-group index d^n over an algebraically closed residue field",
            64, u_diag_springer(LaurentTower{std::nullopt, 3}, 4).value);
    c.exact("two Laurent layers over F_5 at degree 4",
            "udiag over F_5((t1))((t2)) at d=4",
            "Springer twice: 4^2 times the residue value 4", 64,
            u_diag_springer(LaurentTower{std::make_pair(5u, 1u), 2}, 4)
                .value);

    // ---- construction certificates ----
    {
        const FieldDescriptor& F7 = c.field(7, 1);
        auto w = u_diag(F7, 6, budget).witness_form;
        bool ok = false;
        if (w && w->dim() == 6) {
            ValuedDiagonalForm lift = tensor_lift(F7, *w);
            ValuedField K = LaurentTower{std::make_pair(7u, 1u), 1};
            ok = lift.dim() == 36 && !is_isotropic_valued_diagonal(K, lift).isotropic;
        }
        c.boolean("uniformizer lift of the sextic witness stays anisotropic",
                  "construct tensor-lift --p 7 --d 6",
                  "the lift is anisotropic over F_7((t)) iff the residue "
                  "form is over F_7",
                  true, ok, "dim 36, anisotropic", "certificate failed");
    }
    {
        const FieldDescriptor& F2 = c.field(2, 1);
        PrimeLiftForm lift = prime_lift(F2, norm_form(F2, 3), budget);
        bool ok = lift.rational.n == 9 && lift.rational.d == 3;
        c.boolean("2-adic lift of the cubic norm form",
                  "construct prime-lift --p 2 --d 3",
                  "blockwise p-power lift of a form anisotropic mod p",
                  true, ok, "dim 9, residue certificate anisotropic",
                  "certificate failed");
    }
    {
        const FieldDescriptor& F5 = c.field(5, 1);
        PolyForm nf = norm_form(F5, 3);
        c.boolean("cubic norm form of F_125 over F_5 is anisotropic",
                  "construct norm-form --p 5 --d 3",
                  "multiplicativity of the field norm", false,
                  is_isotropic_poly(F5, nf, budget).isotropic(), "isotropic",
                  "anisotropic");
    }
    {
        const FieldDescriptor& F3 = c.field(3, 1);
        PolyForm f = poly_from_diagonal(F3, DiagonalForm{2, {1, 1}});
        PolyForm comp = compose_forms(F3, f);
        bool ok = comp.d == 4 && comp.n == 4 &&
                  !is_isotropic_poly(F3, comp, budget).isotropic();
        c.boolean("composition of the anisotropic binary quadratic over F_3",
                  "construct compose --p 3 --d 2 --coeffs 1,1",
                  "composition multiplies degree and dimension, preserving "
                  "anisotropy",
                  true, ok, "degree 4, dim 4, anisotropic",
                  "certificate failed");
    }

    return c.entries;
}

bool goldens_pass(const std::vector<GoldenEntry>& entries) {
    for (const auto& e : entries)
        if (e.status == GoldenStatus::mismatch) return false;
    return true;
}

const char* status_str(GoldenStatus s) {
    switch (s) {
        case GoldenStatus::match: return "match";
        case GoldenStatus::mismatch: return "mismatch";
        case GoldenStatus::discrepancy_noted: return "discrepancy-noted";
    }
    return "unknown";
}

}  // namespace hforms
