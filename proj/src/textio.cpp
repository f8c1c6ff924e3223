#include "hforms/textio.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace hforms {

namespace {

[[noreturn]] void bad(const std::string& what, const std::string& tok) {
    throw std::invalid_argument(what + " at \"" + tok + "\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::int64_t parse_int(const std::string& tok) {
    std::string t = strip(tok);
    if (t.empty()) bad("missing number", tok);
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &pos);
    } catch (const std::exception&) {
        bad("not an integer", t);
    }
    if (pos != t.size()) bad("trailing characters after number", t);
    return v;
}

// an integer as an element of F: signed values are reduced into prime
// fields; extension fields take plain element codes
Elem parse_elem(const FieldDescriptor& F, const std::string& tok) {
    std::int64_t v = parse_int(tok);
    if (F.f == 1) return F.from_int(v);
    if (v < 0 || v >= std::int64_t(F.q))
        bad("element code outside the field", tok);
    return Elem(v);
}

}  // namespace

DiagonalForm parse_diagonal(const FieldDescriptor& F, std::uint32_t d,
                            const std::string& text) {
    DiagonalForm phi{d, {}};
    for (const std::string& tok : split(text, ','))
        phi.coeffs.push_back(parse_elem(F, tok));
    validate_diagonal(F, phi);
    return phi;
}

ValuedDiagonalForm parse_valued(std::uint32_t d, const std::string& text) {
    ValuedDiagonalForm phi;
    phi.d = d;
    for (const std::string& tok : split(text, ',')) {
        std::string t = strip(tok);
        std::size_t at = t.find('@');
        if (at == std::string::npos) bad("expected unit@valuation", t);
        std::int64_t u = parse_int(t.substr(0, at));
        if (u < 0) bad("negative unit code", t);
        std::string vals_part = strip(t.substr(at + 1));
        ValuedCoefficient c;
        c.unit = Elem(u);
        if (!vals_part.empty() && vals_part.front() == '(') {
            if (vals_part.back() != ')') bad("unclosed valuation tuple", t);
            std::string inner = vals_part.substr(1, vals_part.size() - 2);
            for (const std::string& vtok : split(inner, ','))
                c.vals.push_back(parse_int(vtok));
        } else {
            c.vals.push_back(parse_int(vals_part));
        }
        if (!phi.coeffs.empty() && c.vals.size() != phi.coeffs[0].vals.size())
            bad("inconsistent valuation layers", t);
        phi.coeffs.push_back(std::move(c));
    }
    if (phi.coeffs.empty()) bad("empty form", text);
    return phi;
}

PolyForm parse_poly(const FieldDescriptor& F, std::uint32_t d,
                    const std::string& text) {
    // split into signed terms at the top level; signs live between terms
    // (plus an optional leading minus), never inside a term
    struct RawTerm {
        bool negative;
        std::string body;
    };
    std::vector<RawTerm> raw;
    std::string cur;
    bool neg = false;
    for (char ch : text) {
        if (ch == '+' || ch == '-') {
            if (strip(cur).empty()) {
                if (!raw.empty() || neg || ch == '+') bad("misplaced sign", text);
                neg = true;
            } else {
                raw.push_back({neg, cur});
                cur.clear();
                neg = (ch == '-');
            }
        } else {
            cur += ch;
        }
    }
    if (strip(cur).empty()) bad("empty term", text);
    raw.push_back({neg, cur});

    struct Parsed {
        std::vector<std::pair<std::uint32_t, std::uint32_t>> factors;  // idx,exp
        Elem coeff;
    };
    std::vector<Parsed> parsed;
    std::uint32_t n = 0;
    for (const RawTerm& rt : raw) {
        Parsed t;
        t.coeff = 1;
        for (const std::string& ftok : split(rt.body, '*')) {
            std::string f = strip(ftok);
            if (f.empty()) bad("empty factor", rt.body);
            if (f[0] == 'x' || f[0] == 'X') {
                std::size_t caret = f.find('^');
                std::string idx_part =
                    caret == std::string::npos ? f.substr(1) : f.substr(1, caret - 1);
                std::int64_t idx = parse_int(idx_part);
                if (idx < 1) bad("variable indices start at x1", f);
                std::int64_t e = 1;
                if (caret != std::string::npos) {
                    e = parse_int(f.substr(caret + 1));
                    if (e < 1) bad("exponents must be positive", f);
                }
                t.factors.push_back({std::uint32_t(idx), std::uint32_t(e)});
                n = std::max(n, std::uint32_t(idx));
            } else {
                t.coeff = F.mul(t.coeff, parse_elem(F, f));
            }
        }
        if (rt.negative) t.coeff = F.neg(t.coeff);
        parsed.push_back(std::move(t));
    }

    std::map<std::vector<std::uint32_t>, Elem> terms;
    for (const Parsed& t : parsed) {
        std::vector<std::uint32_t> exps(n, 0);
        for (auto [i, e] : t.factors) exps[i - 1] += e;
        Elem& slot = terms[exps];
        slot = F.add(slot, t.coeff);
    }
    for (auto it = terms.begin(); it != terms.end();)
        it = it->second == 0 ? terms.erase(it) : std::next(it);
    return make_poly_form(d, n, terms);
}

std::string diagonal_str(const DiagonalForm& phi) {
    std::string out;
    for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(phi.coeffs[i]);
    }
    return out;
}

std::string valued_str(const ValuedDiagonalForm& phi) {
    std::string out;
    for (std::size_t i = 0; i < phi.coeffs.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(phi.coeffs[i].unit);
        out += '@';
        const auto& vals = phi.coeffs[i].vals;
        if (vals.size() == 1) {
            out += std::to_string(vals[0]);
        } else {
            out += '(';
            for (std::size_t j = 0; j < vals.size(); ++j) {
                if (j) out += ',';
                out += std::to_string(vals[j]);
            }
            out += ')';
        }
    }
    return out;
}

std::string poly_str(const PolyForm& phi) {
    if (phi.terms.empty()) return "0";
    std::string out;
    // leading term first: reverse lexicographic order on exponent vectors
    for (auto it = phi.terms.rbegin(); it != phi.terms.rend(); ++it) {
        const auto& [exps, coeff] = *it;
        if (!out.empty()) out += " + ";
        bool wrote = false;
        if (coeff != 1) {
            out += std::to_string(coeff);
            wrote = true;
        }
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (!exps[i]) continue;
            if (wrote) out += '*';
            out += 'x';
            out += std::to_string(i + 1);
            if (exps[i] > 1) {
                out += '^';
                out += std::to_string(exps[i]);
            }
            wrote = true;
        }
        if (!wrote) out += std::to_string(coeff);  // degree-0 corner
    }
    return out;
}

}  // namespace hforms
