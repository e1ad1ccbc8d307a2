#pragma once

// Exact arithmetic in F2[U_w, V_z, U_p]: multivariate polynomials over the
// two-element field with formal partial derivatives and variable renaming.
// A polynomial is a set of monomials (coefficient 1 each); addition is
// symmetric difference of term sets.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace floer {

struct Error : std::runtime_error {
    std::string code;
    Error(std::string c, const std::string& msg)
        : std::runtime_error(c + ": " + msg), code(std::move(c)) {}
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
    throw Error(code, msg);
}

// U = basepoint variable U_w, V = basepoint variable V_z, P = color variable U_p.
enum class VarKind : uint8_t { U = 0, V = 1, P = 2 };

inline char kind_prefix(VarKind k) {
    switch (k) {
        case VarKind::U: return 'U';
        case VarKind::V: return 'V';
        default: return 'P';
    }
}

struct VarId {
    VarKind kind{VarKind::U};
    std::string name;

    static VarId u(std::string n) { return {VarKind::U, std::move(n)}; }
    static VarId v(std::string n) { return {VarKind::V, std::move(n)}; }
    static VarId color(std::string n) { return {VarKind::P, std::move(n)}; }

    std::string str() const { return std::string(1, kind_prefix(kind)) + "_" + name; }

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

// Monomial with implicit coefficient 1; exponent vector has finite support,
// stored sorted by variable with strictly positive exponents.
class Mon {
  public:
    using Factors = std::vector<std::pair<VarId, int>>;

    Mon() = default;
    explicit Mon(Factors f) : e_(std::move(f)) {
        std::sort(e_.begin(), e_.end());
        for (const auto& [v, k] : e_)
            if (k <= 0) fail("BadExponent", "nonpositive exponent on " + v.str());
    }

    static Mon one() { return Mon(); }
    static Mon var(VarId v, int exp = 1) { return Mon(Factors{{std::move(v), exp}}); }

    bool is_one() const { return e_.empty(); }
    const Factors& factors() const { return e_; }

    int exponent(const VarId& v) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), v,
                                   [](const auto& p, const VarId& q) { return p.first < q; });
        return (it != e_.end() && it->first == v) ? it->second : 0;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [v, k] : e_) d += k;
        return d;
    }

    int degree(VarKind kind) const {
        int d = 0;
        for (const auto& [v, k] : e_)
            if (v.kind == kind) d += k;
        return d;
    }

    Mon operator*(const Mon& o) const {
        Factors out;
        out.reserve(e_.size() + o.e_.size());
        auto a = e_.begin(), b = o.e_.begin();
        while (a != e_.end() && b != o.e_.end()) {
            if (a->first < b->first)
                out.push_back(*a++);
            else if (b->first < a->first)
                out.push_back(*b++);
            else {
                out.emplace_back(a->first, a->second + b->second);
                ++a;
                ++b;
            }
        }
        out.insert(out.end(), a, e_.end());
        out.insert(out.end(), b, o.e_.end());
        Mon m;
        m.e_ = std::move(out);
        return m;
    }

    std::string str() const {
        if (is_one()) return "1";
        std::string s;
        for (const auto& [v, k] : e_) {
            if (!s.empty()) s += "*";
            s += v.str();
            if (k > 1) s += "^" + std::to_string(k);
        }
        return s;
    }

    friend auto operator<=>(const Mon&, const Mon&) = default;

  private:
    Factors e_;
};

// Set of monomials over F2. Terms kept strictly sorted; the VarId ordering
// (kind, then name) makes the representation canonical for serialization.
class Poly {
  public:
    Poly() = default;
    Poly(Mon m) : t_{std::move(m)} {}

    static Poly zero() { return Poly(); }
    static Poly one() { return Poly(Mon::one()); }
    static Poly var(VarId v, int exp = 1) { return Poly(Mon::var(std::move(v), exp)); }

    static Poly from_terms(std::vector<Mon> terms) {
        std::sort(terms.begin(), terms.end());
        // mod-2: pairs of equal monomials cancel
        std::vector<Mon> out;
        for (size_t i = 0; i < terms.size();) {
            size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) % 2) out.push_back(terms[i]);
            i = j;
        }
        Poly p;
        p.t_ = std::move(out);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].is_one(); }
    size_t term_count() const { return t_.size(); }
    const std::vector<Mon>& terms() const { return t_; }

    bool contains(const Mon& m) const { return std::binary_search(t_.begin(), t_.end(), m); }

    Poly operator+(const Poly& o) const {
        Poly r;
        std::set_symmetric_difference(t_.begin(), t_.end(), o.t_.begin(), o.t_.end(),
                                      std::back_inserter(r.t_));
        return r;
    }

    Poly& operator+=(const Poly& o) {
        *this = *this + o;
        return *this;
    }

    Poly operator*(const Poly& o) const {
        std::vector<Mon> prods;
        prods.reserve(t_.size() * o.t_.size());
        for (const Mon& a : t_)
            for (const Mon& b : o.t_) prods.push_back(a * b);
        return from_terms(std::move(prods));
    }

    Poly operator*(const Mon& m) const {
        std::vector<Mon> prods;
        prods.reserve(t_.size());
        for (const Mon& a : t_) prods.push_back(a * m);
        return from_terms(std::move(prods));
    }

    int max_total_degree() const {
        int d = 0;
        for (const Mon& m : t_) d = std::max(d, m.total_degree());
        return d;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (const Mon& m : t_) {
            if (!s.empty()) s += " + ";
            s += m.str();
        }
        return s;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

  private:
    std::vector<Mon> t_;
};

// Term-wise formal d/dv over F2: v^e -> (e mod 2) v^{e-1}.
inline Poly derivative(const Poly& p, const VarId& v) {
    std::vector<Mon> out;
    for (const Mon& m : p.terms()) {
        int e = m.exponent(v);
        if (e % 2 == 0) continue;
        Mon::Factors f;
        for (const auto& [w, k] : m.factors()) {
            if (w == v) {
                if (k > 1) f.emplace_back(w, k - 1);
            } else {
                f.emplace_back(w, k);
            }
        }
        out.push_back(Mon(std::move(f)));
    }
    return Poly::from_terms(std::move(out));
}

// Rename variables via the given (not necessarily injective) map; variables
// absent from the map are left untouched. Collisions cancel mod 2.
inline Poly substitute(const Poly& p, const std::map<VarId, VarId>& rename) {
    std::vector<Mon> out;
    for (const Mon& m : p.terms()) {
        std::map<VarId, int> acc;
        for (const auto& [v, k] : m.factors()) {
            auto it = rename.find(v);
            acc[it == rename.end() ? v : it->second] += k;
        }
        Mon::Factors f(acc.begin(), acc.end());
        out.push_back(Mon(std::move(f)));
    }
    return Poly::from_terms(std::move(out));
}

}  // namespace floer
