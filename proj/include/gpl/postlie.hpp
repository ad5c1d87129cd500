#pragma once

#include "gpl/derivation.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace gpl {

// z^gamma (x) D with gamma = 0 whenever D is a shift.
struct LBasisKey {
    MultiIndex gamma;
    BasisDerivation deriv;

    LBasisKey() = default;
    LBasisKey(MultiIndex g, BasisDerivation D);
    static LBasisKey shift(int i, int d) { return {MultiIndex{}, BasisDerivation::shift(i, d)}; }
    static LBasisKey tilt(MultiIndex g, std::vector<int> n) { return {std::move(g), BasisDerivation::tilt(std::move(n))}; }

    // g(P_i) = 1, g(z^gamma (x) D^(n)) = |gamma| - |n|
    HomDegree grade() const { return gamma.homogeneity() + deriv.degree(); }

    std::strong_ordering operator<=>(const LBasisKey& o) const;
    bool operator==(const LBasisKey& o) const { return deriv == o.deriv && gamma == o.gamma; }
};

class LElement {
public:
    using Terms = std::map<LBasisKey, Rational>;

    LElement() = default;
    LElement(const LBasisKey& key, const Rational& c = 1) { add_term(key, c); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(const LBasisKey& key, const Rational& c);
    // Adds c * (z^g p) (x) D for every term of p.
    void add_poly(const Polynomial& p, const MultiIndex& g, const BasisDerivation& D, const Rational& c);

    LElement& operator+=(const LElement& o);
    LElement& operator-=(const LElement& o);
    LElement& operator*=(const Rational& c);
    bool operator==(const LElement& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

LElement operator+(LElement a, const LElement& b);
LElement operator-(LElement a, const LElement& b);
LElement operator-(LElement a);
LElement operator*(const Rational& c, LElement a);

LElement triangleright(const LElement& x, const LElement& y);
LElement bracket(const LElement& x, const LElement& y);
LElement diamond_L(const LElement& x, const LElement& y);
LElement btr(const LElement& x, const LElement& y);
LElement bbracket(const LElement& x, const LElement& y);
LElement grand_bracket(const LElement& x, const LElement& y);

// A rational combination of the primitive products, each optionally transposed.
class BilinearOp {
public:
    enum class Prim { Triangleright, Bracket, Diamond };

    static BilinearOp zero() { return {}; }
    static BilinearOp triangleright();
    static BilinearOp bracket();
    static BilinearOp diamond();
    static BilinearOp btr();
    static BilinearOp bbracket();
    static BilinearOp grand_bracket();

    // x op' y := y op x
    BilinearOp transposed() const;
    BilinearOp operator+(const BilinearOp& o) const;
    BilinearOp operator-(const BilinearOp& o) const;
    BilinearOp operator*(const Rational& c) const;
    bool operator==(const BilinearOp& o) const { return terms_ == o.terms_; }

    LElement operator()(const LElement& x, const LElement& y) const;
    Rational coefficient(Prim p, bool transposed = false) const;
    bool is_zero() const { return terms_.empty(); }

private:
    std::map<std::pair<Prim, bool>, Rational> terms_;
};

// (x |> y + [x,y], -[x,y])
std::pair<BilinearOp, BilinearOp> adjoint_products(const BilinearOp& prod = BilinearOp::triangleright(),
                                                   const BilinearOp& lie = BilinearOp::bracket());

LElement commutator(const BilinearOp& op, const LElement& x, const LElement& y);
LElement associator(const BilinearOp& op, const LElement& x, const LElement& y, const LElement& z);
LElement torsion(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y);
LElement curvature(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                   const LElement& z);
LElement covariant_torsion(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                           const LElement& z);
LElement bianchi_residual(const BilinearOp& op, const BilinearOp& lie, const LElement& x, const LElement& y,
                          const LElement& z);

using Triple = std::tuple<LElement, LElement, LElement>;

struct CheckFailure {
    std::string identity;
    size_t sample = 0;
    LElement residual;
};

struct Report {
    size_t checked = 0;
    std::vector<CheckFailure> failures;
    bool ok() const { return failures.empty(); }
};

Report check_post_lie(const BilinearOp& prod, const BilinearOp& lie, const std::vector<Triple>& samples);
Report check_pre_lie(const BilinearOp& prod, const std::vector<Triple>& samples);
Report check_derivation_compat(const std::vector<Triple>& samples);

bool in_L0(const LElement& x);
bool in_L(const LElement& x, const Config& cfg);
bool in_L(const LBasisKey& key, const Config& cfg);

std::string to_string(const LBasisKey& key);
std::string to_string(const LElement& x);
LBasisKey parse_letter(std::string_view text, int d);
LElement parse_lelement(std::string_view text, int d);

}  // namespace gpl
