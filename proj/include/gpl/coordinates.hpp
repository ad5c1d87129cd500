#pragma once

#include "gpl/derivation.hpp"

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

namespace gpl {

// gamma_{i,j}^m (connection) and delta_{i,j}^m (bracket) on a finite index set.
class StructureConstants {
public:
    using Index3 = std::tuple<int, int, int>;

    StructureConstants() = default;
    explicit StructureConstants(std::vector<std::string> labels);

    const std::vector<std::string>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }
    int index_of(const std::string& label) const;

    void set_gamma(int i, int j, int m, const Rational& v);
    void set_delta(int i, int j, int m, const Rational& v);
    Rational gamma(int i, int j, int m) const;
    Rational delta(int i, int j, int m) const;
    const std::map<Index3, Rational>& gamma_entries() const { return gamma_; }
    const std::map<Index3, Rational>& delta_entries() const { return delta_; }

    // Throws unless delta_{i,j} = -delta_{j,i}.
    void validate() const;
    // Same constants under a reordered index set.
    StructureConstants relabeled(const std::vector<std::string>& new_order) const;

    bool operator==(const StructureConstants& o) const {
        return labels_ == o.labels_ && gamma_ == o.gamma_ && delta_ == o.delta_;
    }

private:
    std::vector<std::string> labels_;
    std::map<std::string, int> index_;
    std::map<Index3, Rational> gamma_;
    std::map<Index3, Rational> delta_;
};

struct Violation {
    std::vector<std::string> labels;
    Rational residual;
    bool operator==(const Violation& o) const = default;
};

std::vector<Violation> check_null_torsion(const StructureConstants& sc);
std::vector<Violation> check_constant_torsion(const StructureConstants& sc);
std::vector<Violation> check_flat(const StructureConstants& sc);

// P_1..P_d followed by every D^(n) with |n| <= max_n.
std::vector<BasisDerivation> derivation_truncation(int d, int max_n);
// gamma from diamond_D, delta from commutator_circ; rejects index sets not closed under both.
StructureConstants extract_constants(const std::vector<BasisDerivation>& index_set);

using PairOrder = std::function<bool(const std::string&, const std::string&)>;
// gamma_{i,j} = delta_{i,j} when i precedes j and the bracket is nonzero, else 0.
StructureConstants diamond_from_order(const StructureConstants& lie_constants, const PairOrder& precedes);
// Shifts precede tilts.
PairOrder shifts_first_order();
PairOrder order_from_ranking(const std::vector<std::string>& ranking);

std::string write_constants(const StructureConstants& sc);
StructureConstants read_constants(std::string_view text);

}  // namespace gpl
