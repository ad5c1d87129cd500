#include "gpl/coordinates.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace gpl {

StructureConstants::StructureConstants(std::vector<std::string> labels) : labels_(std::move(labels)) {
    for (int i = 0; i < size(); ++i) {
        if (!index_.emplace(labels_[i], i).second) throw std::invalid_argument("repeated label " + labels_[i]);
    }
}

int StructureConstants::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) throw std::out_of_range("unknown label " + label);
    return it->second;
}

namespace {

void set_entry(std::map<StructureConstants::Index3, Rational>& m, int i, int j, int k, const Rational& v) {
    if (v == 0)
        m.erase({i, j, k});
    else
        m[{i, j, k}] = v;
}

Rational get_entry(const std::map<StructureConstants::Index3, Rational>& m, int i, int j, int k) {
    auto it = m.find({i, j, k});
    return it == m.end() ? Rational(0) : it->second;
}

}  // namespace

void StructureConstants::set_gamma(int i, int j, int m, const Rational& v) { set_entry(gamma_, i, j, m, v); }
void StructureConstants::set_delta(int i, int j, int m, const Rational& v) { set_entry(delta_, i, j, m, v); }
Rational StructureConstants::gamma(int i, int j, int m) const { return get_entry(gamma_, i, j, m); }
Rational StructureConstants::delta(int i, int j, int m) const { return get_entry(delta_, i, j, m); }

void StructureConstants::validate() const {
    for (auto& [ijm, v] : delta_) {
        auto [i, j, m] = ijm;
        if (delta(j, i, m) != -v)
            throw std::invalid_argument("bracket constants not antisymmetric at " + labels_[i] + " " + labels_[j] +
                                        " " + labels_[m]);
    }
}

StructureConstants StructureConstants::relabeled(const std::vector<std::string>& new_order) const {
    StructureConstants r(new_order);
    if (r.size() != size()) throw std::invalid_argument("relabeling must be a permutation");
    auto map_idx = [&](int i) { return r.index_of(labels_[i]); };
    for (auto& [ijm, v] : gamma_) r.set_gamma(map_idx(std::get<0>(ijm)), map_idx(std::get<1>(ijm)), map_idx(std::get<2>(ijm)), v);
    for (auto& [ijm, v] : delta_) r.set_delta(map_idx(std::get<0>(ijm)), map_idx(std::get<1>(ijm)), map_idx(std::get<2>(ijm)), v);
    return r;
}

namespace {

// Dense copies for the quadratic sums.
struct Dense {
    int n;
    std::vector<Rational> g, dl, tor;  // tor = gamma_[i,j] - delta_{i,j}

    explicit Dense(const StructureConstants& sc) : n(sc.size()) {
        g.assign(n * n * n, 0);
        dl.assign(n * n * n, 0);
        for (auto& [ijm, v] : sc.gamma_entries()) g[at(std::get<0>(ijm), std::get<1>(ijm), std::get<2>(ijm))] = v;
        for (auto& [ijm, v] : sc.delta_entries()) dl[at(std::get<0>(ijm), std::get<1>(ijm), std::get<2>(ijm))] = v;
        tor.assign(n * n * n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int m = 0; m < n; ++m) tor[at(i, j, m)] = G(i, j, m) - G(j, i, m) - D(i, j, m);
    }
    size_t at(int i, int j, int m) const { return (static_cast<size_t>(i) * n + j) * n + m; }
    const Rational& G(int i, int j, int m) const { return g[at(i, j, m)]; }
    const Rational& D(int i, int j, int m) const { return dl[at(i, j, m)]; }
    const Rational& T(int i, int j, int m) const { return tor[at(i, j, m)]; }
};

template <class F>
std::vector<Violation> scan4(const StructureConstants& sc, F residual) {
    int n = sc.size();
    std::vector<Violation> out;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int m = 0; m < n; ++m) {
                    Rational r = residual(i, j, k, m);
                    if (r != 0) out.push_back({{sc.labels()[i], sc.labels()[j], sc.labels()[k], sc.labels()[m]}, r});
                }
    return out;
}

}  // namespace

std::vector<Violation> check_null_torsion(const StructureConstants& sc) {
    Dense dn(sc);
    std::vector<Violation> out;
    for (int i = 0; i < dn.n; ++i)
        for (int j = 0; j < dn.n; ++j)
            for (int m = 0; m < dn.n; ++m)
                if (dn.T(i, j, m) != 0) out.push_back({{sc.labels()[i], sc.labels()[j], sc.labels()[m]}, dn.T(i, j, m)});
    return out;
}

std::vector<Violation> check_constant_torsion(const StructureConstants& sc) {
    Dense dn(sc);
    return scan4(sc, [&](int i, int j, int k, int m) {
        Rational s = 0;
        for (int l = 0; l < dn.n; ++l) {
            if (dn.G(i, l, m) != 0 && dn.T(j, k, l) != 0) s += dn.G(i, l, m) * dn.T(j, k, l);
            if (dn.G(i, j, l) != 0 && dn.T(l, k, m) != 0) s -= dn.G(i, j, l) * dn.T(l, k, m);
            if (dn.T(j, l, m) != 0 && dn.G(i, k, l) != 0) s -= dn.T(j, l, m) * dn.G(i, k, l);
        }
        return s;
    });
}

std::vector<Violation> check_flat(const StructureConstants& sc) {
    Dense dn(sc);
    return scan4(sc, [&](int i, int j, int k, int m) {
        Rational s = 0;
        for (int l = 0; l < dn.n; ++l) {
            if (dn.G(i, l, m) != 0 && dn.G(j, k, l) != 0) s += dn.G(i, l, m) * dn.G(j, k, l);
            if (dn.G(j, l, m) != 0 && dn.G(i, k, l) != 0) s -= dn.G(j, l, m) * dn.G(i, k, l);
            if (dn.D(i, j, l) != 0 && dn.G(l, k, m) != 0) s -= dn.D(i, j, l) * dn.G(l, k, m);
        }
        return s;
    });
}

std::vector<BasisDerivation> derivation_truncation(int d, int max_n) {
    std::vector<BasisDerivation> out;
    for (int i = 1; i <= d; ++i) out.push_back(BasisDerivation::shift(i, d));
    for (auto& n : vectors_up_to(d, max_n, 0)) out.push_back(BasisDerivation::tilt(n));
    return out;
}

StructureConstants extract_constants(const std::vector<BasisDerivation>& index_set) {
    std::vector<std::string> labels;
    for (auto& D : index_set) labels.push_back(to_string(D));
    StructureConstants sc(labels);
    auto place = [&](const DerivationCombo& r, const char* what) -> std::vector<std::pair<int, Rational>> {
        std::vector<std::pair<int, Rational>> out;
        for (auto& [D, c] : r) {
            auto it = std::find(index_set.begin(), index_set.end(), D);
            if (it == index_set.end())
                throw std::invalid_argument(std::string("index set not closed under ") + what + ": " + to_string(D));
            out.emplace_back(static_cast<int>(it - index_set.begin()), c);
        }
        return out;
    };
    for (int i = 0; i < sc.size(); ++i)
        for (int j = 0; j < sc.size(); ++j) {
            for (auto& [m, c] : place(diamond_D(index_set[i], index_set[j]), "diamond")) sc.set_gamma(i, j, m, c);
            for (auto& [m, c] : place(commutator_circ(index_set[i], index_set[j]), "bracket")) sc.set_delta(i, j, m, c);
        }
    return sc;
}

StructureConstants diamond_from_order(const StructureConstants& lie, const PairOrder& precedes) {
    StructureConstants out(lie.labels());
    std::set<std::pair<int, int>> noncommuting;
    for (auto& [ijm, v] : lie.delta_entries()) noncommuting.insert({std::get<0>(ijm), std::get<1>(ijm)});
    for (auto& [i, j] : noncommuting) {
        bool ij = precedes(lie.labels()[i], lie.labels()[j]);
        bool ji = precedes(lie.labels()[j], lie.labels()[i]);
        if (ij == ji)
            throw std::invalid_argument("order incomplete on noncommuting pair " + lie.labels()[i] + ", " +
                                        lie.labels()[j]);
    }
    for (auto& [ijm, v] : lie.delta_entries()) {
        auto [i, j, m] = ijm;
        out.set_delta(i, j, m, v);
        if (precedes(lie.labels()[i], lie.labels()[j])) out.set_gamma(i, j, m, v);
    }
    return out;
}

PairOrder shifts_first_order() {
    return [](const std::string& a, const std::string& b) {
        return !a.empty() && !b.empty() && a[0] == 'P' && b[0] == 'D';
    };
}

PairOrder order_from_ranking(const std::vector<std::string>& ranking) {
    std::map<std::string, size_t> rank;
    for (size_t i = 0; i < ranking.size(); ++i) rank[ranking[i]] = i;
    return [rank](const std::string& a, const std::string& b) {
        auto ia = rank.find(a), ib = rank.find(b);
        return ia != rank.end() && ib != rank.end() && ia->second < ib->second;
    };
}

std::string write_constants(const StructureConstants& sc) {
    std::ostringstream os;
    auto emit = [&](char tag, const std::map<StructureConstants::Index3, Rational>& m) {
        for (auto& [ijm, v] : m) {
            auto [i, j, k] = ijm;
            os << tag << ' ' << sc.labels()[i] << ' ' << sc.labels()[j] << ' ' << sc.labels()[k] << " = "
               << to_string(v) << '\n';
        }
    };
    os << "# labels";
    for (auto& l : sc.labels()) os << ' ' << l;
    os << '\n';
    emit('g', sc.gamma_entries());
    emit('d', sc.delta_entries());
    return os.str();
}

StructureConstants read_constants(std::string_view text) {
    struct Line {
        char tag;
        std::string i, j, m;
        Rational v;
    };
    std::vector<Line> lines;
    std::vector<std::string> labels;
    auto note = [&](const std::string& l) {
        if (std::find(labels.begin(), labels.end(), l) == labels.end()) labels.push_back(l);
    };
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string_view sv(raw);
        if (sv.rfind("# labels", 0) == 0) {
            std::istringstream ls{std::string(sv.substr(8))};
            std::string l;
            while (ls >> l) note(l);
            continue;
        }
        if (auto h = sv.find('#'); h != std::string_view::npos) sv = sv.substr(0, h);
        std::istringstream ls{std::string(sv)};
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() != 6 || (tok[0] != "g" && tok[0] != "d") || tok[4] != "=")
            throw ParseError("expected 'g|d i j m = p/q'", lineno, 1);
        Rational v;
        try {
            v = parse_rational(tok[5]);
        } catch (const ParseError& e) {
            throw ParseError(e.message(), lineno, static_cast<int>(raw.find(tok[5])) + e.column());
        }
        for (int k = 1; k <= 3; ++k) note(tok[k]);
        lines.push_back({tok[0][0], tok[1], tok[2], tok[3], v});
    }
    StructureConstants sc(labels);
    for (auto& l : lines) {
        int i = sc.index_of(l.i), j = sc.index_of(l.j), m = sc.index_of(l.m);
        if (l.tag == 'g')
            sc.set_gamma(i, j, m, sc.gamma(i, j, m) + l.v);
        else
            sc.set_delta(i, j, m, sc.delta(i, j, m) + l.v);
    }
    sc.validate();
    return sc;
}

}  // namespace gpl
