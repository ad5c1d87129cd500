// Command-line front end.

#include "gpl/coordinates.hpp"
#include "gpl/group.hpp"
#include "gpl/suites.hpp"
#include "gpl/text.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <variant>

using namespace gpl;
using json = nlohmann::json;

namespace {

struct Globals {
    int d = 2;
    std::string alpha = "1/2";
    uint64_t seed = 1;
    size_t samples = 0;
    std::string cutoff;
    std::string out;
    bool as_json = false;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// eval grammar: expr := name '(' expr ',' expr ')' | '[' element ']' | 'word(' letters ')'
using Value = std::variant<LElement, WordElement>;

WordElement as_words(const Value& v) {
    if (auto* x = std::get_if<LElement>(&v)) return WordElement::from_lelement(*x);
    return std::get<WordElement>(v);
}

std::string show(const Value& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

Value parse_expr(Cursor& c, int d) {
    if (c.accept('[')) {
        LElement x = parse_lelement(c, d);
        c.expect(']');
        return x;
    }
    std::string name;
    c.skip_ws();
    while (std::isalpha(static_cast<unsigned char>(c.peek_raw())) || c.peek_raw() == '_') {
        name += c.peek_raw();
        c.accept(c.peek_raw());
    }
    if (name.empty()) c.fail("expected an expression");
    c.expect('(');
    if (name == "word") {
        LetterSeq seq;
        while (c.accept('[')) {
            seq.push_back(parse_letter(c, d));
            c.expect(']');
        }
        c.expect(')');
        return WordElement(Word::sorted(seq));
    }
    Value a = parse_expr(c, d);
    c.expect(',');
    Value b = parse_expr(c, d);
    c.expect(')');
    if (name == "star_btr" || name == "star_jz") {
        Structure st = name == "star_btr" ? Structure::btr_sym() : Structure::jz();
        Envelope env(st);
        WordElement u = as_words(a), v = as_words(b);
        if (!st.commutative()) {
            u = pbw_normal_form(u, st.lie);
            v = pbw_normal_form(v, st.lie);
        }
        return env.star(u, v);
    }
    auto* x = std::get_if<LElement>(&a);
    auto* y = std::get_if<LElement>(&b);
    if (!x || !y) c.fail(name + " takes elements of L0");
    static const std::map<std::string, BilinearOp> ops = {
        {"triangleright", BilinearOp::triangleright()}, {"bracket", BilinearOp::bracket()},
        {"diamond", BilinearOp::diamond()},             {"btr", BilinearOp::btr()},
        {"bbracket", BilinearOp::bbracket()},           {"grand_bracket", BilinearOp::grand_bracket()}};
    auto it = ops.find(name);
    if (it == ops.end()) c.fail("unknown operation " + name);
    return it->second(*x, *y);
}

PsiWord parse_psi_word(std::string_view text, int d) {
    Cursor c(text);
    PsiWord w;
    while (!c.at_end()) w.push_back(parse_derivation(c, d));
    return w;
}

json tensor_json(const TensorElement& t) {
    json a = json::array();
    for (auto& [pq, c] : t.terms()) a.push_back({{"coef", to_string(c)}, {"left", to_string(pq.first)}, {"right", to_string(pq.second)}});
    return a;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact algebra for post-Lie deformations on multi-indices"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--d", g.d, "spatial dimension")->check(CLI::PositiveNumber);
    app.add_option("--alpha", g.alpha, "exponent p/q in (0,1)");
    app.add_option("--seed", g.seed, "random seed");
    app.add_option("--samples", g.samples, "sample count (0 = suite default)");
    app.add_option("--cutoff", g.cutoff, "homogeneity cutoff p/q");
    app.add_option("--out", g.out, "write output to this file");
    app.add_flag("--json", g.as_json, "line-delimited JSON records");

    std::string expr, word_text, poly_text, mi_text, char_file, structure = "btr", which = "all", coords_file;
    std::string suite;
    bool list = false;
    int max_n = 2;

    auto* eval = app.add_subcommand("eval", "evaluate a product expression");
    eval->add_option("expr", expr)->required();
    auto* verify = app.add_subcommand("verify", "run a named identity suite");
    verify->add_option("suite", suite);
    verify->add_flag("--list", list, "list suites");
    auto* dcop = app.add_subcommand("dual-coproduct", "Delta_star of a word");
    dcop->add_option("word", word_text)->required();
    auto* gam = app.add_subcommand("gamma", "table of Gamma_f(z^g) for |g| <= cutoff");
    gam->add_option("--char", char_file, "character file")->required();
    auto* gcc = app.add_subcommand("gamma-compose-check", "composition law for Gamma maps");
    auto* coords = app.add_subcommand("check-coords", "coordinate conditions on structure constants");
    coords->add_option("--which", which)->check(CLI::IsMember({"torsion", "covtorsion", "flat", "all"}));
    coords->add_option("--max-n", max_n, "tilt truncation |n| <= max-n");
    coords->add_option("--file", coords_file, "read constants instead of extracting them");
    auto* psi = app.add_subcommand("psi", "Psi_diamond[word](poly)");
    psi->add_option("word", word_text)->required();
    psi->add_option("poly", poly_text)->required();
    auto* rhobar = app.add_subcommand("rhobar", "rho_bar(word)(poly)");
    rhobar->add_option("word", word_text)->required();
    rhobar->add_option("poly", poly_text)->required();
    rhobar->add_option("--structure", structure)->check(CLI::IsMember({"jz", "btr"}));
    auto* coact = app.add_subcommand("coaction", "coaction contributions of a multi-index");
    coact->add_option("multiindex", mi_text)->required();
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    std::ostringstream out;
    int status = 0;
    auto emit = [&](const json& j, const std::string& text) {
        if (g.as_json)
            out << j.dump() << '\n';
        else
            out << text;
    };
    try {
        Config cfg(g.d, parse_rational(g.alpha));
        if (*eval) {
            Cursor c(expr);
            Value v = parse_expr(c, g.d);
            c.expect_end();
            emit({{"expr", expr}, {"result", show(v)}}, show(v) + "\n");
        } else if (*verify) {
            if (list) {
                for (auto& s : suite_registry())
                    emit({{"suite", s.name}, {"citation", s.citation}}, s.name + "  " + s.citation + "\n");
            } else {
                if (suite.empty()) throw std::invalid_argument("verify needs a suite name or --list");
                SuiteOptions opt;
                opt.d = g.d;
                if (app.count("--alpha")) opt.alpha = parse_rational(g.alpha);
                opt.seed = g.seed;
                if (g.samples) opt.samples = g.samples;
                if (!g.cutoff.empty()) opt.cutoff = parse_rational(g.cutoff);
                SuiteResult r = run_suite(suite, opt);
                std::string text = suite + ": " + (r.ok() ? "pass" : "FAIL") + " (" + std::to_string(r.checked) +
                                   " checked, " + std::to_string(r.failed) + " failed)\n";
                for (auto& m : r.messages) text += "  " + m + "\n";
                emit({{"suite", suite}, {"ok", r.ok()}, {"checked", r.checked}, {"failed", r.failed}, {"messages", r.messages}},
                     text);
                if (!r.ok()) status = 1;
            }
        } else if (*dcop) {
            TensorElement t = dual_coproduct(parse_word(word_text, g.d), cfg);
            emit({{"word", word_text}, {"terms", tensor_json(t)}}, to_string(t));
        } else if (*gam) {
            if (g.cutoff.empty()) throw std::invalid_argument("gamma needs --cutoff");
            Character f = read_character(slurp(char_file), g.d);
            for (auto& m : enumerate_below(parse_rational(g.cutoff), cfg)) {
                Polynomial p = gamma_apply(f, m, cfg);
                emit({{"source", to_string(m)}, {"gamma", to_string(p)}}, "z" + to_string(m) + " -> " + to_string(p) + "\n");
            }
        } else if (*gcc) {
            SuiteOptions opt;
            opt.d = g.d;
            if (app.count("--alpha")) opt.alpha = parse_rational(g.alpha);
            opt.seed = g.seed;
            if (g.samples) opt.samples = g.samples;
            if (!g.cutoff.empty()) opt.cutoff = parse_rational(g.cutoff);
            SuiteResult r = run_suite("gamma-compose", opt);
            std::string text = std::string("gamma-compose: ") + (r.ok() ? "pass" : "FAIL") + " (" +
                               std::to_string(r.checked) + " checked)\n";
            for (auto& m : r.messages) text += "  " + m + "\n";
            emit({{"suite", "gamma-compose"}, {"ok", r.ok()}, {"checked", r.checked}, {"messages", r.messages}}, text);
            if (!r.ok()) status = 1;
        } else if (*coords) {
            StructureConstants sc = coords_file.empty() ? extract_constants(derivation_truncation(g.d, max_n))
                                                        : read_constants(slurp(coords_file));
            std::vector<std::pair<std::string, std::vector<Violation>>> checks;
            if (which == "torsion" || which == "all") checks.emplace_back("torsion", check_null_torsion(sc));
            if (which == "covtorsion" || which == "all") checks.emplace_back("covtorsion", check_constant_torsion(sc));
            if (which == "flat" || which == "all") checks.emplace_back("flat", check_flat(sc));
            for (auto& [name, vs] : checks) {
                std::string text = name + ": " + std::to_string(vs.size()) + " violations\n";
                json jv = json::array();
                for (auto& v : vs) {
                    std::string labels;
                    for (auto& l : v.labels) labels += (labels.empty() ? "" : " ") + l;
                    text += "  " + labels + " = " + to_string(v.residual) + "\n";
                    jv.push_back({{"labels", v.labels}, {"residual", to_string(v.residual)}});
                }
                emit({{"check", name}, {"violations", jv}}, text);
                if (!vs.empty()) status = 1;
            }
        } else if (*psi) {
            Polynomial p = psi_apply(parse_psi_word(word_text, g.d), parse_polynomial(poly_text));
            emit({{"word", word_text}, {"poly", poly_text}, {"result", to_string(p)}}, to_string(p) + "\n");
        } else if (*rhobar) {
            Structure st = structure == "jz" ? Structure::jz() : Structure::btr_sym();
            LetterSeq w = parse_letter_seq(word_text, g.d);
            Polynomial p = rho_bar(st, w, parse_polynomial(poly_text));
            emit({{"word", word_text}, {"poly", poly_text}, {"result", to_string(p)}}, to_string(p) + "\n");
        } else if (*coact) {
            for (auto& c : coaction_contributions(parse_multiindex(mi_text), cfg))
                emit({{"word", to_string(c.word)}, {"source", to_string(c.source)}, {"coef", to_string(c.coefficient)}},
                     to_string(c) + "\n");
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const TruncationError& e) {
        std::cerr << "truncation refused: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "dimension mismatch: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    if (g.out.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(g.out);
        if (!f) {
            std::cerr << "error: cannot write " << g.out << '\n';
            return 2;
        }
        f << out.str();
    }
    return status;
}
