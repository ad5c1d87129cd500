#include "common.hpp"

using namespace t;

namespace {

const Config half(2, Q(1, 2));
const Config three4(2, Q(3, 4));

WordElement E(const LElement& x) { return WordElement::from_lelement(x); }
WordElement E(std::string_view w) { return WordElement(W(w)); }
WordElement E(const Word& w) { return WordElement(w); }

TensorElement tensor(std::initializer_list<std::tuple<const char*, const char*, long>> terms) {
    TensorElement t;
    for (auto& [a, b, c] : terms) t.add_term(W(a), W(b), c);
    return t;
}

}  // namespace

TEST_CASE("words") {
    Word w = W("[z{k0:1}xD(0,0)][P1][z{k0:1}xD(0,0)]");
    CHECK(w.size() == 3);
    CHECK(w.letters().front() == X("P1"));
    CHECK(w.symmetry_factor() == 2);
    CHECK(w.grade() == HomDegree{2, 1});
    CHECK(W("1").empty());
    CHECK(to_string(W("[z{k0:1}xD(0,0)][P1]")) == "[P1][z{k0:1}xD(0,0)]");
    Sampler s(1);
    auto pool = key_pool_L0(half, Q(2), 2);
    for (int i = 0; i < 100; ++i) {
        Word v = s.word(pool, 0, 4);
        CHECK(parse_word(to_string(v), 2) == v);
    }
    CHECK_THROWS_AS(W("[P1"), ParseError);
    CHECK_THROWS_AS(W("[P3]"), ParseError);
}

TEST_CASE("coshuffle") {
    const char* x = "[z{k0:1}xD(0,0)]";
    CHECK(coshuffle(W(x)) == tensor({{x, "1", 1}, {"1", x, 1}}));
    CHECK(coshuffle(W("[z{k0:1}xD(0,0)][z{k0:1}xD(0,0)]")) ==
          tensor({{"[z{k0:1}xD(0,0)][z{k0:1}xD(0,0)]", "1", 1},
                  {x, x, 2},
                  {"1", "[z{k0:1}xD(0,0)][z{k0:1}xD(0,0)]", 1}}));
    CHECK(coshuffle(W("[P1][z{k0:1}xD(0,0)]")) ==
          tensor({{"[P1][z{k0:1}xD(0,0)]", "1", 1}, {"[P1]", x, 1}, {x, "[P1]", 1}, {"1", "[P1][z{k0:1}xD(0,0)]", 1}}));
    CHECK(coshuffle(W("1")) == tensor({{"1", "1", 1}}));
}

TEST_CASE("extended action on Sym(L)") {
    Envelope env(Structure::btr_sym());
    LElement x = L("P1"), y = L("z{k0:1}xD(1,0)"), z = L("z{(1,0):1}xD(0,0)");
    Word u = W("[z{k0:1}xD(1,0)][z{k1:1}xD(0,0)]");
    CHECK(env.ext_action(Word{}, u) == WordElement(u));
    Word yz = Word::sorted({X("z{k0:1}xD(1,0)"), X("z{(1,0):1}xD(0,0)")});
    CHECK(env.ext_action(W("[P1]"), yz) == poly_star(E(btr(x, y)), E(z)) + poly_star(E(y), E(btr(x, z))));
    z = L("z{k0:1,(1,0):2}xD(0,1)");
    Word xy = Word::sorted({X("P1"), X("z{k0:1}xD(1,0)")});
    WordElement lhs = env.ext_action(xy, Word::letter(X("z{k0:1,(1,0):2}xD(0,1)")));
    CHECK_FALSE(lhs.is_zero());
    WordElement rhs = env.ext_action(E(x), env.ext_action(E(y), E(z))) - env.ext_action(E(btr(x, y)), E(z));
    CHECK(lhs == rhs);
    // the right factor keeps its length when the bracket vanishes
    Sampler s(2);
    auto pool = key_pool_L(half, Q(3, 2), 1);
    for (int i = 0; i < 50; ++i) {
        Word a = s.word(pool, 0, 2), b = s.word(pool, 0, 3);
        WordElement r = env.ext_action(a, b);
        for (auto& [w, c] : r.terms()) CHECK(w.size() == b.size());
    }
}

TEST_CASE("star of letters") {
    for (auto st : {Structure::btr_sym(), Structure::jz()}) {
        Envelope env(st);
        Sampler s(3);
        auto pool = key_pool_L(half, Q(3, 2), 1);
        for (int i = 0; i < 50; ++i) {
            LBasisKey x = s.pick(pool), y = s.pick(pool);
            WordElement want = env.product(Word::letter(x), Word::letter(y)) + E(st.prod(LElement(x), LElement(y)));
            CHECK(env.star(Word::letter(x), Word::letter(y)) == want);
        }
        WordElement u = E("[P1][z{k0:1}xD(0,0)]");
        CHECK(env.star(WordElement::unit(), u) == u);
        CHECK(env.star(u, WordElement::unit()) == u);
    }
    Envelope btr_env(Structure::btr_sym());
    CHECK(btr_env.star(W("[P1]"), W("[z{k0:1}xD(1,0)]")) ==
          E("[P1][z{k0:1}xD(1,0)]") + E(L("z{k1:1,(1,0):1}xD(1,0) - z{k0:1}xD(0,0)")));
}

TEST_CASE("PBW normal form") {
    auto lie = BilinearOp::bracket();
    LetterSeq sorted{X("P1"), X("z{k0:1}xD(1,0)")};
    CHECK(pbw_normal_form(sorted, lie) == WordElement(Word::sorted(sorted)));
    LetterSeq swapped{X("z{k0:1,(0,1):1}xD(1,0)"), X("P1")};
    WordElement want = WordElement(Word::sorted(swapped)) + E(L("z{k0:1,(0,1):1}xD(0,0)"));
    CHECK(pbw_normal_form(swapped, lie) == want);
    LetterSeq any{X("z{k0:1}xD(0,1)"), X("P2"), X("P1"), X("z{k0:1}xD(0,0)")};
    CHECK(pbw_normal_form(any, BilinearOp::zero()) == WordElement(Word::sorted(any)));
    Sampler s(4);
    auto pool = key_pool_L0(half, Q(1), 2);
    for (int i = 0; i < 50; ++i) {
        LetterSeq w = s.sequence(pool, 0, 4);
        CHECK(pbw_normal_form(w, lie, RewriteStrategy::Leftmost) == pbw_normal_form(w, lie, RewriteStrategy::Rightmost));
    }
}

TEST_CASE("phi") {
    for (auto st : {Structure::btr_sym(), Structure::jz()}) {
        Envelope env(st);
        LBasisKey x = X("P1"), y = X("z{k0:1}xD(1,0)"), z = X("z{(1,0):1}xD(0,1)");
        CHECK(env.phi({x}) == WordElement(Word::letter(x)));
        CHECK(env.phi({x, y}) == env.star(Word::letter(x), Word::letter(y)));
        CHECK(env.phi({x, y, z}) == env.star(E(Word::letter(x)), env.star(Word::letter(y), Word::letter(z))));
        CHECK(env.phi({}) == WordElement::unit());
    }
}

TEST_CASE("polynomial product in Sym(L)") {
    WordElement x = E("[P1]"), y = E("[z{k0:1}xD(0,0)]");
    CHECK(poly_star(E("[P1][P1]"), E("[P1][P1][P1]")) == E("[P1][P1][P1][P1][P1]"));
    CHECK(poly_star(WordElement::unit(), y) == y);
    CHECK(poly_star(x, y) == E("[P1][z{k0:1}xD(0,0)]"));
}

TEST_CASE("twisting and pairing") {
    WordElement half_sq = Q(1, 2) * E("[P1][P1]");
    CHECK(tmap(half_sq) == E("[P1][P1]"));
    CHECK(pairing(E("[P1]"), E("[P2]")) == 0);
    CHECK(pairing(WordElement::unit(), WordElement::unit()) == 1);
    CHECK(pairing(E("[P1][P1]"), E("[P1][P1]")) == 2);
    CHECK(pairing(E("[P1][P1][P2]"), E("[P1][P1][P2]") + E("[P2]")) == 2);
}

TEST_CASE("dual coproduct") {
    DualCoproduct dc(half);
    CHECK(dc(Word{}) == tensor({{"1", "1", 1}}));
    // at alpha = 1/2, z_0 (x) D^(e_i) has |gamma| < |n| and is no letter of L: only the primitive part remains
    const char* w = "[z{k0:1}xD(0,0)]";
    CHECK(dc(W(w)) == tensor({{w, "1", 1}, {"1", w, 1}}));
    const char* v = "[z{k0:2}xD(0,0)]";
    DualCoproduct dc34(three4);
    CHECK(dc34(W(v)) == tensor({{v, "1", 1},
                                {"1", v, 1},
                                {"[P1]", "[z{k0:2}xD(1,0)]", -1},
                                {"[P2]", "[z{k0:2}xD(0,1)]", -1},
                                {"[z{k0:2}xD(1,0)]", "[z{(1,0):1}xD(0,0)]", 1},
                                {"[z{k0:2}xD(0,1)]", "[z{(0,1):1}xD(0,0)]", 1}}));
    CHECK(dc(W("[P1]")) == tensor({{"[P1]", "1", 1}, {"1", "[P1]", 1}}));
}

TEST_CASE("dual coproduct is multiplicative") {
    DualCoproduct dc(three4);
    Sampler s(5);
    auto letters = letters_up_to(Q(3, 2), three4);
    for (int i = 0; i < 30; ++i) {
        Word a = s.word(letters, 0, 2), b = s.word(letters, 0, 1);
        Word ab = Word::sorted([&] {
            LetterSeq l = a.letters();
            l.insert(l.end(), b.letters().begin(), b.letters().end());
            return l;
        }());
        TensorElement prod, da = dc(a), db = dc(b);
        for (auto& [pq1, c1] : da.terms())
            for (auto& [pq2, c2] : db.terms()) {
                TensorElement one;
                one.add_term(pq1.first, pq1.second, c1);
                TensorElement two;
                two.add_term(pq2.first, pq2.second, c2);
                prod += poly_star(one, two);
            }
        CHECK(dc(ab) == prod);
    }
}

TEST_CASE("dual coproduct refuses unsound truncations") {
    DualCoproduct dc(three4);
    LBasisKey x = X("z{k0:2}xD(0,0)");
    TruncationParams sound = sound_truncation(x, three4);
    CHECK(dc.of_letter(x, sound) == dc.of_letter(x));
    TruncationParams bigger = sound;
    bigger.max_len += 1;
    bigger.max_n += 1;
    bigger.max_gamma += 1;
    CHECK(dc.of_letter(x, bigger) == dc.of_letter(x));
    TruncationParams shorter = sound;
    shorter.max_len -= 1;
    CHECK_THROWS_AS(dc.of_letter(x, shorter), TruncationError);
    TruncationParams narrow = sound;
    narrow.max_gamma -= 1;
    CHECK_THROWS_AS(dc.of_letter(x, narrow), TruncationError);
    CHECK_THROWS(dc(W("[z{k0:1}xD(1,0)]")));
}

TEST_CASE("tensor text") {
    CHECK(to_string(tensor({{"[P1]", "1", -1}, {"1", "[P1]", 2}})) == "2 1 (x) [P1]\n-1 [P1] (x) 1\n");
}
