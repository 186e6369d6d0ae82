#include <doctest.h>

#include <algorithm>

#include "arglp/direct.hpp"
#include "arglp/io.hpp"

using namespace arglp;

namespace {

std::vector<ElementSet> sets(std::initializer_list<ElementSet> list) {
    return std::vector<ElementSet>(list);
}

bool same_family(std::vector<ElementSet> a, std::vector<ElementSet> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

Framework example2_af() {
    return parse_framework(
        "arg(a). arg(b). arg(c). arg(d)."
        "att(a,b). att(b,a). att(a,c). att(b,c). att(c,d). att(d,c).");
}

Framework example4_recaf(Kind kind) {
    Framework f = parse_framework(
        "#kind: raf arg(a). arg(b). arg(c). att(alpha1,a,b). att(alpha2,b,c).");
    f.kind = kind;
    return f;
}

Framework example6_afn() {
    return parse_framework(
        "#kind: afn arg(a). arg(b). arg(c). arg(d). att(b,c). att(c,d). sup(b,a).");
}

Framework delta_prime(Kind kind) {
    Framework f = parse_framework(
        "#kind: rafn\n"
        "arg(w_i). arg(r). arg(w_e). arg(p). arg(w_t). arg(s).\n"
        "att(alpha1,w_i,r). att(alpha2,w_e,p). att(alpha3,w_t,alpha1). att(alpha4,s,w_t).\n"
        "sup(beta1,r,w_e).\n");
    f.kind = kind;
    return f;
}

Framework fig2(Kind kind) {
    Framework f = parse_framework(
        "#kind: rafn\n"
        "arg(w_i). arg(r). arg(w_e). arg(p). arg(w_t).\n"
        "att(alpha1,w_i,r). att(alpha2,w_e,p). att(alpha3,w_t,alpha1).\n"
        "sup(beta1,r,w_e).\n");
    f.kind = kind;
    return f;
}

}  // namespace

TEST_CASE("def_set under AFRA and RAF semantics") {
    ElementSet s = {"a", "alpha1"};
    CHECK(def_set(example4_recaf(Kind::AFRA), s) == ElementSet{"b", "alpha2"});
    CHECK(def_set(example4_recaf(Kind::RAF), s) == ElementSet{"b"});
}

TEST_CASE("AFN def/acc run through the flattened frame") {
    Framework f = example6_afn();
    CHECK(def_set(f, {"a"}) == ElementSet{"c"});
    CHECK(acc_set(f, {"a"}) == ElementSet{"a", "b", "d"});
    CHECK(acc_set(f, {}) == ElementSet{"a", "b"});  // unattacked in the flattened AF
}

TEST_CASE("AF acc example") {
    Framework f = example2_af();
    CHECK(acc_set(f, {"a"}) == ElementSet{"a", "d"});
    Framework free = parse_framework("arg(x). arg(y).");
    CHECK(acc_set(free, {}) == ElementSet{"x", "y"});
}

TEST_CASE("recursive DEF/ACC on the four-argument AFN") {
    Framework f = example6_afn();
    auto [def1, acc1] = new_def_acc(f, {"a"});
    CHECK(def1.empty());
    CHECK(acc1 == ElementSet{"a", "b"});

    auto [def2, acc2] = new_def_acc(f, {"a", "b", "d"});
    CHECK(def2 == ElementSet{"c"});
    CHECK(acc2 == ElementSet{"a", "b", "d"});
}

TEST_CASE("DEF/ACC equals Def/Acc at every complete extension of the examples") {
    for (Kind kind : {Kind::AFN, Kind::AFD}) {
        Framework f = example6_afn();
        f.kind = kind;
        if (!validate(f).empty()) continue;
        for (const auto& e : complete_extensions(f)) {
            auto [als_def, als_acc] = new_def_acc(f, e);
            CHECK(als_def == def_set(f, e));
            CHECK(als_acc == acc_set(f, e));
        }
    }
    for (Kind kind : {Kind::RAFN, Kind::ASAF}) {
        Framework f = delta_prime(kind);
        for (const auto& e : complete_extensions(f)) {
            auto [als_def, als_acc] = new_def_acc(f, e);
            CHECK(als_def == def_set(f, e));
            CHECK(als_acc == acc_set(f, e));
        }
    }
}

TEST_CASE("complete extensions of the six-attack AF") {
    auto cos = complete_extensions(example2_af());
    CHECK(same_family(cos, sets({{}, {"d"}, {"a", "d"}, {"b", "d"}})));
}

TEST_CASE("complete extensions of the recursive tennis frameworks") {
    CHECK(same_family(complete_extensions(delta_prime(Kind::ASAF)),
                      sets({{"w_i", "s", "p", "alpha1", "alpha4", "beta1"}})));
    CHECK(same_family(
        complete_extensions(delta_prime(Kind::RAFN)),
        sets({{"w_i", "s", "p", "alpha1", "alpha2", "alpha3", "alpha4", "beta1"}})));
    // without the season argument both semantics agree
    ElementSet fig2_ext = {"w_i", "r", "w_e", "w_t", "alpha2", "alpha3", "beta1"};
    CHECK(same_family(complete_extensions(fig2(Kind::RAFN)), sets({fig2_ext})));
    CHECK(same_family(complete_extensions(fig2(Kind::ASAF)), sets({fig2_ext})));
}

TEST_CASE("complete extensions of the deductive recursive tennis frameworks") {
    CHECK(same_family(
        complete_extensions(delta_prime(Kind::RAFD)),
        sets({{"w_i", "s", "w_e", "alpha1", "alpha2", "alpha3", "alpha4", "beta1"}})));
    CHECK(same_family(complete_extensions(delta_prime(Kind::AFRAD)),
                      sets({{"w_i", "s", "w_e", "alpha1", "alpha2", "alpha4", "beta1"}})));
}

TEST_CASE("Rec-AF complete extensions differ only in attack status") {
    CHECK(same_family(complete_extensions(example4_recaf(Kind::AFRA)),
                      sets({{"a", "c", "alpha1"}})));
    CHECK(same_family(complete_extensions(example4_recaf(Kind::RAF)),
                      sets({{"a", "c", "alpha1", "alpha2"}})));
}

TEST_CASE("selectors on the six-attack AF") {
    Framework f = example2_af();
    auto cos = complete_extensions(f);
    CHECK(same_family(select_extensions(cos, f, Semantics::Preferred),
                      sets({{"a", "d"}, {"b", "d"}})));
    CHECK(same_family(select_extensions(cos, f, Semantics::Stable),
                      sets({{"a", "d"}, {"b", "d"}})));
    CHECK(same_family(select_extensions(cos, f, Semantics::SemiStable),
                      sets({{"a", "d"}, {"b", "d"}})));
    CHECK(select_extensions(cos, f, Semantics::Grounded) == sets({{}}));
    CHECK(select_extensions(cos, f, Semantics::Ideal) == sets({{"d"}}));
}

TEST_CASE("singleton complete family is every selector's answer") {
    Framework f = fig2(Kind::RAFN);
    auto cos = complete_extensions(f);
    REQUIRE(cos.size() == 1);
    for (Semantics s : {Semantics::Preferred, Semantics::Stable, Semantics::SemiStable,
                        Semantics::Grounded, Semantics::Ideal})
        CHECK(select_extensions(cos, f, s) == cos);
}

TEST_CASE("completion pairs the extension with its defeated set") {
    Framework fig1 = parse_framework(
        "#kind: afn arg(w_i). arg(r). arg(w_e). arg(p)."
        "att(w_i,r). att(w_e,p). sup(r,w_e).");
    Completion hat = completion({"w_i", "p"}, fig1);
    CHECK(hat.pos == ElementSet{"w_i", "p"});
    CHECK(hat.neg == ElementSet{"r", "w_e"});

    Completion ex2 = completion({"a", "d"}, example2_af());
    CHECK(ex2.neg == ElementSet{"b", "c"});

    Framework free = parse_framework("arg(x). arg(y).");
    CHECK(completion({"x", "y"}, free).neg.empty());
}

TEST_CASE("conflict-freeness of every complete extension") {
    for (Kind kind : {Kind::RAFN, Kind::ASAF, Kind::RAFD, Kind::AFRAD}) {
        Framework f = delta_prime(kind);
        for (const auto& e : complete_extensions(f)) {
            ElementSet defeated = def_set(f, e);
            for (const auto& x : e) CHECK(defeated.count(x) == 0);
        }
    }
}

TEST_CASE("element limit guards subset enumeration") {
    std::string text = "arg(a1).";
    for (int i = 2; i <= 18; ++i) text += " arg(a" + std::to_string(i) + ").";
    Framework f = parse_framework(text);
    CHECK_THROWS_AS(complete_extensions(f), ResourceLimitError);
    DirectOptions forced;
    forced.force = true;
    CHECK(complete_extensions(f, forced).size() == 1);  // the full set of arguments
}

TEST_CASE("an argument tied to its own attack stays out under AFRAD") {
    // a supports its attack g while also being g's source; the pair is
    // mutually unfounded, so both land in DEF and b survives.
    Framework f = parse_framework(
        "#kind: afrad arg(a). arg(b). att(g,a,b). sup(be,a,g).");
    auto [defeated, acc] = new_def_acc(f, {"b", "be"});
    CHECK(defeated == ElementSet{"a", "g"});
    CHECK(acc == ElementSet{"b", "be"});
    CHECK(same_family(complete_extensions(f), sets({{"b", "be"}})));
}
