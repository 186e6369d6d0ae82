#include <doctest.h>

#include "arglp/framework.hpp"
#include "arglp/io.hpp"

using namespace arglp;

namespace {

Framework example2_af() {
    return parse_framework(
        "arg(a). arg(b). arg(c). arg(d).\n"
        "att(a,b). att(b,a). att(a,c). att(b,c). att(c,d). att(d,c).\n");
}

Framework fig2_rafn() {
    return parse_framework(
        "#kind: rafn\n"
        "arg(w_i). arg(r). arg(w_e). arg(p). arg(w_t).\n"
        "att(alpha1,w_i,r). att(alpha2,w_e,p). att(alpha3,w_t,alpha1).\n"
        "sup(beta1,r,w_e).\n");
}

bool has_violation(const std::vector<Violation>& vs, ViolationCode code) {
    for (const auto& v : vs)
        if (v.code == code) return true;
    return false;
}

}  // namespace

TEST_CASE("validate accepts the six-attack AF") {
    Framework f = example2_af();
    CHECK(validate(f).empty());
    CHECK(f.attacks.size() == 6);
}

TEST_CASE("validate rejects a support cycle") {
    Framework f;
    f.kind = Kind::AFN;
    f.args = {"a", "b"};
    f.supports = {{"s1", {"a", "b"}}, {"s2", {"b", "a"}}};
    auto vs = validate(f);
    REQUIRE(has_violation(vs, ViolationCode::SupportCycle));
    // the cycle names both arguments
    for (const auto& v : vs) {
        if (v.code != ViolationCode::SupportCycle) continue;
        CHECK(v.elements.size() == 2);
    }
}

TEST_CASE("validate rejects a name-level support cycle") {
    Framework f;
    f.kind = Kind::RAFN;
    f.args = {"a", "b"};
    f.supports = {{"s1", {"a", "s2"}}, {"s2", {"b", "s1"}}};
    CHECK(has_violation(validate(f), ViolationCode::SupportCycle));
}

TEST_CASE("AF attacks may only target arguments") {
    Framework f;
    f.kind = Kind::AF;
    f.args = {"a", "b"};
    f.attacks = {{"x", {"a", "b"}}, {"y", {"b", "x"}}};
    CHECK(has_violation(validate(f), ViolationCode::KindTargetViolation));

    f.kind = Kind::RAF;
    CHECK(validate(f).empty());
}

TEST_CASE("supports are rejected outside the BAF kinds") {
    Framework f;
    f.kind = Kind::RAF;
    f.args = {"a", "b"};
    f.supports = {{"s1", {"a", "b"}}};
    CHECK(has_violation(validate(f), ViolationCode::KindTargetViolation));
}

TEST_CASE("sources must be declared arguments") {
    Framework f;
    f.kind = Kind::AF;
    f.args = {"a"};
    f.attacks = {{"x", {"ghost", "a"}}, {"y", {"x", "a"}}};
    auto vs = validate(f);
    CHECK(has_violation(vs, ViolationCode::SourceNotArgument));
    CHECK(!has_violation(vs, ViolationCode::UnknownTarget));
}

TEST_CASE("unknown targets and name clashes are reported together") {
    Framework f;
    f.kind = Kind::AF;
    f.args = {"a", "x"};
    f.attacks = {{"x", {"a", "nowhere"}}};
    auto vs = validate(f);
    CHECK(has_violation(vs, ViolationCode::UnknownTarget));
    CHECK(has_violation(vs, ViolationCode::NameClash));
}

TEST_CASE("reserved and malformed names are invalid") {
    Framework f;
    f.kind = Kind::AF;
    f.args = {"__f1"};
    CHECK(has_violation(validate(f), ViolationCode::InvalidName));

    Framework g;
    g.kind = Kind::AF;
    g.args = {"9lives"};
    CHECK(has_violation(validate(g), ViolationCode::InvalidName));
}

TEST_CASE("validate is pure: equal inputs give equal reports") {
    Framework f;
    f.kind = Kind::AFN;
    f.args = {"a"};
    f.supports = {{"s1", {"a", "a"}}};
    auto first = validate(f);
    auto second = validate(f);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(first[i].code == second[i].code);
        CHECK(first[i].message == second[i].message);
        CHECK(first[i].elements == second[i].elements);
    }
}

TEST_CASE("universe of a plain AF lists arguments only") {
    auto names = universe_names(example2_af());
    CHECK(names == std::vector<std::string>{"a", "b", "c", "d"});
}

TEST_CASE("universe order is class-then-name") {
    auto names = universe_names(fig2_rafn());
    CHECK(names == std::vector<std::string>{"p", "r", "w_e", "w_i", "w_t", "alpha1", "alpha2",
                                            "alpha3", "beta1"});
}

TEST_CASE("universe of the empty framework is empty") {
    Framework f;
    CHECK(universe(f).empty());
}

TEST_CASE("universe counts every element exactly once") {
    Framework f = fig2_rafn();
    auto u = universe(f);
    CHECK(u.size() == f.args.size() + f.attacks.size() + f.supports.size());
    std::set<std::string> seen;
    for (const auto& e : u) CHECK(seen.insert(e.name).second);

    // Rec-AF: attack names count, supports are absent by kind.
    Framework raf = parse_framework("#kind: raf arg(a). arg(b). att(x,a,b). att(y,b,x).");
    CHECK(universe(raf).size() == 4);
}
