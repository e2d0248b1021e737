#include <ams/core.hpp>

#include <doctest.h>

using namespace ams;

TEST_CASE("literal codes and complements") {
    Literal a = Literal::positive(3);
    CHECK(a.atom() == 3);
    CHECK(a.isPositive());
    CHECK(a.complement().isNegative());
    CHECK(a.complement().complement() == a);
    CHECK(Literal::fromCode(a.code()) == a);
}

TEST_CASE("vocabulary lookup and rendering") {
    Vocabulary v{"a", "b"};
    CHECK(v.size() == 2);
    CHECK(v.find("b") == 1u);
    CHECK_FALSE(v.find("c"));
    CHECK(v.render(Literal::negative(0)) == "-a");
    CHECK(v.parseLiteral("-b") == Literal::negative(1));
    CHECK_FALSE(v.parseLiteral("-c"));
    CHECK_THROWS_AS(Vocabulary({"a", "a"}), Error);
    CHECK_THROWS_AS(Vocabulary({"A"}), Error);
    CHECK_FALSE(Vocabulary::isValidAtomName("not a"));
}

TEST_CASE("vocabulary union keeps the left order") {
    Vocabulary a{"b", "a"};
    Vocabulary b{"c", "a"};
    auto u = a.unionWith(b);
    CHECK(u.names() == std::vector<std::string>{"b", "a", "c"});
    CHECK(a.subsetOf(u));
    CHECK(a.sameAtoms(Vocabulary{"a", "b"}));
    CHECK_FALSE(a == Vocabulary({"a", "b"}));
}

TEST_CASE("literal sets stay consistent") {
    Vocabulary v{"a", "b"};
    auto m = parseLiteralSet("-b a", v);
    CHECK(render(m, v) == "a -b");
    CHECK(m.assigns(0));
    CHECK_FALSE(LiteralSet::tryMake({Literal::positive(0), Literal::negative(0)}));
    CHECK_THROWS_AS(parseLiteralSet("a -a", v), ParseError);
    CHECK_FALSE(addLiteral(m, Literal::negative(0)));
    CHECK(addLiteral(LiteralSet{}, Literal::negative(0))->contains(Literal::negative(0)));
    CHECK(render(LiteralSet{}, v) == "{}");
}

TEST_CASE("restriction maps through names") {
    Vocabulary big{"a", "b", "c"};
    Vocabulary small{"c", "a"};
    auto m = parseLiteralSet("a -b c", big);
    auto r = restrict(m, big, small);
    CHECK(render(r, small) == "c a");
    CHECK(isCompleteOver(m, big, small));
    CHECK_FALSE(isCompleteOver(parseLiteralSet("a", big), big, small));
}

TEST_CASE("enumeration covers 3^n nodes in index order") {
    auto all = enumerateLiteralSets(3);
    CHECK(all.size() == 27);
    CHECK(pow3(3) == 27);
    for (std::uint64_t i = 0; i < all.size(); ++i) {
        CHECK(literalSetIndex(all[i]) == i);
        CHECK(literalSetAt(i, 3) == all[i]);
    }
    CHECK(all[0].empty());
}

TEST_CASE("interpretations") {
    Vocabulary v{"a", "b"};
    auto i = Interpretation::fromPositive(parseLiteralSet("-a b", v), v);
    CHECK(render(i) == "b");
    CHECK(i.isTrue(1));
    CHECK(render(i.asLiteralSet(), v) == "-a b");
    CHECK(satisfiesSet(i, parseLiteralSet("b", v)));
    CHECK_FALSE(satisfiesSet(i, parseLiteralSet("a", v)));
}
