#include "random_kb.hpp"
#include "support.hpp"

#include "verblogic/engine.hpp"
#include "verblogic/errors.hpp"

#include <doctest.h>

using namespace verblogic;
using namespace verblogic::testing;

namespace {

Atom house_atom(std::string_view verb, std::string_view object, std::string_view place) {
    return make_atom(t("I"), t(verb), t(object), {{PlaceSlot::in, t(place)}}, Tense::future);
}

const char* const house_kb = R"(
kind house < property
part CA < U.S.
way buy < own
)";

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("derive_conclusions reproduces the seven property conclusions") {
    KnowledgeBase kb = kb_from(house_kb);
    ConclusionSet got = derive_conclusions(kb, house_atom("buy", "house", "CA"));
    ConclusionSet expected{
        house_atom("buy", "house", "U.S."),   house_atom("buy", "property", "CA"),
        house_atom("buy", "property", "U.S."), house_atom("own", "house", "CA"),
        house_atom("own", "house", "U.S."),   house_atom("own", "property", "CA"),
        house_atom("own", "property", "U.S."),
    };
    CHECK(got == expected);
    CHECK(got.size() == 7);
}

TEST_CASE("terms without ancestors derive nothing") {
    KnowledgeBase kb = kb_from(house_kb);
    CHECK(derive_conclusions(kb, house_atom("own", "property", "U.S.")).empty());
    CHECK(derive_conclusions(kb, house_atom("sell", "car", "Paris")).empty());
}

TEST_CASE("chains of height 2 and 3 on two axes give 11 conclusions") {
    KnowledgeBase kb = kb_from(R"(
way fly < travel < move
part a < b < c < d
)");
    Atom fact = make_atom(t("I"), t("fly"), std::nullopt, {{PlaceSlot::to, t("a")}}, Tense::past);
    ConclusionSet got = derive_conclusions(kb, fact);
    CHECK(got.size() == 11);

    // Brute force over the declared chains.
    std::set<std::string> expected;
    for (const char* v : {"fly", "travel", "move"})
        for (const char* p : {"a", "b", "c", "d"}) {
            Atom a = fact;
            a.verb = t(v);
            a.places.set(PlaceSlot::to, t(p));
            if (a != fact) expected.insert(serialize(a));
        }
    CHECK(serialized(got) == expected);
}

TEST_CASE("polarity preconditions") {
    KnowledgeBase kb = kb_from(house_kb);
    Atom pos = house_atom("buy", "house", "CA");
    CHECK_THROWS_AS(derive_conclusions(kb, negate(pos)), NegatedFactError);
    CHECK_THROWS_AS(specialize_negative(kb, pos), PositiveFactError);
}

TEST_CASE("specialize_negative walks downward") {
    KnowledgeBase kb = kb_from("kind potato < vegetable\nway bake < cook\n");
    Atom not_cooked = make_atom(t("I"), t("cook"), t("vegetable"), {}, Tense::past, true);
    ConclusionSet got = specialize_negative(kb, not_cooked);
    CHECK(got.contains(make_atom(t("I"), t("bake"), t("potato"), {}, Tense::past, true)));
    CHECK(got.size() == 3);
    for (const auto& a : got) CHECK(a.negated);

    Atom leaf = make_atom(t("I"), t("bake"), t("potato"), {}, Tense::past, true);
    CHECK(specialize_negative(kb, leaf).empty());
}

TEST_CASE("derive_conclusions matches brute-force enumeration on random DAGs") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        RandomKb r(rng, 6);
        for (const auto& fact : r.all_atoms()) {
            ConclusionSet got = derive_conclusions(r.kb, fact);
            CHECK(serialized(got) == r.expected_conclusions(fact));
            CHECK_FALSE(got.contains(fact));
            // Monotone preservation: changed slots hold strict ancestors.
            for (const auto& c : got) {
                CHECK(c.subject == fact.subject);
                CHECK(c.tense == fact.tense);
                for (Axis axis : RandomKb::axes) {
                    auto before = *axis_term(fact, axis);
                    auto after = *axis_term(c, axis);
                    if (before != after)
                        CHECK(r.kb.taxonomy.is_strict_ancestor(relation_of(axis), before, after));
                }
            }
        }
    }
}

TEST_CASE("contraposition duality on random DAGs") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        RandomKb r(rng, 4);
        auto atoms = r.all_atoms();
        for (const auto& s : atoms) {
            ConclusionSet up = derive_conclusions(r.kb, s);
            for (const auto& t : atoms) {
                const bool forward = t == s || up.contains(t);
                ConclusionSet down = specialize_negative(r.kb, negate(t));
                const bool backward = negate(s) == negate(t) || down.contains(negate(s));
                CHECK(forward == backward);
            }
        }
    }
}

TEST_CASE("conditional lifting, tense neutrality and field preservation") {
    KnowledgeBase kb = kb_from(house_kb);
    Atom plain = house_atom("buy", "house", "CA");
    Atom cond = plain;
    cond.condition = "I get this job";
    ConclusionSet lifted;
    for (Atom c : derive_conclusions(kb, plain)) {
        c.condition = "I get this job";
        lifted.insert(c);
    }
    CHECK(derive_conclusions(kb, cond) == lifted);

    Atom past = plain;
    past.tense = Tense::past;
    ConclusionSet retensed;
    for (Atom c : derive_conclusions(kb, plain)) {
        c.tense = Tense::past;
        retensed.insert(c);
    }
    CHECK(derive_conclusions(kb, past) == retensed);

    Atom fuzzy = plain;
    fuzzy.adverb = FrequencyAdverb::rarely;
    fuzzy.can = true;
    for (const auto& c : derive_conclusions(kb, fuzzy)) {
        CHECK(c.adverb == FrequencyAdverb::rarely);
        CHECK(c.can);
    }
}

TEST_CASE("derive_all over compounds") {
    KnowledgeBase kb = kb_from("kind potato < vegetable\nkind apple < fruit\nway bake < cook\n");
    auto atom = [](std::string_view verb, std::string_view object) {
        return make_atom(t("I"), t(verb), t(object), {}, Tense::past);
    };
    Compound fact = Compound::factored(atom("bake", "potato"), std::nullopt,
                                       TermList{Junction::all, {t("potato"), t("apple")}});
    CompoundSet got = derive_all(kb, fact);
    CHECK(got.contains(canonical_form(Compound::all_of(
        {Compound::leaf(atom("cook", "vegetable")), Compound::leaf(atom("cook", "fruit"))}))));
    // Each leaf has 3 conclusions: (3+1)(3+1) - 1.
    CHECK(got.size() == 15);
    CHECK_FALSE(got.contains(canonical_form(fact)));

    SUBCASE("a single leaf behaves like derive_conclusions") {
        CompoundSet single = derive_all(kb, Compound::leaf(atom("bake", "potato")));
        CompoundSet expected;
        for (const auto& c : derive_conclusions(kb, atom("bake", "potato"))) expected.insert(Compound::leaf(c));
        CHECK(single.size() == expected.size());
        for (const auto& c : expected) CHECK(single.contains(c));
    }
    SUBCASE("mixed polarity leaves") {
        Compound mixed = Compound::any_of({Compound::leaf(atom("bake", "potato")),
                                           Compound::leaf(negate(atom("cook", "fruit")))});
        // positive leaf: 3 conclusions; negated leaf: bake/apple below cook/fruit, 3 conclusions.
        CHECK(derive_all(kb, mixed).size() == 15);
    }
}

TEST_CASE("entails") {
    KnowledgeBase kb = kb_file("travel.vl");
    Atom flew = make_atom(t("I"), t("fly"), std::nullopt,
                          {{PlaceSlot::from, t("Tokyo")}, {PlaceSlot::to, t("Los_Angeles")}}, Tense::past);
    Atom traveled = make_atom(t("I"), t("travel"), std::nullopt,
                              {{PlaceSlot::from, t("Japan")}, {PlaceSlot::to, t("U.S.")}}, Tense::past);
    CHECK(entails(kb, Compound::leaf(flew), Compound::leaf(traveled)));
    CHECK_FALSE(entails(kb, Compound::leaf(traveled), Compound::leaf(flew)));
    CHECK(entails(kb, Compound::leaf(flew), Compound::leaf(flew)));
}

TEST_CASE("entailment is transitive on random KBs") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 15; ++trial) {
        RandomKb r(rng, 3);
        auto atoms = r.all_atoms();
        for (const auto& a : atoms)
            for (const auto& b : atoms) {
                if (!entails(r.kb, Compound::leaf(a), Compound::leaf(b))) continue;
                for (const auto& c : atoms)
                    if (entails(r.kb, Compound::leaf(b), Compound::leaf(c)))
                        CHECK(entails(r.kb, Compound::leaf(a), Compound::leaf(c)));
            }
    }
}

}
