#include "cvdw/json_io.hpp"

#include "cvdw/errors.hpp"

#include <gtest/gtest.h>

using namespace cvdw;

namespace {

// Serializes, prints, re-parses the text, and converts back.
template <typename T>
T through_text(const T& value) {
    const Json j = value;
    return Json::parse(j.dump()).get<T>();
}

}  // namespace

TEST(JsonRoundTrip, ResidueSet) {
    for (const auto& s : {ResidueSet(12, {}), ResidueSet(45, {14, 29, 42, 43, 44}), ResidueSet::full(7)})
        EXPECT_EQ(through_text(s), s);
    const Json j = ResidueSet(8, {2, 7});
    EXPECT_EQ(j.dump(), R"({"elements":[2,7],"modulus":8})");
}

TEST(JsonRoundTrip, RejectsInvalidResidueSet) {
    EXPECT_THROW(Json::parse(R"({"modulus":5,"elements":[3,1]})").get<ResidueSet>(), InvalidArgument);
    EXPECT_THROW(Json::parse(R"({"modulus":5,"elements":[5]})").get<ResidueSet>(), InvalidArgument);
}

TEST(JsonRoundTrip, Progression) {
    const auto p = make_progression(12, 2, 2, 5);
    const Json j = p;
    const auto back = progression_from_json(Json::parse(j.dump()));
    EXPECT_EQ(back, p);
    EXPECT_EQ(back.base(), p.base());
    EXPECT_EQ(back.diff(), p.diff());

    Json forged = j;
    forged["diff"] = 3;
    EXPECT_THROW(progression_from_json(forged), InvalidArgument);
}

TEST(JsonRoundTrip, DifferenceSetsAndConjectureReports) {
    EXPECT_EQ(through_text(difference_gcd_set(81, 9, DiffMethod::closed_form)),
              difference_gcd_set(81, 9, DiffMethod::closed_form));
    EXPECT_EQ(through_text(difference_gcd_set(12, 5, DiffMethod::brute_force)),
              difference_gcd_set(12, 5, DiffMethod::brute_force));
    for (const auto& r : {check_conjecture(5, 2, 3), check_conjecture(3, 1, 4)})
        EXPECT_EQ(through_text(r), r);
}

TEST(JsonRoundTrip, ForbiddenSetsAndBounds) {
    for (auto [m, k] : {std::pair{3, 15}, {10, 9}, {1, 3}, {4, 4}}) {
        const auto f = build_forbidden(m, k);
        EXPECT_EQ(through_text(f), f);
        const auto b = theorem_bounds(m, k);
        EXPECT_EQ(through_text(b), b);
    }
    const Json j = build_forbidden(3, 15);
    EXPECT_EQ(j.at("F_0"), Json({14, 29, 44}));
    EXPECT_EQ(j.at("F_1"), Json({42, 43}));
    EXPECT_EQ(j.at("union"), Json({14, 29, 42, 43, 44}));

    const auto searched = theorem_bounds(3, 4).with_search_value(7);
    EXPECT_EQ(through_text(searched), searched);
}

TEST(JsonRoundTrip, SearchResults) {
    const auto b = independence_number(12, 4);
    EXPECT_EQ(through_text(b), b);
    const auto chi = chromatic_number(9, 3);
    EXPECT_EQ(through_text(chi), chi);
}

TEST(JsonRoundTrip, PartitionsAndWcRows) {
    for (auto [m, k] : {std::pair{2, 4}, {4, 4}, {6, 3}}) {
        const auto plan = build_partition(m, k);
        EXPECT_EQ(through_text(plan), plan);
    }
    for (const auto& row : wc_lower_bounds(4, 8)) EXPECT_EQ(through_text(row), row);

    const Json j = build_partition(2, 4);
    EXPECT_EQ(j.at("modulus"), 8);
    EXPECT_EQ(j.at("parts").at(0).at("label"), "B");
}
