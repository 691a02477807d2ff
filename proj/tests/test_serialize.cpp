#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fourpage/error.hpp"
#include "fourpage/serialize.hpp"

using namespace fourpage;

namespace {

struct Pieces {
    TaitGraph g;
    SpanningTree t;
    EulerTour tour;
};

Pieces pieces(const Diagram& d) {
    const FaceSet f = compute_faces(d);
    TaitGraph g = build_tait(d, f, checkerboard(d, f));
    SpanningTree t = spanning_tree(g);
    EulerTour tour = euler_tour(trace_circles(d, kauffman_state(g, t)), t);
    return {std::move(g), std::move(t), std::move(tour)};
}

ErrorKind error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::MalformedRecord;
}

}  // namespace

TEST(Json, SchemaTags) {
    const Diagram d = fourpage::testing::trefoil();
    const auto [g, t, tour] = pieces(d);
    const Alpha4Result r = alpha4_upper_bound(d);
    const RibbonPlan plan = ribbon_plan(r.presentation);
    EXPECT_EQ(Json(g)["schema"], "fourpage.tait/1");
    EXPECT_EQ(Json(t)["schema"], "fourpage.tree/1");
    EXPECT_EQ(Json(tour)["schema"], "fourpage.tour/1");
    EXPECT_EQ(Json(r.presentation)["schema"], "fourpage.presentation/1");
    EXPECT_EQ(Json(verify(r.presentation))["schema"], "fourpage.verify/1");
    EXPECT_EQ(Json(plan)["schema"], "fourpage.ribbon/1");
    EXPECT_EQ(Json(ribbon_schematic(plan))["schema"], "fourpage.schematic/1");
}

TEST(Json, TaitTreeTourFields) {
    const Diagram d = fourpage::testing::hopf();
    const auto [g, t, tour] = pieces(d);
    const Json jg = g;
    EXPECT_EQ(jg["edges"].size(), 2u);
    EXPECT_EQ(jg["vertices"].size(), 2u);
    const Json jt = t;
    EXPECT_EQ(jt["edges"], Json::array({0}));
    EXPECT_EQ(jt["strategy"], "default");
    const Json jtour = tour;
    EXPECT_EQ(jtour["edges"].size(), 4u);
    EXPECT_TRUE(jtour["side"][0] == "inside" || jtour["side"][0] == "outside");
}

TEST(Json, PresentationFields) {
    const Alpha4Result r = alpha4_upper_bound(fourpage::testing::trefoil());
    const Json j = r.presentation;
    EXPECT_EQ(j["binding"].size(), 6u);
    EXPECT_EQ(j["arcs"].size(), 6u);
    for (const auto& arc : j["arcs"]) {
        const int page = arc["page"];
        EXPECT_GE(page, 1);
        EXPECT_LE(page, 4);
    }
    EXPECT_EQ(j["pd"].size(), 3u);
}

TEST(Json, PresentationRoundTrip) {
    for (const auto& fx : fourpage::testing::all_tables()) {
        const Alpha4Result r = alpha4_upper_bound(fx.diagram);
        const Json j = r.presentation;
        const CircularPresentation back = presentation_from_json(j);
        EXPECT_EQ(Json(back), j) << fx.name;
        EXPECT_TRUE(verify(back).ok()) << fx.name;
    }
}

TEST(Json, PresentationRejectsBadDocuments) {
    const Json good = alpha4_upper_bound(fourpage::testing::trefoil()).presentation;
    Json wrong_schema = good;
    wrong_schema["schema"] = "fourpage.tour/1";
    EXPECT_EQ(error_of([&] { presentation_from_json(wrong_schema); }), ErrorKind::InvalidPresentation);
    Json missing = good;
    missing.erase("arcs");
    EXPECT_EQ(error_of([&] { presentation_from_json(missing); }), ErrorKind::InvalidPresentation);
    Json bad_side = good;
    bad_side["arcs"][0]["side"] = "sideways";
    EXPECT_EQ(error_of([&] { presentation_from_json(bad_side); }), ErrorKind::InvalidPresentation);
    Json bad_pass = good;
    bad_pass["arcs"][0]["pass"] = "through";
    EXPECT_EQ(error_of([&] { presentation_from_json(bad_pass); }), ErrorKind::InvalidPresentation);
    Json bad_pd = good;
    bad_pd["pd"][0][0] = 99;
    EXPECT_EQ(error_of([&] { presentation_from_json(bad_pd); }), ErrorKind::LabelCountError);
}

TEST(Json, TamperedPresentationFailsVerification) {
    Json j = alpha4_upper_bound(fourpage::testing::trefoil()).presentation;
    j["arcs"][0]["pass"] = j["arcs"][0]["pass"] == "over" ? "under" : "over";
    EXPECT_FALSE(verify(presentation_from_json(j)).ok());
}

TEST(Json, Deterministic) {
    for (const std::string name : {"8_19", "7_7", "L6a4"}) {
        const Diagram d = fourpage::testing::table(name).diagram;
        const std::string a = Json(alpha4_upper_bound(d).presentation).dump();
        const std::string b = Json(alpha4_upper_bound(d).presentation).dump();
        EXPECT_EQ(a, b);
        PipelineOptions seeded{TreeChoice::random, 77, std::nullopt};
        EXPECT_EQ(Json(alpha4_upper_bound(d, seeded).presentation).dump(),
                  Json(alpha4_upper_bound(d, seeded).presentation).dump());
    }
}
