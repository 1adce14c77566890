#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "published.hpp"
#include "rlv/report.hpp"
#include "rlv/validation.hpp"

using namespace rlv;
using namespace rlv::test;

TEST_CASE("report rows") {
    const auto& p = published("LH2/EM");
    const VehicleDesign d = reevaluate(p);
    const Report rep = make_report(d, {ObjectiveKind::EM, 20});
    CHECK(rep.row("Total", "", "GLOW").value == doctest::Approx(d.glow / 1e3));
    CHECK(rep.row("Total", "", "Objective").value ==
          doctest::Approx((d.masses().ms2 + d.masses().ms1 / 20.0) / 1e3));
    CHECK(rep.row("Propulsion System", "First Stage", "Number of Engines").value == 5.0);
    CHECK(rep.row("Delta-v", "", "First Stage").value == doctest::Approx(4.3));
    CHECK(rep.row("Mass Breakdown", "First Stage", "Structural Mass").value ==
          doctest::Approx(d.first.structural_mass));
    CHECK_THROWS_AS(rep.row("Total", "", "Cost"), std::out_of_range);
    CHECK(rep.title.find("(20 reuses)") != std::string::npos);
}

TEST_CASE("JSON mirror matches the text") {
    const VehicleDesign d = reevaluate(published("RP1-LH2/GLOW"));
    const Report rep = make_report(d, {});
    const std::string text = render_text(rep);
    const auto j = nlohmann::json::parse(to_json_text(rep));
    REQUIRE(j["rows"].size() == rep.rows.size());
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = j["rows"][i];
        CHECK(r["label"] == rep.rows[i].label);
        CHECK(r["value"].get<double>() == rep.rows[i].value);
        const std::string printed = format_value(r["value"].get<double>(), r["precision"].get<int>());
        const std::string label = r["label"].get<std::string>() + " [" + r["unit"].get<std::string>() + "]";
        // the printed line carries the label and the JSON value at print precision
        bool found = false;
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) {
            if (line.find(label) != std::string::npos && line.find(printed) != std::string::npos) found = true;
        }
        CHECK_MESSAGE(found, label);
    }
}

TEST_CASE("CSV headers") {
    const std::string h = history_csv({{1, 3.3e5, 4e6, 0.5}});
    CHECK(h.rfind("generation,best_kg,mean_kg,feasible_fraction\n", 0) == 0);
    CHECK(h.find("1,330000,4000000,0.5") != std::string::npos);
    const std::string c = curve_csv(SweepAxis::IspOffset, {Fuel::LH2, Fuel::LH2},
                                    {{-5.0, true, 3.4e5, 3.4e5, 3000.0, ""}, {0.0, false, 0, 0, 0, "no, \"feasible\""}});
    CHECK(c.rfind("isp_offset_s,combo,feasible,objective_kg,glow_kg,dv_stage1_ascent_mps,error\n", 0) == 0);
    CHECK(c.find("-5,LH2/LH2,1,340000,340000,3000,\n") != std::string::npos);
    CHECK(c.find("0,LH2/LH2,0,,,,\"no, \"\"feasible\"\"\"\n") != std::string::npos);
    CHECK(curve_csv(SweepAxis::DvAllocation, {}, {}).rfind("dv_allocation_mps,", 0) == 0);
}

TEST_CASE("Falcon 9 validation") {
    const ValidationReport rep = run_validation();
    for (const auto& f : rep.fields) {
        CAPTURE(f.label);
        CHECK(f.pass());
    }
    CHECK(rep.passed());
    CHECK(rep.field("GLOW").vehicle == 569.3);
    CHECK(rep.field("GLOW").reference == 589.9);
    const std::string text = render_text(rep);
    CHECK(text.find("569.3") != std::string::npos);
    CHECK(text.find(format_value(rep.field("GLOW").computed, 1)) != std::string::npos);
    CHECK(text.find("validation PASSED") != std::string::npos);

    Calibration heavy = shipped_calibration();
    heavy.tank_material_density *= 2.0;
    const ValidationReport bad = run_validation(heavy);
    CHECK_FALSE(bad.passed());
    CHECK_FALSE(bad.field("Upper Struct. Mass").pass());
    CHECK_FALSE(bad.field("First Struct. Mass").pass());
    CHECK(bad.field("First Struct. Mass").computed > rep.field("First Struct. Mass").computed);
}
