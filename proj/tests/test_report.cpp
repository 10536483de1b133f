#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fanolink/runner.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fanolink;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("report JSON round trips") {
    VerificationReport r;
    r.check("a.first", "anchor one", true, "8", "8");
    r.check("b.second", "anchor two", false, "(q-1)*x2^2", "0", "x1*x3");
    r.skip("c.third", "anchor three", "degenerate");
    auto j = r.to_json();
    CHECK(j["schema"] == 1);
    VerificationReport back = VerificationReport::from_json(j);
    REQUIRE(back.entries().size() == r.entries().size());
    for (std::size_t i = 0; i < r.entries().size(); ++i)
        CHECK(back.entries()[i] == r.entries()[i]);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["summary"]["fail"] == 1);
    CHECK(j["summary"]["skipped"] == 1);
}

TEST_CASE("exit code reflects failures only") {
    auto tmp = std::filesystem::temp_directory_path() / "fanolink_report_test";
    std::filesystem::remove_all(tmp);

    RunConfig cfg;
    cfg.genera = {12};
    cfg.suite_globs = {"param.*"};
    cfg.out_dir = (tmp / "ok").string();
    CHECK(run(cfg) == 0);
    CHECK(std::filesystem::exists(tmp / "ok" / "report.json"));

    // text format
    cfg.format = "text";
    cfg.out_dir = (tmp / "text").string();
    CHECK(run(cfg) == 0);
    std::string text = slurp(tmp / "text" / "report.txt");
    CHECK(text.find("[pass]") != std::string::npos);
    CHECK(text.find("fail 0") != std::string::npos);
}

TEST_CASE("reports are byte-identical across runs") {
    auto tmp = std::filesystem::temp_directory_path() / "fanolink_repeat_test";
    std::filesystem::remove_all(tmp);
    RunConfig cfg;
    cfg.genera = {9};
    cfg.out_dir = (tmp / "one").string();
    REQUIRE(run(cfg) == 0);
    cfg.out_dir = (tmp / "two").string();
    REQUIRE(run(cfg) == 0);
    CHECK(slurp(tmp / "one" / "report.json") == slurp(tmp / "two" / "report.json"));
}

TEST_CASE("plot writes one deterministic figure per genus") {
    auto tmp = std::filesystem::temp_directory_path() / "fanolink_plot_test";
    std::filesystem::remove_all(tmp);
    RunConfig cfg;
    cfg.out_dir = (tmp / "figs").string();
    CHECK(plot(cfg) == 0);
    for (int g : {9, 10, 12})
        CHECK(std::filesystem::exists(tmp / "figs" /
                                      ("chambers_g" + std::to_string(g) + ".svg")));
    std::string first = slurp(tmp / "figs" / "chambers_g12.svg");
    cfg.out_dir = (tmp / "figs2").string();
    CHECK(plot(cfg) == 0);
    CHECK(first == slurp(tmp / "figs2" / "chambers_g12.svg"));
}

TEST_CASE("the verify --figures path writes figures next to the report") {
    auto tmp = std::filesystem::temp_directory_path() / "fanolink_verify_figs";
    std::filesystem::remove_all(tmp);
    RunConfig cfg;
    cfg.genera = {12};
    cfg.suite_globs = {"merge.*"};
    cfg.figures = true;
    cfg.out_dir = tmp.string();
    CHECK(run(cfg) == 0);
    CHECK(std::filesystem::exists(tmp / "chambers_g12.svg"));
}
