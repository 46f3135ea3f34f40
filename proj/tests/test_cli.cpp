#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(CAYLEY_CLI) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args) {
    Run r = run(args);
    REQUIRE(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["schema"] == 1);
    CHECK(r.out.find("\"schema\"") < r.out.find(',' ));
    return j;
}

}  // namespace

TEST_CASE("cli contact") {
    auto j = run_json("contact 0,1/10,0 1,29/10,1/10");
    CHECK(j["order"] == 2);
    CHECK(j["dual_order"] == 1);
    CHECK(j["oracles_agree"] == true);

    j = run_json("contact 0,3/2,0 1,3/2,0");
    CHECK(j["order"] == 4);
    CHECK(j["dual_order"] == 3);
    CHECK(j["predicted_dual_order"] == 3);

    j = run_json("contact 1,2,5 1,2,5");
    CHECK(j["order"] == "identical");
    CHECK(j["dual_order"] == "identical");

    j = run_json("dual-contact 0,7/3,0 5,7/3,0");
    CHECK(j["dual_order"] == 4);
    CHECK(j.count("order") == 0);

    j = run_json("contact -- -1,2,0 3,2,0");
    CHECK(j["order"] == 3);

    CHECK(run("contact 0,3,0 1,2,0").status != 0);
    CHECK(run("contact 0,1/0,0 1,2,0").status != 0);
    CHECK(run("contact 0,1 1,2,0").status != 0);
}

TEST_CASE("cli utilities") {
    CHECK(run_json("lambda 3")["lambda"] == "∞");
    CHECK(run_json("lambda 7/3")["lambda"] == "3/2");
    CHECK(run_json("curvature 3/2")["curvature"] == "9/8");
    auto c = run_json("curvature 1 2");
    CHECK(c["equal"] == true);
    CHECK(c["second_order_contact"] == true);
    CHECK(run_json("sigma 8/3")["image"] == "hyperbolic-paraboloid");
    auto s = run_json("sigma 2 --alpha 0 --u 1");
    CHECK(s["beta_prime"] == "2");
    CHECK(s["plane"] == nlohmann::json::array({"1", "-3", "6", "-6"}));
    CHECK(s["on_dual_cayley"] == true);
    CHECK(run("lambda x").status != 0);
    CHECK(run("sigma 3").status != 0);
}

TEST_CASE("cli verify") {
    auto j = run_json("verify --trials 0");
    CHECK(j["pass"] == true);
    CHECK(j["strata"].empty());
    CHECK(j["identities"].size() > 40);

    Run a = run("verify --trials 5 --seed 7");
    Run b = run("verify --trials 5 --seed 7");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    auto va = nlohmann::json::parse(a.out);
    CHECK(va["strata"].size() == 10);
    for (const auto& s : va["strata"]) CHECK(s["pass"] == true);
}

TEST_CASE("cli figure") {
    auto dir = std::filesystem::temp_directory_path() / "cayley_cli_test";
    std::filesystem::create_directories(dir);
    auto base = (dir / "f4").string();
    auto j = run_json("figure 4 --samples 4 --out " + base);
    CHECK(j["records"] == 7);
    std::ifstream csv(base + ".csv");
    std::string header;
    std::getline(csv, header);
    CHECK(header == "label,kind,chart,c1,c2,c3");
    auto manifest = nlohmann::json::parse(std::ifstream(base + ".json"));
    CHECK(manifest["schema"] == 1);
    CHECK(run_json("figure 2 --samples 3 --float --chart x3 --out " + base)["figure"] == 2);
    CHECK(run("figure 1 --out /nonexistent_dir/x").status != 0);
    CHECK(run("figure 5").status != 0);
    CHECK(run("figure 1 --samples 1").status != 0);
    std::filesystem::remove_all(dir);
}
