#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli_app.hpp"
#include "fig8/figure_eight.hpp"
#include "fig8/quantum_dilog.hpp"

using namespace fig8;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out, err;
    json doc() const { return json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "fig8");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("fig8_test_" + name)).string();
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream f(path);
    std::vector<std::string> lines;
    for (std::string l; std::getline(f, l);) lines.push_back(l);
    return lines;
}

}  // namespace

TEST_SUITE("cli") {
    TEST_CASE("complex literal grammar") {
        auto eq = [](const char* s, cplx want) {
            const auto got = cli::parse_complex(s);
            return got && *got == want;
        };
        CHECK(eq("1+0.5i", {1.0, 0.5}));
        CHECK(eq("-1.5e-1-2e1i", {-0.15, -20.0}));
        CHECK(eq("2", {2.0, 0.0}));
        CHECK(eq("i", {0.0, 1.0}));
        CHECK(eq("-i", {0.0, -1.0}));
        CHECK(eq("0.5i", {0.0, 0.5}));
        CHECK(eq("1+i", {1.0, 1.0}));
        CHECK(eq(".5-.25i", {0.5, -0.25}));
        CHECK(eq("kappa", {kappa(), 0.0}));
        CHECK(eq("κ", {kappa(), 0.0}));
        for (const char* bad : {"", "1+", "abc", "1+2", "1i+2", "1..2", "++1", "1+2j"})
            CHECK_FALSE(cli::parse_complex(bad).has_value());
    }

    TEST_CASE("classify") {
        Run r = run({"classify", "--xi", "1+0.5i"});
        REQUIRE(r.code == 0);
        json d = r.doc();
        CHECK(d["schema_version"] == "1.0");
        CHECK(d["results"]["label"] == "GammaMinus");
        CHECK(d["results"]["re_s_over_xi"].get<double>() == doctest::Approx(-0.166996).epsilon(1e-6));
        CHECK(d["provenance"]["conjectural"] == false);
        CHECK(run({"classify", "--xi", "1+2i"}).doc()["results"]["label"] == "OutsideXi");
        CHECK(run({"classify", "--xi", "0.3+0.3i"}).doc()["results"]["label"] == "OmegaCapXi");
        CHECK(run({"classify", "--xi", "-1+0.5i"}).code == 0);
        CHECK(run({"classify", "--xi", "oops"}).code == 1);
        CHECK(run({"classify"}).code == 1);
        CHECK(run({}).code == 1);
    }

    TEST_CASE("config file and flag precedence") {
        const std::string cfg = temp_path("cfg.txt");
        {
            std::ofstream f(cfg);
            f << "# tolerances\nzero_tol = 0.5\ntol=1e-9\n";
        }
        CHECK(run({"--config", cfg, "classify", "--xi", "1+0.5i"}).doc()["results"]["label"] == "OmegaBoundary");
        CHECK(run({"--config", cfg, "classify", "--xi", "1+0.5i", "--tol", "1e-9"}).doc()["results"]["label"] ==
              "GammaMinus");
        {
            std::ofstream f(cfg);
            f << "bogus=1\n";
        }
        CHECK(run({"--config", cfg, "classify", "--xi", "1+0.5i"}).code == 1);
        CHECK(run({"--config", temp_path("missing.txt"), "classify", "--xi", "1"}).code == 1);
        std::remove(cfg.c_str());
    }

    TEST_CASE("jones") {
        json one = run({"jones", "--xi", "0+0i", "--n", "7"}).doc();
        CHECK(one["results"]["value_if_representable"]["re"].get<double>() == doctest::Approx(1.0));
        CHECK(one["results"]["value_if_representable"]["im"].get<double>() == doctest::Approx(0.0));

        json big = run({"jones", "--xi", "1+0.5i", "--n", "400"}).doc();
        const cplx v{big["results"]["value_if_representable"]["re"].get<double>(),
                     big["results"]["value_if_representable"]["im"].get<double>()};
        CHECK(std::abs(v - 1.0 / alexander(std::exp(cplx{1.0, 0.5}))) < 1e-3);

        json d = run({"jones", "--xi", "1+0.5i", "--n", "10"}).doc();
        json p = run({"jones", "--xi", "1+0.5i", "--n", "10", "--via", "potential"}).doc();
        const double dl = d["results"]["value"]["log_mag"], pl = p["results"]["value"]["log_mag"];
        const double da = d["results"]["value"]["arg"], pa = p["results"]["value"]["arg"];
        CHECK(std::abs(std::polar(std::exp(pl - dl), pa - da) - 1.0) < 1e-6);

        CHECK(run({"jones", "--xi", "1+2i", "--n", "5", "--via", "potential"}).code == 2);
        CHECK(run({"jones", "--xi", "1+0.5i", "--n", "0"}).code == 1);
        CHECK(run({"jones", "--xi", "1+0.5i", "--n", "5", "--via", "magic"}).code == 1);
    }

    TEST_CASE("outputs are deterministic") {
        const std::vector<std::string> args{"predict", "--xi", "1.5+0.5i", "--n", "200"};
        CHECK(run(args).out == run(args).out);
        const std::string s = run(args).out;
        CHECK(s.find("\"command\"") < s.find("\"provenance\""));
        CHECK(s.find("\"provenance\"") < s.find("\"results\""));
    }

    TEST_CASE("predict") {
        json d = run({"predict", "--xi", "1.5+0.5i", "--n", "200"}).doc();
        CHECK(d["provenance"]["regime"] == "GammaPlus");
        CHECK(run({"predict", "--xi", "kappa", "--n", "200"}).code == 2);
        json k = run({"predict", "--case", "5", "--n", "1000"}).doc();
        CHECK(k["results"]["leading"]["log_mag"].get<double>() > 0);
        CHECK(run({"predict", "--case", "9", "--n", "10"}).code == 1);
    }

    TEST_CASE("cs") {
        json d = run({"cs", "--xi", "kappa"}).doc();
        CHECK(std::abs(d["results"]["cs"]["re"].get<double>()) < 1e-12);
        CHECK(d["results"]["cs"]["im"].get<double>() == doctest::Approx(-kappa() * kPi / 2).epsilon(1e-14));
        CHECK(run({"cs", "--xi", "0.5"}).code == 2);
    }

    TEST_CASE("study") {
        const std::string csv = temp_path("study.csv");
        Run r = run({"study", "--xi", "1+0.5i", "--n-list", "100,200,400", "--out", csv});
        REQUIRE(r.code == 0);
        CHECK(r.doc()["results"]["fitted_order"].get<double>() == doctest::Approx(-2.0).epsilon(0.05));
        const auto lines = read_lines(csv);
        REQUIRE(lines.size() == 4);
        CHECK(lines[0] == "N,exact_logmag,exact_arg,pred_logmag,pred_arg,err");
        CHECK(lines[1].rfind("100,", 0) == 0);
        std::remove(csv.c_str());
        CHECK(run({"study", "--xi", "1+0.5i", "--n-list", "100,x"}).code == 1);
        CHECK(run({"study", "--xi", "1+0.5i", "--n-list", "10,20"}).code == 1);
        CHECK(run({"study", "--xi", "1+0.5i", "--n-list", "10,20,40", "--out", "/nonexistent/dir/f.csv"}).code == 1);
    }

    TEST_CASE("grid") {
        const std::string csv = temp_path("grid.csv");
        REQUIRE(run({"grid", "--xi", "1.5+0.5i", "--quantity", "ReF", "--window=-0.1,1.1,-0.6,0.4", "--res", "2,2",
                     "--out", csv})
                    .code == 0);
        auto lines = read_lines(csv);
        REQUIRE(lines.size() == 5);
        CHECK(lines[0] == "x,y,value");
        CHECK(lines[1].rfind("-0.10000000000000001,-0.59999999999999998,", 0) == 0);
        CHECK(lines[2].rfind("1.1000000000000001,-0.59999999999999998,", 0) == 0);
        CHECK(lines[3].rfind("-0.10000000000000001,0.40000000000000002,", 0) == 0);
        CHECK(lines[4].rfind("1.1000000000000001,0.40000000000000002,", 0) == 0);

        // Figure window: Re F > 0 at the grid cell nearest sigma.
        REQUIRE(run({"grid", "--xi", "1.5+0.5i", "--window=-0.1,1.1,-0.6,0.4", "--res", "300,300", "--out", csv})
                    .code == 0);
        lines = read_lines(csv);
        REQUIRE(lines.size() == 300 * 300 + 1);
        const cplx sigma = make_cusp({1.5, 0.5}).sigma;
        double best = 1e9, value = 0;
        for (std::size_t i = 1; i < lines.size(); ++i) {
            double x, y, v;
            if (std::sscanf(lines[i].c_str(), "%lf,%lf,%lf", &x, &y, &v) != 3) continue;
            const double d = std::abs(cplx{x, y} - sigma);
            if (d < best) best = d, value = v;
        }
        CHECK(best < 0.01);
        CHECK(value > 0);

        Run m = run({"grid", "--quantity", "RegionMask", "--window", "0.1,1.5,0.1,1.5", "--res", "3,3"});
        REQUIRE(m.code == 0);
        CHECK(m.out.rfind("x,y,label\n", 0) == 0);
        Run hv = run({"grid", "--xi", "1+0.5i", "--quantity", "HVMask", "--res", "2,2"});
        CHECK(hv.code == 0);
        CHECK(hv.out.find("H") != std::string::npos);

        CHECK(run({"grid", "--xi", "1+0.5i", "--res", "1,5"}).code == 1);
        CHECK(run({"grid", "--xi", "1+0.5i", "--window", "1,0,0,1"}).code == 1);
        CHECK(run({"grid", "--quantity", "ReF"}).code == 1);
        std::remove(csv.c_str());
    }

    TEST_CASE("help on every command") {
        for (const char* sub : {"classify", "jones", "study", "predict", "cs", "grid", "selftest"}) {
            Run r = run({sub, "--help"});
            CHECK(r.code == 0);
            CHECK(r.out.find("Usage") != std::string::npos);
        }
        CHECK(run({"--help"}).code == 0);
    }
}
