#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "carry/report.hpp"
#include "carry/verify.hpp"

using namespace carry;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run_tool(const std::string& args) {
    const std::string cmd = std::string(CARRYTOOL_PATH) + " " + args + " 2>/dev/null";
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

VerifyOptions small_grid() {
    VerifyOptions o;
    o.k_max = 4;
    o.bases = {2, 3};
    o.length_max = 4;
    return o;
}

}  // namespace

TEST_SUITE("verify") {
    TEST_CASE("all checks pass on a small grid") {
        const auto results = run_verify(small_grid());
        CHECK_FALSE(results.empty());
        CHECK(all_passed(results));
        for (const auto& r : results) {
            INFO(r.name << " " << r.params << " " << r.detail);
            CHECK(r.status != CheckStatus::Fail);
            CHECK_FALSE(r.anchor.empty());
        }
    }

    TEST_CASE("corrupted Stirling weights fail with the stirling-lagrange anchor") {
        auto opts = small_grid();
        opts.corrupt_stirling = true;
        const auto results = run_verify(opts);
        CHECK_FALSE(all_passed(results));
        bool saw = false;
        for (const auto& r : results) {
            if (r.status != CheckStatus::Fail) continue;
            CHECK(r.anchor == "stirling-lagrange");
            saw = true;
        }
        CHECK(saw);
    }

    TEST_CASE("results are independent of thread count") {
        auto one = small_grid();
        one.threads = 1;
        auto many = small_grid();
        many.threads = 8;
        const auto a = run_verify(one);
        const auto b = run_verify(many);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].name == b[i].name);
            CHECK(a[i].params == b[i].params);
            CHECK(a[i].status == b[i].status);
            CHECK(a[i].detail == b[i].detail);
        }
    }

    TEST_CASE("tiny budget skips instead of failing") {
        auto opts = small_grid();
        opts.budget = 10;
        const auto results = run_verify(opts);
        CHECK(all_passed(results));
    }
}

TEST_SUITE("report") {
    using report::Format;

    TEST_CASE("format parsing") {
        CHECK(report::parse_format("json") == Format::Json);
        CHECK(report::parse_format("bfile") == Format::Bfile);
        CHECK_THROWS_AS(report::parse_format("xml"), std::invalid_argument);
    }

    TEST_CASE("integers beyond 64 bits become strings") {
        CHECK(report::integer_json(BigInt(42)) == 42);
        CHECK(report::integer_json(ipow(BigInt(10), 30)).is_string());
    }

    TEST_CASE("holte json envelope") {
        const auto j = report::ordered_json::parse(report::holte_matrix(3, 2, Format::Json));
        CHECK(j["k"] == 3);
        CHECK(j["N"] == 2);
        CHECK(j.contains("data"));
        CHECK(j["anchors"].is_array());
    }

    TEST_CASE("bfile sequence") {
        const auto spec = restrict(build_holte(4, 2), {3});
        CHECK(report::sequence(spec, 4, 2, 3, Format::Bfile) == "0 1\n1 16\n2 255\n3 4015\n");
    }

    TEST_CASE("moduli csv header") {
        const std::string csv = report::moduli(3, 2, Format::Csv);
        CHECK(csv.rfind("N,d,status,g,t\n", 0) == 0);
    }

    TEST_CASE("classify input") {
        const auto in = report::ordered_json::parse(
            R"({"a": [["3/4", "1/4"], ["1/4", "3/4"]], "b": [["3/4", "1/4"], ["1/4", "3/4"]]})");
        const auto out = report::ordered_json::parse(report::classify(in, Format::Json));
        CHECK(out["data"]["equivalent"] == true);
        CHECK_THROWS(report::parse_matrix(report::ordered_json::parse(R"([["1/2"], ["x"]])")));
    }

    TEST_CASE("unsupported combinations are rejected") {
        CHECK_THROWS_AS(report::threshold(restrict(build_holte(4, 2), {3}), 4, 2, Format::Bfile), std::invalid_argument);
    }
}

TEST_SUITE("cli") {
    TEST_CASE("deterministic output") {
        for (const char* args : {"holte --k 4 --base 3 --format json", "eigensystem --k 5 --format json",
                                 "cascade --k 4 --base 2 --len 10 --format bfile", "moduli --nmax 12 --dmax 21",
                                 "threshold --k 4 --base 2 --forbid 3 --format json",
                                 "verify --grid-kmax 4 --format json --threads 4"}) {
            INFO(args);
            const Run a = run_tool(args);
            const Run b = run_tool(args);
            CHECK(a.code == 0);
            CHECK_FALSE(a.out.empty());
            CHECK(a.out == b.out);
        }
    }

    TEST_CASE("sequence output") {
        const Run r = run_tool("cascade --k 4 --base 2 --forbid 3 --len 7");
        CHECK(r.out == "1 16 255 4015 62780 978425 15226125 236791400\n");
        CHECK(run_tool("cascade --chain 3,1,1,1 --len 5").out == "1 3 8 21 55 144\n");
        const Run oracle = run_tool("cascade --k 3 --base 3 --forbid 2 --len 4 --oracle");
        CHECK(oracle.code == 0);
        CHECK(oracle.out == run_tool("cascade --k 3 --base 3 --forbid 2 --len 4").out);
    }

    TEST_CASE("exit codes") {
        CHECK(run_tool("").code == 2);
        CHECK(run_tool("holte --k 1").code == 2);
        CHECK(run_tool("holte --format xml").code == 2);
        CHECK(run_tool("cascade --k 4 --forbid 0").code == 2);
        CHECK(run_tool("cascade --chain 3,1,1").code == 2);
        CHECK(run_tool("--help").code == 0);
        CHECK(run_tool("verify --grid-kmax 3 --corrupt-stirling").code == 1);
        CHECK(run_tool("classify --input /nonexistent/file.json").code == 2);
        CHECK(run_tool("cascade --k 4 --base 3 --len 8 --oracle --budget 1000").code == 3);
        CHECK(run_tool("cascade --chain 3,1,1,1 --oracle").code == 2);
    }
}
