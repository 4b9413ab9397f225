#include "pendant_cli.hpp"

#include <gtest/gtest.h>

#include <filesystem>

using namespace pendant;

namespace {

namespace fs = std::filesystem;

struct Outcome
{
    int code = 0;
    std::string out, err;
};

Outcome run(std::vector<std::string> args)
{
    args.insert(args.begin(), "pendant");
    std::vector<const char *> argv;
    for (const auto &a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test
{
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() /
               ("pendant_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string file(const std::string &name, const std::string &text)
    {
        auto p = (dir_ / name).string();
        cli::write_file(p, text);
        return p;
    }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(Cli, TauKOnBidirectedK5)
{
    auto g = file("k5.dig", write_digraph(generate({Family::bidirected_complete, 5})));
    auto r = run({"tau-k", "--graph", g, "--k", "3", "--threads", "1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("value: 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("witness: 0,1,2\n"), std::string::npos);
}

TEST_F(Cli, SolveCertificateVerifies)
{
    auto g = file("k5.dig", write_digraph(generate({Family::bidirected_complete, 5})));
    auto r = run({"--json", "solve", "--graph", g, "--terminals", "0,1,2"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["value"], 2);
    auto cert = file("k5.cert", j["certificate"].get<std::string>());
    auto v = run({"verify", "--graph", g, "--certificate", cert});
    EXPECT_EQ(v.code, 0);
    EXPECT_NE(v.out.find("valid: true"), std::string::npos);
}

TEST_F(Cli, VerifyRejectsSharedArc)
{
    auto g = file("k4.dig", write_digraph(generate({Family::bidirected_complete, 4})));
    auto cert = file("bad.cert", "s 0 1 2\ntree\na 0 3\na 3 1\na 3 2\nend\ntree\na 0 3\na 3 1\na 3 2\nend\n");
    auto r = run({"verify", "--graph", g, "--certificate", cert});
    EXPECT_EQ(r.code, cli::verify_failed);
    EXPECT_NE(r.out.find("valid: false"), std::string::npos);
}

TEST_F(Cli, OracleReportsInfeasibleLinkage)
{
    auto g = file("c4.dig", "p 4 4\na 0 1\na 1 2\na 2 3\na 3 0\n");
    auto r = run({"oracle", "2linkage", "--graph", g, "--s1", "0", "--t1", "2", "--s2", "1", "--t2", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("result: infeasible"), std::string::npos);
    auto k = run({"oracle", "kappa", "--graph", g});
    EXPECT_NE(k.out.find("kappa: 1"), std::string::npos);
}

TEST_F(Cli, GenIsDeterministic)
{
    std::vector<std::string> args{"gen", "--family", "random-digraph", "--n", "7", "--p", "0.3", "--seed", "42"};
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.rfind("# family=random-digraph n=7 p=0.3 seed=42\n", 0), 0u);
    EXPECT_NO_THROW(parse_digraph(a.out));
    auto other = run({"gen", "--family", "random-digraph", "--n", "7", "--p", "0.3", "--seed", "43"});
    EXPECT_NE(a.out, other.out);
}

TEST_F(Cli, GadgetWritesThreeFiles)
{
    auto h = file("h.hyp", "h 2 1\ne 0 1\n");
    auto r = run({"gadget", "hypergraph", "--hypergraph", h, "--ell", "2", "--out", path("g")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto d = parse_digraph(cli::read_file(path("g.dig")));
    auto spec = parse_terminals(cli::read_file(path("g.terms")), d.order());
    auto names = parse_provenance(cli::read_file(path("g.prov")));
    EXPECT_EQ(d.order(), 4);
    EXPECT_EQ(names.size(), 4u);
    auto s = run({"solve", "--graph", path("g.dig"), "--terminals", cli::spec_text(spec)});
    EXPECT_NE(s.out.find("value: 2\n"), std::string::npos);
}

TEST_F(Cli, InputErrorsAndUsage)
{
    auto bad = file("bad.dig", "p 3 1\na 0 5\n");
    auto r = run({"tau-k", "--graph", bad, "--k", "3"});
    EXPECT_EQ(r.code, cli::input_error);
    EXPECT_NE(r.err.find("line 2"), std::string::npos);
    EXPECT_EQ(run({"tau-k", "--graph", path("missing.dig"), "--k", "3"}).code, cli::input_error);
    EXPECT_EQ(run({"frobnicate"}).code, cli::usage);
    EXPECT_EQ(run({"solve", "--graph", bad}).code, cli::usage);
}

TEST_F(Cli, LargeInstancesNeedOptIn)
{
    auto g = file("k13.dig", write_digraph(generate({Family::bidirected_complete, 13})));
    auto r = run({"solve", "--graph", g, "--terminals", "0,1", "--target", "1"});
    EXPECT_EQ(r.code, cli::input_error);
    EXPECT_NE(r.err.find("--allow-large"), std::string::npos);
    auto ok = run({"solve", "--graph", g, "--terminals", "0,1", "--target", "1", "--allow-large"});
    EXPECT_EQ(ok.code, 0);
}

TEST_F(Cli, BoundsAndNordhausGaddum)
{
    auto g = file("k6.dig", write_digraph(generate({Family::bidirected_complete, 6})));
    auto b = run({"bounds", "--graph", g, "--k", "3"});
    EXPECT_EQ(b.code, 0);
    EXPECT_NE(b.out.find("cut_bound: 3\n"), std::string::npos);
    auto ng = run({"--json", "ng-check", "--graph", g, "--k", "4"});
    ASSERT_EQ(ng.code, 0) << ng.err;
    auto j = nlohmann::json::parse(ng.out);
    EXPECT_EQ(j["sum"], 2);
    EXPECT_EQ(j["sum_attains_upper"], true);
}
