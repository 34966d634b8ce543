#include <gtest/gtest.h>

#include <sstream>

#include "cgasym/cli.hpp"

using namespace cgasym;

namespace {

struct Invocation {
    int code;
    std::string out, err;
};

Invocation invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);)
        if (!l.empty()) v.push_back(l);
    return v;
}

std::vector<std::string> split(const std::string& l) {
    std::vector<std::string> v;
    std::istringstream is(l);
    for (std::string f; std::getline(is, f, ',');) v.push_back(f);
    return v;
}

} // namespace

TEST(Cli, Count) {
    const Invocation r = invoke({"count", "--n-max", "6", "--k-max", "2", "--output", "csv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("5,5,0,222"), std::string::npos);
}

TEST(Cli, CountJson) {
    const Invocation r = invoke({"count", "--n-max", "5", "--output", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const json j = json::parse(r.out);
    EXPECT_EQ(j["n_max"], 5);
}

TEST(Cli, ConnectedTable) {
    const Invocation r = invoke({"tables", "--which", "connected", "--k", "0", "--depth", "6"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 7U);
    EXPECT_EQ(ls[6], "0,5,-5/2,4/2835,0");
}

TEST(Cli, CompareErrorsShrinkWithDepth) {
    const Invocation r = invoke({"compare", "--k", "2", "--depths", "1,2,3", "--n-max", "512"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto ls = lines(r.out);
    const auto last = split(ls.back());
    ASSERT_EQ(last.size(), 8U);
    EXPECT_EQ(last[0], "512");
    const double e1 = std::stod(last[5]), e2 = std::stod(last[6]), e3 = std::stod(last[7]);
    EXPECT_GT(e1, e2);
    EXPECT_GT(e2, e3);
}

TEST(Cli, Decompose) {
    const Invocation r = invoke({"decompose", "--k", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("k,term,coeff"), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({"count", "--bogus"}).code, 1);
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"count", "--n-max", "0"}).code, 1);
    EXPECT_EQ(invoke({"compare", "--depths", "1,x"}).code, 1);
    EXPECT_EQ(invoke({"asym", "--k", "1", "--precision-bits", "8"}).code, 1);
    const Invocation bad = invoke({"fit", "--n-min", "500", "--n-max", "100"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_NE(bad.err.find("error:"), std::string::npos);
}

TEST(Cli, Errata) {
    const Invocation a = invoke({"errata"});
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_NE(a.out.find("unicycle-n^-5/2"), std::string::npos);
    EXPECT_NE(a.out.find("probability-unicycle-n^-1"), std::string::npos);
    EXPECT_EQ(invoke({"errata"}).out, a.out);
    const Invocation j = invoke({"errata", "--output", "json"});
    ASSERT_EQ(j.code, 0);
    EXPECT_NO_THROW((void)json::parse(j.out));
}

TEST(Cli, QExpansion) {
    const Invocation r = invoke({"q", "--depth", "3"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("Q,0,1/2,0,1/2"), std::string::npos) << r.out;
}
