#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "arcalg/serialize.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = "./arcalg " + args + " 2>/dev/null";
    std::array<char, 4096> buf;
    std::string out;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("basis output parses back and is deterministic") {
    auto r1 = run("basis --block \"****\"");
    auto r2 = run("basis --block \"****\"");
    CHECK(r1.code == 0);
    CHECK(r1.out == r2.out);
    json j = json::parse(r1.out);
    CHECK(j.at("basis").size() == 12);
    arcalg::Block b = arcalg::Block::parse(j.at("block").get<std::string>());
    for (const auto& t : j.at("basis")) {
        arcalg::BasisDiagram d = arcalg::basis_from_json(t, b);
        CHECK(arcalg::to_json(d) == t);
    }
}

TEST_CASE("mult through the pipe") {
    std::string x = R"({"block":"**","terms":[{"cup":[[0,1]],"weight":"^v","cap":[[0,1]]}]})";
    auto r = run("mult --block \"**\" --x '" + x + "' --y '" + x + "'");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j.at("terms").size() == 1);
    CHECK(j.at("terms")[0].at("weight") == "v^");
    json scalar = j.at("terms")[0].at("scalar");
    CHECK(scalar.at("terms")[0].at("a") == 1);  // x * x = alpha e
}

TEST_CASE("homology subcommands") {
    auto r = run("homology --morse \"u0 u2 x+1 x+1 n2 n0\" --spec custom:0,1,1 --ring q");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("poincare").size() == 4);
    auto rb = run("homology --braid \"1 1 1\" --strands 2 --ring z --eliminate");
    CHECK(rb.code == 0);
    json jb = json::parse(rb.out);
    bool torsion2 = false;
    for (const auto& row : jb.at("poincare"))
        for (const auto& t : row.at("torsion"))
            if (t.get<std::string>() == "2") torsion2 = true;
    CHECK(torsion2);
}

TEST_CASE("quiver command") {
    auto r = run("quiver --block \"**\" --hull 2 --spec \"0,1,1\"");
    CHECK(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j.at("vertices").size() == 2);
    CHECK(j.at("arrows").size() == 2);
    CHECK(j.at("relations").size() == 2);
}

TEST_CASE("exit codes") {
    CHECK(run("basis").code == 2);                       // usage error: missing flag
    CHECK(run("nonsense").code != 0);                    // unknown subcommand
    CHECK(run("homology --morse \"u0\" ").code == 1);    // not closed: domain error
    CHECK(run("quiver --block \"**\" --hull 2 --spec \"a,1,1\"").code == 1);  // alpha not zero
}

TEST_CASE("iso-check and bimod-basis") {
    auto r = run("iso-check --kind algebra --max-stars 2 --specs kbn,bl");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).at("ok") == true);
    auto rb = run("bimod-basis --blocks \"**ox\" --moves \"+a2\"");
    CHECK(rb.code == 0);
    json jb = json::parse(rb.out);
    CHECK(jb.at("basis").size() == 6);
    CHECK(jb.at("shift") == -4);
}
