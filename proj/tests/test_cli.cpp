#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    static int counter = 0;
    fs::path capture = fs::temp_directory_path() / ("wtp_cli_out_" +
                                                    std::to_string(counter++) + ".txt");
    std::string cmd = std::string(WTP_CLI_PATH) + " " + args + " > " +
                      capture.string() + " 2>/dev/null";
    int status = std::system(cmd.c_str());
    std::ifstream in(capture);
    std::ostringstream ss;
    ss << in.rdbuf();
    fs::remove(capture);
    int code = -1;
#ifdef WEXITSTATUS
    if (WIFEXITED(status)) code = WEXITSTATUS(status);
#else
    code = status;
#endif
    return {code, ss.str()};
}

fs::path tmp(const std::string& name) { return fs::temp_directory_path() / name; }

} // namespace

TEST_CASE("generate, combine, check pipeline") {
    auto mo3 = tmp("cli_mo3.lat");
    CHECK(cli("gen --kind mo --n 3 -o " + mo3.string()).code == 0);
    CHECK(fs::exists(mo3));

    auto sep = tmp("cli_sep33.lat");
    CHECK(cli("product --kind sep " + mo3.string() + " " + mo3.string() + " -o " +
              sep.string())
              .code == 0);

    Run check = cli("check covering " + sep.string());
    CHECK(check.code == 0); // a computed Fails verdict is still a successful run
    CHECK(check.out.find("\"status\": \"Fails\"") != std::string::npos);

    Run circ = cli("product --kind circ " + mo3.string() + " " + mo3.string());
    CHECK(circ.code == 0);
    CHECK(circ.out.find("\"atoms\"") != std::string::npos);

    fs::remove(mo3);
    fs::remove(sep);
}

TEST_CASE("export then import round trips byte for byte") {
    auto a = tmp("cli_rt_a.lat");
    auto b = tmp("cli_rt_b.lat");
    CHECK(cli("gen --kind mo --n 4 -o " + a.string()).code == 0);
    CHECK(cli("gen --kind file --path " + a.string() + " -o " + b.string()).code == 0);
    std::ifstream fa(a), fb(b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    fs::remove(a);
    fs::remove(b);
}

TEST_CASE("membership and join against the lazy top product") {
    auto mo3 = tmp("cli_mj_mo3.lat");
    cli("gen --kind mo --n 3 -o " + mo3.string());
    std::string two = mo3.string() + " " + mo3.string();
    Run m = cli("member --top " + two + " --atoms p0,p0 p1,p1 p2,p2");
    CHECK(m.code == 0);
    CHECK(m.out == "true\n");
    Run j = cli("join --top " + two + " --atoms p0,p0 p1,p1");
    CHECK(j.code == 0);
    CHECK(j.out == "p0,p0\np1,p1\n");
    fs::remove(mo3);
}

TEST_CASE("theorem runs succeed against the fixtures") {
    Run r = cli(std::string("theorem T-BOX-ISO --fixtures ") + WTP_FIXTURES_PATH);
    CHECK(r.code == 0);
    CHECK(r.out.find("T-BOX-ISO: Holds (expected Holds, ok)") != std::string::npos);
}

TEST_CASE("exit codes: usage and budget") {
    CHECK(cli("frobnicate").code == 2);
    CHECK(cli("gen --kind mo").code == 2); // missing -o
    CHECK(cli("check covering no_such_file.lat").code == 2);

    auto mo4 = tmp("cli_budget_mo4.lat");
    cli("gen --kind mo --n 4 -o " + mo4.string());
    Run r = cli("--budget 10 product --kind top " + mo4.string() + " " + mo4.string());
    CHECK(r.code == 3);
    fs::remove(mo4);
}

TEST_CASE("dot export is written and names a digraph") {
    auto mo3 = tmp("cli_dot_mo3.lat");
    auto dot = tmp("cli_dot_mo3.dot");
    cli("gen --kind mo --n 3 -o " + mo3.string());
    CHECK(cli("export-dot " + mo3.string() + " -o " + dot.string()).code == 0);
    std::ifstream in(dot);
    std::string first;
    std::getline(in, first);
    CHECK(first == "digraph hasse {");
    fs::remove(mo3);
    fs::remove(dot);
}
